"""The formal-vector semantics step by step: `and` as vector addition, `or`
as a binary choice coefficient, option sets, double images, Hobson's choice.

Run:  python3 demos/option_semantics.py
"""

from coordsem import (
    corpus_lookup,
    denote_one,
    denote_options,
    judge,
    option_equivalent,
    parse,
    unparse,
)


def show(label_or_text):
    f = corpus_lookup(label_or_text) if len(label_or_text) <= 3 else parse(label_or_text)
    options = denote_options(f)
    verdict = judge(f)
    print(f"  {label_or_text:<24} {unparse(f):<24} options {str(options):<22} "
          f"-> {verdict.category.value}")


print("Atoms denote unit vectors; `and` adds them. Repeating a stative atom")
print("therefore doubles its coefficient instead of disappearing:")
print()
f = parse("A and A")
print(f"  A and A denotes {denote_one(f, {})}  (not A: idempotence fails here)")
print()

print("`or` carries a 0/1 coefficient per occurrence: 1 keeps the left branch,")
print("0 the right. 'A and (A or B)' has one coefficient, hence two options:")
print()
f = parse("A and (A or B)")
print(f"  coefficient 1: {denote_one(f, {0: 1})}   <- a double image of A")
print(f"  coefficient 0: {denote_one(f, {0: 0})}")
print()

print("Option sets across the corpus (one line per schema):")
print()
for label in ("1a", "1b", "2a", "2b", "5a", "5b", "5c", "6a", "6b", "6c"):
    show(label)
print()

print("Identity and divergence of option sets:")
for left, right in (("1a", "1b"), ("2a", "2b"), ("5a", "5b")):
    cmp = option_equivalent(corpus_lookup(left), corpus_lookup(right))
    if cmp.equal:
        print(f"  options({left}) == options({right})")
    else:
        print(f"  options({left}) != options({right}), e.g. {cmp.witness}")
print()

print("Aspect matters: iterables tolerate additive repetition, statives do not:")
print()
show("talks:iterable and talks:iterable")
show("A and A")
print()
print("And 'A or A' denotes exactly what 'A' denotes; its oddity is not")
print("denotational but the absence of a real alternative (Hobson's choice):")
print()
show("6a")
show("6b")
