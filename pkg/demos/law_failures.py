"""Tour of the lattice-law data: which algebraic identities the coordination
fragment validates classically, what an exclusive-or reading changes, and
where intuitive acceptability parts company with boolean equivalence.

Run:  python3 demos/law_failures.py
"""

from coordsem import (
    STANDARD_LAWS,
    check_law,
    compare,
    corpus_lookup,
    unparse,
)

print("=" * 72)
print("1. The six candidate identities, checked by exhaustive truth tables")
print("=" * 72)
for law in STANDARD_LAWS:
    verdict = check_law(law)
    print(f"  {law.name:<6} under and/or : {verdict.status.value}")

print()
print("Classically all six hold. Substituting exclusive disjunction for the")
print("join tells a different story (the hypothesis that `or` is ambiguous")
print("between inclusive and exclusive readings):")
print()
for law in STANDARD_LAWS:
    verdict = check_law(law.with_connectives(join="xor"))
    line = f"  {law.name:<6} under and/xor: {verdict.status.value}"
    if verdict.counterexample is not None:
        witness = ", ".join(f"{k}={int(v)}" for k, v in verdict.counterexample.items())
        line += f"   ({witness})"
    print(line)

print()
print("So an exclusive `or` preserves the first distributive law but breaks")
print("the second, along with absorption and or-idempotence. That asymmetry")
print("cannot explain the acceptability data below, where the *boolean*")
print("equivalences all hold and the judgments still differ.")

print()
print("=" * 72)
print("2. Boolean equivalence vs. intuitive equivalence on the corpus")
print("=" * 72)
PAIRS = [("1a", "1b"), ("2a", "2b"), ("5a", "5b"), ("5a", "5c"),
         ("6a", "6b"), ("6c", "6b")]
header = f"  {'pair':<10} {'boolean':<9} {'options':<9} {'affirmed':<9} judgments"
print(header)
for left, right in PAIRS:
    cmp = compare(corpus_lookup(left), corpus_lookup(right))
    print(f"  {left + ',' + right:<10} "
          f"{str(cmp.boolean_equivalent):<9} "
          f"{str(cmp.option_equivalent):<9} "
          f"{str(cmp.judged_equivalent):<9} "
          f"{cmp.judgment_left.category.value} / {cmp.judgment_right.category.value}")

print()
print("Every pair is boolean-equivalent; only (1a,1b) is also judged")
print("equivalent under the vector semantics. For the record, the formulas:")
for label in ("1a", "1b", "2a", "2b", "5a", "5c", "6a", "6c"):
    print(f"  {label:<4} {unparse(corpus_lookup(label))}")
