"""Assertion-precedence implicature projection on the corpus: where the
ignorance and exclusivity implicatures of disjunction survive, and where the
asserted content suppresses them.

Run:  python3 demos/implicature_projection.py
"""

from coordsem import Mode, consistent, corpus_lookup, parse, project, unparse


def walkthrough(title, f, mode=Mode.GAZDAR, opinionated=()):
    print("=" * 72)
    print(f"{title}:  {unparse(f)}   [{mode.value} mode]")
    print("=" * 72)
    report = project(f, mode, opinionated)
    print("accepted:")
    for c in report.accepted:
        print(f"  {str(c):<28} [{c.provenance.value}]")
    if report.suppressed:
        print("suppressed:")
        for s in report.suppressed:
            partners = ", ".join(str(c) for c in s.clashes_with)
            print(f"  {str(s.constraint):<28} [{s.constraint.provenance.value}]"
                  f" clashes with {partners}")
    else:
        print("suppressed: none")
    ok, model = consistent(report.accepted)
    assert ok
    worlds = " | ".join(",".join(f"{k}={int(v)}" for k, v in w.items()) for w in model)
    print(f"a belief model satisfying everything accepted: {worlds}")
    print()


print("A plain disjunction keeps all its implicatures: the speaker professes")
print("ignorance about each disjunct, and (as a derogable default) knowledge")
print("that they do not both hold.")
print()
walkthrough("Plain disjunction", parse("A or B"))

print("Self-disjunction asserts knowledge of A, so professed ignorance about")
print("A cannot survive; precedence of assertions quietly discards it.")
print()
walkthrough("Self-disjunction (6a)", corpus_lookup("6a"))

print("In 'A and (A or B)' the first conjunct is asserted outright, so the")
print("disjunction's ignorance implicature about A is stillborn.")
print()
walkthrough("Absorption shape (5c)", corpus_lookup("5c"))

print("'A or (A and B)' has the truth conditions of bare A, so ignorance")
print("about A clashes with the assertion itself.")
print()
walkthrough("Absorption shape (5a)", corpus_lookup("5a"))

print("The right-hand side of the second distributive law generates eight")
print("ignorance constraints and two exclusivity defaults, all mutually")
print("consistent: nothing needs suppressing, so implicature failure cannot")
print("be what makes the sentence odd.")
print()
walkthrough("Distribution shape (2b)", corpus_lookup("2b"))

print("The exclusivity default is treated casuistically in soames mode: it")
print("only arises for or-occurrences the speaker is declared opinionated")
print("about (here: none, then or-node 0).")
print()
walkthrough("Soames, not opinionated", parse("A or B"), Mode.SOAMES)
walkthrough("Soames, opinionated about node 0", parse("A or B"), Mode.SOAMES, (0,))
