"""Classical truth-table semantics: evaluation, equivalence with
counterexample extraction, law checking under connective substitution, and
the meet/join duality transform.

Counterexamples are deterministic: assignments enumerate lexicographically
over sorted atom names with True before False (all-true first), and the
first witness in that order is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Mapping, Optional

from .errors import AtomLimitError, MissingAtomError, UnsupportedConnectiveError
from .formula import (
    JOIN,
    MEET,
    And,
    Atom,
    AtomNode,
    Formula,
    LawSchema,
    Not,
    Or,
    TOp,
    TVar,
    Template,
    Xor,
    atom_names,
    instantiate,
    template_vars,
)

Assignment = Mapping[str, bool]

ATOM_LIMIT = 12  # beyond this, exhaustive evaluation is refused


def eval_formula(f: Formula, v: Assignment) -> bool:
    """Classical evaluation; Xor is exclusive disjunction."""
    if isinstance(f, AtomNode):
        try:
            return v[f.atom.name]
        except KeyError:
            raise MissingAtomError(f"assignment lacks atom {f.atom.name!r}") from None
    if isinstance(f, Not):
        return not eval_formula(f.child, v)
    if isinstance(f, And):
        return eval_formula(f.left, v) and eval_formula(f.right, v)
    if isinstance(f, Or):
        return eval_formula(f.left, v) or eval_formula(f.right, v)
    return eval_formula(f.left, v) != eval_formula(f.right, v)


def assignments(names: list[str]) -> Iterator[dict[str, bool]]:
    """All assignments over names, all-true first, True before False."""
    if len(names) > ATOM_LIMIT:
        raise AtomLimitError(
            f"{len(names)} atoms exceed the exhaustive-evaluation limit {ATOM_LIMIT}")
    for bits in product([True, False], repeat=len(names)):
        yield dict(zip(names, bits))


class Verdict(Enum):
    VALID = "valid"
    INVALID = "invalid"


@dataclass(frozen=True)
class LawVerdict:
    status: Verdict
    counterexample: Optional[dict[str, bool]] = None
    binding: Optional[dict[str, str]] = None  # metavariable -> atom name

    @property
    def valid(self) -> bool:
        return self.status is Verdict.VALID


def equivalent(f: Formula, g: Formula) -> LawVerdict:
    """Valid iff f and g agree on every assignment over their combined
    atoms; otherwise carries the first witnessing assignment."""
    names = sorted(set(atom_names(f)) | set(atom_names(g)))
    for v in assignments(names):
        if eval_formula(f, v) != eval_formula(g, v):
            return LawVerdict(Verdict.INVALID, counterexample=v)
    return LawVerdict(Verdict.VALID)


def entails(f: Formula, g: Formula) -> bool:
    names = sorted(set(atom_names(f)) | set(atom_names(g)))
    return all(eval_formula(g, v) for v in assignments(names) if eval_formula(f, v))


def check_law(schema: LawSchema) -> LawVerdict:
    """Instantiate the schema's metavariables with distinct fresh atoms and
    test the two sides for truth-table equivalence. By functional
    completeness over fresh atoms this decides schematic validity."""
    binding = {name: AtomNode(Atom(name)) for name in sorted(schema.metavariables)}
    lhs, rhs = instantiate(schema, binding)
    verdict = equivalent(lhs, rhs)
    if verdict.valid:
        return verdict
    return LawVerdict(Verdict.INVALID, counterexample=verdict.counterexample,
                      binding={name: name for name in binding})


def dual(schema: LawSchema) -> LawSchema:
    """Swap meet and join in both templates. Undefined when the schema maps
    a connective to xor."""
    targets = {dst for _, dst in schema.connective_map}
    if "xor" in targets:
        raise UnsupportedConnectiveError("duality is undefined for xor substitutions")

    def swap(t: Template) -> Template:
        if isinstance(t, TVar):
            return t
        return TOp(JOIN if t.op == MEET else MEET, swap(t.left), swap(t.right))

    return LawSchema(f"dual({schema.name})", swap(schema.lhs), swap(schema.rhs),
                     schema.connective_map)


def xor_parity(n: int) -> bool:
    """True iff the right-associated n-fold xor chain over distinct atoms is
    true exactly on the assignments with an odd number of true atoms."""
    if not 1 <= n <= ATOM_LIMIT:
        raise AtomLimitError(f"n must be in 1..{ATOM_LIMIT}, got {n}")
    names = [f"P{i}" for i in range(1, n + 1)]
    chain: Formula = AtomNode(Atom(names[-1]))
    for name in reversed(names[:-1]):
        chain = Xor(AtomNode(Atom(name)), chain)
    return all(eval_formula(chain, v) == (sum(v.values()) % 2 == 1)
               for v in assignments(names))
