"""Knowledge bases: assertions plus an acyclic terminology.

A KB pairs nonstrict degree assertions about individuals with
terminological axioms (specializations ``A < C`` and definitions
``A = C``).  The expansion step turns a valid KB into a purely
assertional one that entails exactly the same statements, which is
the form the tableau works on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .constraints import (
    Assertion,
    Bound,
    ConceptAssertion,
    Constraint,
    Form,
    Rel,
    RoleAssertion,
)
from .syntax import (
    And,
    Atomic,
    ConceptExpr,
    Exists,
    Forall,
    Individual,
    Not,
    Or,
    atomic_names,
    role_names,
)


class AxiomKind(enum.Enum):
    SPECIALIZATION = "spec"
    DEFINITION = "define"


@dataclass(frozen=True)
class TerminologicalAxiom:
    lhs: str
    kind: AxiomKind
    rhs: ConceptExpr


@dataclass(frozen=True)
class KnowledgeBase:
    assertions: tuple[Constraint, ...]
    terminology: tuple[TerminologicalAxiom, ...]

    @property
    def purely_assertional(self) -> bool:
        return not self.terminology


EMPTY_KB = KnowledgeBase((), ())


@dataclass(frozen=True)
class Violation:
    kind: str  # duplicate-lhs | cycle | bad-assertion | name-collision
    message: str
    axiom_index: int = -1


def _assertion_names(kb: KnowledgeBase) -> tuple[set[str], set[str]]:
    concepts: set[str] = set()
    roles: set[str] = set()
    for constraint in kb.assertions:
        a = constraint.assertion
        if isinstance(a, RoleAssertion):
            roles.add(a.role)
        else:
            concepts |= atomic_names(a.concept)
            roles |= role_names(a.concept)
    return concepts, roles


def validate(kb: KnowledgeBase) -> list[Violation]:
    """Check KB well-formedness; an empty list means the KB is valid."""
    violations: list[Violation] = []
    seen: dict[str, int] = {}
    for idx, axiom in enumerate(kb.terminology):
        if axiom.lhs in seen:
            violations.append(
                Violation(
                    "duplicate-lhs",
                    f"{axiom.lhs!r} appears on the left-hand side of more than one axiom",
                    idx,
                )
            )
        else:
            seen[axiom.lhs] = idx

    for constraint in kb.assertions:
        if constraint.form not in (Form.GEQ_LEQ, Form.LEQ_GEQ):
            violations.append(
                Violation("bad-assertion", f"KB assertions must be nonstrict: {constraint}")
            )
        a = constraint.assertion
        subjects = (a.subject, a.target) if isinstance(a, RoleAssertion) else (a.subject,)
        for s in subjects:
            if not isinstance(s, Individual):
                violations.append(
                    Violation("bad-assertion", f"KB assertions range over individuals: {constraint}")
                )

    # Starred companions of specialized names must be fresh.
    used_concepts, _ = _assertion_names(kb)
    for axiom in kb.terminology:
        used_concepts |= atomic_names(axiom.rhs)
    for idx, axiom in enumerate(kb.terminology):
        if axiom.kind is AxiomKind.SPECIALIZATION and axiom.lhs + "*" in used_concepts:
            violations.append(
                Violation(
                    "name-collision",
                    f"{axiom.lhs + '*'!r} is reserved for expanding 'spec {axiom.lhs} < ...'",
                    idx,
                )
            )

    # Cycle check over the definition dependency graph.
    deps = {axiom.lhs: atomic_names(axiom.rhs) for axiom in kb.terminology}
    index_of = {axiom.lhs: idx for idx, axiom in enumerate(kb.terminology)}
    state: dict[str, int] = {}  # 0 visiting, 1 done
    stack: list[str] = []

    def visit(name: str) -> list[str] | None:
        if name not in deps or state.get(name) == 1:
            return None
        if state.get(name) == 0:
            return stack[stack.index(name):] + [name]
        state[name] = 0
        stack.append(name)
        for dep in sorted(deps[name]):
            cycle = visit(dep)
            if cycle is not None:
                return cycle
        stack.pop()
        state[name] = 1
        return None

    reported: set[frozenset[str]] = set()
    for name in deps:
        cycle = visit(name)
        if cycle is not None and frozenset(cycle) not in reported:
            reported.add(frozenset(cycle))
            violations.append(
                Violation(
                    "cycle",
                    "cyclic definitions: " + " -> ".join(cycle),
                    index_of[cycle[0]],
                )
            )
            state.clear()
            stack.clear()
    return violations


def _substitute(c: ConceptExpr, mapping: dict[str, ConceptExpr]) -> ConceptExpr:
    if isinstance(c, Atomic):
        return mapping.get(c.name, c)
    if isinstance(c, And):
        return And(_substitute(c.left, mapping), _substitute(c.right, mapping))
    if isinstance(c, Or):
        return Or(_substitute(c.left, mapping), _substitute(c.right, mapping))
    if isinstance(c, Not):
        return Not(_substitute(c.inner, mapping))
    if isinstance(c, Forall):
        return Forall(c.role, _substitute(c.filler, mapping))
    if isinstance(c, Exists):
        return Exists(c.role, _substitute(c.filler, mapping))
    return c


def resolved_definitions(kb: KnowledgeBase) -> dict[str, ConceptExpr]:
    """Fully unfolded right-hand side for every defined name.

    Specializations ``A < C`` contribute the definition ``A = C and A*``
    with a fresh starred atomic concept.
    """
    problems = validate(kb)
    if problems:
        raise ValueError("cannot expand an invalid KB: " + problems[0].message)
    definitions: dict[str, ConceptExpr] = {}
    for axiom in kb.terminology:
        if axiom.kind is AxiomKind.SPECIALIZATION:
            definitions[axiom.lhs] = And(axiom.rhs, Atomic(axiom.lhs + "*"))
        else:
            definitions[axiom.lhs] = axiom.rhs

    resolved: dict[str, ConceptExpr] = {}

    def resolve(name: str) -> ConceptExpr:
        if name not in resolved:
            body = definitions[name]
            mapping = {dep: resolve(dep) for dep in atomic_names(body) if dep in definitions}
            resolved[name] = _substitute(body, mapping)
        return resolved[name]

    for name in definitions:
        resolve(name)
    return resolved


def unfold_assertion(assertion: Assertion, resolved: dict[str, ConceptExpr]) -> Assertion:
    """Replace defined names in an assertion's concept by their bodies."""
    if isinstance(assertion, ConceptAssertion):
        return ConceptAssertion(
            _substitute(assertion.concept, resolved), assertion.subject
        )
    return assertion


def unfold_constraint(constraint: Constraint, resolved: dict[str, ConceptExpr]) -> Constraint:
    """Replace defined names in a constraint's concept by their bodies."""
    return Constraint(
        unfold_assertion(constraint.assertion, resolved),
        constraint.tbound,
        constraint.fbound,
    )


def expand(kb: KnowledgeBase) -> KnowledgeBase:
    """Unfold the terminology into the assertions.

    Specializations ``A < C`` first become definitions ``A = C and A*``
    with a fresh starred atomic concept, then every defined name is
    exhaustively replaced by its right-hand side.  The result is purely
    assertional and entails the same statements as the input.
    """
    resolved = resolved_definitions(kb)
    new_assertions = tuple(
        unfold_constraint(constraint, resolved) for constraint in kb.assertions
    )
    return KnowledgeBase(new_assertions, ())


# --- fuzzy embedding and projections ---------------------------------

class FuzzyRel(enum.Enum):
    GEQ = ">="
    LEQ = "<="


@dataclass(frozen=True)
class FuzzyAssertion:
    """A single-valued degree assertion ``<alpha >= n>`` / ``<alpha <= m>``.

    Projections of two-component KBs may produce the vacuous degrees 0
    (for >=) and 1 (for <=); the fuzzy oracle treats those as trivially
    satisfied.
    """

    assertion: Assertion
    rel: FuzzyRel
    degree: Fraction

    def __post_init__(self):
        if not 0 <= self.degree <= 1:
            raise ValueError(f"fuzzy degree {self.degree} outside [0, 1]")


@dataclass(frozen=True)
class FuzzyKb:
    assertions: tuple[FuzzyAssertion, ...]
    terminology: tuple[TerminologicalAxiom, ...] = ()


def embed_fuzzy(fkb: FuzzyKb) -> KnowledgeBase:
    """Represent a fuzzy KB with paired-degree assertions.

    ``<alpha >= n>`` becomes ``<alpha: >= n, <= 1-n>`` and
    ``<alpha <= n>`` becomes ``<alpha: <= n, >= 1-n>``; axioms carry
    over unchanged.
    """
    assertions = []
    for fa in fkb.assertions:
        if fa.rel is FuzzyRel.GEQ:
            assertions.append(
                Constraint(fa.assertion, Bound(Rel.GE, fa.degree), Bound(Rel.LE, 1 - fa.degree))
            )
        else:
            assertions.append(
                Constraint(fa.assertion, Bound(Rel.LE, fa.degree), Bound(Rel.GE, 1 - fa.degree))
            )
    return KnowledgeBase(tuple(assertions), fkb.terminology)


def _project(kb: KnowledgeBase, truth_side: bool) -> FuzzyKb:
    assertions = []
    for constraint in kb.assertions:
        form = constraint.form
        if form is Form.GEQ_LEQ:
            if truth_side:
                fa = FuzzyAssertion(constraint.assertion, FuzzyRel.GEQ, constraint.tbound.value)
            else:
                fa = FuzzyAssertion(constraint.assertion, FuzzyRel.LEQ, constraint.fbound.value)
        elif form is Form.LEQ_GEQ:
            if truth_side:
                fa = FuzzyAssertion(constraint.assertion, FuzzyRel.LEQ, constraint.tbound.value)
            else:
                fa = FuzzyAssertion(constraint.assertion, FuzzyRel.GEQ, constraint.fbound.value)
        else:
            raise ValueError(f"projections are defined on nonstrict assertions: {constraint}")
        assertions.append(fa)
    return FuzzyKb(tuple(assertions), kb.terminology)


def sharp(kb: KnowledgeBase) -> FuzzyKb:
    """Truth-side projection: keep the bound on the truth value."""
    return _project(kb, truth_side=True)


def star(kb: KnowledgeBase) -> FuzzyKb:
    """Falsity-side projection: keep the bound on the falsity value."""
    return _project(kb, truth_side=False)


def kb_degrees(kb: KnowledgeBase) -> frozenset[Fraction]:
    """Every degree mentioned in the KB's assertions."""
    out = set()
    for constraint in kb.assertions:
        if constraint.tbound is not None:
            out.add(constraint.tbound.value)
        if constraint.fbound is not None:
            out.add(constraint.fbound.value)
    return frozenset(out)
