"""Concept expressions of neutrosophic ALC and structural utilities.

Concepts are immutable trees built from atomic concept names with
conjunction, disjunction, negation and universal/existential role
restrictions.  Structural (syntactic) equality is the only equality
defined here; semantic equivalence is decided elsewhere, never by
term rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass


class ConceptExpr:
    """Base class for concept expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Top(ConceptExpr):
    pass


@dataclass(frozen=True)
class Bottom(ConceptExpr):
    pass


@dataclass(frozen=True)
class Atomic(ConceptExpr):
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atomic concept name must be nonempty")


@dataclass(frozen=True)
class And(ConceptExpr):
    left: ConceptExpr
    right: ConceptExpr


@dataclass(frozen=True)
class Or(ConceptExpr):
    left: ConceptExpr
    right: ConceptExpr


@dataclass(frozen=True)
class Not(ConceptExpr):
    inner: ConceptExpr


@dataclass(frozen=True)
class Forall(ConceptExpr):
    role: str
    filler: ConceptExpr


@dataclass(frozen=True)
class Exists(ConceptExpr):
    role: str
    filler: ConceptExpr


TOP = Top()
BOT = Bottom()


@dataclass(frozen=True)
class Individual:
    """A named individual."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Variable:
    """A variable introduced by a generating tableau rule.

    Variables live in a namespace disjoint from individuals; they are
    identified by their generation index and rendered ``x<index>``.
    """

    index: int

    def __str__(self):
        return f"x{self.index}"


# An object is either an individual or a variable.
Obj = Individual | Variable


def nnf(c: ConceptExpr) -> ConceptExpr:
    """Rewrite a concept into negation normal form.

    Negations end up directly on atomic concepts; the rewrite uses the
    De Morgan and role dualities, which preserve both the truth and the
    falsity component of the semantics.
    """
    if isinstance(c, (Top, Bottom, Atomic)):
        return c
    if isinstance(c, And):
        return And(nnf(c.left), nnf(c.right))
    if isinstance(c, Or):
        return Or(nnf(c.left), nnf(c.right))
    if isinstance(c, Forall):
        return Forall(c.role, nnf(c.filler))
    if isinstance(c, Exists):
        return Exists(c.role, nnf(c.filler))
    if isinstance(c, Not):
        inner = c.inner
        if isinstance(inner, Top):
            return BOT
        if isinstance(inner, Bottom):
            return TOP
        if isinstance(inner, Atomic):
            return c
        if isinstance(inner, Not):
            return nnf(inner.inner)
        if isinstance(inner, And):
            return Or(nnf(Not(inner.left)), nnf(Not(inner.right)))
        if isinstance(inner, Or):
            return And(nnf(Not(inner.left)), nnf(Not(inner.right)))
        if isinstance(inner, Forall):
            return Exists(inner.role, nnf(Not(inner.filler)))
        if isinstance(inner, Exists):
            return Forall(inner.role, nnf(Not(inner.filler)))
    raise TypeError(f"not a concept expression: {c!r}")


def subconcepts(c: ConceptExpr) -> frozenset[ConceptExpr]:
    """Return the closure of subexpressions of ``c``, including ``c``."""
    acc: set[ConceptExpr] = set()
    stack = [c]
    while stack:
        cur = stack.pop()
        if cur in acc:
            continue
        acc.add(cur)
        if isinstance(cur, (And, Or)):
            stack.append(cur.left)
            stack.append(cur.right)
        elif isinstance(cur, Not):
            stack.append(cur.inner)
        elif isinstance(cur, (Forall, Exists)):
            stack.append(cur.filler)
    return frozenset(acc)


def atomic_names(c: ConceptExpr) -> frozenset[str]:
    """Atomic concept names occurring in ``c``."""
    return frozenset(s.name for s in subconcepts(c) if isinstance(s, Atomic))


def role_names(c: ConceptExpr) -> frozenset[str]:
    """Role names occurring in ``c``."""
    return frozenset(
        s.role for s in subconcepts(c) if isinstance(s, (Forall, Exists))
    )


def quantifier_depth(c: ConceptExpr) -> int:
    """Maximal nesting depth of role restrictions in ``c``."""
    if isinstance(c, (Top, Bottom, Atomic)):
        return 0
    if isinstance(c, (And, Or)):
        return max(quantifier_depth(c.left), quantifier_depth(c.right))
    if isinstance(c, Not):
        return quantifier_depth(c.inner)
    if isinstance(c, (Forall, Exists)):
        return 1 + quantifier_depth(c.filler)
    raise TypeError(f"not a concept expression: {c!r}")
