"""Degree bounds, assertions and signed constraints.

A constraint attaches bounds to the truth value and/or the falsity
value of an assertion.  The four classic shapes pair a bound on each
component:

    >= n <= m     truth >= n  and falsity <= m
    >  n <  m     truth >  n  and falsity <  m
    <= n >= m     truth <= n  and falsity >= m
    <  n >  m     truth <  n  and falsity >  m

Internally a constraint may also carry a bound on only one component
(the other side ``None``).  Such half constraints arise when the
tableau decomposes a paired constraint whose two components must be
realised by different successors; they have no surface syntax.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .syntax import ConceptExpr, Obj


def _check_degree(value: Fraction, what: str) -> None:
    if not 0 <= value <= 1:
        raise ValueError(f"{what} {value} outside [0, 1]")


def degree_str(value: Fraction) -> str:
    """Render a degree: exact decimal when finite, else ``p/q``."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    d = den
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return f"{num}/{den}"
    digits = 0
    scaled = Fraction(num, den)
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    text = str(scaled.numerator).rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"


def parse_degree(text: str) -> Fraction:
    """Parse a decimal or ``p/q`` degree literal exactly."""
    value = Fraction(text)
    _check_degree(value, "degree")
    return value


@dataclass(frozen=True)
class DegreePair:
    """Exact rational bound pair ``(n, m)``, both in ``[0, 1]``."""

    n: Fraction
    m: Fraction

    def __post_init__(self):
        _check_degree(self.n, "first bound")
        _check_degree(self.m, "second bound")


@dataclass(frozen=True)
class ConceptAssertion:
    concept: ConceptExpr
    subject: Obj

    def __str__(self):
        from .parser import format_concept

        return f"{format_concept(self.concept)}({self.subject})"


@dataclass(frozen=True)
class RoleAssertion:
    role: str
    subject: Obj
    target: Obj

    def __str__(self):
        return f"{self.role}({self.subject},{self.target})"


Assertion = ConceptAssertion | RoleAssertion


class Rel(enum.Enum):
    GE = ">="
    GT = ">"
    LE = "<="
    LT = "<"

    @property
    def is_lower(self) -> bool:
        return self in (Rel.GE, Rel.GT)

    @property
    def is_strict(self) -> bool:
        return self in (Rel.GT, Rel.LT)


@dataclass(frozen=True)
class Bound:
    rel: Rel
    value: Fraction

    def __post_init__(self):
        _check_degree(self.value, "bound")

    def holds(self, v: Fraction) -> bool:
        if self.rel is Rel.GE:
            return v >= self.value
        if self.rel is Rel.GT:
            return v > self.value
        if self.rel is Rel.LE:
            return v <= self.value
        return v < self.value

    def __str__(self):
        return f"{self.rel.value} {degree_str(self.value)}"


def bound_implies(given: Bound, wanted: Bound) -> bool:
    """Does ``x given`` force ``x wanted`` for every x in [0, 1]?"""
    if given.rel.is_lower != wanted.rel.is_lower:
        return False
    g, w = given.value, wanted.value
    if given.rel.is_lower:
        if wanted.rel is Rel.GT and given.rel is Rel.GE:
            return g > w
        return g >= w
    if wanted.rel is Rel.LT and given.rel is Rel.LE:
        return g < w
    return g <= w


def bounds_incompatible(a: Bound, b: Bound) -> bool:
    """Is ``{x : x a and x b}`` empty within [0, 1]?

    Two bounds in the same direction are always jointly satisfiable;
    a lower/upper pair is empty when the lower bound meets or crosses
    the upper one (equality is empty as soon as either side is strict).
    """
    if a.rel.is_lower == b.rel.is_lower:
        return False
    lo, up = (a, b) if a.rel.is_lower else (b, a)
    if lo.value > up.value:
        return True
    if lo.value == up.value:
        return lo.rel.is_strict or up.rel.is_strict
    return False


class Form(enum.Enum):
    """The four surface shapes of a paired constraint."""

    GEQ_LEQ = (Rel.GE, Rel.LE)
    GT_LT = (Rel.GT, Rel.LT)
    LEQ_GEQ = (Rel.LE, Rel.GE)
    LT_GT = (Rel.LT, Rel.GT)

    @property
    def is_lower(self) -> bool:
        """Lower forms bound truth from below and falsity from above."""
        return self in (Form.GEQ_LEQ, Form.GT_LT)


@dataclass(frozen=True)
class Constraint:
    """A signed degree constraint on an assertion.

    ``tbound`` restricts the truth value, ``fbound`` the falsity value;
    at least one is present.
    """

    assertion: Assertion
    tbound: Bound | None
    fbound: Bound | None

    def __post_init__(self):
        if self.tbound is None and self.fbound is None:
            raise ValueError("constraint must bound at least one component")

    @staticmethod
    def of_form(assertion: Assertion, form: Form, bounds: DegreePair) -> "Constraint":
        trel, frel = form.value
        return Constraint(assertion, Bound(trel, bounds.n), Bound(frel, bounds.m))

    @staticmethod
    def geq_leq(assertion: Assertion, n, m) -> "Constraint":
        return Constraint.of_form(assertion, Form.GEQ_LEQ, DegreePair(Fraction(n), Fraction(m)))

    @staticmethod
    def gt_lt(assertion: Assertion, n, m) -> "Constraint":
        return Constraint.of_form(assertion, Form.GT_LT, DegreePair(Fraction(n), Fraction(m)))

    @staticmethod
    def leq_geq(assertion: Assertion, n, m) -> "Constraint":
        return Constraint.of_form(assertion, Form.LEQ_GEQ, DegreePair(Fraction(n), Fraction(m)))

    @staticmethod
    def lt_gt(assertion: Assertion, n, m) -> "Constraint":
        return Constraint.of_form(assertion, Form.LT_GT, DegreePair(Fraction(n), Fraction(m)))

    @property
    def form(self) -> Form | None:
        """The classic four-way shape, or ``None`` for half constraints."""
        if self.tbound is None or self.fbound is None:
            return None
        for form in Form:
            trel, frel = form.value
            if self.tbound.rel is trel and self.fbound.rel is frel:
                return form
        return None

    @property
    def bounds(self) -> DegreePair | None:
        if self.form is None:
            return None
        return DegreePair(self.tbound.value, self.fbound.value)

    def negated(self) -> "Constraint":
        """The refutation constraint used for entailment queries.

        ``>= n <= m`` is refuted by adding ``< n > m`` and
        ``<= n >= m`` by adding ``> n < m``.
        """
        form = self.form
        if form is Form.GEQ_LEQ:
            return Constraint.of_form(self.assertion, Form.LT_GT, self.bounds)
        if form is Form.LEQ_GEQ:
            return Constraint.of_form(self.assertion, Form.GT_LT, self.bounds)
        raise ValueError("only nonstrict constraints can be queried")

    def __str__(self):
        parts = [str(self.assertion)]
        if self.tbound is not None and self.fbound is not None:
            parts.append(str(self.tbound))
            parts.append(str(self.fbound))
        elif self.tbound is not None:
            parts.append(f"t{self.tbound}")
        else:
            parts.append(f"f{self.fbound}")
        return " ".join(parts)


def conjugated(c1: Constraint, c2: Constraint) -> bool:
    """Are two constraints on the same assertion jointly unsatisfiable?

    Symmetric; true when the truth bounds conflict or the falsity
    bounds conflict.  Two constraints of the same direction are never
    conjugated.
    """
    if c1.assertion != c2.assertion:
        raise ValueError("conjugation is defined on a shared assertion")
    if c1.tbound and c2.tbound and bounds_incompatible(c1.tbound, c2.tbound):
        return True
    if c1.fbound and c2.fbound and bounds_incompatible(c1.fbound, c2.fbound):
        return True
    return False
