"""Constraint-propagation calculus deciding constraint-set satisfiability.

The engine saturates a set of signed constraints under decomposition,
propagation and witness-generating rules, branching where a constraint
admits several ways to be realised, until every branch either exposes a
clash or completes clash-free.  A clash-free completion yields an
explicit finite model (``extract_model``).

Rule discipline per connective and bound shape:

* negation flips the component a bound talks about;
* a lower bound on a conjunction (dually, an upper bound on a
  disjunction) decomposes to both parts deterministically;
* an upper bound on a conjunction (lower on a disjunction) picks which
  part realises each component: a four-way branch for paired bounds;
* a lower bound on an existential (upper on a universal) generates a
  fresh witness.  For a paired bound the truth and falsity components
  may need different witnesses, so generation branches between the
  shared-witness reading and a two-witness split;
* an upper bound on an existential (lower on a universal) constrains
  every role successor: per successor either the role bound or the
  filler bound must give way.  When existing bounds already refute one
  side the other follows deterministically, which is exactly the
  classic conditional propagation; otherwise the choice branches.

Saturation order: deterministic rules to a fixpoint, then branching
decompositions, then generating rules.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction

from .constraints import (
    Assertion,
    Bound,
    ConceptAssertion,
    Constraint,
    DegreePair,
    Form,
    Rel,
    RoleAssertion,
    bound_implies,
    bounds_incompatible,
    conjugated,
)
from .semantics import FiniteInterpretation
from .syntax import (
    And,
    Atomic,
    Bottom,
    Exists,
    Forall,
    Individual,
    Not,
    Or,
    Top,
    Variable,
)

DEFAULT_MAX_BRANCHES = int(os.environ.get("NALC_MAX_BRANCHES", 10**6))
DEFAULT_MAX_STEPS = 100_000


class ResourceExhausted(RuntimeError):
    """Branch or step ceiling hit before an answer was reached."""


class Status(enum.Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class Step:
    number: int
    constraints: tuple[Constraint, ...]
    rule: str
    premises: tuple[int, ...]

    def render(self) -> str:
        body = ", ".join(str(c) for c in self.constraints)
        if self.rule == "hypothesis":
            return f"({self.number}) {body}   [hypothesis]"
        refs = ", ".join(f"({p})" for p in self.premises)
        return f"({self.number}) {body}   {self.rule} : {refs}"


@dataclass(frozen=True)
class ClashInfo:
    message: str
    steps: tuple[int, ...]

    def render(self) -> str:
        refs = ", ".join(f"({p})" for p in self.steps)
        return f"clash : {refs} : {self.message}"


def _vacuous(bound: Bound, ch: str) -> bool:
    if ch == "t":
        return bound.rel is Rel.GE and bound.value == 0
    return bound.rel is Rel.LE and bound.value == 1


def _fixed_value(concept, ch: str):
    """The pinned component value of the top/bottom concepts."""
    if isinstance(concept, Top):
        return 1 if ch == "t" else 0
    if isinstance(concept, Bottom):
        return 0 if ch == "t" else 1
    return None


class ConstraintSet:
    """One tableau branch: ordered constraints plus its derivation trace."""

    def __init__(self):
        self.constraints: list[Constraint] = []
        self.step_of: dict[Constraint, int] = {}
        self.steps: list[Step] = []
        self.by_assertion: dict[Assertion, list[Constraint]] = {}
        self.fresh_counter = 0
        self.processed: set = set()
        self.clash: ClashInfo | None = None

    @staticmethod
    def from_constraints(constraints) -> "ConstraintSet":
        s = ConstraintSet()
        for c in constraints:
            s.add([c], "hypothesis", [])
        return s

    def copy(self) -> "ConstraintSet":
        s = ConstraintSet.__new__(ConstraintSet)
        s.constraints = list(self.constraints)
        s.step_of = dict(self.step_of)
        s.steps = list(self.steps)
        s.by_assertion = {k: list(v) for k, v in self.by_assertion.items()}
        s.fresh_counter = self.fresh_counter
        s.processed = set(self.processed)
        s.clash = self.clash
        return s

    def __contains__(self, c: Constraint) -> bool:
        return c in self.step_of

    def fresh_variable(self) -> Variable:
        self.fresh_counter += 1
        return Variable(self.fresh_counter)

    def objects(self):
        seen = []
        for c in self.constraints:
            a = c.assertion
            objs = (a.subject, a.target) if isinstance(a, RoleAssertion) else (a.subject,)
            for o in objs:
                if o not in seen:
                    seen.append(o)
        return seen

    def channel_bounds(self, assertion: Assertion, ch: str):
        """(constraint, bound) pairs bounding one component of an assertion."""
        out = []
        for c in self.by_assertion.get(assertion, ()):
            bound = c.tbound if ch == "t" else c.fbound
            if bound is not None:
                out.append((c, bound))
        return out

    def implied(self, assertion: Assertion, ch: str, wanted: Bound) -> bool:
        if _vacuous(wanted, ch):
            return True
        return any(bound_implies(b, wanted) for _, b in self.channel_bounds(assertion, ch))

    def refuter(self, assertion: Assertion, ch: str, candidate: Bound):
        for c, b in self.channel_bounds(assertion, ch):
            if bounds_incompatible(b, candidate):
                return c
        return None

    def _check_clash(self, c: Constraint) -> ClashInfo | None:
        step = self.step_of[c]
        for bound, ch in ((c.tbound, "t"), (c.fbound, "f")):
            if bound is None:
                continue
            # Strict bounds with no room in [0, 1].
            if (bound.rel is Rel.GT and bound.value == 1) or (
                bound.rel is Rel.LT and bound.value == 0
            ):
                return ClashInfo(f"strict bound {bound} is unsatisfiable", (step,))
            if isinstance(c.assertion, ConceptAssertion):
                fixed = _fixed_value(c.assertion.concept, ch)
                if fixed is not None and not bound.holds(fixed):
                    name = "top" if fixed in (1, 0) and isinstance(c.assertion.concept, Top) else "bottom"
                    return ClashInfo(
                        f"{name} concept has {ch}-value {fixed}, violating {bound}", (step,)
                    )
            for other, other_bound in self.channel_bounds(c.assertion, ch):
                if other is c:
                    continue
                if bounds_incompatible(other_bound, bound):
                    return ClashInfo(
                        f"conjugated pair on {c.assertion}",
                        tuple(sorted({self.step_of[other], step})),
                    )
        return None

    def add(self, constraints, rule: str, premises) -> bool:
        """Record one rule firing; returns False when nothing is new."""
        new = [c for c in constraints if c not in self.step_of]
        if not new:
            return False
        number = len(self.steps) + 1
        for c in new:
            self.constraints.append(c)
            self.step_of[c] = number
            self.by_assertion.setdefault(c.assertion, []).append(c)
        self.steps.append(Step(number, tuple(new), rule, tuple(sorted(set(premises)))))
        if self.clash is None:
            for c in new:
                info = self._check_clash(c)
                if info is not None:
                    self.clash = info
                    break
        return True

    def trace_lines(self) -> list[str]:
        lines = [step.render() for step in self.steps]
        if self.clash is not None:
            lines.append(self.clash.render())
        return lines


@dataclass(frozen=True)
class CompletionResult:
    status: Status
    witness: ConstraintSet | None
    clashes: tuple[tuple[ConstraintSet, ClashInfo], ...]
    branch_count: int

    @property
    def trace(self) -> list[str]:
        if self.witness is not None:
            return self.witness.trace_lines()
        if self.clashes:
            return self.clashes[0][0].trace_lines()
        return []


def find_clash(constraints) -> ClashInfo | None:
    """Clash check of a constraint collection, independent of any search."""
    s = ConstraintSet.from_constraints(constraints)
    return s.clash


_WORD = {And: "and", Or: "or", Not: "not", Exists: "some", Forall: "all"}
_FORM_CODE = {
    Form.GEQ_LEQ: ">=<=",
    Form.GT_LT: "><",
    Form.LEQ_GEQ: "<=>=",
    Form.LT_GT: "<>",
}


def _label(concept, c: Constraint, halves=None) -> str:
    word = _WORD[type(concept)]
    form = c.form
    if form is not None and (halves is None or len(halves) == 2):
        return f"({word}{_FORM_CODE[form]})"
    (bound, ch) = halves[0] if halves else (c.tbound or c.fbound, "t" if c.tbound else "f")
    return f"({word} {ch}{bound.rel.value})"


def _active_halves(c: Constraint) -> list[tuple[Bound, str]]:
    out = []
    if c.tbound is not None and not _vacuous(c.tbound, "t"):
        out.append((c.tbound, "t"))
    if c.fbound is not None and not _vacuous(c.fbound, "f"):
        out.append((c.fbound, "f"))
    return out


def _make(assertion: Assertion, parts: dict[str, Bound]) -> Constraint:
    return Constraint(assertion, parts.get("t"), parts.get("f"))


def _pair_up(assertion: Assertion, halves) -> Constraint:
    """Combine per-channel conclusions on one assertion into a constraint."""
    parts: dict[str, Bound] = {}
    for bound, ch in halves:
        parts[ch] = bound
    return _make(assertion, parts)


# --- rule classification ------------------------------------------------

def _and_or_kind(concept, ch: str, is_lower: bool) -> str | None:
    """'det' when the bound passes to both parts, 'branch' otherwise."""
    if isinstance(concept, And):
        takes_min = ch == "t"
    elif isinstance(concept, Or):
        takes_min = ch == "f"
    else:
        return None
    if takes_min:
        return "det" if is_lower else "branch"
    return "branch" if is_lower else "det"


def _quant_kind(concept, ch: str, is_lower: bool) -> str | None:
    """'gen' for witness-demanding bounds, 'univ' for successor-wide ones."""
    if isinstance(concept, Exists):
        existential = (ch == "t") == is_lower
    elif isinstance(concept, Forall):
        existential = (ch == "t") != is_lower
    else:
        return None
    return "gen" if existential else "univ"


def _role_channel(concept, ch: str) -> str:
    """Which role component an evaluation channel reads."""
    if isinstance(concept, Forall):
        return "f" if ch == "t" else "t"
    return ch


class _Engine:
    def __init__(self, max_branches: int, max_steps: int):
        self.max_branches = max_branches
        self.max_steps = max_steps
        self.steps_done = 0

    def tick(self):
        self.steps_done += 1
        if self.steps_done > self.max_steps:
            raise ResourceExhausted(f"step ceiling {self.max_steps} exceeded")

    # -- deterministic pass -------------------------------------------

    def apply_deterministic(self, s: ConstraintSet) -> bool:
        for c in list(s.constraints):
            if not isinstance(c.assertion, ConceptAssertion):
                continue
            concept = c.assertion.concept
            subject = c.assertion.subject
            if isinstance(concept, Not):
                inner = ConceptAssertion(concept.inner, subject)
                conclusion = Constraint(inner, c.fbound, c.tbound)
                if conclusion not in s:
                    self.tick()
                    s.add([conclusion], _label(concept, c), [s.step_of[c]])
                    return True
                continue
            halves = _active_halves(c)
            if not halves:
                continue
            if isinstance(concept, (And, Or)):
                det_halves = [
                    (b, ch) for b, ch in halves
                    if _and_or_kind(concept, ch, b.rel.is_lower) == "det"
                ]
                if det_halves:
                    left = ConceptAssertion(concept.left, subject)
                    right = ConceptAssertion(concept.right, subject)
                    additions = [
                        _pair_up(left, det_halves),
                        _pair_up(right, det_halves),
                    ]
                    if any(a not in s for a in additions):
                        self.tick()
                        s.add(additions, _label(concept, c, det_halves), [s.step_of[c]])
                        return True
            if isinstance(concept, (Exists, Forall)):
                if self._universal_det(s, c):
                    return True
        return False

    def _successors(self, s: ConstraintSet, subject, role: str):
        """Objects reachable from ``subject`` through constraints on ``role``."""
        out = []
        for assertion in s.by_assertion:
            if (
                isinstance(assertion, RoleAssertion)
                and assertion.role == role
                and assertion.subject == subject
                and assertion.target not in out
            ):
                out.append(assertion.target)
        return out

    def _universal_actions(self, s: ConstraintSet, c: Constraint):
        """Pending per-successor decisions of successor-wide bounds.

        Yields (half, target, edge, role_disjunct, filler_disjunct,
        decided) where ``decided`` is the forced side or None.
        """
        concept = c.assertion.concept
        subject = c.assertion.subject
        for bound, ch in _active_halves(c):
            if _quant_kind(concept, ch, bound.rel.is_lower) != "univ":
                continue
            role_ch = _role_channel(concept, ch)
            # The bound passes through min/max against the role value:
            # the role-side escape bound has the opposite direction on
            # a universal's truth channel (max) and the same on min.
            # Per successor the bound distributes over min/max as a
            # disjunction: the role side or the filler side must satisfy
            # the very same bound on its own channel.
            for target in self._successors(s, subject, concept.role):
                edge = RoleAssertion(concept.role, subject, target)
                filler = ConceptAssertion(concept.filler, target)
                role_disjunct = Bound(bound.rel, bound.value)
                filler_disjunct = Bound(bound.rel, bound.value)
                if s.implied(filler, ch, filler_disjunct) or s.implied(
                    edge, role_ch, role_disjunct
                ):
                    continue
                role_refuter = s.refuter(edge, role_ch, role_disjunct)
                filler_refuter = s.refuter(filler, ch, filler_disjunct)
                decided = None
                if role_refuter is not None and filler_refuter is None:
                    decided = ("filler", role_refuter)
                elif filler_refuter is not None and role_refuter is None:
                    decided = ("role", filler_refuter)
                elif role_refuter is not None and filler_refuter is not None:
                    # Both sides are blocked: the branch is doomed; pick
                    # one side and let the clash surface.
                    decided = ("filler", role_refuter)
                yield (bound, ch, target, edge, filler, role_disjunct, filler_disjunct, decided)

    def _universal_det(self, s: ConstraintSet, c: Constraint) -> bool:
        concept = c.assertion.concept
        decided_by_target: dict = {}
        for action in self._universal_actions(s, c):
            bound, ch, target, edge, filler, role_d, filler_d, decided = action
            if decided is None:
                continue
            decided_by_target.setdefault(target, []).append(action)
        for target, actions in decided_by_target.items():
            additions = []
            premises = [s.step_of[c]]
            halves = []
            filler_assertion = None
            for bound, ch, _t, edge, filler, role_d, filler_d, decided in actions:
                side, refuter = decided
                premises.append(s.step_of[refuter])
                if side == "filler":
                    halves.append((filler_d, ch))
                    filler_assertion = filler
                else:
                    additions.append(_make(edge, {_role_channel(concept, ch): role_d}))
            if halves and filler_assertion is not None:
                additions.append(_pair_up(filler_assertion, halves))
            additions = [a for a in additions if a not in s]
            if not additions:
                continue
            self.tick()
            s.add(additions, _label(concept, c, halves or None), premises)
            return True
        return False

    # -- branching pass -------------------------------------------------

    def find_branches(self, s: ConstraintSet):
        for c in list(s.constraints):
            if not isinstance(c.assertion, ConceptAssertion):
                continue
            concept = c.assertion.concept
            subject = c.assertion.subject
            if isinstance(concept, (And, Or)):
                halves = [
                    (b, ch) for b, ch in _active_halves(c)
                    if _and_or_kind(concept, ch, b.rel.is_lower) == "branch"
                ]
                if not halves:
                    continue
                key = ("split", c)
                if key in s.processed:
                    continue
                left = ConceptAssertion(concept.left, subject)
                right = ConceptAssertion(concept.right, subject)
                options_per_half = []
                for bound, ch in halves:
                    options_per_half.append([(left, bound, ch), (right, bound, ch)])
                branches = []
                if len(options_per_half) == 1:
                    for target, bound, ch in options_per_half[0]:
                        branches.append([_make(target, {ch: bound})])
                else:
                    for t_opt in options_per_half[0]:
                        for f_opt in options_per_half[1]:
                            picks = [t_opt, f_opt]
                            by_target: dict = {}
                            for target, bound, ch in picks:
                                by_target.setdefault(target, []).append((bound, ch))
                            branches.append(
                                [_pair_up(t, hs) for t, hs in by_target.items()]
                            )
                if any(all(a in s for a in branch) for branch in branches):
                    s.processed.add(key)
                    continue
                return c, _label(concept, c, halves), key, [s.step_of[c]], branches
            if isinstance(concept, (Exists, Forall)):
                for action in self._universal_actions(s, c):
                    bound, ch, target, edge, filler, role_d, filler_d, decided = action
                    if decided is not None:
                        continue
                    key = ("edge", c, ch, target)
                    if key in s.processed:
                        continue
                    role_ch = _role_channel(concept, ch)
                    branches = [
                        [_make(edge, {role_ch: role_d})],
                        [_make(filler, {ch: filler_d})],
                    ]
                    label = f"({_WORD[type(concept)]} {ch}{bound.rel.value} ?)"
                    return c, label, key, [s.step_of[c]], branches
        return None

    # -- generating pass ------------------------------------------------

    def find_generation(self, s: ConstraintSet):
        for c in list(s.constraints):
            if not isinstance(c.assertion, ConceptAssertion):
                continue
            concept = c.assertion.concept
            if not isinstance(concept, (Exists, Forall)):
                continue
            subject = c.assertion.subject
            gen_halves = [
                (b, ch) for b, ch in _active_halves(c)
                if _quant_kind(concept, ch, b.rel.is_lower) == "gen"
            ]
            pending = []
            for bound, ch in gen_halves:
                role_ch = _role_channel(concept, ch)
                witnessed = any(
                    s.implied(RoleAssertion(concept.role, subject, t), role_ch, bound)
                    and s.implied(ConceptAssertion(concept.filler, t), ch, bound)
                    for t in self._successors(s, subject, concept.role)
                )
                if not witnessed:
                    pending.append((bound, ch))
            if not pending:
                continue

            def conclusions(var, halves):
                edge_parts: dict[str, Bound] = {}
                filler_parts: dict[str, Bound] = {}
                for bound, ch in halves:
                    edge_parts[_role_channel(concept, ch)] = bound
                    filler_parts[ch] = bound
                return [
                    _make(RoleAssertion(concept.role, subject, var), edge_parts),
                    _make(ConceptAssertion(concept.filler, var), filler_parts),
                ]

            return c, _label(concept, c, pending), [s.step_of[c]], pending, conclusions
        return None


def apply_rules(s: ConstraintSet, _engine: _Engine | None = None):
    """Apply one rule; returns the branch list or None at a fixpoint.

    The input set is not modified.  Deterministic rules return a single
    branch; decomposition choices and witness generation return several.
    """
    engine = _engine or _Engine(DEFAULT_MAX_BRANCHES, DEFAULT_MAX_STEPS)
    work = s.copy()
    if engine.apply_deterministic(work):
        return [work]
    found = engine.find_branches(s)
    if found is not None:
        c, label, key, premises, branches = found
        out = []
        for additions in branches:
            child = s.copy()
            child.processed.add(key)
            child.add(additions, label, premises)
            out.append(child)
        return out
    found = engine.find_generation(s)
    if found is not None:
        c, label, premises, pending, conclusions = found
        out = []
        if len(pending) == 2:
            shared = s.copy()
            x = shared.fresh_variable()
            shared.add(conclusions(x, pending), label, premises)
            out.append(shared)
            split = s.copy()
            x1 = split.fresh_variable()
            x2 = split.fresh_variable()
            additions = conclusions(x1, pending[:1]) + conclusions(x2, pending[1:])
            split.add(additions, label + " split", premises)
            out.append(split)
        else:
            child = s.copy()
            x = child.fresh_variable()
            child.add(conclusions(x, pending), label, premises)
            out.append(child)
        return out
    return None


def complete(
    constraints,
    max_branches: int | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> CompletionResult:
    """Search the completions of a constraint set.

    Depth-first, left branch first; each branch is saturated under the
    deterministic rules before any choice is made.  Returns the first
    clash-free completion, or the clash evidence of every explored
    branch when there is none.
    """
    if max_branches is None:
        max_branches = DEFAULT_MAX_BRANCHES
    engine = _Engine(max_branches, max_steps)
    root = ConstraintSet.from_constraints(constraints)
    stack = [root]
    clashes: list[tuple[ConstraintSet, ClashInfo]] = []
    branch_count = 0
    while stack:
        s = stack.pop()
        branch_count += 1
        if branch_count > max_branches:
            raise ResourceExhausted(f"branch ceiling {max_branches} exceeded")
        while True:
            if s.clash is not None:
                clashes.append((s, s.clash))
                break
            if engine.apply_deterministic(s):
                continue
            found = engine.find_branches(s)
            if found is not None:
                _c, label, key, premises, branches = found
                children = []
                for additions in branches:
                    child = s.copy()
                    child.processed.add(key)
                    child.add(additions, label, premises)
                    children.append(child)
                stack.extend(reversed(children))
                break
            found = engine.find_generation(s)
            if found is not None:
                children = apply_rules(s, engine)
                stack.extend(reversed(children))
                break
            return CompletionResult(
                Status.SATISFIABLE, s, tuple(clashes), branch_count
            )
    return CompletionResult(Status.UNSATISFIABLE, None, tuple(clashes), branch_count)


# --- model extraction ---------------------------------------------------

def _strongest_lower(bounds):
    best = None
    for b in bounds:
        if not b.rel.is_lower:
            continue
        key = (b.value, b.rel.is_strict)
        if best is None or key > (best.value, best.rel.is_strict):
            best = b
    return best


def _strongest_upper(bounds):
    best = None
    for b in bounds:
        if b.rel.is_lower:
            continue
        key = (b.value, not b.rel.is_strict)
        if best is None or key < (best.value, not best.rel.is_strict):
            best = b
    return best


def _pick_low(bounds) -> Fraction:
    """Smallest convenient value: sits on the strongest lower bound."""
    lo = _strongest_lower(bounds)
    up = _strongest_upper(bounds)
    if lo is None:
        return Fraction(0)
    if not lo.rel.is_strict:
        return lo.value
    top = up.value if up is not None else Fraction(1)
    return (lo.value + top) / 2


def _pick_high(bounds) -> Fraction:
    """Largest convenient value: sits on the strongest upper bound."""
    lo = _strongest_lower(bounds)
    up = _strongest_upper(bounds)
    if up is None:
        return Fraction(1)
    if not up.rel.is_strict:
        return up.value
    bottom = lo.value if lo is not None else Fraction(0)
    return (bottom + up.value) / 2


def extract_model(s: ConstraintSet) -> FiniteInterpretation:
    """Read a finite interpretation off a clash-free completion.

    Truth entries take the least value the lower bounds allow (strict
    bounds move to the midpoint of the remaining interval); falsity
    entries take the greatest value the upper bounds allow.  Entries
    nobody constrains stay at the (0, 1) default, so unconstrained
    successors can never break a successor-wide bound.
    """
    if s.clash is not None:
        raise ValueError("cannot extract a model from a clashed constraint set")
    objects = s.objects()
    individuals = sorted(
        (o.name for o in objects if isinstance(o, Individual))
    )
    variables = sorted(
        (o for o in objects if isinstance(o, Variable)), key=lambda v: v.index
    )
    # '?' cannot occur in identifiers, so variable elements never
    # collide with individual names.
    domain = tuple(individuals) + tuple(f"?{v}" for v in variables)
    if not domain:
        domain = ("d0",)
    interp = FiniteInterpretation(tuple(domain), {name: name for name in individuals})

    def element(obj) -> str:
        return obj.name if isinstance(obj, Individual) else f"?{obj}"

    t_bounds: dict = {}
    f_bounds: dict = {}
    for c in s.constraints:
        a = c.assertion
        if isinstance(a, ConceptAssertion):
            if not isinstance(a.concept, Atomic):
                continue
            key = ("c", a.concept.name, element(a.subject))
        else:
            key = ("r", a.role, element(a.subject), element(a.target))
        if c.tbound is not None:
            t_bounds.setdefault(key, []).append(c.tbound)
        if c.fbound is not None:
            f_bounds.setdefault(key, []).append(c.fbound)

    for key in sorted(set(t_bounds) | set(f_bounds), key=str):
        t = _pick_low(t_bounds.get(key, ()))
        f = _pick_high(f_bounds.get(key, ()))
        if key[0] == "c":
            interp.concept_table[(key[1], key[2])] = DegreePair(t, f)
        else:
            interp.role_table[(key[1], key[2], key[3])] = DegreePair(t, f)
    return interp


def variable_assignment(s: ConstraintSet) -> dict:
    """Assignment mapping each tableau variable to its model element."""
    return {
        o: f"?{o}" for o in s.objects() if isinstance(o, Variable)
    }


__all__ = [
    "ClashInfo",
    "CompletionResult",
    "ConstraintSet",
    "ResourceExhausted",
    "Status",
    "Step",
    "apply_rules",
    "complete",
    "conjugated",
    "extract_model",
    "find_clash",
    "variable_assignment",
]
