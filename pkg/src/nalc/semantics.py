"""Model-theoretic semantics over explicit finite interpretations.

Concepts evaluate to a pair of degrees: the truth component composes
with min/max and the falsity component with the dual operator, while
negation swaps the two.  Quantifiers take the pointwise best value
over the finite domain, so inf and sup are attained.

``exists_model`` searches all assignments of grid values to the atomic
concept and role tables.  The search is exhaustive (backtracking with
exact per-channel interval pruning and connected-component splitting),
so it serves as the ground-truth check for the tableau at desk scale.
Everything is exact rational arithmetic; inside the search degrees are
scaled to a common integer denominator, which changes nothing but the
constant factor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .constraints import (
    Assertion,
    Bound,
    Constraint,
    DegreePair,
    Rel,
    RoleAssertion,
)
from .kb import AxiomKind, FuzzyAssertion, FuzzyRel, TerminologicalAxiom
from .syntax import (
    And,
    Atomic,
    Bottom,
    ConceptExpr,
    Exists,
    Forall,
    Individual,
    Not,
    Or,
    Top,
    Variable,
    quantifier_depth,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class SearchExhausted(RuntimeError):
    """Raised when model search exceeds its node ceiling."""

    def __init__(self, nodes: int):
        super().__init__(f"model search exceeded the ceiling after {nodes} nodes")
        self.nodes = nodes


@dataclass
class FiniteInterpretation:
    """Explicit finite interpretation with degree-valued tables.

    Missing table entries default to ``(0, 1)``: fully false.  The
    individual map must be injective.
    """

    domain: tuple[str, ...]
    individual_map: dict[str, str]
    concept_table: dict[tuple[str, str], DegreePair] = field(default_factory=dict)
    role_table: dict[tuple[str, str, str], DegreePair] = field(default_factory=dict)

    def __post_init__(self):
        if not self.domain:
            raise ValueError("the domain must be nonempty")
        targets = list(self.individual_map.values())
        if len(set(targets)) != len(targets):
            raise ValueError("individuals must map to distinct elements")
        for e in targets:
            if e not in self.domain:
                raise ValueError(f"unknown element {e!r} in individual map")

    def concept_value(self, name: str, element: str) -> DegreePair:
        return self.concept_table.get((name, element), DegreePair(ZERO, ONE))

    def role_value(self, role: str, e1: str, e2: str) -> DegreePair:
        return self.role_table.get((role, e1, e2), DegreePair(ZERO, ONE))


def eval_concept(interp: FiniteInterpretation, c: ConceptExpr, element: str) -> DegreePair:
    """Evaluate the truth/falsity pair of ``c`` at a domain element."""
    if element not in interp.domain:
        raise ValueError(f"unknown element {element!r}")
    if isinstance(c, Top):
        return DegreePair(ONE, ZERO)
    if isinstance(c, Bottom):
        return DegreePair(ZERO, ONE)
    if isinstance(c, Atomic):
        return interp.concept_value(c.name, element)
    if isinstance(c, Not):
        inner = eval_concept(interp, c.inner, element)
        return DegreePair(inner.m, inner.n)
    if isinstance(c, And):
        l = eval_concept(interp, c.left, element)
        r = eval_concept(interp, c.right, element)
        return DegreePair(min(l.n, r.n), max(l.m, r.m))
    if isinstance(c, Or):
        l = eval_concept(interp, c.left, element)
        r = eval_concept(interp, c.right, element)
        return DegreePair(max(l.n, r.n), min(l.m, r.m))
    if isinstance(c, Forall):
        t = ONE
        f = ZERO
        for d in interp.domain:
            rv = interp.role_value(c.role, element, d)
            fv = eval_concept(interp, c.filler, d)
            t = min(t, max(rv.m, fv.n))
            f = max(f, min(rv.n, fv.m))
        return DegreePair(t, f)
    if isinstance(c, Exists):
        t = ZERO
        f = ONE
        for d in interp.domain:
            rv = interp.role_value(c.role, element, d)
            fv = eval_concept(interp, c.filler, d)
            t = max(t, min(rv.n, fv.n))
            f = min(f, max(rv.m, fv.m))
        return DegreePair(t, f)
    raise TypeError(f"not a concept expression: {c!r}")


def _resolve(obj, interp: FiniteInterpretation, assignment) -> str:
    if isinstance(obj, Individual):
        if obj.name not in interp.individual_map:
            raise ValueError(f"individual {obj.name!r} is not mapped")
        return interp.individual_map[obj.name]
    if assignment is None or obj not in assignment:
        raise ValueError(f"variable {obj} has no assignment")
    return assignment[obj]


def assertion_value(
    interp: FiniteInterpretation, assertion: Assertion, assignment=None
) -> DegreePair:
    if isinstance(assertion, RoleAssertion):
        e1 = _resolve(assertion.subject, interp, assignment)
        e2 = _resolve(assertion.target, interp, assignment)
        return interp.role_value(assertion.role, e1, e2)
    e = _resolve(assertion.subject, interp, assignment)
    return eval_concept(interp, assertion.concept, e)


def satisfies(interp: FiniteInterpretation, constraint: Constraint, assignment=None) -> bool:
    """Does the interpretation satisfy one constraint?

    Variables in the constraint are resolved through ``assignment``.
    """
    value = assertion_value(interp, constraint.assertion, assignment)
    if constraint.tbound is not None and not constraint.tbound.holds(value.n):
        return False
    if constraint.fbound is not None and not constraint.fbound.holds(value.m):
        return False
    return True


def constraint_variables(constraints) -> list[Variable]:
    out = set()
    for c in constraints:
        a = c.assertion
        objs = (a.subject, a.target) if isinstance(a, RoleAssertion) else (a.subject,)
        out.update(o for o in objs if isinstance(o, Variable))
    return sorted(out, key=lambda v: v.index)


def satisfies_all(interp: FiniteInterpretation, constraints) -> bool:
    """Satisfaction of a set; variables are taken existentially."""
    constraints = list(constraints)
    variables = constraint_variables(constraints)
    if not variables:
        return all(satisfies(interp, c) for c in constraints)
    for combo in itertools.product(interp.domain, repeat=len(variables)):
        assignment = dict(zip(variables, combo))
        if all(satisfies(interp, c, assignment) for c in constraints):
            return True
    return False


def satisfies_axiom(interp: FiniteInterpretation, axiom: TerminologicalAxiom) -> bool:
    for d in interp.domain:
        av = interp.concept_value(axiom.lhs, d)
        cv = eval_concept(interp, axiom.rhs, d)
        if axiom.kind is AxiomKind.SPECIALIZATION:
            if not (av.n <= cv.n and av.m >= cv.m):
                return False
        else:
            if av != cv:
                return False
    return True


# --- degree grids ------------------------------------------------------

@dataclass(frozen=True)
class DegreeGrid:
    """Finite ascending degree ladder containing 0 and 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = self.values
        if not vals or list(vals) != sorted(set(vals)) or vals[0] != 0 or vals[-1] != 1:
            raise ValueError("grid must be sorted, deduplicated and span [0, 1]")

    @staticmethod
    def containing(degrees) -> "DegreeGrid":
        return DegreeGrid(tuple(sorted(set(map(Fraction, degrees)) | {ZERO, ONE})))

    def with_midpoints(self) -> "DegreeGrid":
        """Insert midpoints between neighbours (room for strict bounds)."""
        vals = list(self.values)
        mids = [(a + b) / 2 for a, b in zip(vals, vals[1:])]
        return DegreeGrid.containing(vals + mids)


QUARTER_GRID = DegreeGrid.containing([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])


# --- exhaustive model search ------------------------------------------

class _Budget:
    def __init__(self, ceiling: int):
        self.ceiling = ceiling
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.ceiling:
            raise SearchExhausted(self.nodes)


def _int_interval(c: ConceptExpr, e: str, ch: str, cells, domain, scale: int):
    """Exact reachable [lo, hi] of one evaluation channel, integer scaled.

    ``cells[key]`` is an assigned integer or None (free, meaning the
    whole [0, scale] range).  Every cell occurs positively in a channel
    evaluation, so the all-low / all-high corners are attained and the
    interval is exact per channel.
    """
    if isinstance(c, Top):
        return (scale, scale) if ch == "t" else (0, 0)
    if isinstance(c, Bottom):
        return (0, 0) if ch == "t" else (scale, scale)
    if isinstance(c, Atomic):
        v = cells.get(("c", c.name, e, ch))
        return (0, scale) if v is None else (v, v)
    if isinstance(c, Not):
        return _int_interval(c.inner, e, "f" if ch == "t" else "t", cells, domain, scale)
    if isinstance(c, (And, Or)):
        llo, lhi = _int_interval(c.left, e, ch, cells, domain, scale)
        rlo, rhi = _int_interval(c.right, e, ch, cells, domain, scale)
        takes_min = (isinstance(c, And)) == (ch == "t")
        if takes_min:
            return (llo if llo < rlo else rlo), (lhi if lhi < rhi else rhi)
        return (llo if llo > rlo else rlo), (lhi if lhi > rhi else rhi)
    if isinstance(c, (Forall, Exists)):
        is_forall = isinstance(c, Forall)
        role_ch = ("f" if ch == "t" else "t") if is_forall else ch
        inner_min = is_forall != (ch == "t")
        outer_min = is_forall == (ch == "t")
        lo = hi = None
        for d in domain:
            rv = cells.get(("r", c.role, e, d, role_ch))
            rlo, rhi = (0, scale) if rv is None else (rv, rv)
            flo, fhi = _int_interval(c.filler, d, ch, cells, domain, scale)
            if inner_min:
                plo = rlo if rlo < flo else flo
                phi = rhi if rhi < fhi else fhi
            else:
                plo = rlo if rlo > flo else flo
                phi = rhi if rhi > fhi else fhi
            if lo is None:
                lo, hi = plo, phi
            elif outer_min:
                lo = lo if lo < plo else plo
                hi = hi if hi < phi else phi
            else:
                lo = lo if lo > plo else plo
                hi = hi if hi > phi else phi
        return lo, hi
    raise TypeError(f"not a concept expression: {c!r}")


def _reads(c: ConceptExpr, e: str, ch: str, domain, acc: set) -> None:
    """Cells the evaluation can depend on.

    Subtrees whose value is already pinned with every cell free (e.g.
    quantification into the top concept) contribute nothing; leaving
    their cells out keeps the model search from enumerating degrees
    that cannot prune anything.
    """
    lo, hi = _int_interval(c, e, ch, {}, domain, 1)
    if lo == hi:
        return
    if isinstance(c, Atomic):
        acc.add(("c", c.name, e, ch))
    elif isinstance(c, Not):
        _reads(c.inner, e, "f" if ch == "t" else "t", domain, acc)
    elif isinstance(c, (And, Or)):
        _reads(c.left, e, ch, domain, acc)
        _reads(c.right, e, ch, domain, acc)
    elif isinstance(c, (Forall, Exists)):
        role_ch = ("f" if ch == "t" else "t") if isinstance(c, Forall) else ch
        for d in domain:
            acc.add(("r", c.role, e, d, role_ch))
            _reads(c.filler, d, ch, domain, acc)


def _int_check(bound: Bound, scale: int):
    """Compile a bound into a predicate over integer intervals."""
    v = int(bound.value * scale)
    rel = bound.rel
    if rel is Rel.GE:
        return lambda lo, hi: hi >= v
    if rel is Rel.GT:
        return lambda lo, hi: hi > v
    if rel is Rel.LE:
        return lambda lo, hi: lo <= v
    return lambda lo, hi: lo < v


def _common_scale(fractions) -> int:
    scale = 1
    for value in fractions:
        scale = scale * value.denominator // math.gcd(scale, value.denominator)
    return scale


def _backtrack(order, grid_ints, cells, watchers, run_check, budget) -> bool:
    """DFS over cell assignments; only checks watching a cell re-run."""

    def go(i: int) -> bool:
        budget.tick()
        if i == len(order):
            return True
        key = order[i]
        for value in grid_ints:
            cells[key] = value
            if all(run_check(w) for w in watchers[key]) and go(i + 1):
                return True
        cells[key] = None
        return False

    return go(0)


def exists_model(
    constraints,
    domain_size: int,
    grid: DegreeGrid,
    max_nodes: int = 5_000_000,
    axioms=(),
) -> FiniteInterpretation | None:
    """Search for a grid-valued model of the constraints.

    Individuals map injectively onto the first elements; variables are
    taken existentially over the whole domain.  Terminological axioms,
    if given, are enforced pointwise at every element.  Raises
    SearchExhausted when the search exceeds ``max_nodes`` nodes.
    """
    constraints = list(constraints)
    axioms = list(axioms)
    individuals = sorted(
        {
            o.name
            for c in constraints
            for o in (
                (c.assertion.subject, c.assertion.target)
                if isinstance(c.assertion, RoleAssertion)
                else (c.assertion.subject,)
            )
            if isinstance(o, Individual)
        }
    )
    if domain_size < max(1, len(individuals)):
        raise ValueError("domain too small for the named individuals")
    domain = tuple(f"d{i}" for i in range(domain_size))
    ind_map = {name: domain[i] for i, name in enumerate(individuals)}
    variables = constraint_variables(constraints)
    budget = _Budget(max_nodes)

    bound_values = [
        b.value for c in constraints for b in (c.tbound, c.fbound) if b is not None
    ]
    scale = _common_scale(list(grid.values) + bound_values)
    grid_ints = [int(v * scale) for v in grid.values]

    for combo in itertools.product(domain, repeat=len(variables)):
        assignment = dict(zip(variables, combo))

        def element(obj) -> str:
            return ind_map[obj.name] if isinstance(obj, Individual) else assignment[obj]

        halves = []  # (feasibility closure over cells, reads)
        for c in constraints:
            for bound, ch in ((c.tbound, "t"), (c.fbound, "f")):
                if bound is None:
                    continue
                assertion = c.assertion
                check = _int_check(bound, scale)
                if isinstance(assertion, RoleAssertion):
                    key = ("r", assertion.role, element(assertion.subject),
                           element(assertion.target), ch)
                    reads = {key}

                    def run(cells, key=key, check=check):
                        v = cells.get(key)
                        lo, hi = (0, scale) if v is None else (v, v)
                        return check(lo, hi)

                else:
                    reads = set()
                    _reads(assertion.concept, element(assertion.subject), ch, domain, reads)

                    def run(cells, concept=assertion.concept,
                            e=element(assertion.subject), ch=ch, check=check):
                        return check(*_int_interval(concept, e, ch, cells, domain, scale))

                halves.append((run, reads))

        for ax in axioms:
            # pointwise per element: a pair of channel comparisons
            for d in domain:
                reads = {("c", ax.lhs, d, "t"), ("c", ax.lhs, d, "f")}
                _reads(ax.rhs, d, "t", domain, reads)
                _reads(ax.rhs, d, "f", domain, reads)

                def run(cells, ax=ax, d=d):
                    at = cells.get(("c", ax.lhs, d, "t"))
                    af = cells.get(("c", ax.lhs, d, "f"))
                    atlo, athi = (0, scale) if at is None else (at, at)
                    aflo, afhi = (0, scale) if af is None else (af, af)
                    ctlo, cthi = _int_interval(ax.rhs, d, "t", cells, domain, scale)
                    cflo, cfhi = _int_interval(ax.rhs, d, "f", cells, domain, scale)
                    if ax.kind is AxiomKind.SPECIALIZATION:
                        return atlo <= cthi and afhi >= cflo
                    return (
                        atlo <= cthi and athi >= ctlo
                        and aflo <= cfhi and afhi >= cflo
                    )

                halves.append((run, reads))

        # Union-find cells into independent components.
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for _, reads in halves:
            ordered = sorted(reads)
            for a, b in zip(ordered, ordered[1:]):
                union(a, b)

        cells: dict = {}
        for _, reads in halves:
            for key in reads:
                cells.setdefault(key, None)

        groups: dict = {}
        for idx, (_, reads) in enumerate(halves):
            root = find(sorted(reads)[0]) if reads else None
            groups.setdefault(root, []).append(idx)

        ok = True
        for root, idxs in groups.items():
            def run_check(i):
                return halves[i][0](cells)

            if not all(run_check(i) for i in idxs):
                ok = False
                break
            if root is None:
                continue
            watchers: dict = {}
            for i in idxs:
                for k in halves[i][1]:
                    watchers.setdefault(k, []).append(i)
            # Tight checks first: cells of small-scope checks get assigned
            # consecutively, so each check can prune as soon as possible.
            member_cells: list = []
            for i in sorted(idxs, key=lambda i: len(halves[i][1])):
                for k in sorted(halves[i][1]):
                    if k not in member_cells:
                        member_cells.append(k)
            if not _backtrack(member_cells, grid_ints, cells, watchers, run_check, budget):
                ok = False
                break
        if not ok:
            continue

        interp = FiniteInterpretation(domain, ind_map)
        names = {k[1] for k in cells if k[0] == "c"}
        roles = {k[1] for k in cells if k[0] == "r"}

        def degree(key) -> Fraction | None:
            v = cells.get(key)
            return None if v is None else Fraction(v, scale)

        for name in names:
            for d in domain:
                t = degree(("c", name, d, "t"))
                f = degree(("c", name, d, "f"))
                interp.concept_table[(name, d)] = DegreePair(
                    ZERO if t is None else t, ONE if f is None else f
                )
        for role in roles:
            for d1 in domain:
                for d2 in domain:
                    t = degree(("r", role, d1, d2, "t"))
                    f = degree(("r", role, d1, d2, "f"))
                    interp.role_table[(role, d1, d2)] = DegreePair(
                        ZERO if t is None else t, ONE if f is None else f
                    )
        if all(satisfies(interp, c, assignment) for c in constraints) and all(
            satisfies_axiom(interp, ax) for ax in axioms
        ):
            return interp
        raise AssertionError("search produced a non-model; pruning is unsound")
    return None


def constraint_degrees(constraints) -> set[Fraction]:
    out = set()
    for c in constraints:
        if c.tbound is not None:
            out.add(c.tbound.value)
        if c.fbound is not None:
            out.add(c.fbound.value)
    return out


def default_domain_size(constraints) -> int:
    """Distinct objects plus the deepest quantifier nesting."""
    objects = set()
    depth = 0
    for c in constraints:
        a = c.assertion
        if isinstance(a, RoleAssertion):
            objects.update((a.subject, a.target))
        else:
            objects.add(a.subject)
            depth = max(depth, quantifier_depth(a.concept))
    return max(1, len(objects)) + depth


def oracle_entails(
    constraints,
    query: Constraint,
    domain_size: int | None = None,
    grid: DegreeGrid | None = None,
    max_nodes: int = 5_000_000,
) -> bool:
    """Brute-force entailment: no model satisfies the refuted query.

    The default grid contains every degree of the constraints and the
    query plus the midpoints between neighbours; midpoints give the
    strict refutation bounds room to be satisfied, mirroring the
    midpoint choice model extraction makes.
    """
    constraints = list(constraints)
    refuted = constraints + [query.negated()]
    if grid is None:
        grid = DegreeGrid.containing(constraint_degrees(refuted)).with_midpoints()
    if domain_size is None:
        domain_size = default_domain_size(refuted)
    return exists_model(refuted, domain_size, grid, max_nodes=max_nodes) is None


# --- single-valued (fuzzy) oracle --------------------------------------

@dataclass
class FuzzyInterpretation:
    domain: tuple[str, ...]
    individual_map: dict[str, str]
    concept_table: dict[tuple[str, str], Fraction] = field(default_factory=dict)
    role_table: dict[tuple[str, str, str], Fraction] = field(default_factory=dict)

    def concept_value(self, name: str, element: str) -> Fraction:
        return self.concept_table.get((name, element), ZERO)

    def role_value(self, role: str, e1: str, e2: str) -> Fraction:
        return self.role_table.get((role, e1, e2), ZERO)


def fuzzy_eval(interp: FuzzyInterpretation, c: ConceptExpr, element: str) -> Fraction:
    if isinstance(c, Top):
        return ONE
    if isinstance(c, Bottom):
        return ZERO
    if isinstance(c, Atomic):
        return interp.concept_value(c.name, element)
    if isinstance(c, Not):
        return 1 - fuzzy_eval(interp, c.inner, element)
    if isinstance(c, And):
        return min(fuzzy_eval(interp, c.left, element), fuzzy_eval(interp, c.right, element))
    if isinstance(c, Or):
        return max(fuzzy_eval(interp, c.left, element), fuzzy_eval(interp, c.right, element))
    if isinstance(c, Forall):
        return min(
            max(1 - interp.role_value(c.role, element, d), fuzzy_eval(interp, c.filler, d))
            for d in interp.domain
        )
    if isinstance(c, Exists):
        return max(
            min(interp.role_value(c.role, element, d), fuzzy_eval(interp, c.filler, d))
            for d in interp.domain
        )
    raise TypeError(f"not a concept expression: {c!r}")


def _fuzzy_int_interval(c: ConceptExpr, e: str, cells, domain, scale: int):
    """Reachable single-value range; exact up to repeated subterms."""
    if isinstance(c, Top):
        return scale, scale
    if isinstance(c, Bottom):
        return 0, 0
    if isinstance(c, Atomic):
        v = cells.get(("c", c.name, e))
        return (0, scale) if v is None else (v, v)
    if isinstance(c, Not):
        lo, hi = _fuzzy_int_interval(c.inner, e, cells, domain, scale)
        return scale - hi, scale - lo
    if isinstance(c, (And, Or)):
        llo, lhi = _fuzzy_int_interval(c.left, e, cells, domain, scale)
        rlo, rhi = _fuzzy_int_interval(c.right, e, cells, domain, scale)
        if isinstance(c, And):
            return min(llo, rlo), min(lhi, rhi)
        return max(llo, rlo), max(lhi, rhi)
    lo = hi = None
    for d in domain:
        rv = cells.get(("r", c.role, e, d))
        rlo, rhi = (0, scale) if rv is None else (rv, rv)
        flo, fhi = _fuzzy_int_interval(c.filler, d, cells, domain, scale)
        if isinstance(c, Forall):
            plo, phi = max(scale - rhi, flo), max(scale - rlo, fhi)
            lo, hi = (plo, phi) if lo is None else (min(lo, plo), min(hi, phi))
        else:
            plo, phi = min(rlo, flo), min(rhi, fhi)
            lo, hi = (plo, phi) if lo is None else (max(lo, plo), max(hi, phi))
    return lo, hi


def _fuzzy_reads(c: ConceptExpr, e: str, domain, acc: set) -> None:
    """Cells the evaluation can depend on; constant subtrees read nothing."""
    lo, hi = _fuzzy_int_interval(c, e, {}, domain, 2)
    if lo == hi:
        return
    if isinstance(c, Atomic):
        acc.add(("c", c.name, e))
    elif isinstance(c, Not):
        _fuzzy_reads(c.inner, e, domain, acc)
    elif isinstance(c, (And, Or)):
        _fuzzy_reads(c.left, e, domain, acc)
        _fuzzy_reads(c.right, e, domain, acc)
    elif isinstance(c, (Forall, Exists)):
        for d in domain:
            acc.add(("r", c.role, e, d))
            _fuzzy_reads(c.filler, d, domain, acc)


def fuzzy_exists_model(
    bounded_assertions,
    axioms,
    domain_size: int,
    grid: DegreeGrid,
    max_nodes: int = 5_000_000,
) -> FuzzyInterpretation | None:
    """Grid search for a single-valued model.

    ``bounded_assertions`` is an iterable of ``(assertion, Bound)``
    pairs (strict bounds welcome); ``axioms`` are checked pointwise.
    """
    bounded = list(bounded_assertions)
    axioms = list(axioms)
    individuals = sorted(
        {
            o.name
            for a, _ in bounded
            for o in ((a.subject, a.target) if isinstance(a, RoleAssertion) else (a.subject,))
        }
    )
    if domain_size < max(1, len(individuals)):
        raise ValueError("domain too small for the named individuals")
    domain = tuple(f"d{i}" for i in range(domain_size))
    ind_map = {name: domain[i] for i, name in enumerate(individuals)}

    scale = _common_scale(list(grid.values) + [b.value for _, b in bounded])
    grid_ints = [int(v * scale) for v in grid.values]

    def element(obj) -> str:
        return ind_map[obj.name]

    checks = []  # (callable over cells, reads)
    for a, bound in bounded:
        pred = _int_check(bound, scale)
        if isinstance(a, RoleAssertion):
            key = ("r", a.role, element(a.subject), element(a.target))

            def run(cells, key=key, pred=pred):
                v = cells.get(key)
                lo, hi = (0, scale) if v is None else (v, v)
                return pred(lo, hi)

            checks.append((run, {key}))
        else:
            local: set = set()
            _fuzzy_reads(a.concept, element(a.subject), domain, local)

            def run(cells, concept=a.concept, e=element(a.subject), pred=pred):
                lo, hi = _fuzzy_int_interval(concept, e, cells, domain, scale)
                return pred(lo, hi)

            checks.append((run, local))
    for ax in axioms:
        for d in domain:
            local = {("c", ax.lhs, d)}
            _fuzzy_reads(ax.rhs, d, domain, local)

            def run(cells, ax=ax, d=d):
                av = cells.get(("c", ax.lhs, d))
                alo, ahi = (0, scale) if av is None else (av, av)
                clo, chi = _fuzzy_int_interval(ax.rhs, d, cells, domain, scale)
                if ax.kind is AxiomKind.SPECIALIZATION:
                    return alo <= chi
                return alo <= chi and ahi >= clo

            checks.append((run, local))

    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for _, reads in checks:
        ordered = sorted(reads)
        for a, b in zip(ordered, ordered[1:]):
            union(a, b)

    cells: dict = {}
    for _, reads in checks:
        for key in reads:
            cells.setdefault(key, None)

    groups: dict = {}
    for idx, (_, reads) in enumerate(checks):
        root = find(sorted(reads)[0]) if reads else None
        groups.setdefault(root, []).append(idx)

    budget = _Budget(max_nodes)
    for root, idxs in groups.items():
        def run_check(i):
            return checks[i][0](cells)

        if not all(run_check(i) for i in idxs):
            return None
        if root is None:
            continue
        watchers: dict = {}
        for i in idxs:
            for k in checks[i][1]:
                watchers.setdefault(k, []).append(i)
        member_cells: list = []
        for i in sorted(idxs, key=lambda i: len(checks[i][1])):
            for k in sorted(checks[i][1]):
                if k not in member_cells:
                    member_cells.append(k)
        if not _backtrack(member_cells, grid_ints, cells, watchers, run_check, budget):
            return None

    interp = FuzzyInterpretation(domain, ind_map)
    for key, value in cells.items():
        if value is None:
            value = 0
        if key[0] == "c":
            interp.concept_table[(key[1], key[2])] = Fraction(value, scale)
        else:
            interp.role_table[(key[1], key[2], key[3])] = Fraction(value, scale)
    return interp


def fuzzy_entails(
    fkb,
    query: FuzzyAssertion,
    domain_size: int | None = None,
    grid: DegreeGrid | None = None,
    max_nodes: int = 5_000_000,
) -> bool:
    """Single-valued entailment by refuted-query model search."""
    bounded = []
    degrees = {query.degree}
    for fa in fkb.assertions:
        degrees.add(fa.degree)
        rel = Rel.GE if fa.rel is FuzzyRel.GEQ else Rel.LE
        bounded.append((fa.assertion, Bound(rel, fa.degree)))
    neg_rel = Rel.LT if query.rel is FuzzyRel.GEQ else Rel.GT
    if (neg_rel is Rel.LT and query.degree == 0) or (neg_rel is Rel.GT and query.degree == 1):
        return True  # the refutation bound is unsatisfiable outright
    bounded.append((query.assertion, Bound(neg_rel, query.degree)))
    if grid is None:
        grid = DegreeGrid.containing(degrees).with_midpoints()
    if domain_size is None:
        query_like = [Constraint(a, Bound(Rel.GE, ZERO), None) for a, _ in bounded]
        domain_size = default_domain_size(query_like)
    model = fuzzy_exists_model(bounded, fkb.terminology, domain_size, grid, max_nodes)
    return model is None
