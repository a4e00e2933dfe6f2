"""Finite-interpretation semantics and the brute-force model search."""

import random
from fractions import Fraction

import pytest

from nalc import (
    And,
    Atomic,
    AxiomKind,
    BOT,
    ConceptAssertion,
    Constraint,
    DegreeGrid,
    DegreePair,
    Exists,
    FiniteInterpretation,
    Forall,
    Individual,
    Not,
    Or,
    RoleAssertion,
    SearchExhausted,
    TOP,
    TerminologicalAxiom,
    eval_concept,
    exists_model,
    oracle_entails,
    parse_kb,
    parse_query,
    satisfies,
    satisfies_axiom,
    expand,
)
from nalc.semantics import default_domain_size
from genutil import QUARTERS, QUARTER_GRID, rand_concept, rand_interpretation

F = Fraction
A, B, C, D = Atomic("A"), Atomic("B"), Atomic("C"), Atomic("D")
a = Individual("a")


def tiny_interp(**concept_values):
    interp = FiniteInterpretation(("d0",), {"a": "d0"})
    for name, (t, f) in concept_values.items():
        interp.concept_table[(name, "d0")] = DegreePair(F(t), F(f))
    return interp


class TestEvalConcept:
    def test_top_everywhere(self):
        interp = rand_interpretation(random.Random(1), 3)
        for d in interp.domain:
            assert eval_concept(interp, TOP, d) == DegreePair(F(1), F(0))
            assert eval_concept(interp, BOT, d) == DegreePair(F(0), F(1))

    def test_negation_swaps_components(self):
        interp = tiny_interp(A=(F(3, 5), F(3, 10)))
        assert eval_concept(interp, Not(A), "d0") == DegreePair(F(3, 10), F(3, 5))

    def test_existential_hand_computation(self):
        interp = FiniteInterpretation(
            ("d0", "d1", "d2"),
            {"a": "d0"},
            {
                ("A", "d1"): DegreePair(F(1, 2), F(2, 5)),
                ("A", "d2"): DegreePair(F(1), F(0)),
            },
            {
                ("R", "d0", "d1"): DegreePair(F(9, 10), F(1, 10)),
                ("R", "d0", "d2"): DegreePair(F(1, 5), F(7, 10)),
            },
        )
        # truth: max(min(9/10, 1/2), min(1/5, 1), min(0, 0)) = 1/2
        # falsity: min(max(1/10, 2/5), max(7/10, 0), max(1, 1)) = 2/5
        assert eval_concept(interp, Exists("R", A), "d0") == DegreePair(F(1, 2), F(2, 5))

    def test_unknown_element_rejected(self):
        interp = tiny_interp()
        with pytest.raises(ValueError):
            eval_concept(interp, A, "nowhere")


class TestSatisfies:
    def test_boundary_equality_holds(self):
        interp = tiny_interp(A=(F(4, 5), F(1, 10)))
        assert satisfies(interp, Constraint.geq_leq(ConceptAssertion(A, a), F(4, 5), F(1, 10)))

    def test_strict_fails_on_the_boundary(self):
        interp = tiny_interp(A=(F(4, 5), F(1, 10)))
        assert not satisfies(interp, Constraint.gt_lt(ConceptAssertion(A, a), F(4, 5), F(1, 10)))

    def test_existential_assertion(self):
        interp = FiniteInterpretation(
            ("d0", "d1", "d2"),
            {"a": "d0"},
            {
                ("A", "d1"): DegreePair(F(1, 2), F(2, 5)),
                ("A", "d2"): DegreePair(F(1), F(0)),
            },
            {
                ("R", "d0", "d1"): DegreePair(F(9, 10), F(1, 10)),
                ("R", "d0", "d2"): DegreePair(F(1, 5), F(7, 10)),
            },
        )
        q = Constraint.geq_leq(ConceptAssertion(Exists("R", A), a), F(1, 2), F(2, 5))
        assert satisfies(interp, q)


class TestSatisfiesAxiom:
    def test_definition_requires_equality(self):
        interp = tiny_interp(A=(F(1, 2), F(1, 4)), B=(F(1, 2), F(1, 4)))
        assert satisfies_axiom(
            interp, TerminologicalAxiom("A", AxiomKind.DEFINITION, B)
        )

    def test_specialization_inequalities(self):
        interp = tiny_interp(A=(F(3, 10), F(4, 5)), C=(F(1, 2), F(1, 5)))
        assert satisfies_axiom(
            interp, TerminologicalAxiom("A", AxiomKind.SPECIALIZATION, C)
        )

    def test_specialization_violation(self):
        interp = tiny_interp(A=(F(3, 5), F(1, 10)), C=(F(1, 2), F(1, 5)))
        assert not satisfies_axiom(
            interp, TerminologicalAxiom("A", AxiomKind.SPECIALIZATION, C)
        )


class TestExistsModel:
    def test_point_constraint_has_model(self):
        grid = DegreeGrid.containing([F(1, 2)])
        constraint = Constraint.geq_leq(ConceptAssertion(A, a), F(1, 2), F(1, 2))
        model = exists_model([constraint], 1, grid)
        assert model is not None
        assert satisfies(model, constraint)

    def test_bottom_with_positive_truth_is_unsatisfiable(self):
        grid = DegreeGrid.containing([F(1, 10)])
        constraint = Constraint.geq_leq(ConceptAssertion(BOT, a), F(1, 10), F(1))
        assert exists_model([constraint], 1, grid) is None

    def test_poll_refutation_set_has_no_model(self):
        kb = expand(parse_kb(
            "assert (some Support war_x)(p1) >= 0.6 <= 0.5\n"
            "assert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
            "spec war_x < War\nspec war_y < War\n"
        ))
        query = parse_query("assert (some Support War)(p1) >= 0.6 <= 0.5")
        grid = DegreeGrid.containing([F(1, 10), F(1, 2), F(3, 5), F(4, 5)])
        refuted = list(kb.assertions) + [query.negated()]
        assert exists_model(refuted, 3, grid) is None

    def test_node_ceiling_reports_exhaustion(self):
        rng = random.Random(3)
        constraints = [
            Constraint.geq_leq(
                ConceptAssertion(rand_concept(rng, 3), Individual("a")),
                F(1, 2),
                F(1, 2),
            )
            for _ in range(3)
        ]
        with pytest.raises(SearchExhausted):
            exists_model(constraints, 4, QUARTER_GRID, max_nodes=3)

    def test_domain_must_fit_individuals(self):
        constraint = Constraint.geq_leq(
            RoleAssertion("R", Individual("a"), Individual("b")), F(1, 2), F(1, 2)
        )
        with pytest.raises(ValueError):
            exists_model([constraint], 1, QUARTER_GRID)


class TestOracleEntails:
    def test_tautology_from_nothing(self):
        q = Constraint.geq_leq(ConceptAssertion(TOP, a), F(1), F(0))
        assert oracle_entails([], q)

    def test_unconstrained_atom_is_not_entailed(self):
        q = Constraint.geq_leq(ConceptAssertion(A, a), F(1, 2), F(1, 2))
        assert not oracle_entails([], q)

    def test_grid_closure_under_evaluation(self):
        rng = random.Random(5)
        grid_values = set(QUARTERS)
        for _ in range(50):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            c = rand_concept(rng, rng.randint(0, 3))
            for d in interp.domain:
                value = eval_concept(interp, c, d)
                assert value.n in grid_values and value.m in grid_values


FOURTEEN_EQUIVALENCES = [
    (Not(TOP), BOT),
    (And(C, TOP), C),
    (Or(C, TOP), TOP),
    (And(C, BOT), BOT),
    (Or(C, BOT), C),
    (Not(Not(C)), C),
    (Not(And(C, D)), Or(Not(C), Not(D))),
    (Not(Or(C, D)), And(Not(C), Not(D))),
    (And(A, Or(B, C)), Or(And(A, B), And(A, C))),
    (Or(A, And(B, C)), And(Or(A, B), Or(A, C))),
    (Forall("R", C), Not(Exists("R", Not(C)))),
    (Forall("R", TOP), TOP),
    (Exists("R", BOT), BOT),
    (And(Forall("R", C), Forall("R", D)), Forall("R", And(C, D))),
]

NON_THEOREMS = [
    (And(C, Not(C)), BOT),
    (Or(C, Not(C)), TOP),
    (And(Exists("R", C), Forall("R", Not(C))), BOT),
    (Or(Exists("R", C), Forall("R", Not(C))), TOP),
]


class TestEquivalenceLaws:
    @pytest.mark.parametrize("lhs, rhs", FOURTEEN_EQUIVALENCES)
    def test_equivalence_holds_pointwise(self, lhs, rhs):
        rng = random.Random(hash((str(lhs), str(rhs))) % 2**32)
        for _ in range(60):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            for d in interp.domain:
                assert eval_concept(interp, lhs, d) == eval_concept(interp, rhs, d)

    @pytest.mark.parametrize("lhs, rhs", NON_THEOREMS)
    def test_non_theorem_has_countermodel(self, lhs, rhs):
        rng = random.Random(hash(str(lhs)) % 2**32)
        for _ in range(400):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            for d in interp.domain:
                if eval_concept(interp, lhs, d) != eval_concept(interp, rhs, d):
                    return
        pytest.fail(f"no countermodel found for {lhs} vs {rhs}")


class TestMonotoneBounds:
    def test_conjunction_bounds_are_exact(self):
        rng = random.Random(31)
        for _ in range(100):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            l = rand_concept(rng, 1)
            r = rand_concept(rng, 1)
            for d in interp.domain:
                lv = eval_concept(interp, l, d)
                rv = eval_concept(interp, r, d)
                both = eval_concept(interp, And(l, r), d)
                assert both.n == min(lv.n, rv.n)
                assert both.m == max(lv.m, rv.m)
                either = eval_concept(interp, Or(l, r), d)
                assert either.n == max(lv.n, rv.n)
                assert either.m == min(lv.m, rv.m)

    def test_default_domain_size(self):
        kb = parse_kb(
            "assert (some R (all S A))(a) >= 0.5 <= 0.5\nassert B(b) >= 0 <= 1\n"
        )
        assert default_domain_size(list(kb.assertions)) == 4
