"""Concept AST utilities: negation normal form and subterm closure."""

import random

from hypothesis import given, settings, strategies as st

from nalc import (
    And,
    Atomic,
    BOT,
    Exists,
    Forall,
    Not,
    Or,
    TOP,
    eval_concept,
    nnf,
    subconcepts,
)
from genutil import rand_concept, rand_interpretation

A, B, C, D = Atomic("A"), Atomic("B"), Atomic("C"), Atomic("D")


def concepts(max_depth=3):
    base = st.one_of(st.sampled_from([A, B, C]), st.just(TOP), st.just(BOT))
    return st.recursive(
        base,
        lambda inner: st.one_of(
            st.builds(Not, inner),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Forall, st.sampled_from(["R", "S"]), inner),
            st.builds(Exists, st.sampled_from(["R", "S"]), inner),
        ),
        max_leaves=12,
    )


def in_nnf(c) -> bool:
    if isinstance(c, Not):
        return isinstance(c.inner, Atomic)
    if isinstance(c, (And, Or)):
        return in_nnf(c.left) and in_nnf(c.right)
    if isinstance(c, (Forall, Exists)):
        return in_nnf(c.filler)
    return True


class TestNnfRewrites:
    def test_negated_conjunction(self):
        assert nnf(Not(And(C, D))) == Or(Not(C), Not(D))

    def test_double_negation(self):
        assert nnf(Not(Not(A))) == A

    def test_identity_on_nnf_input(self):
        assert nnf(A) == A
        assert nnf(Exists("R", Not(A))) == Exists("R", Not(A))

    def test_negated_top_bottom(self):
        assert nnf(Not(TOP)) == BOT
        assert nnf(Not(BOT)) == TOP

    def test_negated_quantifiers(self):
        assert nnf(Not(Forall("R", And(A, Not(B))))) == Exists("R", Or(Not(A), B))
        assert nnf(Not(Exists("R", A))) == Forall("R", Not(A))

    @given(concepts())
    @settings(max_examples=200)
    def test_result_is_nnf_and_idempotent(self, c):
        rewritten = nnf(c)
        assert in_nnf(rewritten)
        assert nnf(rewritten) == rewritten


class TestNnfSemanticPreservation:
    def test_pointwise_equal_on_random_interpretations(self):
        rng = random.Random(7)
        for _ in range(100):
            c = rand_concept(rng, rng.randint(0, 3))
            interp = rand_interpretation(rng, rng.randint(1, 3))
            rewritten = nnf(c)
            for d in interp.domain:
                assert eval_concept(interp, c, d) == eval_concept(interp, rewritten, d)

    def test_negated_forall_example_semantics(self):
        rng = random.Random(11)
        c = Not(Forall("R", And(A, Not(B))))
        rewritten = Exists("R", Or(Not(A), B))
        for _ in range(100):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            for d in interp.domain:
                assert eval_concept(interp, c, d) == eval_concept(interp, rewritten, d)


class TestDualities:
    def test_forall_is_negated_exists(self):
        rng = random.Random(13)
        lhs = Forall("R", C)
        rhs = Not(Exists("R", Not(C)))
        for _ in range(100):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            for d in interp.domain:
                assert eval_concept(interp, lhs, d) == eval_concept(interp, rhs, d)

    def test_excluded_middle_fails_somewhere(self):
        rng = random.Random(17)
        lhs = Or(C, Not(C))
        witnessed = False
        for _ in range(200):
            interp = rand_interpretation(rng, rng.randint(1, 3))
            for d in interp.domain:
                value = eval_concept(interp, lhs, d)
                if value.n < 1:
                    witnessed = True
        assert witnessed


class TestSubconcepts:
    def test_atomic(self):
        assert subconcepts(A) == {A}

    def test_conjunction(self):
        assert subconcepts(And(A, B)) == {And(A, B), A, B}

    def test_quantified(self):
        c = Exists("R", Or(A, B))
        assert subconcepts(c) == {c, Or(A, B), A, B}

    @given(concepts())
    @settings(max_examples=100)
    def test_closure_contains_self_and_is_transitive(self, c):
        closure = subconcepts(c)
        assert c in closure
        for sub in closure:
            assert subconcepts(sub) <= closure
