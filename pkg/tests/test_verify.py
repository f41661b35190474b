"""Hom/Ext, the Euler identity, locality, bricks, and the sampled checks."""

import pytest

from kronjord.bgp import build_preprojective, explicit_p2
from kronjord.cover import (
    build_indecomposable_tree_rep,
    build_root_vector,
    build_source_regular,
    push_down,
)
from kronjord.echelon import build_echelon_rep, select_phi
from kronjord.exactmat import GF, QQ, ExactMatrix
from kronjord.kronecker import DimVector, KroneckerRep, direct_sum, dual, euler_form, simple_rep
from kronjord.verify import (
    ekp_sample_check,
    eip_sample_check,
    end_is_local,
    ext_dim,
    hom_space,
    is_brick,
    restriction_check,
)


def cover_rep(r, a, b):
    q = build_source_regular(r, a)
    return push_down(build_indecomposable_tree_rep(q, build_root_vector(q, a, b)))


def tube_rep_r2():
    """Regular indecomposable of the 2-Kronecker quiver with End of dim 2."""
    jordan_block = ExactMatrix(QQ, [[0, 1], [0, 0]])
    return KroneckerRep(2, DimVector(2, 2), (ExactMatrix.identity(QQ, 2), jordan_block))


class TestHom:
    def test_distinct_simples(self):
        assert hom_space(simple_rep(3, (1, 0)), simple_rep(3, (0, 1))).dim == 0
        assert hom_space(simple_rep(3, (0, 1)), simple_rep(3, (1, 0))).dim == 0

    def test_p2_is_brick(self):
        assert hom_space(explicit_p2(3), explicit_p2(3)).dim == 1

    def test_additivity(self):
        m = explicit_p2(3)
        assert hom_space(m, direct_sum(m, m)).dim == 2 * hom_space(m, m).dim

    def test_intertwining_equations_hold(self):
        m = cover_rep(3, 2, 5)
        n = explicit_p2(3)
        hs = hom_space(n, m)
        for f1, f2 in hs.basis:
            for t in range(3):
                assert f2 @ n.mats[t] == m.mats[t] @ f1

    def test_arrow_count_mismatch(self):
        with pytest.raises(ValueError):
            hom_space(explicit_p2(3), explicit_p2(4))


class TestExt:
    def test_projective_has_no_ext(self):
        p2 = explicit_p2(3)
        for other in (p2, simple_rep(3, (0, 1)), simple_rep(3, (1, 0)), cover_rep(3, 2, 5)):
            assert ext_dim(p2, other) == 0

    def test_simples_cross_ext(self):
        # the injective simple against the projective simple: r extensions
        assert ext_dim(simple_rep(3, (1, 0)), simple_rep(3, (0, 1))) == 3
        assert ext_dim(simple_rep(5, (1, 0)), simple_rep(5, (0, 1))) == 5
        # the other order is projective-first and vanishes
        assert ext_dim(simple_rep(3, (0, 1)), simple_rep(3, (1, 0))) == 0

    def test_euler_identity_zoo(self):
        reps = [
            simple_rep(3, (1, 0)),
            simple_rep(3, (0, 1)),
            build_preprojective(3, 0, 1),
            explicit_p2(3),
            build_preprojective(3, 3, 8),
            build_echelon_rep(select_phi(3, 2, 4)),
            build_echelon_rep(select_phi(3, 3, 5)),
            cover_rep(3, 2, 5),
            dual(explicit_p2(3)),
            dual(cover_rep(3, 2, 5)),
            direct_sum(explicit_p2(3), simple_rep(3, (0, 1))),
        ]
        pairs = 0
        for m in reps:
            for n in reps:
                lhs = hom_space(m, n).dim - ext_dim(m, n)
                assert lhs == euler_form(3, m.dim, n.dim), (m.dim, n.dim)
                pairs += 1
        assert pairs >= 20


class TestLocality:
    def test_p2_local(self):
        assert end_is_local(explicit_p2(3))

    def test_decomposable_not_local(self):
        m = explicit_p2(3)
        assert not end_is_local(direct_sum(m, m))

    def test_distinct_simples_sum_not_local(self):
        assert not end_is_local(direct_sum(simple_rep(3, (1, 0)), simple_rep(3, (0, 1))))

    def test_local_non_brick(self):
        # regular rep with a nontrivial radical: local but End has dim 2
        t = tube_rep_r2()
        assert end_is_local(t)
        assert not is_brick(t)
        assert hom_space(t, t).dim == 2

    def test_folded_tree_witness_local_non_brick(self):
        # folding a tree witness can pick up nilpotent endomorphisms from
        # overlapping translates: indecomposable, yet not a brick
        q = build_source_regular(3, 5)
        tree = build_indecomposable_tree_rep(q, build_root_vector(q, 5, 12))
        rep = push_down(tree)
        assert hom_space(rep, rep).dim == 2
        assert end_is_local(rep)
        assert not is_brick(rep)

    def test_prime_field_unsupported(self):
        f = GF(2)
        mats = tuple(ExactMatrix(f, [[1], [0]]) for _ in range(3))
        m = KroneckerRep(3, DimVector(1, 2), mats, f)
        with pytest.raises(ValueError):
            end_is_local(m)


class TestBrick:
    def test_echelon_witnesses(self):
        assert is_brick(build_echelon_rep(select_phi(3, 2, 4)))
        assert is_brick(build_echelon_rep(select_phi(4, 3, 8)))

    def test_doubling_breaks_brick(self):
        m = explicit_p2(3)
        assert not is_brick(direct_sum(m, m))

    def test_simples_are_bricks(self):
        assert is_brick(simple_rep(3, (1, 0)))
        assert is_brick(simple_rep(3, (0, 1)))

    def test_brick_implies_local(self):
        for rep in (explicit_p2(3), build_echelon_rep(select_phi(3, 2, 4)), cover_rep(3, 2, 5)):
            assert is_brick(rep)
            assert end_is_local(rep)


class TestSampledChecks:
    def test_echelon_certified_passes(self):
        rep = build_echelon_rep(select_phi(3, 2, 4))
        assert ekp_sample_check(rep, 200, 0)

    def test_duality_swaps_kernels_and_images(self):
        rep = cover_rep(3, 2, 5)
        assert ekp_sample_check(rep, 100, 1)
        assert eip_sample_check(dual(rep), 100, 1)
        assert not eip_sample_check(rep, 100, 1)

    def test_partial_support_fails(self):
        mats = (ExactMatrix.identity(QQ, 1),
                ExactMatrix.zeros(QQ, 1, 1),
                ExactMatrix.zeros(QQ, 1, 1))
        m = KroneckerRep(3, DimVector(1, 1), mats)
        assert not ekp_sample_check(m, 10, 0)
        assert not eip_sample_check(m, 10, 0)


class TestRestriction:
    def test_simple_passes_form_inequality(self):
        ok, detail = restriction_check(simple_rep(3, (1, 0)), 20, 0)
        assert ok and (detail["d"], detail["c"]) == (0, 1) and detail["q"] == 1

    def test_witnesses_pass(self):
        for rep in (explicit_p2(3), cover_rep(3, 2, 5), build_echelon_rep(select_phi(3, 2, 4))):
            ok, _ = restriction_check(rep, 100, 0)
            assert ok

    def test_decomposable_counterexample(self):
        # constant type with q = 4 > 1: the indecomposability hypothesis is sharp
        mm = direct_sum(explicit_p2(3), explicit_p2(3))
        ok, detail = restriction_check(mm, 100, 0)
        assert not ok
        assert detail["q"] == 4
