"""Witness construction: duplication blocks, composition, brute force."""

import dataclasses

import pytest

from sympdiff.decide import pair_context
from sympdiff.errors import (
    DecisionWasNo,
    DimensionBoundExceeded,
    InfiniteField,
)
from sympdiff.exprparse import parse_poly
from sympdiff.linalg import Mat, companion, direct_sum, invariant_factors
from sympdiff.poly import Poly
from sympdiff.sympform import Witness, symplectic_extension
from sympdiff.witness import (
    DEFAULT_SEARCH_BOUND,
    _generic_search,
    _prime_search,
    brute_force_witness,
    compose_witness,
    duplication_witness,
    verify_witness,
    w_algebra_block,
)


def test_w_block_golden_nilpotent(Q):
    # p = q = t^2, r = t: the 4x4 generators in closed form
    pc = pair_context(parse_poly(Q, "t^2"), parse_poly(Q, "t^2"))
    blk = w_algebra_block(pc, Poly.t(Q))
    assert blk.dimension == 4
    assert blk.A == Mat.from_ints(
        Q, [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]]
    )
    assert blk.B == Mat.from_ints(
        Q, [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, -1, 0, 0]]
    )
    assert blk.C == blk.A @ blk.B


def test_duplication_witness_factors(F3, F5, Q):
    for ctx, pt, qt, rt in [
        (F3, "t^2+1", "t^2+1", "t+2"),
        (F5, "t^2+2", "t^2+t+1", "t^2+t+1"),
        (Q, "t^2+1", "t^2+4", "t-3"),
        (Q, "t^2-2", "t^2+1", "t^2+5"),
    ]:
        pc = pair_context(parse_poly(ctx, pt), parse_poly(ctx, qt))
        r = parse_poly(ctx, rt)
        w = duplication_witness(pc, r)
        assert w.dimension == 4 * r.degree
        rs = r.compose(pc.sigma)
        assert invariant_factors(w.U).factors == (rs, rs)
        assert verify_witness(w, pc).ok


def test_verify_witness_detects_corruption(F3):
    pc = pair_context(parse_poly(F3, "t^2+1"), parse_poly(F3, "t^2+1"))
    w = duplication_witness(pc, parse_poly(F3, "t+1"))
    ident = Mat.identity(F3, w.dimension)

    shifted = dataclasses.replace(w, U1=w.U1 + ident)
    rep = verify_witness(shifted, pc)
    assert not rep.ok
    assert not rep.p_annihilates_u1
    assert not rep.difference_matches
    assert "p(U1) is nonzero" in rep.failures()

    bad_gram = dataclasses.replace(w, B=Mat.zeros(F3, w.dimension))
    rep2 = verify_witness(bad_gram, pc)
    assert not rep2.gram_invertible and not rep2.ok


def test_compose_witness_mixed_routes(F3):
    # p = q = t^2 - 1 over GF(3): one sigma-decomposable factor handled by a
    # duplication block, one residual factor handled by brute force
    pc = pair_context(parse_poly(F3, "t^2-1"), parse_poly(F3, "t^2-1"))
    v = direct_sum(companion(parse_poly(F3, "t^2+2")), Mat.diag(F3, [F3.from_int(2)]))
    w = compose_witness(v, pc)
    assert w is not None
    assert w.dimension == 6
    assert verify_witness(w, pc).ok
    # the witness realizes a pair isometric to S(v): doubled factors of v
    assert invariant_factors(w.U).doubled_halves() == invariant_factors(v).factors


def test_compose_witness_decision_no_raises(Q):
    pc = pair_context(parse_poly(Q, "t^2-1"), parse_poly(Q, "t^2-1"))
    two = Poly(Q, (Q.from_int(-2), Q.one))
    with pytest.raises(DecisionWasNo):
        compose_witness(companion(two ** 2), pc)


def test_compose_witness_residual_over_infinite_field_is_none(Q):
    # YES instance whose factor is not a polynomial in sigma: no implemented
    # construction over Q, so the witness is declined while the decision stands
    pc = pair_context(parse_poly(Q, "t^2-1"), parse_poly(Q, "t^2-1"))
    v = Mat.diag(Q, [Q.from_int(2)])
    assert compose_witness(v, pc) is None


def test_compose_witness_residual_bound(F3):
    pc = pair_context(parse_poly(F3, "t^2-1"), parse_poly(F3, "t^2-1"))
    v = Mat.diag(F3, [F3.from_int(2)])
    assert compose_witness(v, pc, bound=1) is None  # residual needs dim 2
    assert compose_witness(v, pc, bound=2) is not None


def test_brute_force_golden_first_hit(F3):
    pc = pair_context(parse_poly(F3, "t^2+1"), parse_poly(F3, "t^2+1"))
    P = symplectic_extension(Mat.zeros(F3, 2))
    w = brute_force_witness(P, pc)
    assert w.U1 == Mat.from_ints(
        F3, [[0, 1, 0, 0], [2, 0, 0, 0], [0, 0, 0, 2], [0, 0, 1, 0]]
    )
    assert w.U2 == w.U1  # U = 0
    assert verify_witness(w, pc).ok


def test_prime_and_generic_search_agree(F2, F3):
    hits = 0
    cases = [
        # YES instances: the first hit must be identical
        (F3, "t^2+1", "t^2+1", Mat.zeros(F3, 2)),
        (F2, "t^2+t+1", "t^2+t+1", Mat.zeros(F2, 2)),
        # decided-NO instance: both searches must exhaust
        (F3, "t^2+1", "t^2+2", companion(parse_poly(F3, "t+1"))),
    ]
    for ctx, pt, qt, v in cases:
        pc = pair_context(parse_poly(ctx, pt), parse_poly(ctx, qt))
        P = symplectic_extension(v)
        a = _prime_search(P, pc)
        b = _generic_search(P, pc)
        if a is None:
            assert b is None
        else:
            assert b is not None
            assert a.U1 == b.U1 and a.U2 == b.U2
            hits += 1
    assert hits == 2


def test_brute_force_no_instance_returns_none(F3):
    # size-2 cell at +2, nothing at -2: decided NO, so the search must fail
    pc = pair_context(parse_poly(F3, "t^2-1"), parse_poly(F3, "t^2-1"))
    two = Poly(F3, (F3.from_int(-2), F3.one))
    P = symplectic_extension(companion(two ** 2))
    assert brute_force_witness(P, pc) is None


def test_brute_force_guards(Q, F3):
    pc_q = pair_context(parse_poly(Q, "t^2+1"), parse_poly(Q, "t^2+1"))
    with pytest.raises(InfiniteField):
        brute_force_witness(symplectic_extension(Mat.zeros(Q, 1)), pc_q)
    pc_3 = pair_context(parse_poly(F3, "t^2+1"), parse_poly(F3, "t^2+1"))
    big = symplectic_extension(Mat.zeros(F3, DEFAULT_SEARCH_BOUND))
    with pytest.raises(DimensionBoundExceeded):
        brute_force_witness(big, pc_3)


def test_brute_force_trivial_pair(F3):
    pc = pair_context(parse_poly(F3, "t^2+1"), parse_poly(F3, "t^2+1"))
    empty = Mat(F3, [])
    w = brute_force_witness(
        symplectic_extension(Mat(F3, [], cols=0)), pc
    )
    assert w is not None and w.dimension == 0
    assert verify_witness(w, pc).ok
