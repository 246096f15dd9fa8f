"""Polynomial arithmetic, the difference-root quartic, roots/factoring."""

import pytest
from hypothesis import given, settings, strategies as st

from sympdiff.errors import NotIrreducible, ParseError
from sympdiff.exprparse import parse_poly
from sympdiff.fields import field_make
from sympdiff.poly import (
    Poly,
    decompose_base_sigma,
    delta_of,
    factor_ff,
    fundamental_poly,
    irreducible_polys,
    is_irreducible,
    lambda_poly,
    monic_polys,
    quad_ext_roots,
    resultant,
    roots_in_field,
    sigma_poly,
    translate_shifts,
)


def gf5_poly(max_deg=4):
    return st.lists(
        st.integers(min_value=0, max_value=4), min_size=0, max_size=max_deg + 1
    ).map(lambda cs: Poly(field_make("GF(5)"), tuple(cs)))


@settings(max_examples=100, deadline=None)
@given(a=gf5_poly(), b=gf5_poly())
def test_divmod_law(a, b):
    if b.is_zero:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=100, deadline=None)
@given(a=gf5_poly(3), b=gf5_poly(3), c=gf5_poly(3))
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(a=gf5_poly(3), b=gf5_poly(3))
def test_gcd_divides_both(a, b):
    g = a.gcd(b)
    if g.is_zero:
        assert a.is_zero and b.is_zero
        return
    assert (a % g).is_zero and (b % g).is_zero
    assert g.is_monic


def quadratics_over(ctx, consts):
    out = []
    for c1 in consts:
        for c0 in consts:
            out.append(Poly(ctx, (c0, c1, ctx.one)))
    return out


def test_fundamental_poly_matches_root_differences(Q):
    # split quadratics: F must be exactly prod (t - (x_i - y_j))
    for p_roots in [(1, 2), (0, 3), (-1, -1)]:
        for q_roots in [(0, 1), (2, 2), (-3, 5)]:
            t = Poly.t(Q)

            def from_roots(rr):
                f = Poly.one(Q)
                for r in rr:
                    f = f * (t - Poly.constant(Q, Q.from_int(r)))
                return f

            p, q = from_roots(p_roots), from_roots(q_roots)
            F = fundamental_poly(p, q)
            expected = Poly.one(Q)
            for x in p_roots:
                for y in q_roots:
                    expected = expected * (t - Poly.constant(Q, Q.from_int(x - y)))
            assert F == expected


def test_fundamental_equals_lambda_of_sigma(F3, F5, Q):
    for ctx in (F3, F5, Q):
        consts = [ctx.from_int(n) for n in range(-1, 2)]
        for p in quadratics_over(ctx, consts):
            for q in quadratics_over(ctx, consts):
                F = fundamental_poly(p, q)
                lam = lambda_poly(p, q)
                sig = sigma_poly(ctx, delta_of(p, q))
                assert lam.compose(sig) == F


def test_resultant_vanishes_iff_common_root(F5):
    t = Poly.t(F5)
    a = (t - Poly.constant(F5, 2)) * (t - Poly.constant(F5, 3))
    b = (t - Poly.constant(F5, 3)) * (t - Poly.constant(F5, 4))
    c = (t - Poly.constant(F5, 1)) * (t - Poly.constant(F5, 4))
    assert F5.is_zero(resultant(a, b))
    assert not F5.is_zero(resultant(a, c))


def test_decompose_base_sigma_round_trip(F5):
    delta = F5.from_int(3)
    sig = sigma_poly(F5, delta)
    for coeffs in [(1,), (2, 1), (0, 3, 1), (4, 0, 2, 1)]:
        s = Poly(F5, coeffs)
        f = s.compose(sig)
        assert decompose_base_sigma(f, delta) == s
        if f.degree >= 1:
            assert decompose_base_sigma(f + Poly.t(F5), delta) is None


def test_roots_in_field_multiplicity(Q):
    t = Poly.t(Q)
    two = Poly.constant(Q, Q.from_int(2))
    f = (t - two) ** 3 * (t + two)
    roots = roots_in_field(f)
    assert sorted(roots) == [Q.from_int(-2)] + [Q.from_int(2)] * 3


def test_roots_rational_fractions(Q):
    f = parse_poly(Q, "2*t^2-3*t+1")  # roots 1 and 1/2
    assert set(roots_in_field(f)) == {Q.from_int(1), Q.inv(Q.from_int(2))}


def test_roots_over_rational_functions(F2s):
    s = F2s.gen
    t = Poly.t(F2s)
    f = (t - Poly.constant(F2s, s)) * (
        t - Poly.constant(F2s, F2s.div(F2s.one, F2s.add(s, F2s.one)))
    )
    roots = roots_in_field(f)
    assert sorted(roots, key=F2s.sort_key) == sorted(
        [s, F2s.div(F2s.one, F2s.add(s, F2s.one))], key=F2s.sort_key
    )


def test_translate_shifts(F5, F2):
    p = parse_poly(F5, "t^2+t+1")
    assert translate_shifts(p, p.translate(F5.from_int(2))) == [F5.from_int(2)]
    assert translate_shifts(p, parse_poly(F5, "t^2+t+2")) == []
    # characteristic 2: t^2 + t is fixed by both shifts z = 0 and z = 1
    r = parse_poly(F2, "t^2+t")
    assert sorted(translate_shifts(r, r)) == [0, 1]


def test_quad_ext_roots_against_evaluation(F3, F5):
    for ctx in (F3, F5):
        consts = list(ctx.elements())
        quads = [f for f in quadratics_over(ctx, consts) if not roots_in_field(f)]
        for p in quads:
            for q in quads:
                K, roots = quad_ext_roots(p, q)
                # every reported root really is one
                for y in roots:
                    qy = K.add(
                        K.mul(y, y),
                        K.add(
                            K.mul(K.embed(q.coeffs[1]), y), K.embed(q.coeffs[0])
                        ),
                    )
                    assert qy == K.zero
                # exhaustive check over the 2-dimensional extension
                found = [
                    x
                    for x in K.elements()
                    if K.add(
                        K.mul(x, x),
                        K.add(K.mul(K.embed(q.coeffs[1]), x), K.embed(q.coeffs[0])),
                    )
                    == K.zero
                ]
                assert set(roots) == set(found)
                assert len(roots) == 2  # q splits in the unique quadratic extension


def test_quad_ext_roots_inseparable_finite_raises(F2):
    p = parse_poly(F2, "t^2+1")  # (t+1)^2: inseparable and reducible over GF(2)
    with pytest.raises(NotIrreducible):
        quad_ext_roots(p, p)


def test_quad_ext_roots_inseparable_ratfunc(F2s):
    p = parse_poly(F2s, "t^2+s")
    K, roots = quad_ext_roots(p, p)
    assert len(roots) == 2 and roots[0] == roots[1] == K.gen


def test_irreducible_counts(F3):
    assert sum(1 for _ in irreducible_polys(F3, 1)) == 3
    assert sum(1 for f in irreducible_polys(F3, 2) if f.degree == 2) == 3
    assert sum(1 for f in irreducible_polys(F3, 3) if f.degree == 3) == 8


def test_factor_ff_reassembles(F3):
    for f in monic_polys(F3, 4):
        prod = Poly.one(F3)
        for g, m in factor_ff(f):
            assert is_irreducible(g)
            prod = prod * g ** m
        assert prod == f


def test_is_irreducible_degree_bounds(Q):
    assert is_irreducible(parse_poly(Q, "t^2+1"))
    assert not is_irreducible(parse_poly(Q, "t^2-1"))
    assert is_irreducible(parse_poly(Q, "t^3-2"))
    with pytest.raises(NotIrreducible):
        is_irreducible(parse_poly(Q, "t^4+1"))


def test_parse_requires_explicit_multiplication(Q):
    with pytest.raises(ParseError):
        parse_poly(Q, "2t")


def test_poly_str_round_trips_through_parser(F5, Q):
    for ctx in (F5, Q):
        for coeffs in [(1, 2, 1), (0, 0, 3), (4,), (0, 1)]:
            f = Poly(ctx, tuple(ctx.from_int(c) for c in coeffs))
            assert parse_poly(ctx, str(f)) == f
