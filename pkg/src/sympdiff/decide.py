"""Case classification and the decision procedure.

Whether a symplectic pair is a symplectic (p,q)-difference depends only on
the invariant factors of its endomorphism.  The decision splits into a
regular criterion (every invariant factor of the part coprime to the
fundamental quartic F_{p,q} must be a polynomial in sigma = t^2 - delta*t)
and an exceptional criterion that depends on how p and q factor: always-yes
families, intertwining inequalities between Jordan or primary count
sequences, and evenness conditions on cell counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    ConstructionInvariantViolated,
    MixedFieldContexts,
    NotNonIncreasing,
    WrongDegree,
)
from .fields import FieldCtx
from .linalg import (
    Mat,
    companion,
    direct_sum,
    exact_cell_counts,
    fitting_split,
    invariant_factors,
    jordan_sequence,
    primary_sequence,
    restrict,
)
from .poly import (
    Poly,
    decompose_base_sigma,
    delta_of,
    fundamental_poly,
    lambda_poly,
    quad_ext_roots,
    roots_in_field,
    sigma_poly,
    trace_of,
    translate_shifts,
)
from .sympform import SymplecticPair, induced_pair, require_valid


class Family(enum.Enum):
    """Factorization pattern of (p, q), after normalization."""

    SPLIT_DOUBLE_DOUBLE = "split-double-double"
    SPLIT_SIMPLE_SIMPLE = "split-simple-simple"
    SPLIT_MIXED = "split-mixed"
    IRR_SPLIT_EQ = "irreducible-split-equal-translates"
    IRR_SPLIT_NEQ = "irreducible-split-distinct-translates"
    IRR_SAME_FIELD = "irreducible-same-splitting-field"
    IRR_DISTINCT_GENERIC = "irreducible-distinct-fields-generic"
    IRR_DISTINCT_INSEP = "irreducible-distinct-fields-inseparable"
    IRR_DISTINCT_SPECIAL = "irreducible-distinct-fields-special"

    @property
    def always_yes(self) -> bool:
        return self in (
            Family.SPLIT_DOUBLE_DOUBLE,
            Family.IRR_SPLIT_EQ,
            Family.IRR_DISTINCT_GENERIC,
            Family.IRR_DISTINCT_INSEP,
        )

    @property
    def one_of_pq_splits(self) -> bool:
        return self in (
            Family.SPLIT_DOUBLE_DOUBLE,
            Family.SPLIT_SIMPLE_SIMPLE,
            Family.SPLIT_MIXED,
            Family.IRR_SPLIT_EQ,
            Family.IRR_SPLIT_NEQ,
        )


@dataclass(frozen=True)
class CaseTag:
    family: Family
    swapped: bool
    # roots (y1, y2) of the normalized split q when the normalized p is
    # irreducible
    ys: Optional[Tuple[object, object]] = None
    # base-field translation shifts z with q(t) = p(t+z), same-field case
    zs: Optional[Tuple[object, ...]] = None


@dataclass(frozen=True)
class PairCtx:
    """A (p, q) instance with its derived data.

    p_norm, q_norm are (q(-t), p(-t)) when the classification applied the
    swap symmetry, else (p, q); F, Lam and delta are swap-invariant.
    """

    p: Poly
    q: Poly
    p_norm: Poly
    q_norm: Poly
    case: CaseTag
    F: Poly
    Lam: Poly
    delta: object

    @property
    def ctx(self) -> FieldCtx:
        return self.p.ctx

    @property
    def sigma(self) -> Poly:
        return sigma_poly(self.ctx, self.delta)


@dataclass(frozen=True)
class RegularEvidence:
    factor: str
    regular_factor: str
    base_sigma: Optional[str]  # r with regular_factor = r(t^2 - delta*t)
    ok: bool


@dataclass(frozen=True)
class DecisionReport:
    ok: bool
    regular_ok: bool
    exceptional_ok: bool
    case: CaseTag
    dimension: int
    invariant_factors: Tuple[Poly, ...]
    regular: Tuple[RegularEvidence, ...]
    exceptional: Dict[str, object]
    failing_evidence: Optional[str] = None
    pair_level: Optional[Dict[str, object]] = None

    @property
    def verdict(self) -> str:
        return "yes" if self.ok else "no"


def _require_quadratic(f: Poly, name: str) -> None:
    if f.degree != 2 or not f.is_monic:
        raise WrongDegree(f"{name} must be monic of degree 2, got {f}")


def _fmt(ctx: FieldCtx, x) -> str:
    return str(Poly.constant(ctx, x))


def swap_pair(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """(p, q) -> (q(-t), p(-t)); a pair difference for one is one for the
    other, with the same endomorphism."""
    ctx = p.ctx
    neg_t = Poly(ctx, (ctx.zero, ctx.neg(ctx.one)))
    return q.compose(neg_t), p.compose(neg_t)


def classify_case(p: Poly, q: Poly) -> CaseTag:
    """Deterministic classification of the (p, q) instance.

    Splitting-field equality of two irreducible quadratics is decided by
    root-finding for q inside the quadratic extension F[t]/(p); the swap
    symmetry is applied exactly when {p split, q irreducible} or {p double
    root, q simple roots}.
    """
    p._check(q)
    _require_quadratic(p, "p")
    _require_quadratic(q, "q")
    ctx = p.ctx
    p_roots = roots_in_field(p)
    q_roots = roots_in_field(q)
    p_split, q_split = bool(p_roots), bool(q_roots)
    swapped = False
    if p_split and not q_split:
        swapped = True
    elif p_split and q_split:
        if p_roots[0] == p_roots[1] and q_roots[0] != q_roots[1]:
            swapped = True
    if swapped:
        p, q = swap_pair(p, q)
        p_roots = roots_in_field(p)
        q_roots = roots_in_field(q)
        p_split, q_split = bool(p_roots), bool(q_roots)
    if p_split and q_split:
        p_double = p_roots[0] == p_roots[1]
        q_double = q_roots[0] == q_roots[1]
        if p_double and q_double:
            return CaseTag(Family.SPLIT_DOUBLE_DOUBLE, swapped)
        if not p_double and not q_double:
            return CaseTag(Family.SPLIT_SIMPLE_SIMPLE, swapped)
        return CaseTag(Family.SPLIT_MIXED, swapped)
    if not p_split and q_split:
        y1, y2 = q_roots
        if p.translate(y1) == p.translate(y2):
            return CaseTag(Family.IRR_SPLIT_EQ, swapped, ys=(y1, y2))
        return CaseTag(Family.IRR_SPLIT_NEQ, swapped, ys=(y1, y2))
    # both irreducible
    _, roots = quad_ext_roots(p, q)
    if roots:
        return CaseTag(
            Family.IRR_SAME_FIELD, swapped, zs=tuple(translate_shifts(p, q))
        )
    if ctx.characteristic == 2:
        lam, mu = trace_of(p), trace_of(q)
        if ctx.is_zero(lam) and ctx.is_zero(mu):
            return CaseTag(Family.IRR_DISTINCT_INSEP, swapped)
        if lam == mu:
            return CaseTag(Family.IRR_DISTINCT_SPECIAL, swapped)
    return CaseTag(Family.IRR_DISTINCT_GENERIC, swapped)


def pair_context(p: Poly, q: Poly) -> PairCtx:
    p._check(q)
    _require_quadratic(p, "p")
    _require_quadratic(q, "q")
    ctx = p.ctx
    F = fundamental_poly(p, q)
    Lam = lambda_poly(p, q)
    delta = delta_of(p, q)
    if Lam.compose(sigma_poly(ctx, delta)) != F:
        raise ConstructionInvariantViolated(
            f"factorization identity fails for p={p}, q={q}"
        )
    tag = classify_case(p, q)
    if tag.swapped:
        p_norm, q_norm = swap_pair(p, q)
    else:
        p_norm, q_norm = p, q
    return PairCtx(
        p=p, q=q, p_norm=p_norm, q_norm=q_norm, case=tag, F=F, Lam=Lam, delta=delta
    )


# ----------------------------------------------------------------------
# count sequences and intertwining
# ----------------------------------------------------------------------


def _as_count_sequence(seq: Sequence[int]) -> Tuple[int, ...]:
    out = tuple(int(n) for n in seq)
    if any(n < 0 for n in out):
        raise NotNonIncreasing(f"negative count in {out}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise NotNonIncreasing(f"{out} is not non-increasing")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def intertwined(a: Sequence[int], b: Sequence[int], shift: int) -> bool:
    """a_{n+shift} <= b_n and b_{n+shift} <= a_n for all n >= 1, for
    non-increasing, eventually-zero count sequences."""
    if shift < 1:
        raise ValueError("shift must be a positive integer")
    a = _as_count_sequence(a)
    b = _as_count_sequence(b)

    def get(s, i):  # 1-indexed, zero-padded
        return s[i - 1] if i <= len(s) else 0

    top = max(len(a), len(b))
    return all(
        get(a, n + shift) <= get(b, n) and get(b, n + shift) <= get(a, n)
        for n in range(1, top + 1)
    )


def factor_multiplicity(f: Poly, g: Poly) -> int:
    """Largest m with g^m dividing f."""
    m = 0
    while f.degree >= g.degree > 0:
        quo, rem = divmod(f, g)
        if not rem.is_zero:
            break
        f, m = quo, m + 1
    return m


def count_sequence(factors: Sequence[Poly], g: Poly) -> Tuple[int, ...]:
    """(n_1, n_2, ...): n_k = number of factors divisible by g^k."""
    mults = [factor_multiplicity(f, g) for f in factors]
    top = max(mults, default=0)
    return tuple(sum(1 for m in mults if m >= k) for k in range(1, top + 1))


def _strip_supported(f: Poly, F: Poly) -> Poly:
    """Remove from f every irreducible factor shared with F."""
    r = f
    while r.degree > 0:
        g = r.gcd(F)
        if g.degree == 0:
            break
        r = r // g
    return r


def _linear(ctx: FieldCtx, z) -> Poly:
    return Poly(ctx, (ctx.neg(z), ctx.one))


def _root_orbits(pctx: PairCtx):
    """Distinct base-field roots of F, grouped into {z, delta-z} pairs and
    fixed points of the involution."""
    ctx = pctx.ctx
    distinct: List = []
    for z in roots_in_field(pctx.F):
        if z not in distinct:
            distinct.append(z)
    pairs, fixed, seen = [], [], []
    for z in distinct:
        if z in seen:
            continue
        w = ctx.sub(pctx.delta, z)
        if w == z:
            fixed.append(z)
            seen.append(z)
            continue
        if w not in distinct:
            raise ConstructionInvariantViolated(
                f"root {_fmt(ctx, z)} of F has partner outside the root set"
            )
        pairs.append((z, w))
        seen.extend((z, w))
    return pairs, fixed


def special_quadratic(pctx: PairCtx) -> Poly:
    """t^2 - (tr p) t + (p(0) + q(0)), the repeated irreducible factor of F
    in the characteristic-2 equal-nonzero-trace family."""
    ctx = pctx.ctx
    p, q = pctx.p_norm, pctx.q_norm
    return Poly(
        ctx,
        (ctx.add(p.coeffs[0], q.coeffs[0]), ctx.neg(trace_of(p)), ctx.one),
    )


# ----------------------------------------------------------------------
# the decision procedure
# ----------------------------------------------------------------------


def _regular_evidence(pctx: PairCtx, factors: Sequence[Poly]):
    out = []
    ok = True
    failing = None
    for f in factors:
        r = _strip_supported(f, pctx.F)
        rep = decompose_base_sigma(r, pctx.delta)
        good = rep is not None
        out.append(
            RegularEvidence(
                factor=str(f),
                regular_factor=str(r),
                base_sigma=None if rep is None else str(rep),
                ok=good,
            )
        )
        if not good and failing is None:
            failing = (
                f"regular part {r} of invariant factor {f} is not a "
                f"polynomial in t^2-({_fmt(pctx.ctx, pctx.delta)})*t"
            )
            ok = False
    return tuple(out), ok, failing


def _exceptional_evidence(pctx: PairCtx, factors: Sequence[Poly]):
    family = pctx.case.family
    ctx = pctx.ctx
    if family.always_yes:
        return {"criterion": "none (always satisfied)"}, True, None
    if family in (Family.SPLIT_SIMPLE_SIMPLE, Family.SPLIT_MIXED):
        shift = 1 if family is Family.SPLIT_SIMPLE_SIMPLE else 2
        pairs, fixed = _root_orbits(pctx)
        details = []
        ok = True
        failing = None
        for z, w in pairs:
            a = count_sequence(factors, _linear(ctx, z))
            b = count_sequence(factors, _linear(ctx, w))
            good = intertwined(a, b, shift)
            details.append(
                {
                    "at": _fmt(ctx, z),
                    "partner": _fmt(ctx, w),
                    "counts": list(a),
                    "partner_counts": list(b),
                    "ok": good,
                }
            )
            if not good and failing is None:
                failing = (
                    f"Jordan count sequences {list(a)} at {_fmt(ctx, z)} and "
                    f"{list(b)} at {_fmt(ctx, w)} are not {shift}-intertwined"
                )
                ok = False
        return (
            {
                "criterion": f"{shift}-intertwined Jordan counts on root pairs",
                "pairs": details,
                "unconstrained_fixed_points": [_fmt(ctx, z) for z in fixed],
            },
            ok,
            failing,
        )
    if family is Family.IRR_SPLIT_NEQ:
        y1, y2 = pctx.case.ys
        g1 = pctx.p_norm.translate(y1)
        g2 = pctx.p_norm.translate(y2)
        a = count_sequence(factors, g1)
        b = count_sequence(factors, g2)
        good = intertwined(a, b, 1)
        failing = None
        if not good:
            failing = (
                f"primary count sequences {list(a)} at {g1} and {list(b)} "
                f"at {g2} are not 1-intertwined"
            )
        return (
            {
                "criterion": "1-intertwined primary counts at the two "
                "translates of p",
                "translates": [str(g1), str(g2)],
                "counts": list(a),
                "partner_counts": list(b),
            },
            good,
            failing,
        )
    if family is Family.IRR_SAME_FIELD:
        details = []
        ok = True
        failing = None
        for z in pctx.case.zs:
            seq = count_sequence(factors, _linear(ctx, z))
            cells = exact_cell_counts(seq)
            bad = [k for k in range(1, len(cells) + 1, 2) if cells[k - 1] % 2]
            details.append(
                {
                    "shift": _fmt(ctx, z),
                    "cell_counts": list(cells),
                    "odd_size_violations": bad,
                    "ok": not bad,
                }
            )
            if bad and failing is None:
                failing = (
                    f"{cells[bad[0] - 1]} Jordan cells of odd size {bad[0]} "
                    f"at eigenvalue {_fmt(ctx, z)}; an even count is required"
                )
                ok = False
        return (
            {
                "criterion": "even count of each odd Jordan cell size at "
                "every in-field translation shift",
                "shifts": details,
            },
            ok,
            failing,
        )
    if family is Family.IRR_DISTINCT_SPECIAL:
        g = special_quadratic(pctx)
        seq = count_sequence(factors, g)
        cells = exact_cell_counts(seq)
        bad = [k for k in range(1, len(cells) + 1, 2) if cells[k - 1] % 2]
        failing = None
        if bad:
            failing = (
                f"{cells[bad[0] - 1]} invariant factors with {g}-primary "
                f"part of odd exponent {bad[0]}; an even count is required"
            )
        return (
            {
                "criterion": "even multiplicity of each odd power of the "
                "special quadratic among invariant factors",
                "quadratic": str(g),
                "exact_multiplicities": list(cells),
                "odd_exponent_violations": bad,
            },
            not bad,
            failing,
        )
    raise ConstructionInvariantViolated(f"unhandled family {family}")


def decide_extension(v: Mat, pctx: PairCtx) -> DecisionReport:
    """Decide whether the standard extension S(v) is a symplectic
    (p,q)-difference, from the invariant factors of v."""
    if v.ctx != pctx.ctx:
        raise MixedFieldContexts(f"{v.ctx} vs {pctx.ctx}")
    inv = invariant_factors(v)
    factors = inv.factors
    regular, reg_ok, reg_fail = _regular_evidence(pctx, factors)
    exceptional, exc_ok, exc_fail = _exceptional_evidence(pctx, factors)
    failing = reg_fail if reg_fail is not None else exc_fail
    return DecisionReport(
        ok=reg_ok and exc_ok,
        regular_ok=reg_ok,
        exceptional_ok=exc_ok,
        case=pctx.case,
        dimension=v.rows,
        invariant_factors=factors,
        regular=regular,
        exceptional=exceptional,
        failing_evidence=failing,
    )


def _pair_level_mod4(pctx: PairCtx, factors: Sequence[Poly]):
    """Evenness criteria recomputed on the pair's own (doubled) invariant
    factors: the relevant counts must be multiples of 4."""
    ctx = pctx.ctx
    family = pctx.case.family
    if family is Family.IRR_SAME_FIELD:
        details = []
        ok = True
        for z in pctx.case.zs:
            cells = exact_cell_counts(count_sequence(factors, _linear(ctx, z)))
            bad = [k for k in range(1, len(cells) + 1, 2) if cells[k - 1] % 4]
            details.append(
                {
                    "shift": _fmt(ctx, z),
                    "cell_counts": list(cells),
                    "odd_size_violations": bad,
                }
            )
            ok = ok and not bad
        return ok, {
            "criterion": "odd-size Jordan cell counts at in-field shifts "
            "are multiples of 4",
            "shifts": details,
        }
    if family is Family.IRR_DISTINCT_SPECIAL:
        g = special_quadratic(pctx)
        cells = exact_cell_counts(count_sequence(factors, g))
        bad = [k for k in range(1, len(cells) + 1, 2) if cells[k - 1] % 4]
        return (
            not bad,
            {
                "criterion": "odd-power multiplicities of the special "
                "quadratic are multiples of 4",
                "quadratic": str(g),
                "exact_multiplicities": list(cells),
                "odd_exponent_violations": bad,
            },
        )
    return None, None


def decide_pair(P: SymplecticPair, pctx: PairCtx) -> DecisionReport:
    """Decide a symplectic pair: halve the doubled invariant factors,
    decide the extension, and cross-check the pair-level multiple-of-4
    criteria where the family has one."""
    validity = require_valid(P.B, P.U)
    halves = validity.invariant_factors.doubled_halves()
    if halves:
        v = direct_sum(*(companion(f) for f in halves))
    else:
        v = Mat(P.ctx, [])
    report = decide_extension(v, pctx)
    pair_ok, pair_ev = _pair_level_mod4(pctx, validity.invariant_factors.factors)
    if pair_ok is None:
        return report
    if pair_ok != report.exceptional_ok:
        raise ConstructionInvariantViolated(
            "pair-level multiple-of-4 criterion disagrees with the halved "
            f"extension decision: {pair_ev}"
        )
    return replace(report, pair_level=pair_ev)


def split_parts(
    P: SymplecticPair, pctx: PairCtx
) -> Tuple[SymplecticPair, SymplecticPair]:
    """(regular, exceptional) orthogonal parts of a valid pair, via the
    Fitting decomposition along F(U)."""
    require_valid(P.B, P.U)
    E, R = fitting_split(P.U, pctx.F)
    return induced_pair(P, R), induced_pair(P, E)


def _restricted(v: Mat, W: Mat) -> Mat:
    return restrict(v, W) if W.cols else Mat(v.ctx, [])


def experimental_synthesis_check(v: Mat, pctx: PairCtx) -> Optional[bool]:
    """Second route for the families where p or q splits: Fitting-split v
    itself, test the regular half by base-sigma decomposition and the
    exceptional half by the endomorphism-level count criteria (computed by
    matrix ranks, not from invariant factors).  None outside those
    families."""
    family = pctx.case.family
    if not family.one_of_pq_splits:
        return None
    if v.ctx != pctx.ctx:
        raise MixedFieldContexts(f"{v.ctx} vs {pctx.ctx}")
    E, R = fitting_split(v, pctx.F)
    v_reg = _restricted(v, R)
    v_exc = _restricted(v, E)
    reg_ok = all(
        decompose_base_sigma(f, pctx.delta) is not None
        for f in invariant_factors(v_reg).factors
    )
    if family in (Family.SPLIT_DOUBLE_DOUBLE, Family.IRR_SPLIT_EQ):
        return reg_ok
    if family in (Family.SPLIT_SIMPLE_SIMPLE, Family.SPLIT_MIXED):
        shift = 1 if family is Family.SPLIT_SIMPLE_SIMPLE else 2
        pairs, _ = _root_orbits(pctx)
        exc_ok = all(
            intertwined(
                jordan_sequence(v_exc, z), jordan_sequence(v_exc, w), shift
            )
            for z, w in pairs
        )
        return reg_ok and exc_ok
    # p irreducible, q split with distinct translates
    y1, y2 = pctx.case.ys
    g1 = pctx.p_norm.translate(y1)
    g2 = pctx.p_norm.translate(y2)
    exc_ok = intertwined(
        primary_sequence(v_exc, g1), primary_sequence(v_exc, g2), 1
    )
    return reg_ok and exc_ok
