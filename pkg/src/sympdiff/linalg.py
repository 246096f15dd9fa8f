"""Exact dense linear algebra over a field context.

Provides the :class:`Mat` value class (immutable, tuple-backed), companion
matrices, evaluation of polynomials at matrices, Smith-normal-form invariant
factors of ``tI - M`` over ``F[t]``, similarity testing, Jordan / primary
multiplicities, and the Fitting split.

Matrix products over prime fields go through numpy int64 (exact: the entry
bound is checked against the int64 range); everything else is pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as _np

from .errors import (
    ConstructionInvariantViolated,
    DimensionMismatch,
    MixedFieldContexts,
    NonMonic,
    NotIrreducible,
    NotSquare,
    NotStable,
    SingularMatrix,
    WrongDegree,
    ZeroPolynomial,
)
from .fields import FieldCtx
from .poly import Poly, is_irreducible, poly_ops


class Mat:
    """Immutable dense matrix over a field context."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: FieldCtx, entries: Iterable[Iterable], cols: int = None):
        rows = tuple(tuple(r) for r in entries)
        m = len(rows)
        n = len(rows[0]) if m else (cols or 0)
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", m)
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *_):
        raise AttributeError("Mat is immutable")

    def __reduce__(self):  # the immutability guard blocks default unpickling
        return (Mat, (self.ctx, self.entries, self.cols))

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_ints(cls, ctx, grid):
        return cls(ctx, [[ctx.from_int(int(e)) for e in row] for row in grid])

    @classmethod
    def zeros(cls, ctx, m, n=None):
        n = m if n is None else n
        z = ctx.zero
        return cls(ctx, [[z] * n for _ in range(m)])

    @classmethod
    def identity(cls, ctx, n):
        z, o = ctx.zero, ctx.one
        return cls(ctx, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, ctx, n, c):
        z = ctx.zero
        return cls(ctx, [[c if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, ctx, scalars):
        scalars = list(scalars)
        z = ctx.zero
        n = len(scalars)
        return cls(
            ctx, [[scalars[i] if i == j else z for j in range(n)] for i in range(n)]
        )

    @classmethod
    def block(cls, ctx, grid: Sequence[Sequence["Mat"]]):
        """Assemble from a rectangular grid of matrices with matching shapes."""
        out_rows: List[List] = []
        for brow in grid:
            h = brow[0].rows
            for b in brow:
                if b.rows != h:
                    raise DimensionMismatch("block row heights differ")
            for i in range(h):
                out_rows.append([e for b in brow for e in b.entries[i]])
        return cls(ctx, out_rows)

    @classmethod
    def column(cls, ctx, vec):
        return cls(ctx, [[x] for x in vec])

    # -- shape and access -------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        z = self.ctx.zero
        return all(e == z for row in self.entries for e in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def col(self, j) -> tuple:
        return tuple(row[j] for row in self.entries)

    def take_cols(self, indices) -> "Mat":
        return Mat(self.ctx, [[row[j] for j in indices] for row in self.entries])

    def _check(self, other: "Mat"):
        if self.ctx != other.ctx:
            raise MixedFieldContexts(f"{self.ctx} vs {other.ctx}")

    def _square(self):
        if not self.is_square:
            raise NotSquare(f"{self.rows}x{self.cols}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add shapes differ")
        add = self.ctx.add
        return Mat(
            self.ctx,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("sub shapes differ")
        sub = self.ctx.sub
        return Mat(
            self.ctx,
            [
                [sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self):
        neg = self.ctx.neg
        return Mat(self.ctx, [[neg(a) for a in row] for row in self.entries])

    def scale(self, c) -> "Mat":
        mul = self.ctx.mul
        return Mat(self.ctx, [[mul(a, c) for a in row] for row in self.entries])

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ctx = self.ctx
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Mat.zeros(ctx, self.rows, other.cols)
        if ctx.kind == "prime" and self.cols * (ctx.p - 1) ** 2 < 2 ** 62:
            a = _np.array(self.entries, dtype=_np.int64)
            b = _np.array(other.entries, dtype=_np.int64)
            c = (a @ b) % ctx.p
            return Mat(ctx, [tuple(int(e) for e in row) for row in c])
        add, mul, zero = ctx.add, ctx.mul, ctx.zero
        bt = tuple(zip(*other.entries))
        out = []
        for ra in self.entries:
            row = []
            for cb in bt:
                acc = zero
                for x, y in zip(ra, cb):
                    if x != zero and y != zero:
                        acc = add(acc, mul(x, y))
                row.append(acc)
            out.append(row)
        return Mat(ctx, out)

    def __pow__(self, e: int):
        self._square()
        if e < 0:
            return self.inverse() ** (-e)
        result = Mat.identity(self.ctx, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> "Mat":
        if self.rows == 0:
            return Mat(self.ctx, [[] for _ in range(self.cols)])
        if self.cols == 0:
            return Mat(self.ctx, [], cols=self.rows)
        return Mat(self.ctx, tuple(zip(*self.entries)))

    def trace(self):
        self._square()
        return self.ctx.sum(self.entries[i][i] for i in range(self.rows))

    # -- elimination-based queries ------------------------------------------

    def _rref(self):
        """Reduced row echelon form; returns (rows as lists, pivot column list)."""
        ctx = self.ctx
        zero = ctx.zero
        rows = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, m) if rows[i][c] != zero), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = ctx.inv(rows[r][c])
            if rows[r][c] != ctx.one:
                rows[r] = [ctx.mul(x, inv) for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != zero:
                    f = rows[i][c]
                    rows[i] = [
                        ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rows[i], rows[r])
                    ]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def det(self):
        self._square()
        ctx = self.ctx
        zero = ctx.zero
        rows = [list(r) for r in self.entries]
        n = self.rows
        det = ctx.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c] != zero), None)
            if piv is None:
                return zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = ctx.neg(det)
            det = ctx.mul(det, rows[c][c])
            inv = ctx.inv(rows[c][c])
            for i in range(c + 1, n):
                if rows[i][c] != zero:
                    f = ctx.mul(rows[i][c], inv)
                    rows[i] = [
                        ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rows[i], rows[c])
                    ]
        return det

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> "Mat":
        self._square()
        n = self.rows
        aug = Mat.block(self.ctx, [[self, Mat.identity(self.ctx, n)]])
        rows, pivots = aug._rref()
        if pivots != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Mat(self.ctx, [row[n:] for row in rows])

    def solve(self, rhs: "Mat") -> "Mat":
        """X with self @ X = rhs; raises when no solution exists.

        For a unique solution the coefficient matrix must have full column
        rank; otherwise the deterministic rref representative is returned.
        """
        self._check(rhs)
        if self.rows != rhs.rows:
            raise DimensionMismatch("solve: row counts differ")
        n = self.cols
        aug = Mat.block(self.ctx, [[self, rhs]])
        rows, pivots = aug._rref()
        zero = self.ctx.zero
        for p in pivots:
            if p >= n:
                raise SingularMatrix("inconsistent linear system")
        out = [[zero] * rhs.cols for _ in range(n)]
        for i, c in enumerate(pivots):
            out[c] = rows[i][n:]
        return Mat(self.ctx, out)

    def kernel_basis(self) -> "Mat":
        """Columns form a basis of the nullspace (free-variable convention,
        free columns in ascending order)."""
        ctx = self.ctx
        rows, pivots = self._rref()
        n = self.cols
        free = [j for j in range(n) if j not in pivots]
        cols = []
        for j in free:
            v = [ctx.zero] * n
            v[j] = ctx.one
            for i, c in enumerate(pivots):
                v[c] = ctx.neg(rows[i][j])
            cols.append(v)
        return Mat(ctx, [[col[i] for col in cols] for i in range(n)])

    def column_space_basis(self) -> "Mat":
        """Columns of self at the rref pivot positions."""
        _, pivots = self._rref()
        return self.take_cols(pivots)

    # -- comparisons and display ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and other.ctx == self.ctx
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __str__(self):
        fmt = self.ctx.format
        rows = [[fmt(e) for e in row] for row in self.entries]
        if not rows:
            return "[]"
        widths = [
            max(len(rows[i][j]) for i in range(self.rows)) for j in range(self.cols)
        ]
        return "\n".join(
            "[" + "  ".join(e.rjust(w) for e, w in zip(row, widths)) + "]"
            for row in rows
        )

    def __repr__(self):
        return f"Mat({self.ctx!r}, {self.rows}x{self.cols})"


def direct_sum(*mats: Mat) -> Mat:
    if not mats:
        raise DimensionMismatch("direct_sum of nothing")
    ctx = mats[0].ctx
    for m in mats:
        if m.ctx != ctx:
            raise MixedFieldContexts("direct_sum over mixed contexts")
    total_r = sum(m.rows for m in mats)
    total_c = sum(m.cols for m in mats)
    z = ctx.zero
    out = [[z] * total_c for _ in range(total_r)]
    ro = co = 0
    for m in mats:
        for i in range(m.rows):
            out[ro + i][co : co + m.cols] = m.entries[i]
        ro += m.rows
        co += m.cols
    return Mat(ctx, out)


def hstack(mats: Sequence[Mat]) -> Mat:
    return Mat.block(mats[0].ctx, [list(mats)])


def companion(r: Poly) -> Mat:
    """Companion matrix: subdiagonal ones, last column the negated lower
    coefficients of the monic input."""
    if r.is_zero or r.degree < 1:
        raise WrongDegree("companion needs degree >= 1")
    if not r.is_monic:
        raise NonMonic(f"companion of non-monic {r}")
    ctx = r.ctx
    n = r.degree
    z = ctx.zero
    out = [[z] * n for _ in range(n)]
    for i in range(n - 1):
        out[i + 1][i] = ctx.one
    for i in range(n):
        out[i][n - 1] = ctx.neg(r.coeffs[i])
    return Mat(ctx, out)


def mat_poly_eval(f: Poly, M: Mat) -> Mat:
    """f(M) by Horner's rule."""
    M._square()
    if f.ctx != M.ctx:
        raise MixedFieldContexts(f"{f.ctx} vs {M.ctx}")
    n = M.rows
    acc = Mat.zeros(M.ctx, n)
    ident = Mat.identity(M.ctx, n)
    for c in reversed(f.coeffs):
        acc = acc @ M + ident.scale(c)
    return acc


# ----------------------------------------------------------------------
# invariant factors via Smith normal form of tI - M
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class InvFactors:
    """Nonconstant invariant factors in ascending divisibility order."""

    ctx: FieldCtx
    factors: Tuple[Poly, ...]
    dimension: int

    def __post_init__(self):
        total = 0
        prev = None
        for f in self.factors:
            if not f.is_monic or f.degree < 1:
                raise ConstructionInvariantViolated(f"bad invariant factor {f}")
            if prev is not None and not (f % prev).is_zero:
                raise ConstructionInvariantViolated(
                    f"divisibility chain broken: {prev} does not divide {f}"
                )
            prev = f
            total += f.degree
        if total != self.dimension:
            raise ConstructionInvariantViolated(
                f"invariant factor degrees sum to {total}, dimension is {self.dimension}"
            )

    @property
    def minimal_poly(self) -> Optional[Poly]:
        return self.factors[-1] if self.factors else None

    def doubled_halves(self) -> Optional[Tuple[Poly, ...]]:
        """If the list reads f1,f1,f2,f2,..., return (f1,f2,...), else None."""
        fs = self.factors
        if len(fs) % 2:
            return None
        half = []
        for i in range(0, len(fs), 2):
            if fs[i] != fs[i + 1]:
                return None
            half.append(fs[i])
        return tuple(half)

    def __str__(self):
        return "[" + ", ".join(str(f) for f in self.factors) + "]"


_SNF_MAX_STEPS_PER_PIVOT = 4096


def invariant_factors(M: Mat) -> InvFactors:
    """Invariant factors of M: the nonconstant diagonal of the Smith normal
    form of tI - M over F[t].

    Pivoting picks the minimal-degree nonzero entry (row-major tie-break);
    after clearing a row/column the pivot is made to divide the remaining
    submatrix by row additions.  A degree guard aborts if any intermediate
    entry exceeds degree 4n.
    """
    M._square()
    ctx = M.ctx
    n = M.rows
    if n == 0:
        return InvFactors(ctx, (), 0)
    ops = poly_ops(ctx)
    padd, psub, pmul, pdiv = ops.add, ops.sub, ops.mul, ops.divmod
    zero, one = ctx.zero, ctx.one

    def trim1(c):
        return (c,) if c != zero else ()

    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append((ctx.neg(M.entries[i][j]), one))
            else:
                row.append(trim1(ctx.neg(M.entries[i][j])))
        grid.append(row)

    deg_guard = 4 * n

    for k in range(n):
        steps = 0
        while True:
            steps += 1
            if steps > _SNF_MAX_STEPS_PER_PIVOT:
                raise ConstructionInvariantViolated(
                    "Smith normal form failed to converge"
                )
            # minimal-degree nonzero pivot in the trailing submatrix
            bi = bj = -1
            blen = deg_guard + 2
            for i in range(k, n):
                row = grid[i]
                for j in range(k, n):
                    e = row[j]
                    if e and len(e) < blen:
                        bi, bj, blen = i, j, len(e)
                if blen == 1:
                    break
            if bi < 0:
                break  # trailing block is zero
            if bi != k:
                grid[bi], grid[k] = grid[k], grid[bi]
            if bj != k:
                for row in grid:
                    row[bj], row[k] = row[k], row[bj]
            piv = grid[k][k]
            if len(piv) - 1 > deg_guard:
                raise ConstructionInvariantViolated(
                    f"SNF degree guard exceeded: degree {len(piv) - 1} > {deg_guard}"
                )
            clean = True
            if blen == 1:
                # constant pivot: one full clearing pass suffices
                rowk = grid[k]
                for i in range(k + 1, n):
                    e = grid[i][k]
                    if e:
                        q = ops.scale(e, ctx.inv(piv[0]))
                        rowi = grid[i]
                        for j in range(k, n):
                            if rowk[j]:
                                rowi[j] = psub(rowi[j], pmul(q, rowk[j]))
                for j in range(k + 1, n):
                    rowk[j] = ()
                break
            for i in range(k + 1, n):
                e = grid[i][k]
                if e:
                    q, rem = pdiv(e, piv)
                    if q:
                        rowi, rowk = grid[i], grid[k]
                        for j in range(k, n):
                            if rowk[j]:
                                rowi[j] = psub(rowi[j], pmul(q, rowk[j]))
                    if rem:
                        clean = False
            if not clean:
                continue
            for j in range(k + 1, n):
                e = grid[k][j]
                if e:
                    q, rem = pdiv(e, piv)
                    if q:
                        for i in range(k, n):
                            if grid[i][k]:
                                grid[i][j] = psub(grid[i][j], pmul(q, grid[i][k]))
                    if rem:
                        clean = False
            if not clean:
                continue
            # pivot row/col clear; enforce divisibility into the rest
            offender = None
            for i in range(k + 1, n):
                row = grid[i]
                for j in range(k + 1, n):
                    e = row[j]
                    if e and pdiv(e, piv)[1]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            rowo = grid[offender]
            rowk = grid[k]
            for j in range(k, n):
                rowk[j] = padd(rowk[j], rowo[j])

    diag = []
    for k in range(n):
        e = grid[k][k]
        if not e:
            raise ConstructionInvariantViolated("zero diagonal in SNF of tI - M")
        diag.append(ops.monic(e))
    factors = tuple(Poly(ctx, e) for e in diag if len(e) > 1)
    return InvFactors(ctx, factors, n)


def similar(M1: Mat, M2: Mat) -> bool:
    if M1.ctx != M2.ctx:
        raise MixedFieldContexts(f"{M1.ctx} vs {M2.ctx}")
    M1._square()
    M2._square()
    if M1.rows != M2.rows:
        return False
    return invariant_factors(M1).factors == invariant_factors(M2).factors


# ----------------------------------------------------------------------
# Jordan / primary multiplicities and the Fitting split
# ----------------------------------------------------------------------


def _check_primary_modulus(g: Poly):
    """Irreducibility obligation: verified where decidable, trusted beyond."""
    try:
        ok = is_irreducible(g)
    except NotIrreducible:
        return  # undecidable here (deg >= 4 over an infinite field): trusted
    if not ok:
        raise NotIrreducible(f"{g} is not irreducible")


def primary_sequence(M: Mat, g: Poly) -> Tuple[int, ...]:
    """(n_1, n_2, ...): n_k = number of primary invariants g^l of M with
    l >= k; stops at the first zero."""
    M._square()
    _check_primary_modulus(g)
    d = g.degree
    G = mat_poly_eval(g, M)
    out = []
    P = G
    prev_rank = M.rows
    while True:
        rk = P.rank()
        diff = prev_rank - rk
        if diff == 0:
            break
        if diff % d:
            raise ConstructionInvariantViolated(
                f"rank drop {diff} not divisible by deg {g} = {d}"
            )
        out.append(diff // d)
        prev_rank = rk
        P = P @ G
    return tuple(out)


def primary_count(M: Mat, g: Poly, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    seq = primary_sequence(M, g)
    return seq[k - 1] if k <= len(seq) else 0


def jordan_sequence(M: Mat, z) -> Tuple[int, ...]:
    """Counts of Jordan cells at eigenvalue z of size >= 1, >= 2, ..."""
    lin = Poly(M.ctx, (M.ctx.neg(z), M.ctx.one))
    return primary_sequence(M, lin)


def jordan_number(M: Mat, z, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    seq = jordan_sequence(M, z)
    return seq[k - 1] if k <= len(seq) else 0


def exact_cell_counts(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    """From counts of cells of size >= k to counts of size exactly k."""
    out = []
    for k in range(len(seq)):
        nxt = seq[k + 1] if k + 1 < len(seq) else 0
        out.append(seq[k] - nxt)
    return tuple(out)


def fitting_split(M: Mat, f: Poly) -> Tuple[Mat, Mat]:
    """Bases (as column matrices) of E = ker f(M)^n and R = im f(M)^n,
    iterated to stabilization; E + R is a direct sum spanning everything."""
    M._square()
    if f.is_zero:
        raise ZeroPolynomial("fitting_split of the zero polynomial")
    G = mat_poly_eval(f, M)
    P = G
    rk = P.rank()
    while True:
        Q = P @ G
        rk2 = Q.rank()
        if rk2 == rk:
            break
        P, rk = Q, rk2
    E = P.kernel_basis()
    R = P.column_space_basis()
    if E.cols + R.cols != M.rows:
        raise ConstructionInvariantViolated("Fitting split dimensions do not add up")
    return E, R


def restrict(M: Mat, W: Mat) -> Mat:
    """Matrix of M restricted to the span of W's columns, in that basis.

    Raises NotStable when M does not map the span into itself.
    """
    if W.rows != M.rows:
        raise DimensionMismatch("basis has wrong ambient dimension")
    try:
        return W.solve(M @ W)
    except SingularMatrix as e:
        raise NotStable("subspace is not stable") from e
