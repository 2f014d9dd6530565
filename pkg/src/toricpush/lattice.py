"""Exact integer linear algebra: Smith normal form, coset enumeration,
smooth-cone tests.

Everything here works over arbitrary-precision Python ints; no floating
point is used anywhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import LatticeError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise LatticeError("matrix must have positive dimensions")
        ncols = len(self.entries[0])
        for row in self.entries:
            if len(row) != ncols:
                raise LatticeError("ragged matrix")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise LatticeError("entries must be integers")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(e) for e in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise LatticeError("dimension mismatch in product")
        cols = list(zip(*other.entries))
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries))

    def mul_vector(self, v) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise LatticeError("dimension mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * e for e in row) for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LatticeError("dimension mismatch in sum")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + other.scale(-1)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.nrows != self.ncols:
            raise LatticeError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_identity(self) -> bool:
        return (self.nrows == self.ncols
                and all(self.entries[i][j] == (1 if i == j else 0)
                        for i in range(self.nrows) for j in range(self.ncols)))


@dataclass(frozen=True)
class SnfResult:
    """U @ A @ V = S with U, V unimodular and S diagonal (divisibility chain)."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> tuple[int, ...]:
        m = min(self.S.nrows, self.S.ncols)
        return tuple(self.S.entries[i][i] for i in range(m))

    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors() if d != 0)


def _select_pivot(a, t, m, n):
    # smallest-magnitude nonzero entry of the trailing submatrix, ties broken
    # by row-major position (fixed rule for deterministic output)
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form over the integers, with both transforms."""
    m, n = A.nrows, A.ncols
    a = [list(row) for row in A.entries]
    u = [list(row) for row in IntMatrix.identity(m).entries]
    v = [list(row) for row in IntMatrix.identity(n).entries]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_op(i, j, q):
        # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    t = 0
    while t < min(m, n):
        piv = _select_pivot(a, t, m, n)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        clean = True
        for i in range(t + 1, m):
            if a[i][t] != 0:
                row_op(i, t, a[i][t] // a[t][t])
                if a[i][t] != 0:
                    clean = False
        for j in range(t + 1, n):
            if a[t][j] != 0:
                col_op(j, t, a[t][j] // a[t][t])
                if a[t][j] != 0:
                    clean = False
        if not clean:
            continue
        # pivot must divide every remaining entry for the chain to hold
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        t += 1

    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return SnfResult(IntMatrix.from_rows(u), IntMatrix.from_rows(a),
                     IntMatrix.from_rows(v))


def inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    if M.nrows != M.ncols:
        raise LatticeError("inverse of a non-square matrix")
    n = M.nrows
    a = [[Fraction(e) for e in row] for row in M.entries]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise LatticeError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        inv[k] = [x / p for x in inv[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
    rows = []
    for row in inv:
        out = []
        for x in row:
            if x.denominator != 1:
                raise LatticeError("matrix is not unimodular")
            out.append(int(x))
        rows.append(out)
    return IntMatrix.from_rows(rows)


def coset_representatives(F: IntMatrix) -> list[tuple[int, ...]]:
    """Canonical representatives of Z^n / F(Z^n) for nonsingular square F.

    With U F V = S, the box reps prod_i [0, S_ii) in U-coordinates are pulled
    back through U^{-1}; this makes the choice reproducible byte-for-byte.
    """
    if F.nrows != F.ncols:
        raise LatticeError("not a finite-index sublattice")
    snf = smith_normal_form(F)
    diag = snf.invariant_factors()
    if any(d == 0 for d in diag):
        raise LatticeError("not a finite-index sublattice")
    uinv = inverse_unimodular(snf.U)
    return [uinv.mul_vector(w) for w in product(*[range(d) for d in diag])]


def coset_reduce(F: IntMatrix, x) -> tuple[int, ...]:
    """Reduce x to the canonical representative of its class mod F(Z^n)."""
    snf = smith_normal_form(F)
    diag = snf.invariant_factors()
    if any(d == 0 for d in diag):
        raise LatticeError("not a finite-index sublattice")
    y = snf.U.mul_vector(x)
    y = tuple(yi % d for yi, d in zip(y, diag))
    return inverse_unimodular(snf.U).mul_vector(y)


def is_primitive(v) -> bool:
    g = 0
    for e in v:
        g = math.gcd(g, abs(e))
    return g == 1


def cone_is_smooth(rays) -> bool:
    """True iff the rays extend to a basis of the ambient lattice."""
    rays = [tuple(int(e) for e in r) for r in rays]
    for r in rays:
        if not is_primitive(r):
            raise LatticeError("ray not primitive")
    snf = smith_normal_form(IntMatrix.from_rows(rays))
    factors = snf.invariant_factors()
    return snf.rank() == len(rays) and all(d == 1 for d in factors[:len(rays)])


def kernel_basis(A: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel of A (columns of V at zero invariant factors)."""
    snf = smith_normal_form(A)
    diag = snf.invariant_factors()
    cols = list(zip(*snf.V.entries))
    basis = []
    for j in range(A.ncols):
        if j >= len(diag) or diag[j] == 0:
            basis.append(tuple(cols[j]))
    return basis


def solve_diophantine(A: IntMatrix, b) -> tuple[int, ...] | None:
    """One integer solution of A x = b, or None if there is none."""
    snf = smith_normal_form(A)
    y = snf.U.mul_vector(b)
    diag = snf.invariant_factors()
    z = [0] * A.ncols
    for i in range(A.nrows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % d != 0:
                return None
            z[i] = y[i] // d
    return snf.V.mul_vector(z)
