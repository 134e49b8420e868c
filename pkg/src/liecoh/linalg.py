"""Exact linear algebra over the rationals.

Dense matrices of ``fractions.Fraction``, subspaces stored as reduced
row echelon bases, and univariate polynomials in one parameter ``t``.
There are no tolerances: every rank, kernel and dimension is decided
exactly, which is what makes the cohomology dimensions downstream
trustworthy.
"""

from __future__ import annotations

from fractions import Fraction

# The scalar field.  Fraction already maintains lowest terms, a positive
# denominator and a canonical zero, so it is used directly as the
# rational scalar type everywhere in this package.
Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, a string like '-3/4' or a Fraction to Fraction.

    >>> rat("2/6")
    Fraction(1, 3)
    """
    return x if type(x) is Fraction else Fraction(x)


def vector(entries) -> list:
    return [rat(x) for x in entries]


def zero_vector(n: int) -> list:
    return [ZERO] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix of Fractions, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(tuple(rat(x) for x in row) for row in data)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"matrix data does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows_list) -> "Matrix":
        rows_list = list(rows_list)
        nc = len(rows_list[0]) if rows_list else 0
        return cls(len(rows_list), nc, rows_list)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def row(self, i: int) -> list:
        return list(self.data[i])

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def matvec(self, v) -> list:
        if len(v) != self.cols:
            raise ValueError(f"matvec: expected length {self.cols}, got {len(v)}")
        out = []
        for row in self.data:
            s = ZERO
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s)
        return out

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matmul: inner dimensions differ")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            oi = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b:
                        oi[j] += a * b
        return Matrix(self.rows, other.cols, out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, list(zip(*self.data)) if self.data else [[] for _ in range(self.cols)])

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def _rref_rows(rows_in, cols: int):
    """Gauss-Jordan on a list of row lists; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows_in]
    nr = len(rows)
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, nr):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != ONE:
            inv = ONE / pv
            rows[r] = [x * inv for x in rows[r]]
        lead = rows[r]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                for j in range(c, cols):
                    if lead[j]:
                        ri[j] -= f * lead[j]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank; the input is not modified.

    >>> rref(Matrix.from_rows([[1, 2], [2, 4]]))[1]
    1
    """
    rows, pivots = _rref_rows(m.data, m.cols)
    return Matrix(m.rows, m.cols, rows), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


class Subspace:
    """A linear subspace of Q^n held as a reduced-echelon row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix):
        if basis.cols != ambient_dim:
            raise ValueError("basis width does not match ambient dimension")
        pivots = []
        for row in basis.data:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                raise ValueError("zero row in subspace basis")
            if row[lead] != ONE:
                raise ValueError("pivot entries must be 1 (basis not reduced)")
            pivots.append(lead)
        if pivots != sorted(set(pivots)):
            raise ValueError("basis rows are not in echelon order")
        for i, row in enumerate(basis.data):
            for j, p in enumerate(pivots):
                if i != j and row[p]:
                    raise ValueError("pivot columns must be cleared (basis not reduced)")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "Subspace":
        rows, pivots = _rref_rows([vector(v) for v in vectors], ambient_dim)
        return cls(ambient_dim, Matrix(len(pivots), ambient_dim, rows[: len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix(0, ambient_dim, []))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list:
        return [list(row) for row in self.basis.data]

    def reduce(self, v) -> list:
        """Residual of v after eliminating this subspace's pivot coordinates."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        out = list(v)
        for row, p in zip(self.basis.data, self.pivots):
            f = out[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        out[j] -= f * row[j]
        return out

    def contains(self, v) -> bool:
        return vec_is_zero(self.reduce(v))

    def coords(self, v):
        """Coefficients of v on the echelon basis rows, or None if outside."""
        c = [v[p] for p in self.pivots]
        if not vec_is_zero(self.reduce(v)):
            return None
        return c

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis.data)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(
            self.ambient_dim, list(self.basis.data) + list(other.basis.data)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of m as a subspace of the domain Q^cols.

    >>> kernel_basis(Matrix.from_rows([[1, 1, 0]])).dim
    2
    """
    R, _ = rref(m)
    rows, pivots = _rref_rows(R.data, m.cols)
    pivot_set = set(pivots)
    vectors_out = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = zero_vector(m.cols)
        v[free] = ONE
        for rr, p in zip(rows, pivots):
            v[p] = -rr[free]
        vectors_out.append(v)
    return Subspace.from_vectors(m.cols, vectors_out)


def image_basis(m: Matrix) -> Subspace:
    """Column span of m as a subspace of the codomain Q^rows."""
    return Subspace.from_vectors(m.rows, [m.column(j) for j in range(m.cols)])


def solve(m: Matrix, b):
    """One exact solution of m x = b (free variables zero), or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match")
    aug = [list(row) + [bv] for row, bv in zip(m.data, b)]
    rows, pivots = _rref_rows(aug, m.cols + 1)
    if m.cols in pivots:
        return None
    x = zero_vector(m.cols)
    for rr, p in zip(rows, pivots):
        x[p] = rr[m.cols]
    return x


def det_rows(rows_in) -> Fraction:
    """Determinant of a square list-of-lists, by fraction elimination."""
    rows = [list(r) for r in rows_in]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    acc = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        pv = rows[c][c]
        acc *= pv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f /= pv
                ri, rc = rows[i], rows[c]
                for j in range(c, n):
                    if rc[j]:
                        ri[j] -= f * rc[j]
    return acc if sign == 1 else -acc


def det(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    return det_rows(m.data)


class Poly:
    """Univariate polynomial in t with rational coefficients.

    Coefficients are stored in ascending powers with trailing zeros
    trimmed; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((rat(c),))

    @classmethod
    def t(cls) -> "Poly":
        return cls((ZERO, ONE))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Poly(out)
        return Poly([rat(other) * c for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t0) -> Fraction:
        return poly_eval(self, t0)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"Poly({poly_str(self)})"


def poly_eval(p: Poly, t0) -> Fraction:
    """Exact Horner evaluation.

    >>> poly_eval(Poly([1, -1, 1]), 2)
    Fraction(3, 1)
    """
    t0 = rat(t0)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * t0 + c
    return acc


def poly_derivative_at_zero(p: Poly) -> Fraction:
    """Coefficient of t^1, the first-order term of the family."""
    return p.coefficient(1)


def _monomial_str(c: Fraction, k: int) -> str:
    if k == 0:
        return str(c)
    tpow = "t" if k == 1 else f"t^{k}"
    if c == ONE:
        return tpow
    if c == -ONE:
        return "-" + tpow
    return f"{c}*{tpow}"


def poly_str(p: Poly) -> str:
    """Ascending-power rendering: '1 - t + t^2'; round-trips the file grammar."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        term = _monomial_str(abs(c) if parts else c, k)
        if parts:
            parts.append("- " + term if c < 0 else "+ " + term)
        else:
            parts.append(term)
    return " ".join(parts)
