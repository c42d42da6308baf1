"""Exact dense linear algebra over a FieldDescriptor.

Matrices hold encoded values in numpy arrays; every row operation goes
through the field's array kernel, so all results are exact.  Subspaces are
stored canonically as reduced-row-echelon bases, which turns the set
identities used throughout the package into plain array equalities.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbientMismatch
from .fields import FieldDescriptor, FieldScalar


def rref_data(field: FieldDescriptor, data: np.ndarray):
    """RREF of an encoded 2-D array; returns (array, pivot column list)."""
    m = np.array(data, dtype=field.dtype)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        col = m[r:, c]
        nz = np.nonzero(col != field.zero_enc)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = field.s_inv(m[r, c])
        if m[r, c] != field.one_enc:
            m[r] = field.a_mul(inv, m[r])
        factors = m[:, c].copy()
        factors[r] = field.zero_enc
        if np.any(factors != field.zero_enc):
            m = field.elim(m, factors, m[r])
        pivots.append(c)
        r += 1
    return m, pivots


def reduce_rows(field: FieldDescriptor, rows: np.ndarray, basis: np.ndarray,
                pivots) -> np.ndarray:
    """Residual of ``rows`` after elimination against an RREF ``basis``."""
    res = np.array(rows, dtype=field.dtype)
    if res.shape[0] == 0 or basis.shape[0] == 0:
        return res
    for r, c in enumerate(pivots):
        factors = res[:, c]
        if np.any(factors != field.zero_enc):
            res = field.elim(res, factors, basis[r])
    return res


class Matrix:
    """A dense matrix over one field, stored as encoded values."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldDescriptor, data: np.ndarray):
        data = np.asarray(data, dtype=field.dtype)
        if data.ndim != 2:
            raise ValueError("matrix data must be 2-D")
        self.field = field
        self.data = data

    @classmethod
    def from_rows(cls, field: FieldDescriptor, rows) -> "Matrix":
        arr = field.arr(rows)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        return cls(field, arr)

    @classmethod
    def zeros(cls, field: FieldDescriptor, rows: int, cols: int) -> "Matrix":
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "Matrix":
        return cls(field, field.eye(n))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.field, self.data[i, j])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.data.T.copy())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        return Matrix(self.field, self.field.matmul2(self.data, other.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        return Matrix(self.field, self.field.a_add(self.data, other.data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        return Matrix(self.field, self.field.a_sub(self.data, other.data))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    def __repr__(self):
        lines = [
            "[" + ", ".join(self.field.format_enc(v) for v in row) + "]"
            for row in self.data
        ]
        return "Matrix(" + "; ".join(lines) + ")"

    def rank(self) -> int:
        _, pivots = rref_data(self.field, self.data)
        return len(pivots)

    def is_zero(self) -> bool:
        return bool(np.all(self.data == self.field.zero_enc))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank."""
    data, pivots = rref_data(m.field, m.data)
    return Matrix(m.field, data), len(pivots)


class Subspace:
    """A linear subspace, stored as its unique RREF basis (no zero rows)."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: FieldDescriptor, ambient_dim: int, basis: np.ndarray):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        self.basis = np.asarray(basis, dtype=field.dtype)

    @classmethod
    def from_rows(cls, field: FieldDescriptor, ambient_dim: int, rows) -> "Subspace":
        """Canonicalise arbitrary spanning rows into a Subspace."""
        arr = np.asarray(rows, dtype=field.dtype)
        if arr.size == 0:
            return cls.zero(field, ambient_dim)
        arr = arr.reshape(-1, ambient_dim)
        red, pivots = rref_data(field, arr)
        return cls(field, ambient_dim, red[: len(pivots)])

    @classmethod
    def from_vectors(cls, field: FieldDescriptor, ambient_dim: int, vectors) -> "Subspace":
        return cls.from_rows(field, ambient_dim, field.arr(vectors))

    @classmethod
    def zero(cls, field: FieldDescriptor, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.zeros((0, ambient_dim)))

    @classmethod
    def full(cls, field: FieldDescriptor, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.eye(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def pivot_columns(self) -> list[int]:
        cols = []
        for row in self.basis:
            nz = np.nonzero(row != self.field.zero_enc)[0]
            cols.append(int(nz[0]))
        return cols

    def complement_columns(self) -> list[int]:
        piv = set(self.pivot_columns())
        return [c for c in range(self.ambient_dim) if c not in piv]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"

    def basis_vectors(self) -> list[np.ndarray]:
        return [self.basis[i] for i in range(self.dim)]

    def is_zero(self) -> bool:
        return self.dim == 0

    def _check_ambient(self, other: "Subspace"):
        self.field.check_same(other.field)
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def reduce(self, rows: np.ndarray) -> np.ndarray:
        """Residual of coordinate rows modulo this subspace."""
        return reduce_rows(self.field, rows, self.basis, self.pivot_columns())

    def contains_vector(self, vec) -> bool:
        row = np.asarray(vec, dtype=self.field.dtype).reshape(1, -1)
        if row.shape[1] != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient dimension")
        return bool(np.all(self.reduce(row) == self.field.zero_enc))


def kernel(m: Matrix) -> Subspace:
    """Right null space {x : m x = 0} as a canonical subspace."""
    field = m.field
    n = m.cols
    red, pivots = rref_data(field, m.data)
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return Subspace.zero(field, n)
    rows = field.zeros((len(free), n))
    for r, fc in enumerate(free):
        rows[r, fc] = field.one_enc
        for i, pc in enumerate(pivots):
            rows[r, pc] = field.s_neg(red[i, fc])
    return Subspace.from_rows(field, n, rows)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check_ambient(v)
    stacked = np.concatenate([u.basis, v.basis], axis=0)
    return Subspace.from_rows(u.field, u.ambient_dim, stacked)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coordinate system."""
    u._check_ambient(v)
    field = u.field
    if u.is_zero() or v.is_zero():
        return Subspace.zero(field, u.ambient_dim)
    a, b = u.dim, v.dim
    block = field.zeros((u.ambient_dim, a + b))
    block[:, :a] = u.basis.T
    block[:, a:] = field.a_neg(v.basis.T)
    alpha = kernel(Matrix(field, block))
    if alpha.is_zero():
        return Subspace.zero(field, u.ambient_dim)
    coeffs = alpha.basis[:, :a]
    vectors = field.matmul2(coeffs, u.basis)
    return Subspace.from_rows(field, u.ambient_dim, vectors)


def contains(u: Subspace, v: Subspace) -> bool:
    """Whether v is a subspace of u."""
    u._check_ambient(v)
    if v.is_zero():
        return True
    return bool(np.all(u.reduce(v.basis) == u.field.zero_enc))


def member(u: Subspace, x) -> bool:
    """Whether the coordinate vector x lies in u."""
    return u.contains_vector(x)


def express_in_rows(field: FieldDescriptor, basis_rows: np.ndarray,
                    targets: np.ndarray) -> np.ndarray:
    """Coefficients X with X @ basis_rows == targets.

    The basis rows must be linearly independent; raises ValueError when a
    target is outside their span.
    """
    r = basis_rows.shape[0]
    t = targets.shape[0]
    if r == 0:
        if np.any(targets != field.zero_enc):
            raise ValueError("nonzero target outside the span of an empty basis")
        return field.zeros((t, 0))
    aug = np.concatenate([basis_rows.T, targets.T], axis=1)
    red, pivots = rref_data(field, aug)
    if pivots[: min(len(pivots), r)] != list(range(min(len(pivots), r))) or len(pivots) > r:
        if any(p >= r for p in pivots):
            raise ValueError("target outside the span of the basis rows")
        raise ValueError("basis rows are linearly dependent")
    if len(pivots) < r:
        raise ValueError("basis rows are linearly dependent")
    return red[:r, r:].T.copy()


def random_subspace(field: FieldDescriptor, ambient_dim: int,
                    rng: np.random.Generator, max_dim: int | None = None) -> Subspace:
    """A deterministic pseudorandom subspace (row span of a random matrix)."""
    if max_dim is None:
        max_dim = ambient_dim
    k = int(rng.integers(0, max_dim + 1))
    rows = field.random_enc(rng, (k, ambient_dim))
    return Subspace.from_rows(field, ambient_dim, rows)
