"""Structure-constant algebras and their first-order invariants.

An Algebra is a finite-dimensional unital associative algebra given by a
table of structure constants: ``table[i, j]`` holds the coordinates of
e_i * e_j.  Associativity and the unit law are always verified at
construction; everything downstream (centers, commutator spaces, ideal
tests, annihilators, Loewy series) is exact linear algebra over the
algebra's field.

Algebra values are immutable after construction validation; the attached
cache only memoises pure results, so instances can be shared between
threads and independent checks farmed to workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AlgebraMismatch,
    AlgebraValidationError,
    ImproperIdeal,
    InternalCheckError,
    NotAnIdeal,
    NotNilpotent,
)
from .fields import FieldDescriptor
from .linalg import Matrix, Subspace, kernel


class Algebra:
    """A unital associative algebra presented by structure constants."""

    def __init__(self, field: FieldDescriptor, table, one, labels=None,
                 radical_hint=None, sym_form=None, name: str | None = None,
                 _skip_validation: bool = False):
        table = np.asarray(table, dtype=field.dtype)
        if table.ndim != 3 or table.shape[0] != table.shape[1] or table.shape[0] != table.shape[2]:
            raise AlgebraValidationError("structure table must have shape (n, n, n)")
        n = table.shape[0]
        if n == 0:
            raise AlgebraValidationError("algebras here are unital, so dim >= 1")
        one = np.asarray(one, dtype=field.dtype).reshape(n)
        if labels is not None:
            labels = [str(s) for s in labels]
            if len(labels) != n:
                raise AlgebraValidationError("label count must equal the dimension")
        self.field = field
        self.dim = n
        self.table = table
        self.one = one
        self.labels = labels
        self.radical_hint = radical_hint
        self.sym_form = None if sym_form is None else np.asarray(sym_form, dtype=field.dtype).reshape(n)
        self.name = name
        self._cache: dict = {}
        # set by constructions that know the radical of their output
        self._radical_seed = None
        if not _skip_validation:
            self._validate()

    # -- construction-time checks ---------------------------------------------

    def _left_ops(self) -> np.ndarray:
        """L[i] is the matrix of y -> e_i y (column-vector convention)."""
        return self.table.transpose(0, 2, 1)

    def _validate(self):
        f, c, n = self.field, self.table, self.dim
        ident = f.eye(n)
        left_unit = f.tensordot_lf(self.one[None, :], c.reshape(n, -1)).reshape(n, n)
        if not np.all(left_unit == ident):
            i = int(np.nonzero(np.any(left_unit != ident, axis=1))[0][0])
            raise AlgebraValidationError(f"unit law fails: one * e_{i} != e_{i}")
        ct = np.ascontiguousarray(c.transpose(1, 0, 2))
        right_unit = f.tensordot_lf(self.one[None, :], ct.reshape(n, -1)).reshape(n, n)
        if not np.all(right_unit == ident):
            i = int(np.nonzero(np.any(right_unit != ident, axis=1))[0][0])
            raise AlgebraValidationError(f"unit law fails: e_{i} * one != e_{i}")
        # associativity via operator identity: L(e_i e_j) == L(e_i) L(e_j),
        # processed in i-chunks to bound memory on large algebras
        lops = np.ascontiguousarray(self._left_ops())
        lflat = lops.reshape(n, n * n)
        lswap = np.ascontiguousarray(lops.transpose(1, 0, 2)).reshape(n, n * n)
        chunk = max(1, 4_000_000 // (n * n * n) + 1)
        for start in range(0, n, chunk):
            stop = min(n, start + chunk)
            w = stop - start
            lhs = f.tensordot_lf(
                c[start:stop].reshape(w * n, n), lflat
            ).reshape(w, n, n, n)                                    # (i, j, k, l)
            rhs = f.tensordot_lf(
                lops[start:stop].reshape(w * n, n), lswap
            ).reshape(w, n, n, n)                                    # (i, k, j, l)
            rhs = rhs.transpose(0, 2, 1, 3)
            if not np.all(lhs == rhs):
                di, j, _, l = (int(v) for v in np.argwhere(lhs != rhs)[0])
                i = start + di
                raise AlgebraValidationError(
                    f"associativity fails at basis triple ({i},{j},{l}): "
                    f"(e_{i} e_{j}) e_{l} != e_{i} (e_{j} e_{l})",
                    triple=(i, j, l),
                )

    # -- elements ---------------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        arr = self.field.arr(coords).reshape(self.dim)
        return AlgebraElement(self, arr)

    def basis_element(self, i: int) -> "AlgebraElement":
        coords = self.field.zeros(self.dim)
        coords[i] = self.field.one_enc
        return AlgebraElement(self, coords)

    def one_element(self) -> "AlgebraElement":
        return AlgebraElement(self, self.one.copy())

    def monomial(self, label: str) -> "AlgebraElement":
        if self.labels is None:
            raise KeyError("algebra has no basis labels")
        return self.basis_element(self.labels.index(label))

    def multiply_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        n, f = self.dim, self.field
        tmp = f.tensordot_lf(x[None, :], self.table.reshape(n, -1)).reshape(n, n)
        return f.tensordot_lf(y[None, :], tmp).reshape(n)

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> x y on the basis (columns are images)."""
        x = self._coords_of(x)
        n, f = self.dim, self.field
        tmp = f.tensordot_lf(x[None, :], self.table.reshape(n, -1)).reshape(n, n)
        return Matrix(f, tmp.T.copy())

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> y x on the basis."""
        x = self._coords_of(x)
        n, f = self.dim, self.field
        ct = np.ascontiguousarray(self.table.transpose(1, 0, 2))
        tmp = f.tensordot_lf(x[None, :], ct.reshape(n, -1)).reshape(n, n)
        return Matrix(f, tmp.T.copy())

    def _coords_of(self, x) -> np.ndarray:
        if isinstance(x, AlgebraElement):
            if x.algebra is not self:
                raise AlgebraMismatch("element belongs to a different algebra")
            return x.coords
        return self.field.arr(x).reshape(self.dim)

    # -- basic subspaces ----------------------------------------------------------

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def is_commutative(self) -> bool:
        if "commutative" not in self._cache:
            self._cache["commutative"] = bool(
                np.all(self.table == self.table.transpose(1, 0, 2))
            )
        return self._cache["commutative"]

    def center(self) -> Subspace:
        """Elements commuting with every basis vector."""
        if "center" in self._cache:
            return self._cache["center"]
        f, c, n = self.field, self.table, self.dim
        diff = f.a_sub(np.ascontiguousarray(c.transpose(1, 0, 2)), c)  # [j,i,k] = (e_j e_i - e_i e_j)_k .. as functions of j
        system = np.ascontiguousarray(diff.transpose(1, 2, 0)).reshape(n * n, n)
        z = kernel(Matrix(f, system))
        self._cache["center"] = z
        return z

    def commutator_space(self) -> Subspace:
        """Span of all commutators [e_i, e_j]."""
        if "commutator" in self._cache:
            return self._cache["commutator"]
        f, c, n = self.field, self.table, self.dim
        comm = f.a_sub(c, np.ascontiguousarray(c.transpose(1, 0, 2)))
        k = Subspace.from_rows(f, n, comm.reshape(n * n, n))
        self._cache["commutator"] = k
        return k

    # -- subspace products and ideals ----------------------------------------------

    def subspace_product(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of u_s * v_t over all basis pairs."""
        self._check_subspace(u)
        self._check_subspace(v)
        f, c, n = self.field, self.table, self.dim
        if u.dim == 0 or v.dim == 0:
            return self.zero_space()
        t1 = f.tensordot_lf(u.basis, c.reshape(n, -1)).reshape(u.dim, n, n)
        t1 = np.ascontiguousarray(t1.transpose(1, 0, 2)).reshape(n, u.dim * n)
        prod = f.tensordot_lf(v.basis, t1).reshape(v.dim * u.dim, n)
        return Subspace.from_rows(f, n, prod)

    def _one_sided_products(self, u: Subspace, side: str) -> np.ndarray:
        """Rows spanning A*u (side='left') or u*A (side='right')."""
        f, c, n = self.field, self.table, self.dim
        if u.dim == 0:
            return f.zeros((0, n))
        if side == "left":
            mat = np.ascontiguousarray(c.transpose(1, 0, 2)).reshape(n, -1)
        else:
            mat = c.reshape(n, -1)
        return f.tensordot_lf(u.basis, mat).reshape(u.dim * n, n)

    def is_ideal(self, u: Subspace) -> bool:
        """Two-sided ideal test via basis products."""
        self._check_subspace(u)
        if u.dim == 0:
            return True
        left = self._one_sided_products(u, "left")
        if np.any(u.reduce(left) != self.field.zero_enc):
            return False
        right = self._one_sided_products(u, "right")
        return bool(np.all(u.reduce(right) == self.field.zero_enc))

    def ideal_closure(self, u: Subspace) -> Subspace:
        """Smallest two-sided ideal containing u (fixpoint of u + Au + uA)."""
        self._check_subspace(u)
        current = u
        for _ in range(self.dim + 1):
            rows = np.concatenate(
                [
                    current.basis,
                    self._one_sided_products(current, "left"),
                    self._one_sided_products(current, "right"),
                ],
                axis=0,
            )
            bigger = Subspace.from_rows(self.field, self.dim, rows)
            if bigger.dim == current.dim:
                return bigger
            current = bigger
        raise InternalCheckError("ideal closure failed to stabilise within dim steps")

    def left_annihilator(self, s: Subspace) -> Subspace:
        """{x : x v = 0 for all v in s}."""
        self._check_subspace(s)
        if s.dim == 0:
            return self.full_space()
        f, c, n = self.field, self.table, self.dim
        ct = np.ascontiguousarray(c.transpose(1, 0, 2))
        rows = f.tensordot_lf(s.basis, ct.reshape(n, -1)).reshape(s.dim, n, n)
        system = np.ascontiguousarray(rows.transpose(0, 2, 1)).reshape(s.dim * n, n)
        return kernel(Matrix(f, system))

    def right_annihilator(self, s: Subspace) -> Subspace:
        """{x : v x = 0 for all v in s}."""
        self._check_subspace(s)
        if s.dim == 0:
            return self.full_space()
        f, c, n = self.field, self.table, self.dim
        rows = f.tensordot_lf(s.basis, c.reshape(n, -1)).reshape(s.dim, n, n)
        system = np.ascontiguousarray(rows.transpose(0, 2, 1)).reshape(s.dim * n, n)
        return kernel(Matrix(f, system))

    def _check_subspace(self, u: Subspace):
        self.field.check_same(u.field)
        if u.ambient_dim != self.dim:
            raise AlgebraMismatch(
                f"subspace lives in dimension {u.ambient_dim}, algebra has {self.dim}"
            )

    # -- radical powers -------------------------------------------------------------

    def radical_powers(self, j: Subspace) -> list[Subspace]:
        """The chain [A, J, J^2, ...] down to the first zero power.

        Raises NotNilpotent when the chain fails to reach zero within dim
        steps (which it must for a nilpotent ideal).
        """
        self._check_subspace(j)
        chain = [self.full_space(), j]
        while not chain[-1].is_zero():
            nxt = self.subspace_product(chain[-1], j)
            if nxt.dim >= chain[-1].dim:
                raise NotNilpotent("subspace power chain does not descend to zero")
            chain.append(nxt)
            if len(chain) > self.dim + 2:
                raise NotNilpotent("subspace is not nilpotent within dim steps")
        return chain

    def loewy_series(self, j: Subspace) -> "LoewyProfile":
        """Layer dimensions of A = J^0 over J, J over J^2, ... (J nilpotent)."""
        chain = self.radical_powers(j)
        layers = tuple(
            chain[i].dim - chain[i + 1].dim for i in range(len(chain) - 1)
        )
        return LoewyProfile(layers=layers, ell=len(layers))

    # -- formatting ----------------------------------------------------------------

    def element_str(self, coords) -> str:
        coords = np.asarray(coords, dtype=self.field.dtype).reshape(self.dim)
        nz = [i for i in range(self.dim) if coords[i] != self.field.zero_enc]
        if not nz:
            return "0"
        if self.labels is None:
            return "(" + ", ".join(self.field.format_enc(v) for v in coords) + ")"
        parts = []
        for i in nz:
            c = coords[i]
            if c == self.field.one_enc:
                parts.append(self.labels[i])
            else:
                parts.append(f"{self.field.format_enc(c)}*{self.labels[i]}")
        return " + ".join(parts)

    def subspace_str(self, u: Subspace) -> str:
        if u.dim == 0:
            return "0"
        return "span{" + ", ".join(self.element_str(r) for r in u.basis) + "}"

    def same_table(self, other: "Algebra") -> bool:
        """Byte-identical presentation: same field, table and identity."""
        return (
            self.field == other.field
            and self.dim == other.dim
            and bool(np.all(self.table == other.table))
            and bool(np.all(self.one == other.one))
        )

    def __repr__(self):
        label = self.name or "Algebra"
        return f"{label}(dim {self.dim} over {self.field})"


@dataclass(frozen=True)
class LoewyProfile:
    """Loewy layer dimensions and the nilpotency index of the radical."""

    layers: tuple[int, ...]
    ell: int


class AlgebraElement:
    """An element of a structure-constant algebra, held as coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: np.ndarray):
        self.algebra = algebra
        self.coords = coords

    def _same(self, other) -> np.ndarray:
        if not isinstance(other, AlgebraElement):
            raise AlgebraMismatch("expected an algebra element")
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")
        return other.coords

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            y = self._same(other)
            return AlgebraElement(self.algebra, self.algebra.multiply_coords(self.coords, y))
        f = self.algebra.field
        c = f.scalar(other).value
        return AlgebraElement(self.algebra, f.a_mul(c, self.coords))

    def __rmul__(self, other):
        f = self.algebra.field
        c = f.scalar(other).value
        return AlgebraElement(self.algebra, f.a_mul(c, self.coords))

    def __add__(self, other):
        y = self._same(other)
        return AlgebraElement(self.algebra, self.algebra.field.a_add(self.coords, y))

    def __sub__(self, other):
        y = self._same(other)
        return AlgebraElement(self.algebra, self.algebra.field.a_sub(self.coords, y))

    def __neg__(self):
        return AlgebraElement(self.algebra, self.algebra.field.a_neg(self.coords))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        result = self.algebra.one_element()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return bool(np.all(self.coords == self.algebra.field.zero_enc))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and bool(np.all(self.coords == other.coords))

    def __repr__(self):
        return self.algebra.element_str(self.coords)

    def span(self) -> Subspace:
        return Subspace.from_rows(self.algebra.field, self.algebra.dim,
                                  self.coords.reshape(1, -1))


def quotient_data(algebra: Algebra, ideal: Subspace):
    """Complement-coordinate data of A / ideal.

    Returns (table, one, complement_columns, labels).  The ideal must be a
    proper two-sided ideal; coordinates of the quotient are the non-pivot
    columns of the ideal's RREF basis, which makes the construction
    canonical and deterministic.
    """
    algebra._check_subspace(ideal)
    if ideal.dim == algebra.dim:
        raise ImproperIdeal("cannot form the quotient by the whole algebra")
    if not algebra.is_ideal(ideal):
        raise NotAnIdeal("quotient requires a two-sided ideal")
    f, c, n = algebra.field, algebra.table, algebra.dim
    comp = ideal.complement_columns()
    d = len(comp)
    prods = c[np.ix_(comp, comp)].reshape(d * d, n)
    reduced = ideal.reduce(prods)[:, comp].reshape(d, d, d)
    one_red = ideal.reduce(algebra.one.reshape(1, -1))[0, comp]
    labels = None
    if algebra.labels is not None:
        labels = [algebra.labels[i] for i in comp]
    return reduced, one_red, comp, labels
