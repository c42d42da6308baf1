"""Symmetrizing forms, orthogonal complements and symmetric quotients.

A symmetrizing form is a linear form lambda whose associated bilinear form
beta(a, b) = lambda(ab) is symmetric and nondegenerate.  Orthogonal
complements under beta swap ideals with their annihilators; the quotients
A / (Az)^perp for central z are exactly the quotients of A that remain
symmetric, and come with an injective A-bimodule section x+I -> xz.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, quotient_data
from .errors import (
    CentralityViolated,
    Degenerate,
    InternalCheckError,
    NotSymmetricForm,
)
from .linalg import Matrix, Subspace, contains, kernel, rref_data, subspace_intersect, subspace_sum
from .substructures import radical


class SymmetricStructure:
    """A verified symmetrizing form with its Gram matrix."""

    def __init__(self, algebra: Algebra, lam: np.ndarray, gram: np.ndarray):
        self.algebra = algebra
        self.lam = lam
        self.gram = gram

    def apply(self, coords) -> object:
        """lambda evaluated on an element (encoded scalar)."""
        f = self.algebra.field
        row = np.asarray(coords, dtype=f.dtype).reshape(1, -1)
        return f.matmul2(row, self.lam.reshape(-1, 1))[0, 0]

    def pair(self, a, b):
        """beta(a, b) = lambda(ab) through the Gram matrix."""
        f = self.algebra.field
        ra = np.asarray(a, dtype=f.dtype).reshape(1, -1)
        rb = np.asarray(b, dtype=f.dtype).reshape(-1, 1)
        return f.matmul2(f.matmul2(ra, self.gram), rb)[0, 0]

    def __repr__(self):
        return f"SymmetricStructure(on dim {self.algebra.dim})"


def verify_symmetric(algebra: Algebra, lam) -> SymmetricStructure:
    """Check that lam symmetrizes the algebra; raise otherwise."""
    f, n = algebra.field, algebra.dim
    lam = f.arr(lam).reshape(n)
    gram = f.tensordot_lf(algebra.table, lam.reshape(n, 1)).reshape(n, n)
    if not np.all(gram == gram.T):
        i, j = (int(v) for v in np.argwhere(gram != gram.T)[0])
        raise NotSymmetricForm(
            f"lambda(e_{i} e_{j}) != lambda(e_{j} e_{i}); "
            "the form does not vanish on the commutator space"
        )
    _, pivots = rref_data(f, gram)
    if len(pivots) != n:
        raise Degenerate(
            f"Gram matrix has rank {len(pivots)} < {n}; "
            "the kernel of lambda contains a nonzero one-sided ideal"
        )
    return SymmetricStructure(algebra, lam, gram)


def symmetric_structure(algebra: Algebra) -> SymmetricStructure | None:
    """The algebra's attached form, verified once and cached; None if absent."""
    if "sym_structure" in algebra._cache:
        return algebra._cache["sym_structure"]
    result = None
    if algebra.sym_form is not None:
        result = verify_symmetric(algebra, algebra.sym_form)
    algebra._cache["sym_structure"] = result
    return result


def perp(structure: SymmetricStructure, x: Subspace) -> Subspace:
    """Orthogonal complement {a : beta(a, v) = 0 for v in x} under beta."""
    algebra = structure.algebra
    algebra._check_subspace(x)
    f = algebra.field
    if x.dim == 0:
        return algebra.full_space()
    system = f.matmul2(x.basis, structure.gram.T)
    return kernel(Matrix(f, system))


@dataclass
class QuotientWitness:
    """The symmetric quotient A/(Az)^perp with its transfer maps.

    comp_cols are the non-pivot columns of the ideal's RREF basis; the
    quotient is coordinatised on them, making everything canonical.
    """

    structure: SymmetricStructure
    z: np.ndarray
    az: Subspace
    ideal: Subspace
    quotient: Algebra
    quotient_structure: SymmetricStructure
    comp_cols: list[int]

    @property
    def algebra(self) -> Algebra:
        return self.structure.algebra

    def project_rows(self, rows: np.ndarray) -> np.ndarray:
        """nu on coordinate rows: reduce mod the ideal, keep complement columns."""
        rows = np.asarray(rows, dtype=self.algebra.field.dtype).reshape(-1, self.algebra.dim)
        return self.ideal.reduce(rows)[:, self.comp_cols]

    def lift_rows(self, rows: np.ndarray) -> np.ndarray:
        """The canonical section of nu (zero at the ideal's pivot columns)."""
        f = self.algebra.field
        rows = np.asarray(rows, dtype=f.dtype).reshape(-1, len(self.comp_cols))
        out = f.zeros((rows.shape[0], self.algebra.dim))
        out[:, self.comp_cols] = rows
        return out

    def project_subspace(self, u: Subspace) -> Subspace:
        return Subspace.from_rows(self.quotient.field, self.quotient.dim,
                                  self.project_rows(u.basis))

    def preimage_subspace(self, u: Subspace) -> Subspace:
        """nu^{-1}(u) = ideal + lifted u."""
        lifted = Subspace.from_rows(self.algebra.field, self.algebra.dim,
                                    self.lift_rows(u.basis))
        return subspace_sum(self.ideal, lifted)

    def nu_star_rows(self, rows: np.ndarray) -> np.ndarray:
        """nu*(xbar) = (any lift of xbar) * z; well defined since I*z = 0."""
        f = self.algebra.field
        lifted = self.lift_rows(rows)
        rz = self.algebra.right_mult_matrix(self.z).data
        return f.matmul2(lifted, rz.T)

    def nu_star(self, xbar) -> np.ndarray:
        coords = self.quotient._coords_of(xbar)
        return self.nu_star_rows(coords.reshape(1, -1))[0]

    def nu_star_subspace(self, u: Subspace) -> Subspace:
        if u.dim == 0:
            return self.algebra.zero_space()
        return Subspace.from_rows(self.algebra.field, self.algebra.dim,
                                  self.nu_star_rows(u.basis))

    def adjoint_identity_holds(self) -> bool:
        """beta(nu*(xbar), y) == beta_bar(xbar, nu(y)) on all basis pairs."""
        f = self.algebra.field
        d = self.quotient.dim
        nu_rows = self.nu_star_rows(f.eye(d))
        lhs = f.matmul2(nu_rows, self.structure.gram)
        proj = self.project_rows(f.eye(self.algebra.dim))
        rhs = f.matmul2(self.quotient_structure.gram, proj.T)
        return bool(np.all(lhs == rhs))

    def nu_star_injective(self) -> bool:
        f = self.algebra.field
        d = self.quotient.dim
        rows = self.nu_star_rows(f.eye(d))
        _, pivots = rref_data(f, rows)
        return len(pivots) == d


def symmetric_quotient(structure: SymmetricStructure, z) -> QuotientWitness:
    """Build A/(Az)^perp with its verified symmetrizing form lam(a z)."""
    algebra = structure.algebra
    f, n = algebra.field, algebra.dim
    z = algebra._coords_of(z)
    if not algebra.center().contains_vector(z):
        raise CentralityViolated("symmetric quotients require a central element")
    rz = algebra.right_mult_matrix(z).data
    az_rows = rz.T.copy()
    az = Subspace.from_rows(f, n, az_rows)
    ideal = perp(structure, az)
    table, one, comp, labels = quotient_data(algebra, ideal)
    quotient = Algebra(
        f, table, one, labels=labels,
        name=(algebra.name or "A") + "/(Az)^perp",
    )
    # the radical passes to the quotient whenever the ideal sits inside it
    try:
        cert = radical(algebra)
    except Exception:
        cert = None
    if cert is not None and contains(cert.radical, ideal):
        projected = ideal.reduce(cert.radical.basis)[:, comp]
        jq = Subspace.from_rows(f, len(comp), projected)
        quotient._radical_seed = (jq, "image of J(A) under the quotient map (ideal inside J(A))")
    lam_bar = f.matmul2(az_rows[comp], structure.lam.reshape(n, 1)).reshape(len(comp))
    try:
        qstruct = verify_symmetric(quotient, lam_bar)
    except (NotSymmetricForm, Degenerate) as exc:
        raise InternalCheckError(
            f"symmetric quotient lost its form, which cannot happen: {exc}"
        ) from exc
    quotient.sym_form = lam_bar
    quotient._cache["sym_structure"] = qstruct
    return QuotientWitness(
        structure=structure,
        z=z,
        az=az,
        ideal=ideal,
        quotient=quotient,
        quotient_structure=qstruct,
        comp_cols=comp,
    )


@dataclass(frozen=True)
class NuStarReport:
    """Outcome of the three transfer identities for a symmetric quotient."""

    center_image_equal: bool
    jz_image_equal: bool
    jz_image_contained: bool
    socz_image_contained: bool

    def all_hold(self) -> bool:
        return (
            self.center_image_equal
            and self.jz_image_equal
            and self.jz_image_contained
            and self.socz_image_contained
        )


def check_nustar_relations(witness: QuotientWitness) -> NuStarReport:
    """Exact subspace identities satisfied by the section nu*.

    (i)   nu*(Z(Abar)) = Z(A) ∩ Az
    (ii)  nu*(J(Z(Abar))) = Z(A) ∩ nu^{-1}(soc(Abar))^perp, contained in
          J(Z(A)) ∩ Az
    (iii) nu*(soc(Z(Abar))) contained in soc(Z(A))
    """
    from .substructures import j_of_center, soc_of_center, socle

    a = witness.algebra
    q = witness.quotient
    z_a = a.center()
    img_center = witness.nu_star_subspace(q.center())
    center_ok = img_center == subspace_intersect(z_a, witness.az)

    img_jz = witness.nu_star_subspace(j_of_center(q))
    soc_q = socle(q)
    pre = witness.preimage_subspace(soc_q)
    rhs = subspace_intersect(z_a, perp(witness.structure, pre))
    jz_equal = img_jz == rhs
    bound = subspace_intersect(j_of_center(a), witness.az)
    jz_contained = contains(bound, img_jz)

    img_socz = witness.nu_star_subspace(soc_of_center(q))
    socz_ok = contains(soc_of_center(a), img_socz)

    return NuStarReport(
        center_image_equal=center_ok,
        jz_image_equal=jz_equal,
        jz_image_contained=jz_contained,
        socz_image_contained=socz_ok,
    )
