"""Builders that produce new algebras from old ones.

Each construction propagates whatever radical knowledge it can justify:
tensor products combine component radicals, trivial extensions adjoin the
square-zero dual copy, quotients push the radical forward when the ideal
sits inside it.  Propagated radicals are re-verified when first used.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, quotient_data
from .errors import (
    AlgebraValidationError,
    BasisClaimFailed,
    RadicalUnavailable,
)
from .fields import FieldDescriptor
from .linalg import Subspace, contains, express_in_rows, subspace_sum
from .substructures import (
    RadicalHint,
    j_of_center,
    property_verdicts,
    radical,
    soc_of_center,
)


def _try_radical(algebra: Algebra):
    try:
        return radical(algebra)
    except RadicalUnavailable:
        return None


# -- tensor product ------------------------------------------------------------


def tensor(a1: Algebra, a2: Algebra) -> Algebra:
    """A1 (x) A2 on the basis e_i (x) f_j, ordered row-major in (i, j)."""
    f = a1.field
    f.check_same(a2.field)
    n1, n2 = a1.dim, a2.dim
    n = n1 * n2
    big = f.a_mul(
        a1.table[:, None, :, None, :, None],
        a2.table[None, :, None, :, None, :],
    )
    table = big.reshape(n, n, n)
    one = f.a_mul(a1.one[:, None], a2.one[None, :]).reshape(n)
    labels = None
    if a1.labels is not None and a2.labels is not None:
        labels = [f"{l1}⊗{l2}" for l1 in a1.labels for l2 in a2.labels]
    sym = None
    if a1.sym_form is not None and a2.sym_form is not None:
        sym = f.a_mul(a1.sym_form[:, None], a2.sym_form[None, :]).reshape(n)
    name = f"({a1.name or 'A1'})⊗({a2.name or 'A2'})"
    result = Algebra(f, table, one, labels=labels, sym_form=sym, name=name)
    c1, c2 = _try_radical(a1), _try_radical(a2)
    if c1 is not None and c2 is not None:
        eye1, eye2 = f.eye(n1), f.eye(n2)
        left = f.a_mul(c1.radical.basis[:, None, :, None], eye2[None, :, None, :])
        right = f.a_mul(eye1[:, None, :, None], c2.radical.basis[None, :, None, :])
        rows = np.concatenate(
            [left.reshape(-1, n), right.reshape(-1, n)], axis=0
        )
        seed = Subspace.from_rows(f, n, rows)
        result._radical_seed = (
            seed,
            "J(A1) (x) A2 + A1 (x) J(A2) from component radicals",
        )
    return result


# -- trivial extension -----------------------------------------------------------


def trivial_extension(a: Algebra) -> Algebra:
    """T(A) = A + A* with (a,f)(b,g) = (ab, ag + fb) and A* squaring to zero.

    The basis is all e_i followed by all dual vectors e_i*; the canonical
    symmetrizing form (a, f) -> f(1) is attached.
    """
    f, n, c = a.field, a.dim, a.table
    t = f.zeros((2 * n, 2 * n, 2 * n))
    t[:n, :n, :n] = c
    # e_i * e_j^* = sum_k c[k, i, j] e_k^*   (module action (a f)(x) = f(x a))
    t[:n, n:, n:] = np.ascontiguousarray(c.transpose(1, 2, 0))
    # e_j^* * e_i = sum_k c[i, k, j] e_k^*   (module action (f a)(x) = f(a x))
    t[n:, :n, n:] = np.ascontiguousarray(c.transpose(2, 0, 1))
    one = np.concatenate([a.one, f.zeros(n)])
    lam = np.concatenate([f.zeros(n), a.one])
    labels = None
    if a.labels is not None:
        labels = list(a.labels) + [s + "*" for s in a.labels]
    name = f"T({a.name or 'A'})"
    result = Algebra(f, t, one, labels=labels, sym_form=lam, name=name)
    cert = _try_radical(a)
    if cert is not None:
        rows = f.zeros((cert.radical.dim + n, 2 * n))
        rows[: cert.radical.dim, :n] = cert.radical.basis
        rows[cert.radical.dim :, n:] = f.eye(n)
        result._radical_seed = (
            Subspace.from_rows(f, 2 * n, rows),
            "J(A) + A* (dual copy squares to zero)",
        )
    return result


@dataclass(frozen=True)
class TrivExtCriteria:
    """The two subspaces controlling the ideal properties of T(A).

    s = {b in soc(Z(A)) : A b inside K(A)} and i = K(A) + A*J(Z(A)); T(A)
    has property (P1) iff A does and K(A) is an ideal, and property (P2)
    iff both s and i are ideals of A.
    """

    s: Subspace
    i: Subspace
    s_is_ideal: bool
    i_is_ideal: bool
    k_is_ideal: bool
    p1_prediction: bool
    p2_prediction: bool


def trivext_criteria(a: Algebra) -> TrivExtCriteria:
    f, n = a.field, a.dim
    k = a.commutator_space()
    jz = j_of_center(a)
    socz = soc_of_center(a)
    i_sub = subspace_sum(k, a.subspace_product(a.full_space(), jz))
    if socz.dim == 0:
        s_sub = a.zero_space()
    else:
        ct = np.ascontiguousarray(a.table.transpose(1, 0, 2))
        prods = f.tensordot_lf(socz.basis, ct.reshape(n, -1)).reshape(socz.dim, n, n)
        resid = k.reduce(prods.reshape(socz.dim * n, n)).reshape(socz.dim, n, n)
        system = np.ascontiguousarray(resid.transpose(1, 2, 0)).reshape(n * n, socz.dim)
        from .linalg import Matrix, kernel

        alpha = kernel(Matrix(f, system))
        if alpha.dim == 0:
            s_sub = a.zero_space()
        else:
            s_sub = Subspace.from_rows(f, n, f.matmul2(alpha.basis, socz.basis))
    s_ok = a.is_ideal(s_sub)
    i_ok = a.is_ideal(i_sub)
    k_ok = a.is_ideal(k)
    p1a = property_verdicts(a).p1.holds
    return TrivExtCriteria(
        s=s_sub,
        i=i_sub,
        s_is_ideal=s_ok,
        i_is_ideal=i_ok,
        k_is_ideal=k_ok,
        p1_prediction=p1a and k_ok,
        p2_prediction=s_ok and i_ok,
    )


# -- quotients and opposites -------------------------------------------------------


def quotient(a: Algebra, ideal: Subspace) -> Algebra:
    """A/I on the complement coordinates of the ideal's RREF basis."""
    table, one, comp, labels = quotient_data(a, ideal)
    name = f"({a.name or 'A'})/I"
    result = Algebra(a.field, table, one, labels=labels, name=name)
    cert = None
    if a._radical_seed is not None or a.radical_hint is not None or "radical_cert" in a._cache:
        cert = _try_radical(a)
    if cert is not None and contains(cert.radical, ideal):
        projected = ideal.reduce(cert.radical.basis)[:, comp]
        seed = Subspace.from_rows(a.field, len(comp), projected)
        result._radical_seed = (
            seed,
            "J(A)/I: the ideal is contained in J(A), so the radical passes down",
        )
    return result


def opposite(a: Algebra) -> Algebra:
    """Same space, reversed multiplication (transposed table)."""
    table = np.ascontiguousarray(a.table.transpose(1, 0, 2))
    result = Algebra(
        a.field,
        table,
        a.one.copy(),
        labels=None if a.labels is None else list(a.labels),
        radical_hint=a.radical_hint,
        sym_form=None if a.sym_form is None else a.sym_form.copy(),
        name=f"op({a.name or 'A'})",
    )
    if a._radical_seed is not None:
        result._radical_seed = a._radical_seed
    elif "radical_cert" in a._cache:
        cert = a._cache["radical_cert"]
        result._radical_seed = (cert.radical, "the radical is opposite-invariant")
    return result


# -- skew truncated presentations -----------------------------------------------------


@dataclass(frozen=True)
class SkewPresentation:
    """Generators x_1..x_n with x_i^{b_i} = 0 and x_j x_i = q_ji x_i x_j (j > i).

    q maps 0-based pairs (j, i) with j > i to a nonzero scalar spec (int,
    Fraction or FieldScalar); missing pairs default to commuting.
    """

    bounds: tuple[int, ...]
    q: tuple = ()
    names: tuple[str, ...] | None = None

    @staticmethod
    def anticommuting(bounds, names=None) -> "SkewPresentation":
        n = len(bounds)
        q = tuple(((j, i), -1) for j in range(n) for i in range(j))
        return SkewPresentation(tuple(bounds), q, None if names is None else tuple(names))

    @staticmethod
    def commuting(bounds, names=None) -> "SkewPresentation":
        return SkewPresentation(tuple(bounds), (), None if names is None else tuple(names))

    def q_dict(self) -> dict:
        return dict(self.q)


def _monomial_label(exps, names) -> str:
    parts = []
    for e, nm in zip(exps, names):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) if parts else "1"


def from_skew_presentation(field: FieldDescriptor, pres: SkewPresentation,
                           name: str | None = None) -> Algebra:
    """Monomial-basis algebra of a truncated skew-commutative presentation.

    The basis is all exponent tuples below the bounds, enumerated with the
    first variable fastest; a local_codim1 radical hint is attached since
    every positive-degree monomial is nilpotent.
    """
    bounds = tuple(int(b) for b in pres.bounds)
    if any(b < 1 for b in bounds):
        raise AlgebraValidationError("skew presentation bounds must be >= 1")
    nvars = len(bounds)
    names = pres.names or tuple(f"x{i+1}" for i in range(nvars))
    qmap = {}
    for (j, i), val in pres.q_dict().items():
        if not (0 <= i < j < nvars):
            raise AlgebraValidationError(f"bad q index pair {(j, i)}")
        enc = field.scalar(val).value
        if enc == field.zero_enc:
            raise AlgebraValidationError("q coefficients must be nonzero")
        qmap[(j, i)] = enc
    dim = 1
    for b in bounds:
        dim *= b
    exps = []
    for idx in range(dim):
        t = idx
        e = []
        for b in bounds:
            e.append(t % b)
            t //= b
        exps.append(tuple(e))
    index_of = {e: i for i, e in enumerate(exps)}
    table = field.zeros((dim, dim, dim))
    for a_idx, ra in enumerate(exps):
        for b_idx, rb in enumerate(exps):
            total = tuple(x + y for x, y in zip(ra, rb))
            if any(t >= b for t, b in zip(total, bounds)):
                continue
            factor = field.one_enc
            for j in range(nvars):
                if ra[j] == 0:
                    continue
                for i in range(j):
                    if rb[i] == 0:
                        continue
                    qji = qmap.get((j, i), field.one_enc)
                    if qji != field.one_enc:
                        factor = field.s_mul(
                            factor, field.s_pow(qji, ra[j] * rb[i])
                        )
            table[a_idx, b_idx, index_of[total]] = factor
    one = field.zeros(dim)
    one[0] = field.one_enc
    labels = [_monomial_label(e, names) for e in exps]
    return Algebra(
        field,
        table,
        one,
        labels=labels,
        radical_hint=RadicalHint("local_codim1"),
        name=name,
    )


# -- matrix-generated subalgebras ---------------------------------------------------


def _parse_word(word: str, names: list[str]) -> list[tuple[int, int]]:
    word = word.strip()
    if word == "1":
        return []
    out = []
    for factor in word.split("*"):
        factor = factor.strip()
        if "^" in factor:
            base, _, exp = factor.partition("^")
            base = base.strip()
            try:
                power = int(exp)
            except ValueError:
                raise BasisClaimFailed(f"bad exponent in word {word!r}") from None
        else:
            base, power = factor, 1
        if base not in names or power < 1:
            raise BasisClaimFailed(f"unknown factor {factor!r} in word {word!r}")
        out.append((names.index(base), power))
    return out


def from_matrix_generators(field: FieldDescriptor, size: int, generators,
                           monomial_basis=None, radical_hint=None,
                           name: str | None = None) -> Algebra:
    """Unitary subalgebra of Mat_size(F) generated by named matrices.

    The spanning closure starts from the identity and the generators and
    appends products with generators until the span is stable (at most
    size^2 rounds).  When a monomial_basis word list is supplied, the words
    are evaluated, checked to be an independent spanning set, and used as
    the labelled basis; structure constants are then solved exactly.
    """
    gen_names = list(generators.keys())
    mats = [field.arr(generators[g]).reshape(size, size) for g in gen_names]
    amb = size * size
    ident = field.eye(size)
    span = Subspace.from_rows(field, amb, ident.reshape(1, amb))
    frontier = [ident]
    for g in mats:
        flat = g.reshape(1, amb)
        if np.any(span.reduce(flat) != field.zero_enc):
            span = Subspace.from_rows(
                field, amb, np.concatenate([span.basis, flat], axis=0)
            )
            frontier.append(g)
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > amb + 1:
            raise AlgebraValidationError("matrix closure failed to stabilise")
        new_frontier = []
        for r in frontier:
            for g in mats:
                prod = field.matmul2(r, g)
                flat = prod.reshape(1, amb)
                if np.any(span.reduce(flat) != field.zero_enc):
                    span = Subspace.from_rows(
                        field, amb, np.concatenate([span.basis, flat], axis=0)
                    )
                    new_frontier.append(prod)
        frontier = new_frontier
    d = span.dim
    if monomial_basis is not None:
        words = list(monomial_basis)
        if len(words) != d:
            raise BasisClaimFailed(
                f"claimed basis has {len(words)} words but the closure has dimension {d}"
            )
        basis_mats = []
        for w in words:
            m = ident
            for gi, power in _parse_word(w, gen_names):
                for _ in range(power):
                    m = field.matmul2(m, mats[gi])
            basis_mats.append(m)
        flats = np.stack([m.reshape(amb) for m in basis_mats], axis=0)
        probe = Subspace.from_rows(field, amb, flats)
        if probe.dim != d:
            raise BasisClaimFailed(
                f"claimed basis spans dimension {probe.dim}, closure has {d}"
            )
        labels = words
    else:
        flats = span.basis.copy()
        labels = None
    stack = np.stack([flats[i].reshape(size, size) for i in range(d)], axis=0)
    swapped = np.ascontiguousarray(stack.transpose(1, 0, 2)).reshape(size, d * size)
    prods = field.tensordot_lf(stack, swapped).reshape(d, size, d, size)
    prods = np.ascontiguousarray(prods.transpose(0, 2, 1, 3)).reshape(d * d, amb)
    try:
        coeffs = express_in_rows(field, flats, prods)
        one_coords = express_in_rows(field, flats, ident.reshape(1, amb))[0]
    except ValueError as exc:
        raise BasisClaimFailed(f"basis solve failed: {exc}") from None
    table = coeffs.reshape(d, d, d)
    return Algebra(
        field,
        table,
        one_coords,
        labels=labels,
        radical_hint=radical_hint,
        name=name,
    )
