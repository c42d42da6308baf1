"""Builders: tensor, trivial extension, quotient, opposite, presentations."""

import numpy as np
import pytest

from symcenter import (
    SkewPresentation,
    Subspace,
    from_matrix_generators,
    from_skew_presentation,
    opposite,
    quotient,
    tensor,
    trivial_extension,
    trivext_criteria,
)
from symcenter.corpus import _DIM12_M, _DIM12_N, _DIM12_WORDS, get, grid
from symcenter.errors import (
    AlgebraValidationError,
    BasisClaimFailed,
    FieldMismatch,
    NotAnIdeal,
)
from symcenter.linalg import subspace_sum
from symcenter.substructures import (
    j_of_center,
    property_verdicts,
    radical,
    reynolds,
    socle,
)


def test_tensor_dimension_and_field_guard(mat2, dual3):
    t = tensor(mat2, dual3)
    assert t.dim == 8
    with pytest.raises(FieldMismatch):
        tensor(mat2, get("dual_gf2"))


def test_tensor_heredity_failure_for_p1(mat2, dual3):
    t = get("mat2_dual_numbers")
    assert j_of_center(t).dim == 1
    v = property_verdicts(t)
    assert not v.p1.holds
    assert property_verdicts(mat2).p1.holds
    assert property_verdicts(dual3).p1.holds


def test_tensor_socle_formula():
    for ida, idb in (("matn", "dual_gf3"), ("dual_gf2", "dual_gf2"),
                     ("skew22_gf3", "dual_gf3")):
        a1, a2 = get(ida), get(idb)
        t = tensor(a1, a2)
        f = t.field
        s1, s2 = socle(a1), socle(a2)
        rows = f.a_mul(s1.basis[:, None, :, None],
                       s2.basis[None, :, None, :]).reshape(-1, t.dim)
        assert socle(t) == Subspace.from_rows(f, t.dim, rows)


def test_trivial_extension_of_commutative_base(dual3):
    t = trivial_extension(dual3)
    assert t.dim == 4 and t.is_commutative()
    assert t.sym_form is not None


def test_trivial_extension_soc20():
    t = get("soc20_trivext")
    assert t.dim == 20
    assert not property_verdicts(t).p2.holds


def test_trivext_center_formula():
    for entry in ("dual_gf3", "skew22_gf3", "counterexample_B"):
        a = get(entry)
        t = trivial_extension(a)
        f, n = a.field, a.dim
        z_rows = f.zeros((a.center().dim, 2 * n))
        z_rows[:, :n] = a.center().basis
        from symcenter.linalg import Matrix, kernel

        k = a.commutator_space()
        forms = kernel(Matrix(f, k.basis)).basis if k.dim else f.eye(n)
        dual_rows = f.zeros((forms.shape[0], 2 * n))
        dual_rows[:, n:] = forms
        expected = subspace_sum(
            Subspace.from_rows(f, 2 * n, z_rows),
            Subspace.from_rows(f, 2 * n, dual_rows),
        )
        assert t.center() == expected


def test_trivext_criteria_commutative_base(dual3):
    crit = trivext_criteria(dual3)
    assert crit.s_is_ideal and crit.i_is_ideal and crit.k_is_ideal
    assert crit.p1_prediction and crit.p2_prediction


def test_trivext_criteria_soc20():
    a = get("soc20_base")
    crit = trivext_criteria(a)
    k = a.commutator_space()
    assert crit.i == k
    assert not crit.k_is_ideal and not crit.i_is_ideal
    assert not crit.p2_prediction and not crit.p1_prediction


def test_trivext_predictions_match_direct():
    for entry in ("dual_gf3", "skew22_gf3", "matn", "soc20_base"):
        a = get(entry)
        crit = trivext_criteria(a)
        v = property_verdicts(trivial_extension(a))
        assert crit.p1_prediction == v.p1.holds
        assert crit.p2_prediction == v.p2.holds


def test_quotient_by_zero_is_identity(mat2):
    q = quotient(mat2, mat2.zero_space())
    assert q.same_table(mat2)


def test_quotient_commutator_formula():
    a = get("soc20_base")
    i = a.ideal_closure(a.commutator_space())
    q = quotient(a, i)
    comp = i.complement_columns()
    projected = i.reduce(a.commutator_space().basis)[:, comp]
    expected = Subspace.from_rows(a.field, q.dim, projected)
    assert q.commutator_space() == expected  # K(A/I) = (K(A)+I)/I
    j = radical(a).radical
    q2 = quotient(a, a.subspace_product(j, j))
    comp2 = a.subspace_product(j, j).complement_columns()
    proj2 = a.subspace_product(j, j).reduce(a.commutator_space().basis)[:, comp2]
    assert q2.commutator_space() == Subspace.from_rows(a.field, q2.dim, proj2)


def test_quotient_rejects_non_ideal(mat2):
    with pytest.raises(NotAnIdeal):
        quotient(mat2, Subspace.from_vectors(mat2.field, 4, [[0, 1, 0, 0]]))


def test_counterexample_quotient_realisation(f25):
    a = get("counterexample_A")
    b = get("counterexample_B")
    gens = np.stack([a.monomial(w).coords for w in ("x1^2", "x2^4", "x3")])
    closure = a.ideal_closure(Subspace.from_rows(f25, 50, gens))
    assert closure.dim == 42
    assert quotient(a, closure).same_table(b)


def test_opposite_involution_and_invariants():
    a = get("dim12_sharp")
    op = opposite(a)
    assert opposite(op).same_table(a)
    assert op.center().dim == a.center().dim
    assert op.commutator_space().dim == a.commutator_space().dim
    assert socle(op).dim == socle(a).dim
    d = get("dual_gf3")
    assert opposite(d).same_table(d)


def test_skew_presentation_examples(g3, f25):
    dual = from_skew_presentation(g3, SkewPresentation.commuting([2]))
    assert dual.dim == 2
    fe = get("firstexample_i")
    assert fe.dim == 27
    a = get("counterexample_A")
    assert a.dim == 50


def test_skew_presentation_guards(g3):
    with pytest.raises(AlgebraValidationError):
        from_skew_presentation(g3, SkewPresentation((2, 0)))
    with pytest.raises(AlgebraValidationError):
        from_skew_presentation(g3, SkewPresentation((2, 2), (((1, 0), 0),)))
    with pytest.raises(AlgebraValidationError):
        from_skew_presentation(g3, SkewPresentation((2, 2), (((0, 1), 1),)))


def test_matrix_generators_trivial(g3):
    a = from_matrix_generators(g3, 3, {})
    assert a.dim == 1


def test_matrix_generators_closures(g3, g2):
    a = get("dim12_sharp")
    assert a.dim == 12 and a.labels == _DIM12_WORDS
    b = get("soc20_base")
    assert b.dim == 10


def test_matrix_generators_basis_claims(g3):
    gens = {"M": grid(_DIM12_M), "N": grid(_DIM12_N)}
    with pytest.raises(BasisClaimFailed):
        from_matrix_generators(g3, 12, gens, monomial_basis=["1", "M"])
    bad_words = list(_DIM12_WORDS[:-1]) + ["M^7"]  # M^7 = 0 is dependent
    with pytest.raises(BasisClaimFailed):
        from_matrix_generators(g3, 12, gens, monomial_basis=bad_words)
    with pytest.raises(BasisClaimFailed):
        from_matrix_generators(g3, 12, gens,
                               monomial_basis=list(_DIM12_WORDS[:-1]) + ["Q"])


def test_tensor_radical_propagation(mat2, dual3):
    t = tensor(mat2, dual3)
    cert = radical(t)
    assert cert.strategy == "propagated" and cert.radical.dim == 4


def test_tensor_reynolds_formula():
    a1, a2 = get("matn"), get("dual_gf3")
    t = get("mat2_dual_numbers")
    f = t.field
    r1, r2 = reynolds(a1), reynolds(a2)
    rows = f.a_mul(r1.basis[:, None, :, None],
                   r2.basis[None, :, None, :]).reshape(-1, t.dim)
    assert reynolds(t) == Subspace.from_rows(f, t.dim, rows)
