"""Instance checkers for the structural identities, wired into named suites.

Every checker runs over a deterministic scope (corpus entries, fixed tensor
pairs, fixed trivial-extension bases, or the generated family), uses the
fixed seed 0x5EED for any sampling, and reports one claim per (identity,
algebra) pair.  These are instance checks of universally quantified
statements; they verify, they do not prove.
"""

from __future__ import annotations

import time
import zlib

import numpy as np

from .algebra import Algebra
from .constructions import quotient, tensor, trivial_extension, trivext_criteria
from .corpus import ENTRY_IDS, ClaimSink, SuiteResult, get
from .errors import UnknownLemma
from .family import commutative_local_bases, generate_symmetric_local_family
from .fields import FieldDescriptor
from .linalg import (
    Subspace,
    contains,
    random_subspace,
    subspace_intersect,
    subspace_sum,
)
from .substructures import (
    annihilator_in_center,
    is_basic,
    is_local,
    j_of_center,
    property_verdicts,
    radical,
    reynolds,
    soc_of_center,
    socle,
)
from .symmetric import (
    check_nustar_relations,
    perp,
    symmetric_quotient,
    symmetric_structure,
)

SEED = 0x5EED

LEMMA_IDS = [
    "commutatorsmallestideal",
    "condsocleprod",
    "raidealnecessary",
    "socinj",
    "soctensor",
    "idealtensor",
    "jacobsontensorproduct",
    "propertiesperp",
    "reynoldsbasic",
    "idealsymmetricalternative",
    "remark_ka",
    "quotientalgebrasymmetric",
    "propnustar",
    "nustar_relations",
    "prop_quotientalgebra",
    "aicommutative_instance",
    "subspacest",
    "soctaideal",
    "remark_after_soctaideal",
    "propertiessymmetriclocal",
    "chlz",
    "centerdim3greater",
    "kultheob",
    "dim9_trivext_lemma",
]

# same-field pairs for the tensor identities (>= 10 pairs)
TENSOR_PAIR_IDS = [
    ("dual_gf3", "dual_gf3"),
    ("matn", "dual_gf3"),
    ("matn", "matn"),
    ("skew22_gf3", "dual_gf3"),
    ("skew22_gf3", "matn"),
    ("trunc3_gf3", "trunc3_gf3"),
    ("dim12_sharp", "dual_gf3"),
    ("dual_gf2", "dual_gf2"),
    ("soc20_base", "dual_gf2"),
    ("counterexample_B", "dual_gf25"),
    ("firstexample_i", "dual_gf3"),
]

# bases for the trivial-extension identities; counterexample_A is excluded
# because T(A) would have dimension 100, past the desk-scale budget
TRIVEXT_BASE_IDS = [
    "dual_gf3",
    "trunc3_gf3",
    "skew22_gf3",
    "qplane22_gf5",
    "matn",
    "counterexample_B",
    "mat2_dual_numbers",
    "soc20_base",
    "dim12_sharp",
    "firstexample_i",
]

# local algebras of dimension <= 9 exercising the small-dimension statement
DIM9_LOCAL_IDS = [
    "dual_gf2",
    "dual_gf3",
    "dual_gf25",
    "trunc3_gf3",
    "skew22_gf3",
    "skew24_gf3",
    "skew222_gf3",
    "skew33_gf3",
    "qplane22_gf5",
    "counterexample_B",
]


def _rng(suite_id: str) -> np.random.Generator:
    return np.random.default_rng(SEED ^ zlib.crc32(suite_id.encode()))


_tensor_cache: dict[tuple, Algebra] = {}
_trivext_cache: dict[str, Algebra] = {}
_misc_cache: dict[str, object] = {}


def _tensor_pair(ida: str, idb: str) -> Algebra:
    key = (ida, idb)
    if key not in _tensor_cache:
        _tensor_cache[key] = tensor(get(ida), get(idb))
    return _tensor_cache[key]


def _trivext(entry: str) -> Algebra:
    if entry not in _trivext_cache:
        _trivext_cache[entry] = trivial_extension(get(entry))
    return _trivext_cache[entry]


def _radical_ok(a: Algebra) -> bool:
    try:
        radical(a)
        return True
    except Exception:
        return False


def _symmetric_entries() -> list[str]:
    out = []
    for entry in ENTRY_IDS:
        if symmetric_structure(get(entry)) is not None:
            out.append(entry)
    return out


def _local_entries() -> list[str]:
    out = []
    for entry in ENTRY_IDS:
        a = get(entry)
        if _radical_ok(a) and is_local(a):
            out.append(entry)
    return out


def _derived_symmetric_locals() -> list[tuple[str, Algebra]]:
    """Noncommutative symmetric local quotients used to de-trivialise scopes."""
    if "derived" not in _misc_cache:
        out = []
        a12 = get("dim12_sharp")
        w = symmetric_quotient(symmetric_structure(a12), a12.monomial("M^2"))
        out.append(("dim12_sharp/quot_M2", w.quotient))
        t20 = get("soc20_trivext")
        for idx, row in enumerate(j_of_center(t20).basis_vectors()):
            w = symmetric_quotient(symmetric_structure(t20), t20.element(row))
            if not w.quotient.is_commutative():
                out.append((f"soc20_trivext/quot_z{idx}", w.quotient))
                break
        _misc_cache["derived"] = out
    return _misc_cache["derived"]


def _trivext_family_sample() -> list[tuple[str, Algebra]]:
    """A few small commutative trivial extensions, shared across scopes."""
    if "tsample" not in _misc_cache:
        out = []
        for base in commutative_local_bases(4):
            t = trivial_extension(base.algebra)
            out.append((f"T({base.member_id})", t))
        _misc_cache["tsample"] = out
    return _misc_cache["tsample"]


def _kron_rows(f: FieldDescriptor, u1: np.ndarray, u2: np.ndarray,
               n1: int, n2: int) -> np.ndarray:
    rows = f.a_mul(u1[:, None, :, None], u2[None, :, None, :])
    return rows.reshape(-1, n1 * n2)


def _kron_span(f, u1: Subspace, u2: Subspace, n1: int, n2: int) -> Subspace:
    if u1.dim == 0 or u2.dim == 0:
        return Subspace.zero(f, n1 * n2)
    return Subspace.from_rows(f, n1 * n2, _kron_rows(f, u1.basis, u2.basis, n1, n2))


def _apply_scope(ids: list[str], scope) -> list[str]:
    if scope is None:
        return ids
    wanted = [scope] if isinstance(scope, str) else list(scope)
    return [i for i in ids if i in wanted]


# -- the checkers -----------------------------------------------------------------


def _check_commutatorsmallestideal(sink: ClaimSink, scope):
    for entry in _apply_scope(ENTRY_IDS, scope):
        a = get(entry)
        k = a.commutator_space()
        full = a.full_space()
        ak = a.subspace_product(full, k)
        ka = a.subspace_product(k, full)
        sink.check(f"AK_eq_KA/{entry}", "PAPER", ak == ka)
        closure = a.ideal_closure(k)
        if closure.dim < a.dim:
            qa = quotient(a, closure)
            sink.check(f"quotient_commutative/{entry}", "PAPER", qa.is_commutative())
        else:
            sink.check(f"quotient_commutative/{entry}", "PAPER", True,
                       witness="closure is all of A; zero quotient is commutative")
        # minimality against sampled ideals with commutative quotient
        rng = _rng(sink.suite_id + entry)
        candidates = [radical(a).radical, socle(a)]
        for _ in range(2):
            candidates.append(a.ideal_closure(random_subspace(a.field, a.dim, rng)))
        ok_min = True
        ok_quot = True
        for cand in candidates:
            if not a.is_ideal(cand) or cand.dim == a.dim:
                continue
            qa = quotient(a, cand)
            if qa.is_commutative():
                ok_min = ok_min and contains(cand, closure)
            kq = qa.commutator_space()
            proj = cand.reduce(k.basis)[:, cand.complement_columns()]
            lifted = Subspace.from_rows(a.field, qa.dim, proj)
            ok_quot = ok_quot and kq == lifted
        sink.check(f"smallest_among_sampled/{entry}", "PAPER", ok_min)
        sink.check(f"K_of_quotient_formula/{entry}", "PAPER", ok_quot)


def _check_condsocleprod(sink: ClaimSink, scope):
    for entry in _apply_scope(ENTRY_IDS, scope):
        a = get(entry)
        z = a.center()
        k = a.commutator_space()
        ok = True
        for row in z.basis_vectors():
            az_rows = a.right_mult_matrix(row).data.T
            az_in_z = bool(np.all(z.reduce(az_rows) == a.field.zero_enc))
            kz_zero = a.subspace_product(
                k, Subspace.from_rows(a.field, a.dim, row.reshape(1, -1))
            ).is_zero()
            ok = ok and (az_in_z == kz_zero)
        sink.check(f"az_central_iff_Kz_zero/{entry}", "PAPER", ok)
        # the verdict cross-check (ideal test vs annihilation) runs inside
        property_verdicts(a)
        sink.check(f"verdict_cross_check/{entry}", "PAPER", True)


def _check_raidealnecessary(sink: ClaimSink, scope):
    for entry in _apply_scope(ENTRY_IDS, scope):
        v = property_verdicts(get(entry))
        sink.check(f"p2_implies_p3/{entry}", "PAPER",
                   (not v.p2.holds) or v.p3.holds)


def _check_socinj(sink: ClaimSink, scope):
    for entry in _apply_scope(_local_entries(), scope):
        a = get(entry)
        if a.dim >= 2:
            sink.check(f"socZ_in_JZ/{entry}", "PAPER",
                       contains(j_of_center(a), soc_of_center(a)))
        v = property_verdicts(a)
        sink.check(f"p1_implies_p2/{entry}", "PAPER",
                   (not v.p1.holds) or v.p2.holds)


def _check_soctensor(sink: ClaimSink, scope):
    for ida, idb in TENSOR_PAIR_IDS:
        pair = f"{ida}(x){idb}"
        if scope is not None and pair not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        a1, a2 = get(ida), get(idb)
        t = _tensor_pair(ida, idb)
        f = t.field
        soc_formula = _kron_span(f, socle(a1), socle(a2), a1.dim, a2.dim)
        sink.check(f"soc_formula/{pair}", "PAPER", socle(t) == soc_formula)
        r_formula = _kron_span(f, reynolds(a1), reynolds(a2), a1.dim, a2.dim)
        sink.check(f"reynolds_formula/{pair}", "PAPER", reynolds(t) == r_formula)


def _check_idealtensor(sink: ClaimSink, scope):
    rng = _rng(sink.suite_id)
    for ida, idb in TENSOR_PAIR_IDS:
        pair = f"{ida}(x){idb}"
        if scope is not None and pair not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        a1, a2 = get(ida), get(idb)
        t = _tensor_pair(ida, idb)
        samples = [
            (radical(a1).radical, radical(a2).radical),
            (socle(a1), socle(a2)),
            (a1.center(), radical(a2).radical),
        ]
        for _ in range(3):
            samples.append(
                (random_subspace(a1.field, a1.dim, rng),
                 random_subspace(a2.field, a2.dim, rng))
            )
        ok = True
        for u1, u2 in samples:
            if u1.dim == 0 or u2.dim == 0:
                continue
            u12 = _kron_span(t.field, u1, u2, a1.dim, a2.dim)
            lhs = t.is_ideal(u12)
            rhs = a1.is_ideal(u1) and a2.is_ideal(u2)
            ok = ok and (lhs == rhs)
        sink.check(f"ideal_iff_both/{pair}", "PAPER", ok)


def _check_jacobsontensorproduct(sink: ClaimSink, scope):
    for ida, idb in TENSOR_PAIR_IDS:
        pair = f"{ida}(x){idb}"
        if scope is not None and pair not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        v1 = property_verdicts(get(ida))
        v2 = property_verdicts(get(idb))
        vt = property_verdicts(_tensor_pair(ida, idb))
        sink.check(f"p2_conjunction/{pair}", "PAPER",
                   vt.p2.holds == (v1.p2.holds and v2.p2.holds))
        sink.check(f"p3_conjunction/{pair}", "PAPER",
                   vt.p3.holds == (v1.p3.holds and v2.p3.holds))


def _check_propertiesperp(sink: ClaimSink, scope):
    for entry in _apply_scope(_symmetric_entries(), scope):
        a = get(entry)
        st = symmetric_structure(a)
        rng = _rng(sink.suite_id + entry)
        n = a.dim
        subspaces = [random_subspace(a.field, n, rng) for _ in range(50)]
        dims_ok = all(x.dim + perp(st, x).dim == n for x in subspaces)
        sink.check(f"dim_formula/{entry}", "PAPER", dims_ok)
        double_ok = all(perp(st, perp(st, x)) == x for x in subspaces)
        sink.check(f"double_perp/{entry}", "PAPER", double_ok)
        anti_ok = True
        for x in subspaces:
            if x.dim == 0:
                continue
            kcut = int(rng.integers(0, x.dim))
            y = Subspace.from_rows(a.field, n, x.basis[:kcut])
            anti_ok = anti_ok and contains(perp(st, y), perp(st, x))
        sink.check(f"antitone/{entry}", "PAPER", anti_ok)
        dm_ok = True
        for x, y in zip(subspaces[::2], subspaces[1::2]):
            dm_ok = dm_ok and perp(st, subspace_intersect(x, y)) == subspace_sum(
                perp(st, x), perp(st, y)
            )
            dm_ok = dm_ok and perp(st, subspace_sum(x, y)) == subspace_intersect(
                perp(st, x), perp(st, y)
            )
        sink.check(f"de_morgan/{entry}", "PAPER", dm_ok)
        ideals = [radical(a).radical, socle(a),
                  a.ideal_closure(a.commutator_space())]
        for _ in range(2):
            ideals.append(a.ideal_closure(random_subspace(a.field, n, rng)))
        ideal_ok = True
        for ideal in ideals:
            pi = perp(st, ideal)
            ideal_ok = ideal_ok and pi == a.left_annihilator(ideal)
            ideal_ok = ideal_ok and pi == a.right_annihilator(ideal)
            ideal_ok = ideal_ok and a.is_ideal(pi)
        ideal_ok = ideal_ok and perp(st, socle(a)) == radical(a).radical
        sink.check(f"ideal_perp_annihilator/{entry}", "PAPER", ideal_ok)
        sink.check(f"K_perp_eq_Z/{entry}", "PAPER",
                   perp(st, a.commutator_space()) == a.center())


def _check_reynoldsbasic(sink: ClaimSink, scope):
    for entry in _apply_scope(_symmetric_entries(), scope):
        a = get(entry)
        v = property_verdicts(a)
        basic = is_basic(a)
        sink.check(f"p3_iff_basic/{entry}", "PAPER", v.p3.holds == basic)
        if v.p3.holds:
            sink.check(f"reynolds_eq_socle/{entry}", "PAPER",
                       reynolds(a) == socle(a))


def _check_idealsymmetricalternative(sink: ClaimSink, scope):
    for entry in _apply_scope(_symmetric_entries(), scope):
        a = get(entry)
        v = property_verdicts(a)
        soc = socle(a)
        if soc.dim == a.dim:
            rhs1 = True  # zero quotient, commutator space vanishes
        else:
            q1 = quotient(a, soc)
            rhs1 = q1.is_ideal(q1.commutator_space())
        sink.check(f"p1_iff_K_ideal_mod_soc/{entry}", "PAPER",
                   v.p1.holds == rhs1)
        ajz = a.subspace_product(a.full_space(), j_of_center(a))
        if ajz.dim == 0:
            rhs2 = a.is_ideal(a.commutator_space())
        else:
            q2 = quotient(a, ajz)
            rhs2 = q2.is_ideal(q2.commutator_space())
        sink.check(f"p2_iff_K_ideal_mod_AJZ/{entry}", "PAPER",
                   v.p2.holds == rhs2)


def _check_remark_ka(sink: ClaimSink, scope):
    for entry in _apply_scope(_symmetric_entries(), scope):
        a = get(entry)
        sink.check(f"K_ideal_iff_commutative/{entry}", "PAPER",
                   a.is_ideal(a.commutator_space()) == a.is_commutative())


def _witness_samples():
    """Symmetric quotient witnesses: z over a J(Z) basis plus z = 1."""
    if "witnesses" in _misc_cache:
        return _misc_cache["witnesses"]
    out = []
    for entry in _symmetric_entries():
        a = get(entry)
        st = symmetric_structure(a)
        zs = [("one", a.one_element())]
        for idx, row in enumerate(j_of_center(a).basis_vectors()):
            zs.append((f"jz{idx}", a.element(row)))
        for tag, z in zs:
            out.append((f"{entry}/{tag}", symmetric_quotient(st, z)))
    _misc_cache["witnesses"] = out
    return out


def _check_quotientalgebrasymmetric(sink: ClaimSink, scope):
    for wid, w in _witness_samples():
        entry = wid.split("/")[0]
        if scope is not None and entry not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        a = w.algebra
        f = a.field
        # lambda_bar(nu(e_i)) == lambda(e_i z) for every basis vector
        proj = w.project_rows(f.eye(a.dim))
        lhs = f.matmul2(proj, w.quotient_structure.lam.reshape(-1, 1)).reshape(a.dim)
        rz = a.right_mult_matrix(w.z).data
        ez = rz.T
        rhs = f.matmul2(ez, w.structure.lam.reshape(-1, 1)).reshape(a.dim)
        sink.check(f"form_is_lambda_az/{wid}", "PAPER", bool(np.all(lhs == rhs)))


def _check_propnustar(sink: ClaimSink, scope):
    for wid, w in _witness_samples():
        entry = wid.split("/")[0]
        if scope is not None and entry not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        a, q = w.algebra, w.quotient
        f = a.field
        n, d = a.dim, q.dim
        sink.check(f"adjoint_identity/{wid}", "PAPER", w.adjoint_identity_holds())
        nu_rows = w.nu_star_rows(f.eye(d))
        # nu*(xbar) . e_j == nu*(xbar . nu(e_j)) and symmetrically
        t1 = f.tensordot_lf(nu_rows, a.table.reshape(n, -1)).reshape(d, n, n)
        proj = w.project_rows(f.eye(n))
        cqt = np.ascontiguousarray(q.table.transpose(1, 0, 2)).reshape(d, -1)
        t2 = f.tensordot_lf(proj, cqt).reshape(n, d, d).transpose(1, 0, 2)
        t2 = w.nu_star_rows(t2.reshape(d * n, d)).reshape(d, n, n)
        right_ok = bool(np.all(t1 == t2))
        ct = np.ascontiguousarray(a.table.transpose(1, 0, 2))
        t1l = f.tensordot_lf(nu_rows, ct.reshape(n, -1)).reshape(d, n, n)
        t2l = f.tensordot_lf(proj, q.table.reshape(d, -1)).reshape(n, d, d)
        t2l = t2l.transpose(1, 0, 2)
        t2l = w.nu_star_rows(t2l.reshape(d * n, d)).reshape(d, n, n)
        left_ok = bool(np.all(t1l == t2l))
        sink.check(f"bimodule_identity/{wid}", "PAPER", right_ok and left_ok)
        sink.check(f"injective/{wid}", "PAPER", w.nu_star_injective())


def _check_nustar_relations(sink: ClaimSink, scope):
    for wid, w in _witness_samples():
        entry = wid.split("/")[0]
        if scope is not None and entry not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        rep = check_nustar_relations(w)
        sink.check(f"center_image/{wid}", "PAPER", rep.center_image_equal)
        sink.check(f"jz_image/{wid}", "PAPER",
                   rep.jz_image_equal and rep.jz_image_contained)
        sink.check(f"socz_image/{wid}", "PAPER", rep.socz_image_contained)


def _heredity_scope():
    scope = [(entry, get(entry)) for entry in _symmetric_entries()]
    scope += _derived_symmetric_locals()
    scope += _trivext_family_sample()
    return scope


def _z_samples(a: Algebra, rng) -> list:
    jz = j_of_center(a)
    rows = list(jz.basis_vectors())
    for _ in range(10):
        if jz.dim == 0:
            break
        coeffs = a.field.random_enc(rng, (1, jz.dim))
        vec = a.field.matmul2(coeffs, jz.basis)[0]
        if np.any(vec != a.field.zero_enc):
            rows.append(vec)
    return rows


def _check_prop_quotientalgebra(sink: ClaimSink, scope):
    for name, a in _heredity_scope():
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        st = symmetric_structure(a)
        v = property_verdicts(a)
        rng = _rng(sink.suite_id + name)
        zs = _z_samples(a, rng)
        if v.p1.holds:
            ok = True
            for vec in zs:
                w = symmetric_quotient(st, a.element(vec))
                ok = ok and property_verdicts(w.quotient).p1.holds
            sink.check(f"p1_heredity/{name}", "PAPER", ok)
        if v.p2.holds:
            ok = True
            for vec in zs:
                w = symmetric_quotient(st, a.element(vec))
                qq = w.quotient
                image = w.project_subspace(j_of_center(a))
                ann = annihilator_in_center(qq, image)
                ok = ok and qq.is_ideal(ann)
                ok = ok and property_verdicts(qq).p2.holds
            sink.check(f"p2_heredity/{name}", "PAPER", ok)


def _check_aicommutative_instance(sink: ClaimSink, scope):
    for name, a in _heredity_scope():
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        if not is_local(a) or not property_verdicts(a).p1.holds:
            continue
        st = symmetric_structure(a)
        rng = _rng(sink.suite_id + name)
        ok = True
        for vec in _z_samples(a, rng):
            w = symmetric_quotient(st, a.element(vec))
            ok = ok and w.quotient.is_commutative()
        sink.check(
            f"quotients_commutative/{name}", "PAPER", ok,
            witness="z-parameterised symmetric quotients only; that these "
                    "exhaust the symmetric quotients is the quoted "
                    "classification, not re-proven here",
        )


def _dual_half_span(f, n: int, condition_rows: np.ndarray) -> Subspace:
    """{f in A* : f vanishes on the row space}, embedded in the dual half."""
    from .linalg import Matrix, kernel

    if condition_rows.shape[0] == 0:
        forms = f.eye(n)
    else:
        forms = kernel(Matrix(f, condition_rows)).basis
    rows = f.zeros((forms.shape[0], 2 * n))
    rows[:, n:] = forms
    return Subspace.from_rows(f, 2 * n, rows)


def _first_half_span(f, n: int, sub: Subspace) -> Subspace:
    rows = f.zeros((sub.dim, 2 * n))
    rows[:, :n] = sub.basis
    return Subspace.from_rows(f, 2 * n, rows)


def _check_subspacest(sink: ClaimSink, scope):
    for entry in _apply_scope(TRIVEXT_BASE_IDS, scope):
        a = get(entry)
        t = _trivext(entry)
        f, n = a.field, a.dim
        k = a.commutator_space()
        j = radical(a).radical
        zt = _first_half_span(f, n, a.center())
        sink.check(
            f"i_center/{entry}", "PAPER",
            t.center() == subspace_sum(zt, _dual_half_span(f, n, k.basis)),
        )
        comm = f.a_sub(a.table, np.ascontiguousarray(a.table.transpose(1, 0, 2)))
        bracket_rows = np.ascontiguousarray(comm.transpose(1, 2, 0)).reshape(n * n, n)
        bracket = f.zeros((n * n, 2 * n))
        bracket[:, n:] = bracket_rows
        kt_expected = subspace_sum(
            _first_half_span(f, n, k),
            Subspace.from_rows(f, 2 * n, bracket),
        )
        sink.check(f"ii_commutator/{entry}", "PAPER",
                   t.commutator_space() == kt_expected)
        jt_expected = subspace_sum(
            _first_half_span(f, n, j),
            _dual_half_span(f, n, f.zeros((0, n))),
        )
        sink.check(f"iii_radical/{entry}", "PAPER",
                   radical(t).radical == jt_expected)
        jzt_expected = subspace_sum(
            _first_half_span(f, n, j_of_center(a)),
            _dual_half_span(f, n, k.basis),
        )
        sink.check(f"iv_j_of_center/{entry}", "PAPER",
                   j_of_center(t) == jzt_expected)
        sink.check(f"v_socle/{entry}", "PAPER",
                   socle(t) == _dual_half_span(f, n, j.basis))
        crit = trivext_criteria(a)
        socz_expected = subspace_sum(
            _first_half_span(f, n, crit.s),
            _dual_half_span(f, n, crit.i.basis),
        )
        sink.check(f"vi_soc_of_center/{entry}", "PAPER",
                   soc_of_center(t) == socz_expected)
        kj = subspace_sum(k, j)
        sink.check(f"vii_reynolds/{entry}", "PAPER",
                   reynolds(t) == _dual_half_span(f, n, kj.basis))


def _check_soctaideal(sink: ClaimSink, scope):
    for entry in _apply_scope(TRIVEXT_BASE_IDS, scope):
        a = get(entry)
        t = _trivext(entry)
        crit = trivext_criteria(a)
        vt = property_verdicts(t)
        sink.check(f"p1_prediction/{entry}", "PAPER",
                   crit.p1_prediction == vt.p1.holds)
        sink.check(f"p2_prediction/{entry}", "PAPER",
                   crit.p2_prediction == vt.p2.holds)


def _check_remark_after_soctaideal(sink: ClaimSink, scope):
    for entry in _apply_scope(TRIVEXT_BASE_IDS, scope):
        a = get(entry)
        if symmetric_structure(a) is None:
            continue
        vt = property_verdicts(_trivext(entry))
        sink.check(f"p1T_iff_commutative/{entry}", "PAPER",
                   vt.p1.holds == a.is_commutative())


def _symmetric_local_scope():
    out = [(entry, get(entry)) for entry in _symmetric_entries()
           if is_local(get(entry))]
    out += _derived_symmetric_locals()
    return out


def _check_propertiessymmetriclocal(sink: ClaimSink, scope):
    for name, a in _symmetric_local_scope():
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        soc = socle(a)
        sink.check(f"soc_dim_1/{name}", "PAPER", soc.dim == 1)
        sink.check(f"soc_in_socZ/{name}", "PAPER",
                   contains(soc_of_center(a), soc))
        sink.check(f"K_meets_soc_trivially/{name}", "PAPER",
                   subspace_intersect(a.commutator_space(), soc).is_zero())
        chain = a.radical_powers(radical(a).radical)
        sink.check(f"last_power_is_soc/{name}", "PAPER",
                   a.dim == 1 or chain[len(chain) - 2] == soc)


def _check_chlz(sink: ClaimSink, scope):
    for entry in _apply_scope(_local_entries(), scope):
        a = get(entry)
        chain = a.radical_powers(radical(a).radical)
        z = a.center()
        sym = symmetric_structure(a) is not None
        ok = True
        ok_sym = True
        for i in range(1, len(chain) - 1):
            layer = chain[i].dim - chain[i + 1].dim
            if layer == 1:
                ok = ok and contains(z, chain[i])
                if sym:
                    ok_sym = ok_sym and contains(z, chain[i - 1])
        sink.check(f"one_dim_layer_central/{entry}", "PAPER", ok)
        if sym:
            sink.check(f"symmetric_previous_power_central/{entry}", "PAPER", ok_sym)


def _check_centerdim3greater(sink: ClaimSink, scope):
    algebras = [(entry, get(entry)) for entry in _symmetric_entries()]
    algebras += _derived_symmetric_locals()
    for name, a in algebras:
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        if a.is_commutative():
            continue
        sink.check(f"dim_gap/{name}", "PAPER", a.dim >= a.center().dim + 3)


def _kultheob_scope():
    out = _symmetric_local_scope()
    for m in generate_symmetric_local_family(16):
        out.append((f"family/{m.member_id}", m.algebra))
    return out


def _check_kultheob(sink: ClaimSink, scope):
    small_center_comm = True
    center5_ok = True
    checked = 0
    nontrivial = 0
    for name, a in _kultheob_scope():
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        checked += 1
        zdim = a.center().dim
        if zdim <= 4:
            small_center_comm = small_center_comm and a.is_commutative()
        elif zdim == 5:
            if a.is_commutative():
                center5_ok = center5_ok and a.dim == 5
            else:
                nontrivial += 1
                lw = a.loewy_series(radical(a).radical)
                center5_ok = center5_ok and a.dim == 8 and lw.layers in (
                    (1, 3, 3, 1), (1, 2, 2, 2, 1)
                )
    sink.check("center_le_4_commutative", "PAPER", small_center_comm,
               witness=f"{checked} algebras checked")
    sink.check("center_5_dims_and_loewy", "PAPER", center5_ok,
               witness=f"{nontrivial} noncommutative instances")


def _dim9_scope():
    out = [(i, get(i)) for i in DIM9_LOCAL_IDS]
    for base in commutative_local_bases(8):
        if base.algebra.dim <= 9:
            out.append((f"base/{base.member_id}", base.algebra))
    return [(n, a) for n, a in out if a.dim <= 9 and _radical_ok(a) and is_local(a)]


def _check_dim9_trivext_lemma(sink: ClaimSink, scope):
    for name, a in _dim9_scope():
        if scope is not None and name not in (
            [scope] if isinstance(scope, str) else scope
        ):
            continue
        crit = trivext_criteria(a)
        sink.check(f"I_is_ideal/{name}", "PAPER", crit.i_is_ideal)
        sink.check(f"S_is_ideal/{name}", "PAPER", crit.s_is_ideal)
        t = trivial_extension(a)
        sink.check(f"p2_of_T/{name}", "PAPER", property_verdicts(t).p2.holds)


_CHECKERS = {
    "commutatorsmallestideal": _check_commutatorsmallestideal,
    "condsocleprod": _check_condsocleprod,
    "raidealnecessary": _check_raidealnecessary,
    "socinj": _check_socinj,
    "soctensor": _check_soctensor,
    "idealtensor": _check_idealtensor,
    "jacobsontensorproduct": _check_jacobsontensorproduct,
    "propertiesperp": _check_propertiesperp,
    "reynoldsbasic": _check_reynoldsbasic,
    "idealsymmetricalternative": _check_idealsymmetricalternative,
    "remark_ka": _check_remark_ka,
    "quotientalgebrasymmetric": _check_quotientalgebrasymmetric,
    "propnustar": _check_propnustar,
    "nustar_relations": _check_nustar_relations,
    "prop_quotientalgebra": _check_prop_quotientalgebra,
    "aicommutative_instance": _check_aicommutative_instance,
    "subspacest": _check_subspacest,
    "soctaideal": _check_soctaideal,
    "remark_after_soctaideal": _check_remark_after_soctaideal,
    "propertiessymmetriclocal": _check_propertiessymmetriclocal,
    "chlz": _check_chlz,
    "centerdim3greater": _check_centerdim3greater,
    "kultheob": _check_kultheob,
    "dim9_trivext_lemma": _check_dim9_trivext_lemma,
}


def check_lemma(lemma_id: str, scope=None) -> SuiteResult:
    """Run one registered instance checker over its (possibly filtered) scope."""
    if lemma_id not in _CHECKERS:
        raise UnknownLemma(f"unknown lemma id {lemma_id!r}")
    t0 = time.perf_counter()
    sink = ClaimSink(f"lemma/{lemma_id}")
    _CHECKERS[lemma_id](sink, scope)
    return sink.result(time.perf_counter() - t0)


def run_all_lemmas() -> list[SuiteResult]:
    return [check_lemma(lemma_id) for lemma_id in LEMMA_IDS]
