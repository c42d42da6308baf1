"""Deterministic family of verified symmetric local algebras.

Used to test the dimension-bound statements at instance level: every member
of dimension <= 11 must satisfy (P1) and every member of dimension <= 16
must satisfy (P2).  The family combines

  (a) trivial extensions T(B) of commutative local truncated polynomial
      algebras B over GF(2) and GF(3),
  (b) symmetric quotients T(B)/(Tz)^perp of those (one per quotient
      dimension and member, z running over a J(Z) basis),
  (c) symmetric quotients of the corpus symmetric local algebras for every
      basis vector z of J(Z(A)), and
  (d) tensor products of pairs from (a) over the same field,

all within the requested dimension bound and each verified to be symmetric
and local before being admitted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .constructions import SkewPresentation, from_skew_presentation, tensor, trivial_extension
from .corpus import get
from .errors import InternalCheckError
from .fields import GF
from .substructures import is_local, j_of_center
from .symmetric import symmetric_quotient, symmetric_structure

MAX_FAMILY_DIM = 24

_family_cache: dict[int, list] = {}


@dataclass(frozen=True)
class FamilyMember:
    member_id: str
    algebra: Algebra
    origin: str


def _bound_tuples(max_product: int):
    """Nondecreasing tuples of truncation bounds >= 2 with bounded product."""
    out = [()]
    def extend(prefix, prod, minimum):
        for b in range(minimum, max_product + 1):
            if prod * b > max_product:
                break
            nxt = prefix + (b,)
            out.append(nxt)
            extend(nxt, prod * b, b)
    extend((), 1, 2)
    return out


def commutative_local_bases(max_base_dim: int) -> list[FamilyMember]:
    """Truncated polynomial algebras F[x_i]/(x_i^{b_i}) over GF(2), GF(3)."""
    members = []
    for p in (2, 3):
        field = GF(p)
        for bounds in _bound_tuples(max_base_dim):
            name = f"B_gf{p}_" + ("x".join(str(b) for b in bounds) or "1")
            alg = from_skew_presentation(
                field, SkewPresentation.commuting(bounds), name=name
            )
            members.append(FamilyMember(name, alg, "truncated polynomial base"))
    return members


def _symmetric_local_corpus_ids() -> list[str]:
    from .corpus import ENTRY_IDS

    out = []
    for entry_id in ENTRY_IDS:
        a = get(entry_id)
        if symmetric_structure(a) is not None and is_local(a):
            out.append(entry_id)
    return out


def _admit(members: list, seen: set, member: FamilyMember, max_dim: int):
    a = member.algebra
    if a.dim > max_dim:
        return
    if symmetric_structure(a) is None:
        raise InternalCheckError(f"family member {member.member_id} has no form")
    if not is_local(a):
        raise InternalCheckError(f"family member {member.member_id} is not local")
    if member.member_id in seen:
        return
    seen.add(member.member_id)
    members.append(member)


def generate_symmetric_local_family(max_dim: int) -> list[FamilyMember]:
    """The deterministic verified family, in a fixed construction order."""
    if max_dim > MAX_FAMILY_DIM:
        raise ValueError(f"family generator is desk-scale: max_dim <= {MAX_FAMILY_DIM}")
    if max_dim in _family_cache:
        return _family_cache[max_dim]
    members: list[FamilyMember] = []
    seen: set[str] = set()
    bases = commutative_local_bases(max_dim // 2)
    trivexts = []
    for base in bases:
        t = trivial_extension(base.algebra)
        member = FamilyMember(f"T({base.member_id})", t, "trivial extension of (a)")
        if t.dim <= max_dim:
            trivexts.append(member)
            _admit(members, seen, member, max_dim)
    for member in trivexts:
        t = member.algebra
        struct = symmetric_structure(t)
        dims_taken = set()
        for row in j_of_center(t).basis_vectors():
            witness = symmetric_quotient(struct, t.element(row))
            q = witness.quotient
            if q.dim in dims_taken:
                continue
            dims_taken.add(q.dim)
            _admit(
                members, seen,
                FamilyMember(f"{member.member_id}/dim{q.dim}", q,
                             "symmetric quotient of (a)"),
                max_dim,
            )
    for entry_id in _symmetric_local_corpus_ids():
        a = get(entry_id)
        struct = symmetric_structure(a)
        for idx, row in enumerate(j_of_center(a).basis_vectors()):
            witness = symmetric_quotient(struct, a.element(row))
            q = witness.quotient
            _admit(
                members, seen,
                FamilyMember(f"{entry_id}/z{idx}_dim{q.dim}", q,
                             "symmetric quotient of a corpus algebra"),
                max_dim,
            )
    for i, left in enumerate(trivexts):
        for right in trivexts[i:]:
            if left.algebra.field != right.algebra.field:
                continue
            if left.algebra.dim * right.algebra.dim > max_dim:
                continue
            prod = tensor(left.algebra, right.algebra)
            _admit(
                members, seen,
                FamilyMember(f"{left.member_id}(x){right.member_id}", prod,
                             "tensor of two (a) members"),
                max_dim,
            )
    _family_cache[max_dim] = members
    return members


def dimension_histogram(members: list[FamilyMember]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for m in members:
        hist[m.algebra.dim] = hist.get(m.algebra.dim, 0) + 1
    return dict(sorted(hist.items()))
