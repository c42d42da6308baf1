"""Algebra definition files: a single JSON document per algebra.

The document names a field, one presentation node (possibly nested
constructions) and optional radical hint / symmetrizing form.  Scalars use
the exact literal syntax of the field: prime-field values are decimal
integers, extension values are coefficient lists (low degree first),
rationals are "a/b" strings or integers.

Emission is canonical: fixed key order, two-space indentation, one trailing
newline, so identical algebras produce byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import Algebra
from .constructions import (
    SkewPresentation,
    from_matrix_generators,
    from_skew_presentation,
    opposite,
    quotient,
    tensor,
    trivial_extension,
)
from .errors import FileFormatError, ScalarFormatError, SymcenterError
from .fields import (
    ExtensionField,
    FieldDescriptor,
    PrimeField,
    RationalField,
)
from .linalg import Subspace
from .substructures import RadicalHint, radical

PRESENTATION_TYPES = (
    "structure_constants",
    "skew_truncated",
    "matrix_generators",
    "tensor",
    "trivial_extension",
    "quotient",
    "opposite",
)


def parse_field(obj, path="field") -> FieldDescriptor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FileFormatError(f"{path}: expected an object with a 'kind'", path)
    kind = obj["kind"]
    try:
        if kind == "prime":
            return PrimeField(int(obj["p"]))
        if kind == "extension":
            return ExtensionField(int(obj["p"]), [int(c) for c in obj["modulus"]])
        if kind == "rational":
            return RationalField()
    except KeyError as exc:
        raise FileFormatError(f"{path}: missing field parameter {exc}", path) from None
    except (SymcenterError, ValueError, TypeError) as exc:
        raise FileFormatError(f"{path}: {exc}", path) from None
    raise FileFormatError(f"{path}: unknown field kind {kind!r}", path)


def field_to_json(field: FieldDescriptor) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": field.p}
    if isinstance(field, ExtensionField):
        return {"kind": "extension", "p": field.p, "modulus": list(field.modulus)}
    return {"kind": "rational"}


def parse_scalar(field: FieldDescriptor, value, path: str):
    """A scalar from its JSON form: int, literal string, or coefficient list."""
    try:
        if isinstance(value, bool):
            raise ScalarFormatError("booleans are not scalars")
        if isinstance(value, int):
            return field.from_int(value)
        if isinstance(value, str):
            return field.parse_enc(value)
        if isinstance(value, list) and isinstance(field, ExtensionField):
            return field.coeffs_to_enc([int(c) for c in value])
    except (ScalarFormatError, ValueError, TypeError) as exc:
        raise FileFormatError(f"{path}: {exc}", path) from None
    raise FileFormatError(f"{path}: cannot read scalar {value!r}", path)


def scalar_to_json(field: FieldDescriptor, enc):
    if isinstance(field, PrimeField):
        return int(enc)
    if isinstance(field, ExtensionField):
        return [int(c) for c in field.enc_to_coeffs(int(enc))]
    return int(enc) if enc.denominator == 1 else str(enc)


def parse_vector(field, values, path: str, length: int | None = None):
    if not isinstance(values, list):
        raise FileFormatError(f"{path}: expected a list", path)
    if length is not None and len(values) != length:
        raise FileFormatError(
            f"{path}: expected {length} entries, got {len(values)}", path
        )
    out = field.zeros(len(values))
    for i, v in enumerate(values):
        out[i] = parse_scalar(field, v, f"{path}[{i}]")
    return out


def _parse_hint(field, spec, path: str) -> RadicalHint:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise FileFormatError(f"{path}: expected an object with 'kind'", path)
    vectors = None
    if "vectors" in spec:
        vectors = tuple(
            tuple(parse_scalar(field, v, f"{path}.vectors[{i}][{j}]")
                  for j, v in enumerate(vec))
            for i, vec in enumerate(spec["vectors"])
        )
    return RadicalHint(spec["kind"], vectors)


def _parse_presentation(field, node, path: str,
                        radical_hint=None, sym_form=None, name=None) -> Algebra:
    if not isinstance(node, dict) or "type" not in node:
        raise FileFormatError(f"{path}: expected an object with a 'type'", path)
    # nested nodes may carry their own hint and form, so that constructions
    # can propagate radical knowledge from their components
    if radical_hint is None and "radical_hint" in node:
        radical_hint = _parse_hint(field, node["radical_hint"], f"{path}.radical_hint")
    if sym_form is None and "symmetrizing_form" in node:
        sym_form = parse_vector(field, node["symmetrizing_form"],
                                f"{path}.symmetrizing_form")
    ptype = node["type"]
    if ptype == "structure_constants":
        return _parse_structure_constants(field, node, path, radical_hint, sym_form, name)
    if ptype == "skew_truncated":
        bounds = node.get("bounds")
        if not isinstance(bounds, list) or not all(isinstance(b, int) for b in bounds):
            raise FileFormatError(f"{path}.bounds: expected a list of integers", path)
        qspec = []
        for key, val in sorted(node.get("q", {}).items()):
            try:
                j, i = (int(s) for s in key.split(","))
            except ValueError:
                raise FileFormatError(
                    f"{path}.q: keys look like 'j,i' with 1-based j > i", path
                ) from None
            enc = parse_scalar(field, val, f"{path}.q[{key}]")
            qspec.append(((j - 1, i - 1), field.scalar(enc)))
        names = node.get("variables")
        pres = SkewPresentation(
            tuple(bounds), tuple(qspec),
            None if names is None else tuple(names),
        )
        alg = from_skew_presentation(field, pres, name=name)
    elif ptype == "matrix_generators":
        size = node.get("size")
        gens = node.get("generators")
        if not isinstance(size, int) or not isinstance(gens, dict):
            raise FileFormatError(
                f"{path}: matrix_generators needs 'size' and 'generators'", path
            )
        parsed = {}
        for gname, rows in gens.items():
            mat = field.zeros((size, size))
            if not isinstance(rows, list) or len(rows) != size:
                raise FileFormatError(
                    f"{path}.generators.{gname}: expected {size} rows", path
                )
            for r, row in enumerate(rows):
                mat[r] = parse_vector(field, row, f"{path}.generators.{gname}[{r}]", size)
            parsed[gname] = mat
        alg = from_matrix_generators(
            field, size, parsed,
            monomial_basis=node.get("monomial_basis"),
            name=name,
        )
    elif ptype == "tensor":
        left = _parse_presentation(field, node.get("left"), f"{path}.left")
        right = _parse_presentation(field, node.get("right"), f"{path}.right")
        alg = tensor(left, right)
    elif ptype == "trivial_extension":
        base = _parse_presentation(field, node.get("base"), f"{path}.base")
        alg = trivial_extension(base)
    elif ptype == "quotient":
        base = _parse_presentation(field, node.get("base"), f"{path}.base")
        spec = node.get("ideal")
        if not isinstance(spec, dict) or "vectors" not in spec:
            raise FileFormatError(f"{path}.ideal: expected vectors", path)
        rows = field.zeros((len(spec["vectors"]), base.dim))
        for i, vec in enumerate(spec["vectors"]):
            rows[i] = parse_vector(field, vec, f"{path}.ideal.vectors[{i}]", base.dim)
        sub = Subspace.from_rows(field, base.dim, rows)
        if spec.get("closure", False):
            sub = base.ideal_closure(sub)
        alg = quotient(base, sub)
    elif ptype == "opposite":
        base = _parse_presentation(field, node.get("base"), f"{path}.base")
        alg = opposite(base)
    else:
        raise FileFormatError(f"{path}: unknown presentation type {ptype!r}", path)
    if name is not None:
        alg.name = name
    if radical_hint is not None:
        alg.radical_hint = radical_hint
    if sym_form is not None:
        alg.sym_form = np.asarray(sym_form, dtype=field.dtype).reshape(alg.dim)
    return alg


def _parse_structure_constants(field, node, path, radical_hint, sym_form, name):
    dim = node.get("dim")
    table_spec = node.get("table")
    one_spec = node.get("one")
    if not isinstance(dim, int) or table_spec is None or one_spec is None:
        raise FileFormatError(
            f"{path}: structure_constants needs 'dim', 'table' and 'one'", path
        )
    table = field.zeros((dim, dim, dim))
    if not isinstance(table_spec, list) or len(table_spec) != dim:
        raise FileFormatError(f"{path}.table: expected {dim} rows", path)
    for i, plane in enumerate(table_spec):
        if not isinstance(plane, list) or len(plane) != dim:
            raise FileFormatError(f"{path}.table[{i}]: expected {dim} entries", path)
        for j, vec in enumerate(plane):
            table[i, j] = parse_vector(field, vec, f"{path}.table[{i}][{j}]", dim)
    one = parse_vector(field, one_spec, f"{path}.one", dim)
    labels = node.get("labels")
    return Algebra(
        field, table, one, labels=labels,
        radical_hint=radical_hint, sym_form=sym_form, name=name,
    )


def parse_document(doc: dict) -> Algebra:
    """Build the algebra described by a parsed JSON document."""
    if not isinstance(doc, dict):
        raise FileFormatError("top level: expected a JSON object", "top")
    field = parse_field(doc.get("field"), "field")
    hint = None
    if "radical_hint" in doc:
        hint = _parse_hint(field, doc["radical_hint"], "radical_hint")
    sym_form = None
    if "symmetrizing_form" in doc:
        sym_form = parse_vector(field, doc["symmetrizing_form"], "symmetrizing_form")
    name = doc.get("name")
    alg = _parse_presentation(
        field, doc.get("presentation"), "presentation",
        radical_hint=hint, sym_form=sym_form, name=name,
    )
    if sym_form is not None and len(sym_form) != alg.dim:
        raise FileFormatError(
            f"symmetrizing_form: expected {alg.dim} coordinates",
            "symmetrizing_form",
        )
    return alg


def load_algebra(path: str) -> Algebra:
    """Parse an algebra definition file; errors carry line or path anchors."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}",
            f"line {exc.lineno}",
        ) from None
    return parse_document(doc)


def emit_structure_constants(alg: Algebra, include_radical: bool = True) -> str:
    """Canonical explicit file for an algebra (used by cmd_construct)."""
    field = alg.field
    doc = {"name": alg.name or "algebra", "field": field_to_json(field)}
    pres = {
        "type": "structure_constants",
        "dim": alg.dim,
        "table": [
            [[scalar_to_json(field, alg.table[i, j, k]) for k in range(alg.dim)]
             for j in range(alg.dim)]
            for i in range(alg.dim)
        ],
        "one": [scalar_to_json(field, v) for v in alg.one],
    }
    if alg.labels is not None:
        pres["labels"] = list(alg.labels)
    doc["presentation"] = pres
    if include_radical:
        try:
            cert = radical(alg)
            doc["radical_hint"] = {
                "kind": "basis",
                "vectors": [
                    [scalar_to_json(field, v) for v in row]
                    for row in cert.radical.basis
                ],
            }
        except SymcenterError:
            pass
    if alg.sym_form is not None:
        doc["symmetrizing_form"] = [scalar_to_json(field, v) for v in alg.sym_form]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
