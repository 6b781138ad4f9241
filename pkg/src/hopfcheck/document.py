"""Algebra definition documents: parse, validate, build, and emit.

A document is a JSON object with explicit index-based sparse tensors and
exact rational coefficients (integers or "p/q" strings).  Parsing reports
the first problem with its location; emission is canonical, so a document
survives a parse/emit round trip unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field

from .hopf import Element, FinHopfAlgebra, Functional
from .linalg import Matrix
from .scalars import Field, RationalField, Scalar, ScalarError, field_from_spec


class DocumentError(ValueError):
    """A definition document is malformed; the message names the location."""


REQUIRED_KEYS = ("name", "field", "basis", "mult", "comult", "counit")


@dataclass
class AlgebraDocument:
    name: str
    field: Field
    basis: tuple[str, ...]
    mult: tuple[tuple[int, int, int, Scalar], ...]
    comult: tuple[tuple[int, int, int, Scalar], ...]
    counit: tuple[Scalar, ...]
    antipode: tuple[tuple[int, int, Scalar], ...] | None = None
    r_entries: tuple[tuple[Scalar, int, int], ...] | None = None
    sigma: tuple[tuple[Scalar, ...], ...] | None = None
    characters: dict = dataclass_field(default_factory=dict)
    grouplikes: dict = dataclass_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _want_list(obj, key: str) -> list:
    value = obj.get(key)
    if not isinstance(value, list) or not value:
        raise DocumentError(f"{key}: missing entries")
    return value


def _index(value, key: str, position: int, n: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{key}: entry {position} has a non-integer index")
    if not 0 <= value < n:
        raise DocumentError(f"{key}: entry {position} index {value} out of range")
    return value


def _scalar(field: Field, value, key: str, position) -> Scalar:
    try:
        return field.parse(value)
    except ScalarError as exc:
        raise DocumentError(f"{key}: entry {position}: {exc}") from exc


def parse_document(obj) -> AlgebraDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document: expected a JSON object")
    for key in REQUIRED_KEYS:
        if key not in obj:
            raise DocumentError(f"{key}: missing entries")

    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise DocumentError("name: expected a non-empty string")
    try:
        field = field_from_spec(obj["field"])
    except ScalarError as exc:
        raise DocumentError(str(exc)) from exc

    basis = obj["basis"]
    if (not isinstance(basis, list) or not basis
            or any(not isinstance(b, str) or not b for b in basis)):
        raise DocumentError("basis: expected a non-empty list of labels")
    n = len(basis)

    def triples(key: str, coeff_first: bool):
        out = []
        for pos, entry in enumerate(_want_list(obj, key)):
            if not isinstance(entry, list) or len(entry) != 4:
                raise DocumentError(f"{key}: entry {pos} must have four fields")
            raw = entry if not coeff_first else entry[1:] + entry[:1]
            i = _index(raw[0], key, pos, n)
            j = _index(raw[1], key, pos, n)
            k = _index(raw[2], key, pos, n)
            out.append((i, j, k, _scalar(field, raw[3], key, pos)))
        return tuple(out)

    mult = triples("mult", coeff_first=False)
    comult = triples("comult", coeff_first=False)

    counit_raw = _want_list(obj, "counit")
    seen: dict = {}
    for pos, entry in enumerate(counit_raw):
        if not isinstance(entry, list) or len(entry) != 2:
            raise DocumentError(f"counit: entry {pos} must be [index, coefficient]")
        i = _index(entry[0], "counit", pos, n)
        if i in seen:
            raise DocumentError(f"counit: duplicate entry for index {i}")
        seen[i] = _scalar(field, entry[1], "counit", pos)
    if len(seen) != n:
        raise DocumentError("counit: missing entries")
    counit = tuple(seen[i] for i in range(n))

    antipode = None
    if "antipode" in obj:
        out = []
        for pos, entry in enumerate(_want_list(obj, "antipode")):
            if not isinstance(entry, list) or len(entry) != 3:
                raise DocumentError(f"antipode: entry {pos} must be [i, j, coefficient]")
            i = _index(entry[0], "antipode", pos, n)
            j = _index(entry[1], "antipode", pos, n)
            out.append((i, j, _scalar(field, entry[2], "antipode", pos)))
        antipode = tuple(out)

    r_entries = None
    if "R" in obj:
        out = []
        for pos, entry in enumerate(_want_list(obj, "R")):
            if not isinstance(entry, list) or len(entry) != 3:
                raise DocumentError(f"R: entry {pos} must be [coefficient, i, j]")
            c = _scalar(field, entry[0], "R", pos)
            i = _index(entry[1], "R", pos, n)
            j = _index(entry[2], "R", pos, n)
            out.append((c, i, j))
        r_entries = tuple(out)

    sigma = None
    if "sigma" in obj:
        raw = _want_list(obj, "sigma")
        dense = (len(raw) == n
                 and all(isinstance(row, list) and len(row) == n for row in raw))
        if dense:
            sigma = tuple(tuple(_scalar(field, v, "sigma", (i, j))
                                for j, v in enumerate(row))
                          for i, row in enumerate(raw))
        else:
            rows = [[field.zero] * n for _ in range(n)]
            for pos, entry in enumerate(raw):
                if not isinstance(entry, list) or len(entry) != 3:
                    raise DocumentError(
                        f"sigma: entry {pos} must be [i, j, value] or a dense matrix")
                i = _index(entry[0], "sigma", pos, n)
                j = _index(entry[1], "sigma", pos, n)
                rows[i][j] = _scalar(field, entry[2], "sigma", pos)
            sigma = tuple(tuple(row) for row in rows)

    def named_vectors(key: str) -> dict:
        out: dict = {}
        if key not in obj:
            return out
        table = obj[key]
        if not isinstance(table, dict):
            raise DocumentError(f"{key}: expected an object of named vectors")
        for vec_name in sorted(table):
            vec = table[vec_name]
            if not isinstance(vec, list) or len(vec) != n:
                raise DocumentError(
                    f"{key}: '{vec_name}' must list one value per basis element")
            out[vec_name] = tuple(_scalar(field, v, key, vec_name) for v in vec)
        return out

    return AlgebraDocument(
        name=name, field=field, basis=tuple(basis), mult=mult, comult=comult,
        counit=counit, antipode=antipode, r_entries=r_entries, sigma=sigma,
        characters=named_vectors("characters"),
        grouplikes=named_vectors("grouplikes"),
    )


def load_document(path: str) -> AlgebraDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read ({exc.strerror})") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc
    return parse_document(obj)


def build_algebra(doc: AlgebraDocument, check: bool = True) -> FinHopfAlgebra:
    n = doc.dim
    mult: dict = {}
    for i, j, k, c in doc.mult:
        row = mult.setdefault((i, j), {})
        row[k] = row.get(k, doc.field.zero) + c
    comult: dict = {}
    for i, j, k, c in doc.comult:
        comult.setdefault(i, []).append((c, j, k))
    antipode = None
    if doc.antipode is not None:
        rows = [[doc.field.zero] * n for _ in range(n)]
        for i, j, c in doc.antipode:
            rows[i][j] = rows[i][j] + c
        antipode = Matrix.from_rows(doc.field, rows)
    return FinHopfAlgebra(doc.field, doc.basis, mult,
                          {i: tuple(ts) for i, ts in comult.items()},
                          doc.counit, antipode=antipode, check=check,
                          name=doc.name)


def document_characters(doc: AlgebraDocument, algebra: FinHopfAlgebra) -> dict:
    out = {}
    for name in sorted(doc.characters):
        f = Functional(algebra, doc.characters[name])
        if not algebra.is_character(f):
            raise DocumentError(f"characters: '{name}' is not an algebra character")
        out[name] = f
    return out


def document_grouplikes(doc: AlgebraDocument, algebra: FinHopfAlgebra) -> dict:
    out = {}
    for name in sorted(doc.grouplikes):
        x = Element(algebra, doc.grouplikes[name])
        if not algebra.is_grouplike(x):
            raise DocumentError(f"grouplikes: '{name}' is not grouplike")
        out[name] = x
    return out


def _scalar_to_json(field: Field, s: Scalar):
    if isinstance(field, RationalField):
        if s.denominator == 1:
            return int(s.numerator)
        return f"{s.numerator}/{s.denominator}"
    return int(s.value)


def emit_document(doc: AlgebraDocument) -> dict:
    """Canonical JSON form: merged duplicates, zeros dropped, sorted entries."""
    field = doc.field
    n = doc.dim

    def merge_triples(entries):
        acc: dict = {}
        for i, j, k, c in entries:
            key = (i, j, k)
            acc[key] = acc.get(key, field.zero) + c
        return [[i, j, k, _scalar_to_json(field, c)]
                for (i, j, k), c in sorted(acc.items(), key=lambda kv: kv[0]) if c]

    obj = {
        "name": doc.name,
        "field": field.spec(),
        "basis": list(doc.basis),
        "mult": merge_triples(doc.mult),
        "comult": merge_triples(doc.comult),
        "counit": [[i, _scalar_to_json(field, c)] for i, c in enumerate(doc.counit)],
    }
    if doc.antipode is not None:
        acc: dict = {}
        for i, j, c in doc.antipode:
            acc[(i, j)] = acc.get((i, j), field.zero) + c
        obj["antipode"] = [[i, j, _scalar_to_json(field, c)]
                           for (i, j), c in sorted(acc.items()) if c]
    if doc.r_entries is not None:
        acc = {}
        for c, i, j in doc.r_entries:
            acc[(i, j)] = acc.get((i, j), field.zero) + c
        obj["R"] = [[_scalar_to_json(field, c), i, j]
                    for (i, j), c in sorted(acc.items()) if c]
    if doc.sigma is not None:
        obj["sigma"] = [[_scalar_to_json(field, v) for v in row] for row in doc.sigma]
    if doc.characters:
        obj["characters"] = {name: [_scalar_to_json(field, v) for v in vec]
                             for name, vec in sorted(doc.characters.items())}
    if doc.grouplikes:
        obj["grouplikes"] = {name: [_scalar_to_json(field, v) for v in vec]
                             for name, vec in sorted(doc.grouplikes.items())}
    return obj


def document_text(doc: AlgebraDocument) -> str:
    return json.dumps(emit_document(doc), indent=2, sort_keys=True) + "\n"


def document_from_algebra(algebra: FinHopfAlgebra, r_rows=None,
                          name: str | None = None) -> AlgebraDocument:
    """Read the structure constants back out of a built algebra."""
    n = algebra.dim
    mult = tuple((i, j, k, c) for i in range(n) for j in range(n)
                 for k, c in sorted(algebra.mul_basis(i, j).items()))
    comult = tuple((i, j, k, c) for i in range(n)
                   for c, j, k in algebra.delta_basis(i))
    antipode = tuple((i, j, algebra.antipode_matrix.rows[i][j])
                     for i in range(n) for j in range(n)
                     if algebra.antipode_matrix.rows[i][j])
    r_entries = None
    if r_rows is not None:
        r_entries = tuple((v, i, j) for i, row in enumerate(r_rows)
                          for j, v in enumerate(row) if v)
    return AlgebraDocument(
        name=name or algebra.name, field=algebra.field, basis=algebra.labels,
        mult=mult, comult=comult,
        counit=tuple(algebra.eps_basis(i) for i in range(n)),
        antipode=antipode, r_entries=r_entries,
    )
