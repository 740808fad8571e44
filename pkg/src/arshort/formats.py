"""JSON file formats for algebras, modules and reports (all versioned ``"format": 1``)."""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

from .errors import ArshortError
from .exactla import Matrix, format_rational, parse_rational
from .quiveralg import Arrow, BoundQuiverAlgebra, Path, Quiver, Relation, build_algebra, DEFAULT_NILPOTENCY_BOUND
from .repcat import Morphism, Representation

FORMAT_VERSION = 1


class FormatError(ArshortError):
    """Malformed input file."""


# ---------------------------------------------------------------------------
# basic pieces


def matrix_to_json(m: Matrix) -> list:
    return [[format_rational(x) for x in row] for row in m.tolist()]


def matrix_from_json(data, rows: int, cols: int, what: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise FormatError(f"{what}: expected {rows} rows")
    out = []
    for r in data:
        if not isinstance(r, list) or len(r) != cols:
            raise FormatError(f"{what}: expected rows of length {cols}")
        try:
            out.append([parse_rational(str(x)) for x in r])
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"{what}: bad rational entry") from exc
    return Matrix(rows, cols, out)


def element_to_json(a: BoundQuiverAlgebra, x) -> list:
    return [{"coeff": format_rational(c), "path": list(a.basis[i].arrows) or f"e_{a.basis[i].source}"}
            for i, c in enumerate(x) if c]


def _check_format(d: dict, kind: str) -> None:
    if not isinstance(d, dict):
        raise FormatError(f"{kind} file must contain a JSON object")
    if d.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise FormatError(f"unsupported {kind} format version {d.get('format')!r}")


# ---------------------------------------------------------------------------
# algebras


def algebra_to_dict(a: BoundQuiverAlgebra) -> dict:
    return {
        "format": FORMAT_VERSION,
        "vertices": list(a.vertices),
        "arrows": [{"name": ar.name, "from": ar.source, "to": ar.target} for ar in a.quiver.arrows],
        "relations": [[{"coeff": format_rational(c), "path": list(p.arrows)} for c, p in r.terms]
                      for r in a.relations],
        "dimension": a.dimension,
        "basis": [str(p) for p in a.basis],
    }


def algebra_from_dict(d: dict, nilpotency_bound: int | None = None) -> BoundQuiverAlgebra:
    _check_format(d, "algebra")
    try:
        verts = [str(v) for v in d["vertices"]]
        arrows = [Arrow(str(x["name"]), str(x["from"]), str(x["to"])) for x in d.get("arrows", [])]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"algebra file is missing a field: {exc}") from exc
    if len(set(verts)) != len(verts):
        raise FormatError("duplicate vertex names")
    names = [a.name for a in arrows]
    if len(set(names)) != len(names):
        raise FormatError("duplicate arrow names")
    for a in arrows:
        if a.source not in verts or a.target not in verts:
            raise FormatError(f"arrow {a.name} uses an undeclared vertex")
    q = Quiver(verts, arrows)
    rels = []
    for k, rel in enumerate(d.get("relations", [])):
        terms = []
        try:
            for term in rel:
                path = term["path"]
                if not isinstance(path, list) or not path:
                    raise FormatError(f"relation {k}: paths must be non-empty arrow lists")
                terms.append((parse_rational(str(term.get("coeff", "1"))), Path.of_arrows(q, [str(n) for n in path])))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"relation {k} is malformed: {exc}") from exc
        rels.append(Relation(terms))
    bound = nilpotency_bound or d.get("nilpotency_bound") or DEFAULT_NILPOTENCY_BOUND
    return build_algebra(q, rels, nilpotency_bound=int(bound), name=d.get("name"))


# ---------------------------------------------------------------------------
# modules and morphisms


def module_to_dict(m: Representation) -> dict:
    a = m.algebra
    return {
        "format": FORMAT_VERSION,
        "dims": {v: m.dims[v] for v in a.vertices},
        "maps": {ar.name: matrix_to_json(m.maps[ar.name]) for ar in a.quiver.arrows},
    }


def module_from_dict(a: BoundQuiverAlgebra, d: dict) -> Representation:
    _check_format(d, "module")
    try:
        raw = d.get("dims", {})
        if not isinstance(raw, dict):
            raise FormatError("dims must be an object")
        dims = {str(v): int(n) for v, n in raw.items()}
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad dimension entry: {exc}") from exc
    for v, n in dims.items():
        if v not in a.vertices:
            raise FormatError(f"unknown vertex {v!r} in dims")
        if n < 0:
            raise FormatError(f"negative dimension at {v!r}")
    full = {v: dims.get(v, 0) for v in a.vertices}
    raw_maps = d.get("maps", {})
    if not isinstance(raw_maps, dict):
        raise FormatError("maps must be an object")
    maps = {}
    for name, mat in raw_maps.items():
        if not a.quiver.has_arrow(name):
            raise FormatError(f"unknown arrow {name!r} in maps")
        ar = a.quiver.arrow(name)
        rows, cols = full[ar.target], full[ar.source]
        if rows == 0 and mat in ([], None):
            maps[name] = Matrix.zeros(0, cols)
            continue
        maps[name] = matrix_from_json(mat, rows, cols, f"arrow {name}")
    m = Representation(a, full, maps)
    m.validate()
    return m


def morphism_to_dict(f: Morphism) -> dict:
    return {v: matrix_to_json(f.maps[v]) for v in f.algebra.vertices}


# ---------------------------------------------------------------------------
# files


def read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=_default) + "\n"


def _default(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def write_text_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
