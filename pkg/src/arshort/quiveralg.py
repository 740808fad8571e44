"""Quivers, paths and finite-dimensional bound quiver algebras KQ/I.

Conventions
-----------
* A path ``[a, b]`` means "traverse ``a``, then ``b``"; the product of basis
  paths ``p * q`` is their concatenation when ``target(p) == source(q)``.
* Modules are right modules, so the arrow ``a: i -> j`` acts as a linear map
  ``M_i -> M_j`` (see :mod:`arshort.repcat`).
* Every algebra here is basic: the stationary paths ``e_v`` form a complete set
  of primitive orthogonal idempotents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    ImproperIdeal,
    InfiniteDimensional,
    InternalInconsistency,
    InvalidRelation,
)
from .exactla import Matrix, NoSolution, _rref_rows, format_rational, solve, to_rational

DEFAULT_NILPOTENCY_BOUND = 30
_PATH_CAP = 200_000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """Finite quiver; parallel arrows and loops are allowed."""

    def __init__(self, vertices: Iterable, arrows: Iterable):
        self.vertices = tuple(str(v) for v in vertices)
        arr = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(str(a[0]), str(a[1]), str(a[2]))
            arr.append(a)
        self.arrows = tuple(arr)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        if len({a.name for a in self.arrows}) != len(self.arrows):
            raise ValueError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} has an undeclared endpoint")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._by_name = {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrow_count(self, s: str, t: str) -> int:
        return sum(1 for a in self.arrows if a.source == s and a.target == t)

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        stack = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    stack.append(a.target)
        return seen == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        arr = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arr}])"


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def then(self, other: "Path") -> "Path":
        if self.target != other.source:
            raise ValueError(f"cannot compose {self} with {other}")
        return Path(self.source, other.target, self.arrows + other.arrows)

    def reversed(self) -> "Path":
        return Path(self.target, self.source, tuple(reversed(self.arrows)))

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(self.arrows)

    @staticmethod
    def stationary(v: str) -> "Path":
        return Path(v, v, ())

    @staticmethod
    def of_arrows(q: Quiver, names: Sequence[str]) -> "Path":
        names = tuple(names)
        if not names:
            raise ValueError("use Path.stationary for empty paths")
        arrows = [q.arrow(n) for n in names]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValueError(f"arrows {a.name} and {b.name} do not compose")
        return Path(arrows[0].source, arrows[-1].target, names)


def path_sort_key(q: Quiver, p: Path):
    return (p.length, p.arrows, q.vertex_index[p.source], q.vertex_index[p.target])


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths of length >= 2."""

    terms: tuple

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple((to_rational(c), p) for c, p in terms if c != 0))

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def validate(self, q: Quiver) -> None:
        if not self.terms:
            raise InvalidRelation("empty relation")
        s, t = self.source, self.target
        for _, p in self.terms:
            if (p.source, p.target) != (s, t):
                raise InvalidRelation(f"relation {self} mixes non-parallel paths")
            if p.length < 2:
                raise InvalidRelation(f"relation {self} contains the short path {p}")
            for n in p.arrows:
                if not q.has_arrow(n):
                    raise InvalidRelation(f"relation {self} uses unknown arrow {n}")
            Path.of_arrows(q, p.arrows)

    def reversed(self) -> "Relation":
        return Relation([(c, p.reversed()) for c, p in self.terms])

    def __str__(self) -> str:
        parts = []
        for c, p in self.terms:
            if c == 1:
                parts.append(f"+{p}")
            elif c == -1:
                parts.append(f"-{p}")
            else:
                parts.append(f"{'+' if c > 0 else ''}{format_rational(c)}{p}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """All paths of length <= max_len, ordered by length then arrow names."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    layer = [Path.stationary(v) for v in q.vertices]
    out = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for a in q.arrows_from(p.target):
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        if not nxt:
            break
        out.extend(nxt)
        if len(out) > _PATH_CAP:
            raise InfiniteDimensional(f"more than {_PATH_CAP} paths up to length {max_len}")
        layer = nxt
    out.sort(key=lambda p: path_sort_key(q, p))
    return out


class BoundQuiverAlgebra:
    """KQ/I with an explicit basis of paths and a structure-constant table.

    Elements are tuples of Fractions indexed by :attr:`basis`.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], basis: Sequence[Path],
                 table: dict, nilpotency_bound: int = DEFAULT_NILPOTENCY_BOUND, name: str | None = None):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.basis = tuple(basis)
        self.table = table
        self.nilpotency_bound = nilpotency_bound
        self.name = name
        self.dimension = len(self.basis)
        self.index = {p: i for i, p in enumerate(self.basis)}
        self._opposite = None
        self._blocks: dict = {}
        for i, p in enumerate(self.basis):
            self._blocks.setdefault((p.source, p.target), []).append(i)
        self._from: dict = {}
        self._to: dict = {}
        for i, p in enumerate(self.basis):
            self._from.setdefault(p.source, []).append(i)
            self._to.setdefault(p.target, []).append(i)
        self._arrow_elements: dict = {}

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return (f"<BoundQuiverAlgebra{label}: {len(self.vertices)} vertices, "
                f"{len(self.quiver.arrows)} arrows, dim {self.dimension}>")

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    def basis_between(self, s: str, t: str) -> list[int]:
        return self._blocks.get((s, t), [])

    def basis_from(self, v: str) -> list[int]:
        return self._from.get(v, [])

    def basis_to(self, v: str) -> list[int]:
        return self._to.get(v, [])

    def idempotent_index(self, v: str) -> int:
        return self.index[Path.stationary(v)]

    def zero(self) -> tuple:
        return (Fraction(0),) * self.dimension

    def unit_vector(self, i: int) -> tuple:
        v = [Fraction(0)] * self.dimension
        v[i] = Fraction(1)
        return tuple(v)

    def idempotent(self, v: str) -> tuple:
        return self.unit_vector(self.idempotent_index(v))

    def one(self) -> tuple:
        v = [Fraction(0)] * self.dimension
        for x in self.vertices:
            v[self.idempotent_index(x)] = Fraction(1)
        return tuple(v)

    def mul_basis(self, i: int, j: int) -> tuple:
        return self.table.get((i, j), ())

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        out = [Fraction(0)] * self.dimension
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                for k, c in self.table.get((i, j), ()):
                    out[k] += a * b * c
        return tuple(out)

    def arrow_element(self, name: str) -> tuple:
        return self.unit_vector(self.index[Path.of_arrows(self.quiver, [name])])

    def path_element(self, p: Path) -> tuple:
        """Normal form of an arbitrary path of the quiver."""
        if p in self.index:
            return self.unit_vector(self.index[p])
        out = self.idempotent(p.source)
        for n in p.arrows:
            out = self.multiply(out, self.arrow_element(n))
        return out

    def element(self, terms: Iterable) -> tuple:
        out = [Fraction(0)] * self.dimension
        for c, p in terms:
            if isinstance(p, str):
                p = self.parse_path(p)
            v = self.path_element(p)
            c = to_rational(c)
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
        return tuple(out)

    def parse_path(self, text: str) -> Path:
        if text.startswith("e_"):
            return Path.stationary(text[2:])
        return Path.of_arrows(self.quiver, text.split("*"))

    def format_element(self, x: Sequence) -> str:
        terms = []
        for i, c in enumerate(x):
            if c:
                terms.append(f"{format_rational(c)}*{self.basis[i]}" if c != 1 else str(self.basis[i]))
        return " + ".join(terms) if terms else "0"

    def cartan_matrix(self) -> list[list[int]]:
        return [[len(self.basis_between(s, t)) for t in self.vertices] for s in self.vertices]

    def radical_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.basis) if p.length > 0]

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            self._opposite = _build_opposite(self)
        return self._opposite

    def relation_element(self, r: Relation) -> tuple:
        return self.element(r.terms)


def _build_opposite(a: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    basis = [p.reversed() for p in a.basis]
    table = {}
    for (i, j), prod in a.table.items():
        # (p*q)^op = q^op * p^op
        table[(j, i)] = prod
    op = BoundQuiverAlgebra(a.quiver.opposite(), [r.reversed() for r in a.relations], basis, table,
                            a.nilpotency_bound, name=(a.name + "^op") if a.name else None)
    op._opposite = a
    return op


def opposite_algebra(a: BoundQuiverAlgebra) -> tuple[BoundQuiverAlgebra, dict]:
    """The opposite algebra and the basis correspondence ``path -> reversed path``."""
    op = a.opposite()
    return op, {p: p.reversed() for p in a.basis}


def build_algebra(q: Quiver, rels: Sequence[Relation],
                  nilpotency_bound: int = DEFAULT_NILPOTENCY_BOUND, name: str | None = None) -> BoundQuiverAlgebra:
    """Compute a path basis and structure constants for KQ/I.

    Work happens in KQ modulo paths longer than ``nilpotency_bound + 1``; every
    path of length ``nilpotency_bound + 1`` must lie in the ideal, otherwise the
    algebra is reported as infinite-dimensional. Relations are assumed to
    generate an admissible ideal.
    """
    rels = list(rels)
    for r in rels:
        r.validate(q)
    top = nilpotency_bound + 1
    paths = enumerate_paths(q, top)
    ending: dict = {}
    starting: dict = {}
    for p in paths:
        ending.setdefault(p.target, []).append(p)
        starting.setdefault(p.source, []).append(p)

    blocks: dict = {}
    for p in paths:
        blocks.setdefault((p.source, p.target), []).append(p)
    col_order = {}
    for key, ps in blocks.items():
        ordered = sorted(ps, key=lambda p: (-p.length, p.arrows))
        col_order[key] = {p: k for k, p in enumerate(ordered)}

    consequences: dict = {key: [] for key in blocks}
    for r in rels:
        minlen = min(p.length for _, p in r.terms)
        for pre in ending.get(r.source, []):
            if pre.length + minlen > top:
                continue
            for post in starting.get(r.target, []):
                if pre.length + minlen + post.length > top:
                    continue
                key = (pre.source, post.target)
                cols = col_order[key]
                row = [Fraction(0)] * len(cols)
                nonzero = False
                for c, p in r.terms:
                    full = Path(pre.source, post.target, pre.arrows + p.arrows + post.arrows)
                    if full.length <= top:
                        row[cols[full]] += c
                        nonzero = True
                if nonzero and any(row):
                    consequences[key].append(row)

    normal_forms: dict = {}
    basis: list[Path] = []
    for key, ps in blocks.items():
        cols = col_order[key]
        inv = {k: p for p, k in cols.items()}
        rows, pivots = _rref_rows(consequences[key], len(cols))
        pivset = set(pivots)
        for p in ps:
            if p.length == top:
                k = cols[p]
                if k not in pivset:
                    raise InfiniteDimensional(
                        f"path {p} of length {top} survives; raise nilpotency_bound or add relations")
                row = rows[pivots.index(k)]
                if any(x for j, x in enumerate(row) if j != k):
                    raise InfiniteDimensional(f"path {p} of length {top} is not in the ideal")
        for p in ps:
            k = cols[p]
            if k in pivset:
                row = rows[pivots.index(k)]
                normal_forms[p] = {inv[j]: -x for j, x in enumerate(row) if x and j != k}
            else:
                normal_forms[p] = {p: Fraction(1)}
                basis.append(p)
    basis.sort(key=lambda p: path_sort_key(q, p))
    index = {p: i for i, p in enumerate(basis)}
    table = {}
    for i, p in enumerate(basis):
        for j in range(len(basis)):
            r = basis[j]
            if r.source != p.target:
                continue
            full = Path(p.source, r.target, p.arrows + r.arrows)
            if full.length > top:
                continue
            nf = normal_forms.get(full, {})
            prod = tuple(sorted((index[b], c) for b, c in nf.items() if c))
            if prod:
                table[(i, j)] = prod
    return BoundQuiverAlgebra(q, rels, basis, table, nilpotency_bound, name=name)


def path_algebra(q: Quiver, name: str | None = None) -> BoundQuiverAlgebra:
    return build_algebra(q, [], name=name)


# --------------------------------------------------------------------------
# presentations of abstract basic algebras


class ConcreteAlgebra:
    """A basic finite-dimensional algebra given by concrete element vectors.

    ``blocks[(s, t)]`` spans ``e_s B e_t``, ``rad_blocks[(s, t)]`` spans its
    intersection with the radical, ``mul`` multiplies two element vectors and
    ``idempotents[s]`` is the vector of ``e_s``.
    """

    def __init__(self, vertices, blocks, rad_blocks, mul: Callable, idempotents, zero):
        self.vertices = list(vertices)
        self.blocks = blocks
        self.rad_blocks = rad_blocks
        self.mul = mul
        self.idempotents = idempotents
        self.zero = tuple(zero)


def _span_rref(vectors: list, n: int):
    rows, piv = _rref_rows([list(v) for v in vectors], n)
    return rows[:len(piv)], piv


def _in_span(rows, piv, v) -> bool:
    v = list(v)
    for r, p in zip(rows, piv):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, r)]
    return not any(v)


def _independent_subset(vectors: list, n: int) -> list[int]:
    rows: list = []
    piv: list = []
    chosen = []
    for idx, v in enumerate(vectors):
        if any(v) and not _in_span(rows, piv, v):
            rows, piv = _span_rref(rows + [list(v)], n)
            rows = [list(r) for r in rows]
            chosen.append(idx)
    return chosen


def present(conc: ConcreteAlgebra, arrow_candidates: Sequence = (), arrow_prefix: str = "a",
            nilpotency_bound: int | None = None, name: str | None = None):
    """Quiver-with-relations presentation of a basic algebra.

    Returns ``(algebra, realization)`` where ``realization[i]`` is the concrete
    vector of the ``i``-th path-basis element of ``algebra``.
    ``arrow_candidates`` is a list of ``(name, s, t, vector)`` tried first.
    """
    verts = conc.vertices
    n = len(conc.zero)
    rad2: dict = {}
    for s in verts:
        for t in verts:
            prods = []
            for u in verts:
                for x in conc.rad_blocks.get((s, u), []):
                    for y in conc.rad_blocks.get((u, t), []):
                        pr = conc.mul(x, y)
                        if any(pr):
                            prods.append(pr)
            rad2[(s, t)] = prods

    arrows = []
    images = {}
    counter = 0
    for s in verts:
        for t in verts:
            rows, piv = _span_rref(rad2[(s, t)], n)
            rows = [list(r) for r in rows]
            cands = [(nm, v) for nm, cs, ct, v in arrow_candidates if (cs, ct) == (s, t)]
            cands += [(None, v) for v in conc.rad_blocks.get((s, t), [])]
            for nm, v in cands:
                if _in_span(rows, piv, v):
                    continue
                rows, piv = _span_rref(rows + [list(v)], n)
                rows = [list(r) for r in rows]
                if nm is None:
                    nm = f"{arrow_prefix}{counter}"
                    counter += 1
                arrows.append(Arrow(nm, s, t))
                images[nm] = tuple(v)
    used = {a.name for a in arrows}
    if len(used) != len(arrows):
        raise InternalInconsistency("arrow name clash while presenting an algebra")
    q = Quiver(verts, arrows)

    # evaluate paths until every path of some length vanishes
    values = {Path.stationary(v): tuple(conc.idempotents[v]) for v in verts}
    layer = [Path.stationary(v) for v in verts]
    all_paths = list(layer)
    length = 0
    while True:
        length += 1
        nxt = []
        for p in layer:
            for a in q.arrows_from(p.target):
                np_ = Path(p.source, a.target, p.arrows + (a.name,))
                values[np_] = conc.mul(values[p], images[a.name])
                nxt.append(np_)
        all_paths.extend(nxt)
        if len(all_paths) > _PATH_CAP:
            raise InfiniteDimensional("presentation search exceeded the path cap")
        if all(not any(values[p]) for p in nxt):
            break
        layer = [p for p in nxt]
    zero_level = length

    by_block: dict = {}
    for p in all_paths:
        by_block.setdefault((p.source, p.target), []).append(p)
    candidate_relations = []
    for key, ps in by_block.items():
        ps = sorted(ps, key=lambda p: (p.length, p.arrows))
        expected = len(conc.blocks.get(key, []))
        vals = [values[p] for p in ps]
        # columns = paths; rows = coordinates
        mat_rows = [[vals[j][i] for j in range(len(ps))] for i in range(n)]
        red, piv = _rref_rows(mat_rows, len(ps))
        if len(piv) != expected:
            raise InternalInconsistency(
                f"paths {key} span {len(piv)} dimensions, block has {expected}")
        pivset = set(piv)
        for j, p in enumerate(ps):
            if j in pivset:
                continue
            terms = [(Fraction(1), p)]
            for r, pc in zip(red, piv):
                if r[j]:
                    terms.append((-r[j], ps[pc]))
            if any(t.length < 2 for _, t in terms):
                raise InternalInconsistency(f"relation with a short path in block {key}")
            candidate_relations.append(Relation(terms))

    relations = _minimal_relations(q, candidate_relations, zero_level)
    bound = nilpotency_bound if nilpotency_bound is not None else max(zero_level, 1)
    alg = build_algebra(q, relations, bound, name=name)
    expected_dim = sum(len(v) for v in conc.blocks.values())
    if alg.dimension != expected_dim:
        raise InternalInconsistency(
            f"presented algebra has dimension {alg.dimension}, expected {expected_dim}")
    realization = [values[p] if p in values else _evaluate(conc, images, p) for p in alg.basis]
    return alg, realization


def _evaluate(conc: ConcreteAlgebra, images: dict, p: Path):
    v = tuple(conc.idempotents[p.source])
    for nm in p.arrows:
        v = conc.mul(v, images[nm])
    return v


def _minimal_relations(q: Quiver, candidates: list, top: int) -> list:
    """Drop candidates already in the two-sided ideal generated by earlier ones."""
    paths = enumerate_paths(q, top)
    ending: dict = {}
    starting: dict = {}
    blocks: dict = {}
    for p in paths:
        ending.setdefault(p.target, []).append(p)
        starting.setdefault(p.source, []).append(p)
        blocks.setdefault((p.source, p.target), []).append(p)
    cols = {key: {p: k for k, p in enumerate(ps)} for key, ps in blocks.items()}
    spans: dict = {key: ([], []) for key in blocks}

    def vec(key, terms):
        v = [Fraction(0)] * len(cols[key])
        for c, p in terms:
            if p.length <= top:
                v[cols[key][p]] += c
        return v

    kept = []
    candidates = sorted(candidates, key=lambda r: (max(p.length for _, p in r.terms),
                                                   [str(p) for _, p in r.terms]))
    for r in candidates:
        key = (r.source, r.target)
        rows, piv = spans[key]
        if rows and _in_span(rows, piv, vec(key, r.terms)):
            continue
        kept.append(r)
        minlen = min(p.length for _, p in r.terms)
        touched: dict = {}
        for pre in ending.get(r.source, []):
            for post in starting.get(r.target, []):
                if pre.length + minlen + post.length > top:
                    continue
                k2 = (pre.source, post.target)
                terms = [(c, Path(pre.source, post.target, pre.arrows + p.arrows + post.arrows))
                         for c, p in r.terms]
                v = vec(k2, terms)
                if any(v):
                    touched.setdefault(k2, []).append(v)
        for k2, vs in touched.items():
            rows2, piv2 = spans[k2]
            red, p2 = _span_rref([list(x) for x in rows2] + vs, len(cols[k2]))
            spans[k2] = ([list(x) for x in red], p2)
    return kept


# --------------------------------------------------------------------------
# algebra-level constructions


@dataclass
class QuotientMap:
    """Data of a surjection ``A -> B = A/J``.

    ``images`` (dim B x dim A) sends A-coordinates to B-coordinates; ``lift``
    (dim A x dim B) sends each B basis element to a representative in A.
    """

    source: BoundQuiverAlgebra
    target: BoundQuiverAlgebra
    images: Matrix
    lift: Matrix
    ideal_basis: list = field(default_factory=list)

    def apply(self, x: Sequence) -> tuple:
        return self.images.apply(x)


def ideal_closure(a: BoundQuiverAlgebra, generators: Sequence) -> tuple[list, list]:
    """RREF basis (rows, pivots) of the two-sided ideal generated by ``generators``."""
    n = a.dimension
    vecs = []
    for g in generators:
        g = tuple(to_rational(x) for x in g)
        if len(g) != n:
            raise ValueError("ideal generator has the wrong length")
        for i in range(n):
            left = a.multiply(a.unit_vector(i), g)
            if not any(left):
                continue
            for j in range(n):
                v = a.multiply(left, a.unit_vector(j))
                if any(v):
                    vecs.append(list(v))
    if not vecs:
        return [], []
    return _span_rref(vecs, n)


def _reduce(rows, piv, v) -> tuple:
    v = list(v)
    for r, p in zip(rows, piv):
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, r)]
    return tuple(v)


def quotient_algebra(a: BoundQuiverAlgebra, ideal_elements: Sequence, name: str | None = None):
    """Present ``A / J`` for the two-sided ideal J generated by ``ideal_elements``."""
    rows, piv = ideal_closure(a, ideal_elements)
    n = a.dimension
    if not rows:
        ident = Matrix.identity(n)
        return a, QuotientMap(a, a, ident, ident, [])
    surviving = [v for v in a.vertices if not _in_span(rows, piv, a.idempotent(v))]
    if not surviving:
        raise ImproperIdeal("the ideal contains every vertex idempotent")

    def red(v):
        return _reduce(rows, piv, v)

    blocks = {}
    rad_blocks = {}
    for s in surviving:
        for t in surviving:
            idx = a.basis_between(s, t)
            vecs = [red(a.unit_vector(i)) for i in idx]
            chosen = _independent_subset(vecs, n)
            if chosen:
                blocks[(s, t)] = [vecs[k] for k in chosen]
            rvecs = [red(a.unit_vector(i)) for i in idx if a.basis[i].length > 0]
            rchosen = _independent_subset(rvecs, n)
            if rchosen:
                rad_blocks[(s, t)] = [rvecs[k] for k in rchosen]
    conc = ConcreteAlgebra(surviving, blocks, rad_blocks,
                           lambda x, y: red(a.multiply(x, y)),
                           {v: red(a.idempotent(v)) for v in surviving}, a.zero())
    cands = [(ar.name, ar.source, ar.target, red(a.arrow_element(ar.name)))
             for ar in a.quiver.arrows if ar.source in surviving and ar.target in surviving]
    b, realization = present(conc, cands, arrow_prefix="q", name=name)
    lift = Matrix.from_columns(realization, n)
    # express reduced A-basis vectors in B-coordinates
    cols = []
    for i in range(n):
        v = red(a.unit_vector(i))
        if not any(v):
            cols.append((Fraction(0),) * b.dimension)
            continue
        try:
            cols.append(solve(lift, v))
        except NoSolution as exc:
            raise InternalInconsistency("quotient coordinates are not spanned by the realization") from exc
    images = Matrix.from_columns(cols, b.dimension)
    return b, QuotientMap(a, b, images, lift, [tuple(r) for r in rows])


def fingerprint(a: BoundQuiverAlgebra) -> dict:
    return {
        "vertices": len(a.vertices),
        "arrows": len(a.quiver.arrows),
        "dimension": a.dimension,
        "cartan": a.cartan_matrix(),
        "arrow_counts": [[a.quiver.arrow_count(s, t) for t in a.vertices] for s in a.vertices],
    }


def fingerprint_bijections(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra, limit: int | None = None):
    """Vertex bijections matching arrow counts and Cartan matrices (generator)."""
    if (len(a.vertices), a.dimension, len(a.quiver.arrows)) != (len(b.vertices), b.dimension, len(b.quiver.arrows)):
        return
    fa, fb = fingerprint(a), fingerprint(b)
    n = len(a.vertices)
    found = 0

    def ok(assign, i, j):
        for i2, j2 in assign.items():
            for x, y in ((i, i2), (i2, i)):
                xb, yb = (j if x == i else j2), (j2 if y == i2 else j)
                if fa["cartan"][x][y] != fb["cartan"][xb][yb]:
                    return False
                if fa["arrow_counts"][x][y] != fb["arrow_counts"][xb][yb]:
                    return False
        return (fa["cartan"][i][i] == fb["cartan"][j][j]
                and fa["arrow_counts"][i][i] == fb["arrow_counts"][j][j])

    def rec(i, assign, used):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if i == n:
            found += 1
            yield dict(assign)
            return
        for j in range(n):
            if j in used or not ok(assign, i, j):
                continue
            assign[i] = j
            used.add(j)
            yield from rec(i + 1, assign, used)
            del assign[i]
            used.discard(j)

    for m in rec(0, {}, set()):
        yield {a.vertices[i]: b.vertices[j] for i, j in m.items()}


def fingerprint_isomorphic(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra) -> dict | None:
    return next(fingerprint_bijections(a, b, limit=1), None)


def check_algebra_map(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra, m: Matrix) -> bool:
    """Is the linear map ``m`` (dim B x dim A) a unital algebra isomorphism?"""
    if m.shape != (b.dimension, a.dimension):
        return False
    if m.rows != m.cols or m.rank() != m.rows:
        return False
    if m.apply(a.one()) != b.one():
        return False
    cols = m.columns()
    for (i, j), prod in a.table.items():
        lhs = [Fraction(0)] * b.dimension
        for k, c in prod:
            for r in range(b.dimension):
                lhs[r] += c * cols[k][r]
        if tuple(lhs) != b.multiply(cols[i], cols[j]):
            return False
    for i in range(a.dimension):
        for j in range(a.dimension):
            if (i, j) in a.table:
                continue
            if any(b.multiply(cols[i], cols[j])):
                return False
    return True


def find_isomorphism(a: BoundQuiverAlgebra, b: BoundQuiverAlgebra, budget: int = 2000) -> Matrix | None:
    """Budget-limited search for an explicit unital isomorphism ``A -> B``.

    Arrows go to signed arrows of ``b`` between corresponding vertices; returns
    the matrix (dim B x dim A) of the isomorphism or ``None``.
    """
    tries = 0
    for vmap in fingerprint_bijections(a, b):
        slots = []
        for ar in a.quiver.arrows:
            s, t = vmap[ar.source], vmap[ar.target]
            targets = [x.name for x in b.quiver.arrows if (x.source, x.target) == (s, t)]
            slots.append((ar, targets))
        for choice in itertools.product(*[tg for _, tg in slots]):
            names = list(choice)
            groups: dict = {}
            bad = False
            for (ar, _), nm in zip(slots, names):
                key = (ar.source, ar.target)
                if nm in groups.setdefault(key, set()):
                    bad = True
                    break
                groups[key].add(nm)
            if bad:
                continue
            for signs in itertools.product((1, -1), repeat=len(names)):
                tries += 1
                if tries > budget:
                    return None
                images = {ar.name: tuple(sg * x for x in b.arrow_element(nm))
                          for (ar, _), nm, sg in zip(slots, names, signs)}
                cols = []
                for p in a.basis:
                    v = b.idempotent(vmap[p.source])
                    for nm in p.arrows:
                        v = b.multiply(v, images[nm])
                    cols.append(v)
                m = Matrix.from_columns(cols, b.dimension)
                if not all(not any(_eval_relation(b, images, vmap, r)) for r in a.relations):
                    continue
                if check_algebra_map(a, b, m):
                    return m
    return None


def _eval_relation(b, images, vmap, r: Relation):
    out = [Fraction(0)] * b.dimension
    for c, p in r.terms:
        v = b.idempotent(vmap[p.source])
        for nm in p.arrows:
            v = b.multiply(v, images[nm])
        for k, x in enumerate(v):
            out[k] += c * x
    return out


def structural_module(a: BoundQuiverAlgebra, v: str, kind: str):
    """Indecomposable projective, injective or simple module at vertex ``v``."""
    from . import repcat

    if kind == "projective":
        return repcat.projective(a, v)
    if kind == "injective":
        return repcat.injective(a, v)
    if kind == "simple":
        return repcat.simple(a, v)
    raise ValueError(f"unknown structural module kind {kind!r}")


@dataclass
class OnePointExtension:
    algebra: BoundQuiverAlgebra
    new_vertex: str
    base: BoundQuiverAlgebra
    module: object
    radical_witness: object  # Morphism rad P(new) -> module, restricted to the base


def one_point_extension(b: BoundQuiverAlgebra, x, new_vertex: str = "w", name: str | None = None) -> OnePointExtension:
    """The triangular algebra [[K, X], [0, B]] with ``rad P(new_vertex) = X``."""
    from . import repcat

    x.validate()
    if new_vertex in b.vertices:
        raise ValueError(f"vertex {new_vertex!r} already exists")
    offsets = {}
    total = 0
    for v in b.vertices:
        offsets[v] = total
        total += x.dims[v]
    nb = b.dimension
    n = 1 + total + nb  # (lambda, x-part, b-part)
    act = [repcat.total_action(x, i) for i in range(nb)]

    def split(vec):
        return vec[0], vec[1:1 + total], vec[1 + total:]

    def mul(u, w):
        l1, x1, b1 = split(u)
        l2, x2, b2 = split(w)
        lam = l1 * l2
        xp = [l1 * c for c in x2]
        for i, c in enumerate(b2):
            if c:
                moved = act[i].apply(x1)
                xp = [p + c * q for p, q in zip(xp, moved)]
        bp = b.multiply(b1, b2) if any(b1) and any(b2) else (Fraction(0),) * nb
        return (lam, *xp, *bp)

    def unit(pos):
        v = [Fraction(0)] * n
        v[pos] = Fraction(1)
        return tuple(v)

    verts = [new_vertex] + list(b.vertices)
    blocks: dict = {}
    rad_blocks: dict = {}
    blocks[(new_vertex, new_vertex)] = [unit(0)]
    for v in b.vertices:
        xs = [unit(1 + offsets[v] + k) for k in range(x.dims[v])]
        if xs:
            blocks[(new_vertex, v)] = xs
            rad_blocks[(new_vertex, v)] = xs
    for s in b.vertices:
        for t in b.vertices:
            idx = b.basis_between(s, t)
            if idx:
                blocks[(s, t)] = [unit(1 + total + i) for i in idx]
            ridx = [i for i in idx if b.basis[i].length > 0]
            if ridx:
                rad_blocks[(s, t)] = [unit(1 + total + i) for i in ridx]
    idem = {new_vertex: unit(0)}
    for v in b.vertices:
        idem[v] = unit(1 + total + b.idempotent_index(v))
    cands = [(ar.name, ar.source, ar.target, unit(1 + total + b.index[Path.of_arrows(b.quiver, [ar.name])]))
             for ar in b.quiver.arrows]
    conc = ConcreteAlgebra(verts, blocks, rad_blocks, mul, idem, (Fraction(0),) * n)
    alg, _ = present(conc, cands, arrow_prefix=f"{new_vertex}_", name=name)
    for ar in b.quiver.arrows:
        if alg.quiver.arrow(ar.name) != ar:
            raise InternalInconsistency("base arrows were not kept by the extension presentation")
    proj = repcat.projective(alg, new_vertex)
    rad = repcat.radical_submodule(proj)
    restricted = repcat.Representation(
        b, {v: rad.dims[v] for v in b.vertices}, {ar.name: rad.maps[ar.name] for ar in b.quiver.arrows})
    ok, witness = repcat.is_isomorphic(restricted, x, with_witness=True)
    if not ok:
        raise InternalInconsistency("rad P(new vertex) is not isomorphic to the extending module")
    return OnePointExtension(alg, new_vertex, b, x, witness)


class _ExceedsBound:
    """Sentinel: the global dimension is larger than the requested bound."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "ExceedsBound"


ExceedsBound = _ExceedsBound()


def projective_dimension_upto(m, bound: int):
    """Length of a minimal projective resolution of ``m``, or ExceedsBound."""
    from . import repcat

    cur = m
    for k in range(bound + 1):
        if cur.total_dim() == 0:
            return max(k - 1, 0) if k else 0
        cover = repcat.projective_cover(cur)
        ker = repcat.kernel_module(cover.morphism)
        if ker.total_dim() == 0:
            return k
        cur = ker
    return ExceedsBound


def global_dimension_upto(a: BoundQuiverAlgebra, bound: int):
    if bound < 0:
        raise ValueError("bound must be non-negative")
    from . import repcat

    best = 0
    for v in a.vertices:
        pd = projective_dimension_upto(repcat.simple(a, v), bound)
        if pd is ExceedsBound:
            return ExceedsBound
        best = max(best, pd)
    return best


def is_hereditary(a: BoundQuiverAlgebra) -> bool:
    """Homological and structural routes, cross-checked."""
    gd = global_dimension_upto(a, 1)
    homological = gd is not ExceedsBound and gd <= 1
    structural = a.quiver.is_acyclic() and a.dimension == len(enumerate_paths(a.quiver, len(a.vertices)))
    if homological != structural:
        raise InternalInconsistency(
            f"hereditary test disagrees: gldim route {homological}, structure route {structural}")
    return homological
