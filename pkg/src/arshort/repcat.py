"""Representations of bound quivers (right modules) and their morphisms.

A right ``KQ/I``-module is stored as one vector space per vertex and, for each
arrow ``a: i -> j``, a ``dim_j x dim_i`` matrix acting on column vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import (
    AlgebraMismatch,
    IdealActsNonzero,
    InternalInconsistency,
    RelationViolated,
    ShapeMismatch,
    UndecidedDecomposition,
)
from .exactla import (
    Matrix,
    NoSolution,
    charpoly,
    complement_basis,
    kernel_basis,
    poly_eval_matrix,
    rref,
    solve,
    solve_many,
)
from .quiveralg import BoundQuiverAlgebra, ConcreteAlgebra, Path, QuotientMap, present

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Representation:
    """A finite-dimensional right module over a bound quiver algebra."""

    def __init__(self, algebra: BoundQuiverAlgebra, dims: dict, maps: dict | None = None,
                 name: str | None = None, check: bool = True):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        unknown = set(dims) - set(q.vertices)
        if unknown:
            raise ShapeMismatch(f"dimensions given for unknown vertices {sorted(unknown)}")
        maps = dict(maps or {})
        unknown = set(maps) - {a.name for a in q.arrows}
        if unknown:
            raise ShapeMismatch(f"maps given for unknown arrows {sorted(unknown)}")
        self.maps = {}
        for a in q.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.name)
            if m is None:
                m = Matrix.zeros(*shape)
            elif not isinstance(m, Matrix):
                try:
                    m = Matrix.from_rows(m, cols=shape[1]) if shape[0] else Matrix.zeros(0, shape[1])
                except ValueError as exc:
                    raise ShapeMismatch(f"arrow {a.name}: {exc}") from exc
            self.maps[a.name] = m
        self.name = name
        self._key = None
        if check:
            self._check_shapes()

    # basic data ---------------------------------------------------------
    def _check_shapes(self) -> None:
        for a in self.algebra.quiver.arrows:
            m = self.maps[a.name]
            want = (self.dims[a.target], self.dims[a.source])
            if m.shape != want:
                raise ShapeMismatch(f"arrow {a.name} has matrix shape {m.shape}, expected {want}")

    def validate(self) -> None:
        self._check_shapes()
        for k, r in enumerate(self.algebra.relations):
            total = Matrix.zeros(self.dims[r.target], self.dims[r.source])
            for c, p in r.terms:
                total = total + self.path_matrix(p).scale(c)
            if not total.is_zero():
                raise RelationViolated(k, str(r))

    @property
    def key(self):
        if self._key is None:
            self._key = (id(self.algebra), tuple(self.dims[v] for v in self.algebra.vertices),
                         tuple(self.maps[a.name] for a in self.algebra.quiver.arrows))
        return self._key

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def offsets(self) -> dict:
        out, acc = {}, 0
        for v in self.algebra.vertices:
            out[v] = acc
            acc += self.dims[v]
        return out

    def path_matrix(self, p: Path) -> Matrix:
        m = Matrix.identity(self.dims[p.source])
        for n in p.arrows:
            m = self.maps[n] @ m
        return m

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Representation{label} dims={self.dim_vector()}>"


def total_action(m: Representation, i: int) -> Matrix:
    """Matrix of ``x -> x * b_i`` on the total space of ``m``."""
    a = m.algebra
    p = a.basis[i]
    n = m.total_dim()
    off = m.offsets()
    pm = m.path_matrix(p)
    rows = [[_ZERO] * n for _ in range(n)]
    for r in range(pm.rows):
        for c in range(pm.cols):
            if pm[r, c]:
                rows[off[p.target] + r][off[p.source] + c] = pm[r, c]
    return Matrix(n, n, rows)


def element_action(m: Representation, x: Sequence) -> Matrix:
    n = m.total_dim()
    out = Matrix.zeros(n, n)
    for i, c in enumerate(x):
        if c:
            out = out + total_action(m, i).scale(c)
    return out


class Morphism:
    """Per-vertex matrices ``f_v : M_v -> N_v`` commuting with the arrows."""

    def __init__(self, source: Representation, target: Representation, maps: dict, check: bool = False):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.maps = {}
        for v in source.algebra.vertices:
            f = maps.get(v)
            shape = (target.dims[v], source.dims[v])
            if f is None:
                f = Matrix.zeros(*shape)
            if f.shape != shape:
                raise ShapeMismatch(f"vertex {v}: map shape {f.shape}, expected {shape}")
            self.maps[v] = f
        if check and not self.is_homomorphism():
            raise ValueError("matrices do not intertwine the arrow actions")

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def is_homomorphism(self) -> bool:
        for a in self.algebra.quiver.arrows:
            lhs = self.maps[a.target] @ self.source.maps[a.name]
            rhs = self.target.maps[a.name] @ self.maps[a.source]
            if lhs != rhs:
                return False
        return True

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other`` (apply ``other`` first)."""
        if other.target.key != self.source.key:
            raise ShapeMismatch("morphisms are not composable")
        return Morphism(other.source, self.target,
                        {v: self.maps[v] @ other.maps[v] for v in self.algebra.vertices})

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return self.compose(other)

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        {v: self.maps[v] + other.maps[v] for v in self.algebra.vertices})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        {v: self.maps[v] - other.maps[v] for v in self.algebra.vertices})

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, {v: f.scale(c) for v, f in self.maps.items()})

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.maps.values())

    def total_matrix(self) -> Matrix:
        return Matrix.block_diagonal([self.maps[v] for v in self.algebra.vertices])

    def vector(self) -> tuple:
        return tuple(x for v in self.algebra.vertices for x in self.maps[v].entries())

    def is_iso(self) -> bool:
        return all(f.rows == f.cols and f.rank() == f.rows for f in self.maps.values())

    def is_mono(self) -> bool:
        return all(f.rank() == f.cols for f in self.maps.values())

    def is_epi(self) -> bool:
        return all(f.rank() == f.rows for f in self.maps.values())

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, {v: f.inverse() for v, f in self.maps.items()})

    def __repr__(self) -> str:
        return f"<Morphism {self.source.dim_vector()} -> {self.target.dim_vector()}>"


def identity(m: Representation) -> Morphism:
    return Morphism(m, m, {v: Matrix.identity(m.dims[v]) for v in m.algebra.vertices})


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, {})


def morphism_from_vector(m: Representation, n: Representation, vec: Sequence) -> Morphism:
    maps = {}
    pos = 0
    for v in m.algebra.vertices:
        r, c = n.dims[v], m.dims[v]
        chunk = vec[pos:pos + r * c]
        maps[v] = Matrix(r, c, [chunk[i * c:(i + 1) * c] for i in range(r)])
        pos += r * c
    return Morphism(m, n, maps)


@dataclass
class HomBasis:
    source: Representation
    target: Representation
    morphisms: list

    @property
    def dim(self) -> int:
        return len(self.morphisms)

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def __getitem__(self, i):
        return self.morphisms[i]

    def coordinates(self, f: Morphism) -> tuple:
        """Coordinates of ``f`` in this basis (raises NoSolution if outside the span)."""
        mat = Matrix.from_columns([g.vector() for g in self.morphisms], len(f.vector()))
        return solve(mat, f.vector())

    def combination(self, coeffs: Sequence) -> Morphism:
        out = zero_morphism(self.source, self.target)
        for c, g in zip(coeffs, self.morphisms):
            if c:
                out = out + g.scale(c)
        return out


_HOM_CACHE: dict = {}
_HOM_CACHE_MAX = 50_000


def _check_same(m: Representation, n: Representation) -> None:
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules live over different algebras")


def hom_basis(m: Representation, n: Representation) -> HomBasis:
    """Basis of Hom(m, n): the null space of the stacked intertwining equations."""
    _check_same(m, n)
    key = (m.key, n.key)
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return HomBasis(m, n, [Morphism(m, n, g.maps) for g in hit.morphisms])
    a = m.algebra
    verts = a.vertices
    offs = {}
    acc = 0
    for v in verts:
        offs[v] = acc
        acc += n.dims[v] * m.dims[v]
    nunk = acc
    rows = []
    for ar in a.quiver.arrows:
        s, t = ar.source, ar.target
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        if ms == 0 or nt == 0:
            continue
        ma = m.maps[ar.name]
        na = n.maps[ar.name]
        for i in range(nt):
            for j in range(ms):
                row = [_ZERO] * nunk
                # (f_t M_a)[i,j] = sum_k f_t[i,k] M_a[k,j]
                for k in range(mt):
                    c = ma[k, j]
                    if c:
                        row[offs[t] + i * mt + k] += c
                # (N_a f_s)[i,j] = sum_k N_a[i,k] f_s[k,j]
                for k in range(ns):
                    c = na[i, k]
                    if c:
                        row[offs[s] + k * ms + j] -= c
                if any(row):
                    rows.append(row)
    if rows:
        ker = kernel_basis(Matrix(len(rows), nunk, rows))
        vecs = ker.columns()
    else:
        vecs = [tuple(_ONE if k == i else _ZERO for k in range(nunk)) for i in range(nunk)]
    basis = HomBasis(m, n, [morphism_from_vector(m, n, v) for v in vecs])
    if len(_HOM_CACHE) > _HOM_CACHE_MAX:
        _HOM_CACHE.clear()
    _HOM_CACHE[key] = basis
    return HomBasis(m, n, list(basis.morphisms))


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------------
# structural modules


def zero_module(a: BoundQuiverAlgebra) -> Representation:
    return Representation(a, {})


def simple(a: BoundQuiverAlgebra, v: str) -> Representation:
    return Representation(a, {v: 1}, name=f"S({v})")


def projective(a: BoundQuiverAlgebra, v: str) -> Representation:
    """P(v) = e_v A; basis at vertex w: the basis paths v -> w."""
    dims = {w: len(a.basis_between(v, w)) for w in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        src = a.basis_between(v, ar.source)
        tgt = a.basis_between(v, ar.target)
        pos = {k: r for r, k in enumerate(tgt)}
        el = a.arrow_element(ar.name)
        rows = [[_ZERO] * len(src) for _ in range(len(tgt))]
        for c, i in enumerate(src):
            prod = a.multiply(a.unit_vector(i), el)
            for k, x in enumerate(prod):
                if x:
                    rows[pos[k]][c] = x
        maps[ar.name] = Matrix(len(tgt), len(src), rows)
    return Representation(a, dims, maps, name=f"P({v})")


def injective(a: BoundQuiverAlgebra, v: str) -> Representation:
    """I(v) = D(A e_v); basis at vertex w: duals of the basis paths w -> v."""
    dims = {w: len(a.basis_between(w, v)) for w in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        src = a.basis_between(ar.source, v)
        tgt = a.basis_between(ar.target, v)
        pos = {k: c for c, k in enumerate(src)}
        el = a.arrow_element(ar.name)
        rows = [[_ZERO] * len(src) for _ in range(len(tgt))]
        for r, x in enumerate(tgt):
            prod = a.multiply(el, a.unit_vector(x))
            for k, c in enumerate(prod):
                if c:
                    rows[r][pos[k]] = c
        maps[ar.name] = Matrix(len(tgt), len(src), rows)
    return Representation(a, dims, maps, name=f"I({v})")


def regular_module(a: BoundQuiverAlgebra) -> Representation:
    return direct_sum([projective(a, v) for v in a.vertices])


def regular_injective(a: BoundQuiverAlgebra) -> Representation:
    """D(A) as the sum of the indecomposable injectives."""
    return direct_sum([injective(a, v) for v in a.vertices])


def projective_morphism(a: BoundQuiverAlgebra, x: Sequence, v: str, w: str) -> Morphism:
    """P(v) -> P(w), ``b -> x b`` for ``x`` in ``e_w A e_v``."""
    pv, pw = projective(a, v), projective(a, w)
    maps = {}
    for u in a.vertices:
        src = a.basis_between(v, u)
        tgt = a.basis_between(w, u)
        pos = {k: r for r, k in enumerate(tgt)}
        rows = [[_ZERO] * len(src) for _ in range(len(tgt))]
        for c, i in enumerate(src):
            prod = a.multiply(x, a.unit_vector(i))
            for k, val in enumerate(prod):
                if val:
                    if k not in pos:
                        raise ValueError("element is not in e_w A e_v")
                    rows[pos[k]][c] = val
        maps[u] = Matrix(len(tgt), len(src), rows)
    return Morphism(pv, pw, maps)


# ---------------------------------------------------------------------------
# sums, submodules, kernels, cokernels


@dataclass
class SumData:
    module: Representation
    inclusions: list
    projections: list


def direct_sum_data(parts: Sequence[Representation], algebra: BoundQuiverAlgebra | None = None) -> SumData:
    parts = list(parts)
    if not parts:
        if algebra is None:
            raise ValueError("empty direct sum needs an algebra")
        return SumData(zero_module(algebra), [], [])
    a = parts[0].algebra
    for p in parts:
        if p.algebra is not a:
            raise AlgebraMismatch("direct sum of modules over different algebras")
    dims = {v: sum(p.dims[v] for p in parts) for v in a.vertices}
    maps = {ar.name: Matrix.block_diagonal([p.maps[ar.name] for p in parts]) for ar in a.quiver.arrows}
    total = Representation(a, dims, maps)
    incs, projs = [], []
    offs = {v: 0 for v in a.vertices}
    for p in parts:
        inc, prj = {}, {}
        for v in a.vertices:
            d, o = p.dims[v], offs[v]
            rows = [[_ONE if r == o + c else _ZERO for c in range(d)] for r in range(dims[v])]
            inc[v] = Matrix(dims[v], d, rows)
            prj[v] = inc[v].transpose()
            offs[v] += d
        incs.append(Morphism(p, total, inc))
        projs.append(Morphism(total, p, prj))
    return SumData(total, incs, projs)


def direct_sum(parts: Sequence[Representation], algebra: BoundQuiverAlgebra | None = None) -> Representation:
    return direct_sum_data(parts, algebra).module


def power(m: Representation, k: int) -> Representation:
    return direct_sum([m] * k, m.algebra)


def submodule(m: Representation, bases: dict) -> tuple[Representation, Morphism]:
    """Submodule spanned per vertex by the columns of ``bases[v]`` (must be invariant)."""
    a = m.algebra
    dims = {v: bases[v].cols for v in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        bs, bt = bases[ar.source], bases[ar.target]
        image = m.maps[ar.name] @ bs
        if bs.cols == 0:
            maps[ar.name] = Matrix.zeros(bt.cols, 0)
            continue
        if bt.cols == 0:
            if not image.is_zero():
                raise ValueError(f"subspace is not invariant under arrow {ar.name}")
            maps[ar.name] = Matrix.zeros(0, bs.cols)
            continue
        try:
            maps[ar.name] = solve_many(bt, image)
        except NoSolution as exc:
            raise ValueError(f"subspace is not invariant under arrow {ar.name}") from exc
    sub = Representation(a, dims, maps)
    return sub, Morphism(sub, m, {v: bases[v] for v in a.vertices})


def quotient_module(m: Representation, bases: dict) -> tuple[Representation, Morphism]:
    """m / U for the invariant subspaces U spanned by ``bases[v]``."""
    a = m.algebra
    comp = {}
    proj = {}
    for v in a.vertices:
        b = bases[v]
        d = m.dims[v]
        c = complement_basis(b, d)
        comp[v] = c
        full = Matrix.hstack([b, c]) if b.cols else c
        if full.cols == 0:
            proj[v] = Matrix.zeros(0, d)
            continue
        inv = full.inverse()
        proj[v] = inv.submatrix(range(b.cols, d), range(d))
    dims = {v: comp[v].cols for v in a.vertices}
    maps = {ar.name: proj[ar.target] @ m.maps[ar.name] @ comp[ar.source] for ar in a.quiver.arrows}
    q = Representation(a, dims, maps)
    return q, Morphism(m, q, proj)


def kernel_data(f: Morphism) -> tuple[Representation, Morphism]:
    bases = {v: kernel_basis(f.maps[v]) for v in f.algebra.vertices}
    return submodule(f.source, bases)


def kernel_module(f: Morphism) -> Representation:
    return kernel_data(f)[0]


def image_bases(f: Morphism) -> dict:
    out = {}
    for v in f.algebra.vertices:
        m = f.maps[v]
        _, _, piv = rref(m)
        out[v] = m.submatrix(range(m.rows), piv)
    return out


def cokernel_data(f: Morphism) -> tuple[Representation, Morphism]:
    return quotient_module(f.target, image_bases(f))


def cokernel_module(f: Morphism) -> Representation:
    return cokernel_data(f)[0]


def radical_bases(m: Representation) -> dict:
    a = m.algebra
    out = {}
    for v in a.vertices:
        imgs = [m.maps[ar.name] for ar in a.quiver.arrows_to(v) if m.dims[ar.source]]
        if imgs and m.dims[v]:
            stacked = Matrix.hstack(imgs)
            _, _, piv = rref(stacked)
            out[v] = stacked.submatrix(range(stacked.rows), piv)
        else:
            out[v] = Matrix.zeros(m.dims[v], 0)
    return out


def radical_submodule(m: Representation) -> Representation:
    return submodule(m, radical_bases(m))[0]


def top_module(m: Representation) -> Representation:
    return quotient_module(m, radical_bases(m))[0]


def socle_bases(m: Representation) -> dict:
    a = m.algebra
    out = {}
    for v in a.vertices:
        outs = [m.maps[ar.name] for ar in a.quiver.arrows_from(v)]
        if outs and m.dims[v]:
            out[v] = kernel_basis(Matrix.vstack(outs))
        else:
            out[v] = Matrix.identity(m.dims[v])
    return out


@dataclass
class ProjectiveCover:
    """P0 = sum of P(v) over ``vertices`` with ``generators[k]`` in M_{vertices[k]}."""

    module: Representation
    projective: Representation
    vertices: list
    generators: list
    morphism: Morphism


def projective_cover(m: Representation) -> ProjectiveCover:
    a = m.algebra
    rad = radical_bases(m)
    verts, gens = [], []
    for v in a.vertices:
        comp = complement_basis(rad[v], m.dims[v])
        for j in range(comp.cols):
            verts.append(v)
            gens.append(comp.col(j))
    parts = [projective(a, v) for v in verts]
    p0 = direct_sum(parts, a)
    maps = {}
    for w in a.vertices:
        cols = []
        for v, g in zip(verts, gens):
            for i in a.basis_between(v, w):
                cols.append(m.path_matrix(a.basis[i]).apply(g))
        maps[w] = Matrix.from_columns(cols, m.dims[w]) if cols else Matrix.zeros(m.dims[w], 0)
    return ProjectiveCover(m, p0, verts, gens, Morphism(p0, m, maps))


def injective_envelope_vertices(m: Representation) -> list:
    soc = socle_bases(m)
    return [v for v in m.algebra.vertices for _ in range(soc[v].cols)]


# ---------------------------------------------------------------------------
# radicals of endomorphism rings, decomposition, isomorphism


def _trace_form_rank(ms: Sequence[Matrix]) -> int:
    """Rank of (x, y) -> tr(xy) on the span of ``ms``; equals dim E/rad E in characteristic 0."""
    k = len(ms)
    if k == 0:
        return 0
    gram = [[_ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            prod = ms[i] @ ms[j]
            t = sum((prod[r, r] for r in range(prod.rows)), _ZERO)
            gram[i][j] = gram[j][i] = t
    return Matrix(k, k, gram).rank()


def radical_of_span(ms: Sequence[Matrix]) -> Matrix:
    """Coefficient vectors (as columns) spanning the radical of an algebra of matrices."""
    k = len(ms)
    gram = [[_ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            prod = ms[i] @ ms[j]
            t = sum((prod[r, r] for r in range(prod.rows)), _ZERO)
            gram[i][j] = gram[j][i] = t
    return kernel_basis(Matrix(k, k, gram))


def endomorphism_residue_dim(m: Representation) -> int:
    """dim End(m)/rad End(m)."""
    return _trace_form_rank([f.total_matrix() for f in hom_basis(m, m)])


def is_indecomposable(m: Representation) -> bool:
    return m.total_dim() > 0 and endomorphism_residue_dim(m) == 1


@dataclass
class Piece:
    module: Representation
    inclusion: Morphism
    projection: Morphism
    decided: bool = True


@dataclass
class DecompositionReport:
    parts: list  # (indecomposable Representation, multiplicity)
    status: str  # "Complete" | "Undecided"
    pieces: list = field(default_factory=list)
    classes: list = field(default_factory=list)  # class index per piece

    @property
    def complete(self) -> bool:
        return self.status == "Complete"

    def distinct(self) -> list:
        return [p for p, _ in self.parts]


def _sympy_factors(coeffs: Sequence[Fraction]):
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], x, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for f, k in facs:
        lc = f.LC()
        cs = [Fraction(int(sympy.fraction(c / lc)[0]), int(sympy.fraction(c / lc)[1])) for c in f.all_coeffs()]
        out.append((cs, k))
    return out


def _split_by(m: Representation, f: Morphism):
    """Generalized-eigenspace splitting of ``m`` along the endomorphism ``f``, or None."""
    total = f.total_matrix()
    facs = _sympy_factors(charpoly(total))
    if len(facs) < 2:
        return None
    spaces = []
    for cs, k in facs:
        bases = {}
        for v in m.algebra.vertices:
            fv = f.maps[v]
            if fv.rows == 0:
                bases[v] = Matrix.zeros(0, 0)
                continue
            bases[v] = kernel_basis(poly_eval_matrix(cs, fv).power(k))
        if sum(b.cols for b in bases.values()):
            spaces.append(bases)
    if len(spaces) < 2:
        return None
    return spaces


def _candidate_endomorphisms(basis: list):
    k = len(basis)
    yield from basis
    for i in range(k):
        for j in range(i + 1, k):
            yield basis[i] + basis[j]
    for power_ in (1, 2, 3):
        acc = None
        for idx, g in enumerate(basis):
            term = g.scale((idx + 1) ** power_)
            acc = term if acc is None else acc + term
        if acc is not None:
            yield acc


def _split_pieces(m: Representation) -> list:
    if m.total_dim() == 0:
        return []
    basis = hom_basis(m, m).morphisms
    if _trace_form_rank([g.total_matrix() for g in basis]) == 1:
        return [Piece(m, identity(m), identity(m))]
    for cand in _candidate_endomorphisms(basis):
        spaces = _split_by(m, cand)
        if spaces is None:
            continue
        a = m.algebra
        full = {v: Matrix.hstack([s[v] for s in spaces]) if m.dims[v] else Matrix.zeros(0, 0) for v in a.vertices}
        inv = {v: (full[v].inverse() if m.dims[v] else Matrix.zeros(0, 0)) for v in a.vertices}
        pieces = []
        offs = {v: 0 for v in a.vertices}
        for s in spaces:
            sub, inc = submodule(m, s)
            prj = {}
            for v in a.vertices:
                c = s[v].cols
                prj[v] = inv[v].submatrix(range(offs[v], offs[v] + c), range(m.dims[v]))
                offs[v] += c
            proj = Morphism(m, sub, prj)
            for piece in _split_pieces(sub):
                pieces.append(Piece(piece.module, inc.compose(piece.inclusion),
                                    piece.projection.compose(proj), piece.decided))
        return pieces
    return [Piece(m, identity(m), identity(m), decided=False)]


def iso_indecomposable(x: Representation, y: Representation):
    """Isomorphism test when ``x`` has a local endomorphism ring; returns witness or None."""
    if x.dim_vector() != y.dim_vector():
        return None
    for f in hom_basis(x, y):
        if f.is_iso():
            return f
    return None


def decompose(m: Representation) -> DecompositionReport:
    """Krull-Schmidt decomposition by Fitting splittings of endomorphisms."""
    pieces = _split_pieces(m)
    classes = []
    reps: list = []
    mults: list = []
    for p in pieces:
        found = None
        for k, r in enumerate(reps):
            if iso_indecomposable(r, p.module) is not None:
                found = k
                break
        if found is None:
            reps.append(p.module)
            mults.append(1)
            classes.append(len(reps) - 1)
        else:
            mults[found] += 1
            classes.append(found)
    status = "Complete" if all(p.decided for p in pieces) else "Undecided"
    return DecompositionReport(list(zip(reps, mults)), status, pieces, classes)


def is_isomorphic(m: Representation, n: Representation, with_witness: bool = False):
    _check_same(m, n)
    result = _is_isomorphic(m, n)
    if with_witness:
        return (result is not None), result
    return result is not None


def _is_isomorphic(m: Representation, n: Representation):
    if m.dim_vector() != n.dim_vector():
        return None
    if m.total_dim() == 0:
        return zero_morphism(m, n)
    hb = hom_basis(m, n).morphisms
    if not hb:
        return None
    for cand in _candidate_endomorphisms(hb):
        if cand.is_iso():
            return cand
    dm, dn = decompose(m), decompose(n)
    if dm.complete and dn.complete:
        return _iso_from_decompositions(m, n, dm, dn)
    return _iso_by_grid(m, n, hb)


def _iso_from_decompositions(m, n, dm: DecompositionReport, dn: DecompositionReport):
    used = [False] * len(dn.pieces)
    total = zero_morphism(m, n)
    for pm in dm.pieces:
        for j, pn in enumerate(dn.pieces):
            if used[j]:
                continue
            phi = iso_indecomposable(pm.module, pn.module)
            if phi is not None:
                used[j] = True
                total = total + pn.inclusion.compose(phi).compose(pm.projection)
                break
        else:
            return None
    if not all(used):
        return None
    if not total.is_iso():
        raise InternalInconsistency("assembled isomorphism is not invertible")
    return total


def _iso_by_grid(m, n, hb, cap: int = 20000):
    degree = m.total_dim()
    k = len(hb)
    if (degree + 1) ** k > cap:
        raise UndecidedDecomposition("isomorphism test needs a complete decomposition")
    for coeffs in itertools.product(range(degree + 1), repeat=k):
        f = HomBasis(m, n, hb).combination(coeffs)
        if f.is_iso():
            return f
    return None


# ---------------------------------------------------------------------------
# endomorphism algebras


@dataclass
class EndomorphismAlgebra:
    """Basic algebra of End(m) presented by a quiver with relations.

    Vertex ``str(k)`` corresponds to ``summands[k]``; ``realization[i]`` is the
    morphism (between summands) represented by the ``i``-th basis path. A path
    from vertex s to vertex t is a morphism ``summands[t] -> summands[s]``, so
    that the path product is composition ``x * y = x o y``.
    """

    algebra: BoundQuiverAlgebra
    summands: list
    realization: list
    multiplicities: list


def endomorphism_algebra(m: Representation | None = None, summands: Sequence[Representation] | None = None,
                         name: str | None = None, labels: Sequence[str] | None = None) -> EndomorphismAlgebra:
    """Present the basic algebra of End(m) (or End of the sum of given summands)."""
    if summands is None:
        rep = decompose(m)
        if not rep.complete:
            raise UndecidedDecomposition("endomorphism algebra needs a complete decomposition")
        summands = rep.distinct()
        mults = [k for _, k in rep.parts]
    else:
        summands = list(summands)
        mults = [1] * len(summands)
    k = len(summands)
    labels = list(labels) if labels is not None else [str(i) for i in range(k)]
    # global basis: for each (s, t), Hom(summands[t], summands[s])
    gbasis = []
    block_of = {}
    for s in range(k):
        for t in range(k):
            hb = hom_basis(summands[t], summands[s]).morphisms
            block_of[(s, t)] = list(range(len(gbasis), len(gbasis) + len(hb)))
            gbasis.extend((s, t, f) for f in hb)
    n = len(gbasis)
    coord_mats = {}
    for key, idx in block_of.items():
        if idx:
            coord_mats[key] = Matrix.from_columns([gbasis[i][2].vector() for i in idx],
                                                  len(gbasis[idx[0]][2].vector()))

    def coords(s, t, f: Morphism) -> tuple:
        idx = block_of[(s, t)]
        if not idx:
            if not f.is_zero():
                raise InternalInconsistency("nonzero morphism in an empty Hom block")
            return ()
        return solve(coord_mats[(s, t)], f.vector())

    table = {}
    for i, (s, u, f) in enumerate(gbasis):
        for j, (u2, t, g) in enumerate(gbasis):
            if u2 != u:
                continue
            comp = f.compose(g)
            if comp.is_zero():
                continue
            c = coords(s, t, comp)
            table[(i, j)] = [(block_of[(s, t)][r], x) for r, x in enumerate(c) if x]

    def mul(x, y):
        out = [_ZERO] * n
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                for r, c in table.get((i, j), ()):
                    out[r] += a * b * c
        return tuple(out)

    def unit(i):
        v = [_ZERO] * n
        v[i] = _ONE
        return tuple(v)

    def embed(key, coeff):
        v = [_ZERO] * n
        for i, c in zip(block_of[key], coeff):
            v[i] = c
        return tuple(v)

    blocks, rad_blocks, idem = {}, {}, {}
    for s in range(k):
        for t in range(k):
            idx = block_of[(s, t)]
            if not idx:
                continue
            blocks[(labels[s], labels[t])] = [unit(i) for i in idx]
            if s != t:
                rad_blocks[(labels[s], labels[t])] = [unit(i) for i in idx]
            else:
                radc = radical_of_span([gbasis[i][2].total_matrix() for i in idx])
                if radc.cols:
                    rad_blocks[(labels[s], labels[t])] = [embed((s, s), radc.col(j)) for j in range(radc.cols)]
                if len(idx) - radc.cols != 1:
                    raise InternalInconsistency("summand endomorphism ring is not local")
        idem[labels[s]] = embed((s, s), coords(s, s, identity(summands[s])))
    conc = ConcreteAlgebra(labels, blocks, rad_blocks, mul, idem, (_ZERO,) * n)
    alg, realization = present(conc, arrow_prefix="a", name=name)
    lab_index = {lab: i for i, lab in enumerate(labels)}
    morphs = []
    for p, vec in zip(alg.basis, realization):
        s, t = lab_index[p.source], lab_index[p.target]
        f = zero_morphism(summands[t], summands[s])
        for i, c in enumerate(vec):
            if c:
                if gbasis[i][0] != s or gbasis[i][1] != t:
                    raise InternalInconsistency("realization leaves its Hom block")
                f = f + gbasis[i][2].scale(c)
        morphs.append(f)
    return EndomorphismAlgebra(alg, summands, morphs, mults)


# ---------------------------------------------------------------------------
# annihilators, sincerity, classes, transport along quotients


def annihilator(m: Representation) -> list:
    """Basis of ann(m) = {a : m a = 0} as algebra-element vectors."""
    a = m.algebra
    n = m.total_dim()
    if n == 0:
        return [a.unit_vector(i) for i in range(a.dimension)]
    cols = [total_action(m, i).entries() for i in range(a.dimension)]
    mat = Matrix.from_columns(cols, n * n)
    ker = kernel_basis(mat)
    return [ker.col(j) for j in range(ker.cols)]


def is_sincere(m: Representation) -> bool:
    return all(d > 0 for d in m.dim_vector())


def is_faithful(m: Representation) -> bool:
    return not annihilator(m)


def class_vector(m: Representation) -> tuple:
    return m.dim_vector()


def inflate_from_quotient(b_module: Representation, qmap: QuotientMap) -> Representation:
    """View a B-module as an A-module along ``A -> B``."""
    if b_module.algebra is not qmap.target:
        raise AlgebraMismatch("module is not over the quotient algebra")
    a = qmap.source
    dims = {v: (b_module.dims[v] if v in qmap.target.vertices else 0) for v in a.vertices}
    off = b_module.offsets()
    maps = {}
    for ar in a.quiver.arrows:
        d_s, d_t = dims[ar.source], dims[ar.target]
        if d_s == 0 or d_t == 0:
            maps[ar.name] = Matrix.zeros(d_t, d_s)
            continue
        belem = qmap.apply(a.arrow_element(ar.name))
        act = element_action(b_module, belem)
        maps[ar.name] = act.submatrix(range(off[ar.target], off[ar.target] + d_t),
                                      range(off[ar.source], off[ar.source] + d_s))
    out = Representation(a, dims, maps)
    out.validate()
    return out


def restrict_to_quotient(a_module: Representation, qmap: QuotientMap) -> Representation:
    """View an A-module killed by the ideal as a module over ``B = A/J``."""
    if a_module.algebra is not qmap.source:
        raise AlgebraMismatch("module is not over the source algebra")
    for g in qmap.ideal_basis:
        if not element_action(a_module, g).is_zero():
            raise IdealActsNonzero("the ideal does not annihilate the module")
    b = qmap.target
    if b is qmap.source:
        return a_module
    off = a_module.offsets()
    dims = {v: a_module.dims[v] for v in b.vertices}
    maps = {}
    for ar in b.quiver.arrows:
        col = b.index[Path.of_arrows(b.quiver, [ar.name])]
        lift = qmap.lift.col(col)
        act = element_action(a_module, lift)
        maps[ar.name] = act.submatrix(range(off[ar.target], off[ar.target] + dims[ar.target]),
                                      range(off[ar.source], off[ar.source] + dims[ar.source]))
    out = Representation(b, dims, maps)
    out.validate()
    return out


def transport(m: Representation, target: BoundQuiverAlgebra, iso: Matrix) -> Representation:
    """Module over ``target`` obtained along an algebra isomorphism ``target -> m.algebra``.

    ``iso`` (dim source x dim target) must send stationary paths to stationary
    paths with the same vertex names.
    """
    off = m.offsets()
    dims = {v: m.dims[v] for v in target.vertices}
    maps = {}
    for ar in target.quiver.arrows:
        el = iso.apply(target.arrow_element(ar.name))
        act = element_action(m, el)
        maps[ar.name] = act.submatrix(range(off[ar.target], off[ar.target] + dims[ar.target]),
                                      range(off[ar.source], off[ar.source] + dims[ar.source]))
    out = Representation(target, dims, maps)
    out.validate()
    return out
