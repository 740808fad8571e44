"""Auslander-Reiten theory: presentations, transpose, duality, translates,
almost split sequences, knitting of AR quivers and sections.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency, InvalidSection, IsProjective, NotOneComponent, PathNotInFragment
from .exactla import Matrix, NoSolution, complement_basis, format_rational, kernel_basis, rref, solve, solve_many
from .quiveralg import BoundQuiverAlgebra
from . import repcat as rc
from .repcat import Morphism, Representation

DEFAULT_MAX_MODULES = 500
DEFAULT_MAX_TOTAL_DIM = 64


# ---------------------------------------------------------------------------
# projective presentations and the transpose


@dataclass
class ProjectivePresentation:
    """Minimal presentation ``P1 --f--> P0 --cover--> M -> 0``.

    ``p1_vertices`` / ``p0_vertices`` list the indecomposable projective
    summands in order; ``components[j][i]`` is the algebra element ``a`` in
    ``e_{p0[i]} A e_{p1[j]}`` with ``f`` on that block given by ``b -> a b``.
    """

    module: Representation
    p1: Representation
    p0: Representation
    f: Morphism
    cover: Morphism
    p1_vertices: list
    p0_vertices: list
    components: list

    def is_exact(self) -> bool:
        comp = self.cover.compose(self.f)
        if not comp.is_zero() or not self.cover.is_epi():
            return False
        ker = rc.kernel_module(self.cover)
        return sum(m.rank() for m in self.f.maps.values()) == ker.total_dim()

    def is_minimal(self) -> bool:
        rad = rc.radical_bases(self.p0)
        for v in self.module.algebra.vertices:
            fv = self.f.maps[v]
            if fv.cols and rad[v].cols < fv.rows:
                span = Matrix.hstack([rad[v], fv])
                if span.rank() != rad[v].cols:
                    return False
        top_p0 = rc.top_module(self.p0)
        top_m = rc.top_module(self.module)
        return top_p0.dim_vector() == top_m.dim_vector()


def _components(a: BoundQuiverAlgebra, f: Morphism, p1_vertices, p0_vertices) -> list:
    """Read off the block elements of a map between sums of indecomposable projectives."""
    comps = []
    counters = {v: 0 for v in a.vertices}
    for u in p1_vertices:
        col = counters[u]
        # column of the generator e_u of this summand inside P1 at vertex u
        offset = 0
        seen = {v: 0 for v in a.vertices}
        for w in p1_vertices:
            if w == u and seen[w] == col:
                break
            offset += len(a.basis_between(w, u))
            seen[w] += 1
        gen_col = offset + a.basis_between(u, u).index(a.idempotent_index(u))
        counters[u] += 1
        image = f.maps[u].col(gen_col)
        row = []
        pos = 0
        for v in p0_vertices:
            idx = a.basis_between(v, u)
            el = [Fraction(0)] * a.dimension
            for k, i in enumerate(idx):
                el[i] = image[pos + k]
            pos += len(idx)
            row.append(tuple(el))
        comps.append(row)
    return comps


def minimal_projective_presentation(m: Representation) -> ProjectivePresentation:
    a = m.algebra
    c0 = rc.projective_cover(m)
    ker, inc = rc.kernel_data(c0.morphism)
    c1 = rc.projective_cover(ker)
    f = inc.compose(c1.morphism)
    comps = _components(a, f, c1.vertices, c0.vertices)
    return ProjectivePresentation(m, c1.projective, c0.projective, f, c0.morphism,
                                  list(c1.vertices), list(c0.vertices), comps)


def _sum_of_projective_map(a: BoundQuiverAlgebra, src_vertices, tgt_vertices, entry) -> Morphism:
    """Map between sums of projectives with block (i <- j) given by ``entry(j, i)``."""
    src = rc.direct_sum_data([rc.projective(a, v) for v in src_vertices], a)
    tgt = rc.direct_sum_data([rc.projective(a, v) for v in tgt_vertices], a)
    total = rc.zero_morphism(src.module, tgt.module)
    for j, u in enumerate(src_vertices):
        for i, v in enumerate(tgt_vertices):
            x = entry(j, i)
            if not any(x):
                continue
            blk = rc.projective_morphism(a, x, u, v)
            total = total + tgt.inclusions[i].compose(blk).compose(src.projections[j])
    return total


def transpose(m: Representation) -> Representation:
    """Tr m: cokernel of Hom(f, A) for a minimal presentation, over the opposite algebra."""
    a = m.algebra
    op = a.opposite()
    pres = minimal_projective_presentation(m)
    if not pres.p1_vertices and not pres.p0_vertices:
        return rc.zero_module(op)
    # Hom(P(v), A) = A e_v = P_op(v); Hom(f, A) is x -> x a = a^op x on the op side.
    g = _sum_of_projective_map(op, pres.p0_vertices, pres.p1_vertices,
                               lambda i, j: pres.components[j][i])
    return rc.cokernel_module(g)


def dual(m: Representation) -> Representation:
    """D m over the opposite algebra: transposed matrices on reversed arrows."""
    op = m.algebra.opposite()
    maps = {name: mat.transpose() for name, mat in m.maps.items()}
    return Representation(op, dict(m.dims), maps)


def dual_morphism(f: Morphism, source: Representation | None = None,
                  target: Representation | None = None) -> Morphism:
    """D f : D(target) -> D(source)."""
    src = target if target is not None else dual(f.target)
    tgt = source if source is not None else dual(f.source)
    return Morphism(src, tgt, {v: mat.transpose() for v, mat in f.maps.items()})


def tau(m: Representation) -> Representation:
    return dual(transpose(m))


def tau_minus(m: Representation) -> Representation:
    return transpose(dual(m))


def is_projective(m: Representation) -> bool:
    pres = minimal_projective_presentation(m)
    return not pres.p1_vertices and rc.kernel_module(pres.cover).total_dim() == 0


def is_injective(m: Representation) -> bool:
    return is_projective(dual(m))


# ---------------------------------------------------------------------------
# Ext groups and almost split sequences


@dataclass
class ExtData:
    """Ext^1(X, Y) = Hom(Omega X, Y) / (restrictions of Hom(P0, Y))."""

    syzygy: Representation
    inclusion: Morphism
    cover: Morphism
    hom: rc.HomBasis
    restriction_span: Matrix  # columns: coordinates (in ``hom``) of restricted maps
    dimension: int


def ext1_data(x: Representation, y: Representation) -> ExtData:
    cov = rc.projective_cover(x)
    omega, inc = rc.kernel_data(cov.morphism)
    hb = rc.hom_basis(omega, y)
    cols = []
    for g in rc.hom_basis(cov.projective, y):
        r = g.compose(inc)
        if hb.dim:
            cols.append(hb.coordinates(r))
    span = Matrix.from_columns(cols, hb.dim) if cols else Matrix.zeros(hb.dim, 0)
    rank = span.rank()
    return ExtData(omega, inc, cov.morphism, hb, span, hb.dim - rank)


def ext1_dim_resolution(x: Representation, y: Representation) -> int:
    return ext1_data(x, y).dimension


@dataclass
class AlmostSplitSequence:
    left: Representation  # tau X
    middle: Representation
    right: Representation  # X
    mono: Morphism
    epi: Morphism

    def verify(self) -> bool:
        if not self.epi.compose(self.mono).is_zero():
            return False
        if not self.mono.is_mono() or not self.epi.is_epi():
            return False
        if self.middle.total_dim() != self.left.total_dim() + self.right.total_dim():
            return False
        return not _has_section(self.epi)


def _has_section(p: Morphism) -> bool:
    """True if some s with p o s = id exists."""
    hb = rc.hom_basis(p.target, p.source)
    ident = rc.identity(p.target).vector()
    if not hb.dim:
        return not any(ident)
    cols = [p.compose(s).vector() for s in hb]
    try:
        solve(Matrix.from_columns(cols, len(ident)), ident)
    except NoSolution:
        return False
    return True


def _lift_endomorphism(r: Morphism, ext: ExtData) -> Morphism:
    """Restriction to Omega X of a lift of ``r: X -> X`` along the projective cover."""
    cover = ext.cover
    p0 = cover.source
    hb = rc.hom_basis(p0, p0)
    want = r.compose(cover).vector()
    cols = [cover.compose(g).vector() for g in hb]
    coeffs = solve(Matrix.from_columns(cols, len(want)), want)
    r0 = hb.combination(coeffs)
    moved = r0.compose(ext.inclusion)
    maps = {}
    for v in p0.algebra.vertices:
        inc = ext.inclusion.maps[v]
        maps[v] = solve_many(inc, moved.maps[v]) if inc.cols else Matrix.zeros(0, 0)
    return Morphism(ext.syzygy, ext.syzygy, maps)


def almost_split_sequence(x: Representation, a: BoundQuiverAlgebra | None = None) -> AlmostSplitSequence:
    """0 -> tau x -> E -> x -> 0 for an indecomposable non-projective ``x``."""
    if a is not None and a is not x.algebra:
        raise ValueError("module is not over the given algebra")
    z = tau(x)
    if z.total_dim() == 0:
        raise IsProjective("the module is projective")
    ext = ext1_data(x, z)
    k = ext.hom.dim
    if ext.dimension == 0:
        raise InternalInconsistency("Ext^1(X, tau X) vanishes for a non-projective X")
    rspan = ext.restriction_span
    _, _, piv = rref(rspan)
    rbasis = rspan.submatrix(range(k), piv)
    comp = complement_basis(rbasis, k)
    full = Matrix.hstack([rbasis, comp]) if rbasis.cols else comp
    proj = full.inverse().submatrix(range(rbasis.cols, k), range(k))
    ends = rc.hom_basis(x, x)
    radc = rc.radical_of_span([f.total_matrix() for f in ends])
    blocks = []
    for j in range(radc.cols):
        r = ends.combination(radc.col(j))
        r1 = _lift_endomorphism(r, ext)
        cols = [ext.hom.coordinates(h.compose(r1)) for h in ext.hom]
        blocks.append(proj @ Matrix.from_columns(cols, k))
    if blocks:
        ker = kernel_basis(Matrix.vstack(blocks))
        cands = ker.columns()
    else:
        cands = [tuple(Fraction(int(i == j)) for i in range(k)) for j in range(k)]
    chosen = None
    for c in cands:
        if any(proj.apply(c)):
            chosen = c
            break
    if chosen is None:
        raise InternalInconsistency("no almost split extension found in the socle of Ext^1(X, tau X)")
    h = ext.hom.combination(chosen)
    p0 = ext.cover.source
    sd = rc.direct_sum_data([p0, z], x.algebra)
    g = sd.inclusions[0].compose(ext.inclusion) - sd.inclusions[1].compose(h)
    e, p = rc.cokernel_data(g)
    mono = p.compose(sd.inclusions[1])
    flat = ext.cover.compose(sd.projections[0])
    epi_maps = {}
    for v in x.algebra.vertices:
        pv = p.maps[v]
        if pv.rows == 0:
            epi_maps[v] = Matrix.zeros(x.dims[v], 0)
        else:
            epi_maps[v] = solve_many(pv.transpose(), flat.maps[v].transpose()).transpose()
    epi = Morphism(e, x, epi_maps)
    seq = AlmostSplitSequence(z, e, x, mono, epi)
    if not seq.verify():
        raise InternalInconsistency("constructed sequence is not a non-split short exact sequence")
    return seq


# ---------------------------------------------------------------------------
# knitting


@dataclass
class ARQuiverFragment:
    algebra: BoundQuiverAlgebra
    vertices: list  # indecomposable Representations
    arrows: dict  # (i, j) -> multiplicity
    tau_of: dict  # i -> index of tau(vertex i), for non-projective i within the fragment
    projective_at: dict  # i -> algebra vertex v with vertex i = P(v)
    injective_at: dict  # i -> algebra vertex v with vertex i = I(v)
    status: str  # "CompleteFiniteType" | "TruncatedAtBound"
    limits: dict
    reason: str = ""
    _irreducible_cache: dict = field(default_factory=dict, repr=False)

    @property
    def complete(self) -> bool:
        return self.status == "CompleteFiniteType"

    def __len__(self) -> int:
        return len(self.vertices)

    def tau_minus_of(self) -> dict:
        return {j: i for i, j in self.tau_of.items()}

    def successors(self, i: int) -> list:
        return sorted((j, m) for (s, j), m in self.arrows.items() if s == i)

    def predecessors(self, j: int) -> list:
        return sorted((i, m) for (i, t), m in self.arrows.items() if t == j)

    def find(self, m: Representation) -> int | None:
        for i, x in enumerate(self.vertices):
            if x.dim_vector() == m.dim_vector() and rc.iso_indecomposable(x, m) is not None:
                return i
        return None

    def tau_orbits(self) -> list:
        parent = list(range(len(self.vertices)))

        def root(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, j in self.tau_of.items():
            ri, rj = root(i), root(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        groups: dict = {}
        for i in range(len(self.vertices)):
            groups.setdefault(root(i), []).append(i)
        return [sorted(g) for _, g in sorted(groups.items())]

    def components(self) -> list:
        parent = list(range(len(self.vertices)))

        def root(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        pairs = list(self.arrows) + list(self.tau_of.items())
        for i, j in pairs:
            ri, rj = root(i), root(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        groups: dict = {}
        for i in range(len(self.vertices)):
            groups.setdefault(root(i), []).append(i)
        return [sorted(g) for _, g in sorted(groups.items())]

    def mesh_consistent(self) -> bool:
        """Arrows into X match arrows out of tau X for every non-projective X."""
        for x, tx in self.tau_of.items():
            into = dict(self.predecessors(x))
            out = dict(self.successors(tx))
            if into != out:
                return False
        return True

    def label(self, i: int) -> str:
        parts = []
        if i in self.projective_at:
            parts.append(f"P({self.projective_at[i]})")
        if i in self.injective_at:
            parts.append(f"I({self.injective_at[i]})")
        dv = "".join(str(d) for d in self.vertices[i].dim_vector())
        return f"M{i}[{dv}]" + ("=" + "=".join(parts) if parts else "")

    # irreducible maps -------------------------------------------------
    def irreducible_maps(self, i: int, j: int) -> list:
        """Basis of rad(X_i, X_j) modulo rad^2, computed through fragment vertices."""
        key = (i, j)
        if key in self._irreducible_cache:
            return self._irreducible_cache[key]
        if (i, j) not in self.arrows:
            raise PathNotInFragment(f"no arrow {i} -> {j}")
        x, y = self.vertices[i], self.vertices[j]
        hb = rc.hom_basis(x, y)
        rad2 = []
        for k, z in enumerate(self.vertices):
            if k in (i, j):
                continue
            first = rc.hom_basis(x, z).morphisms
            if not first:
                continue
            second = rc.hom_basis(z, y).morphisms
            for g in second:
                for f in first:
                    c = g.compose(f)
                    if not c.is_zero():
                        rad2.append(hb.coordinates(c))
        for side, mod in ((i, x), (j, y)):
            ends = rc.hom_basis(mod, mod)
            radc = rc.radical_of_span([f.total_matrix() for f in ends])
            for col in range(radc.cols):
                r = ends.combination(radc.col(col))
                for f in hb:
                    c = f.compose(r) if side == i else r.compose(f)
                    if not c.is_zero():
                        rad2.append(hb.coordinates(c))
        span = Matrix.from_columns(rad2, hb.dim) if rad2 else Matrix.zeros(hb.dim, 0)
        _, _, piv = rref(span)
        comp = complement_basis(span.submatrix(range(hb.dim), piv), hb.dim)
        maps = [hb.combination(comp.col(c)) for c in range(comp.cols)]
        if self.complete and len(maps) != self.arrows[(i, j)]:
            raise InternalInconsistency(
                f"irreducible maps {i}->{j}: {len(maps)} found, arrow multiplicity {self.arrows[(i, j)]}")
        self._irreducible_cache[key] = maps
        return maps

    # serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        a = self.algebra
        verts = []
        for i, m in enumerate(self.vertices):
            verts.append({
                "index": i,
                "label": self.label(i),
                "dims": {v: m.dims[v] for v in a.vertices},
                "maps": {ar.name: [[format_rational(x) for x in row] for row in m.maps[ar.name].tolist()]
                         for ar in a.quiver.arrows},
                "projective": self.projective_at.get(i),
                "injective": self.injective_at.get(i),
            })
        return {
            "format": 1,
            "kind": "ar_fragment",
            "status": self.status,
            "reason": self.reason,
            "limits": dict(self.limits),
            "vertices": verts,
            "arrows": [{"from": i, "to": j, "multiplicity": m} for (i, j), m in sorted(self.arrows.items())],
            "tau_pairs": [{"module": i, "tau": j} for i, j in sorted(self.tau_of.items())],
            "tau_orbits": self.tau_orbits(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph AR {", "  rankdir=LR;"]
        for i in range(len(self.vertices)):
            lines.append(f'  n{i} [label="{self.label(i)}"];')
        for (i, j), m in sorted(self.arrows.items()):
            extra = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  n{i} -> n{j}{extra};")
        for i, j in sorted(self.tau_of.items()):
            lines.append(f"  n{i} -> n{j} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _summands(m: Representation) -> list:
    rep = rc.decompose(m)
    if not rep.complete:
        raise InternalInconsistency("could not decompose a radical of a projective")
    return rep.parts


def knit(a: BoundQuiverAlgebra, max_modules: int = DEFAULT_MAX_MODULES,
         max_total_dim: int = DEFAULT_MAX_TOTAL_DIM) -> ARQuiverFragment:
    """Knit the preprojective part of the AR quiver starting from the projectives.

    Each translate is computed as Tr D and checked against the mesh rule.
    """
    if max_modules <= 0 or max_total_dim <= 0:
        raise ValueError("limits must be positive")
    limits = {"max_modules": max_modules, "max_total_dim": max_total_dim}
    verts: list = []
    arrows: dict = {}
    tau_of: dict = {}
    proj_at: dict = {}
    preds: dict = {}
    done: set = set()  # tau^- computed (or found to be zero)
    injective_idx: set = set()
    rad_summands: dict = {}  # projective index -> [(module, multiplicity)]
    pending_rad: dict = {}  # projective index -> [(module, multiplicity, matched index or None)]

    def locate(m):
        for i, x in enumerate(verts):
            if x.dim_vector() == m.dim_vector() and rc.iso_indecomposable(x, m) is not None:
                return i
        return None

    for v in a.vertices:
        p = rc.projective(a, v)
        proj_at[len(verts)] = v
        verts.append(p)
    for i, v in list(proj_at.items()):
        rad = rc.radical_submodule(verts[i])
        rad_summands[i] = _summands(rad) if rad.total_dim() else []
        pending_rad[i] = [[m, k, None] for m, k in rad_summands[i]]

    def match_radicals():
        for i, lst in pending_rad.items():
            for entry in lst:
                if entry[2] is None:
                    entry[2] = locate(entry[0])
        for i, lst in pending_rad.items():
            if all(e[2] is not None for e in lst) and i not in preds:
                preds[i] = {}
                for _, k, j in lst:
                    preds[i][j] = preds[i].get(j, 0) + k
                    arrows[(j, i)] = arrows.get((j, i), 0) + k

    match_radicals()
    reason = ""
    truncated = False
    while True:
        ready = None
        for i in range(len(verts)):
            if i in done or i not in preds:
                continue
            # all projectives whose radical contains X must be placed, and
            # all predecessors must have their translates computed
            if any(any(e[2] == i for e in lst) and any(e[2] is None for e in lst)
                   for lst in pending_rad.values()):
                continue
            if all(z in done for z in preds[i]):
                ready = i
                break
        if ready is None:
            break
        x = verts[ready]
        succ: dict = {}
        for (s, t), k in arrows.items():
            if s == ready:
                succ[t] = succ.get(t, 0) + k
        y = tau_minus(x)
        mesh_dim = sum(verts[t].total_dim() * k for t, k in succ.items()) - x.total_dim()
        if y.total_dim() == 0:
            done.add(ready)
            injective_idx.add(ready)
            continue
        if y.total_dim() != mesh_dim:
            raise InternalInconsistency(
                f"tau^- of {verts[ready].dim_vector()} has dimension {y.total_dim()}, mesh predicts {mesh_dim}")
        if y.total_dim() > max_total_dim:
            truncated, reason = True, "max_total_dim"
            break
        if not rc.is_indecomposable(y):
            raise InternalInconsistency("inverse translate of an indecomposable is decomposable")
        j = locate(y)
        if j is None:
            if len(verts) >= max_modules:
                truncated, reason = True, "max_modules"
                break
            j = len(verts)
            verts.append(y)
        elif j in preds:
            truncated, reason = True, "translate orbit closes up (non-directed component)"
            done.add(ready)
            break
        tau_of[j] = ready
        done.add(ready)
        preds[j] = dict(succ)
        for t, k in succ.items():
            arrows[(t, j)] = arrows.get((t, j), 0) + k
        match_radicals()
    pending = [i for i in range(len(verts)) if i not in done]
    inj_at = {}
    for v in a.vertices:
        k = locate(rc.injective(a, v))
        if k is not None:
            inj_at[k] = v
    if not truncated:
        if pending:
            truncated, reason = True, "knitting stalled"
        elif len(inj_at) != len(a.vertices):
            truncated, reason = True, "injectives not reached"
        elif set(inj_at) != injective_idx:
            raise InternalInconsistency("modules with vanishing inverse translate are not the injectives")
    status = "TruncatedAtBound" if truncated else "CompleteFiniteType"
    frag = ARQuiverFragment(a, verts, arrows, tau_of, {i: v for i, v in proj_at.items()}, inj_at,
                            status, limits, reason)
    if frag.complete and not frag.mesh_consistent():
        raise InternalInconsistency("knitted fragment violates the mesh rule")
    return frag


# ---------------------------------------------------------------------------
# sectional paths


def _check_path(fragment: ARQuiverFragment, path: Sequence[int]) -> None:
    for i in path:
        if not 0 <= i < len(fragment.vertices):
            raise PathNotInFragment(f"vertex {i} is not in the fragment")
    for s, t in zip(path, path[1:]):
        if (s, t) not in fragment.arrows:
            raise PathNotInFragment(f"no arrow {s} -> {t}")


def is_sectional(fragment: ARQuiverFragment, path: Sequence[int]) -> bool:
    _check_path(fragment, path)
    for k in range(2, len(path)):
        if fragment.tau_of.get(path[k]) == path[k - 2]:
            return False
    return True


def compose_irreducibles(fragment: ARQuiverFragment, path: Sequence[int]) -> Morphism:
    """Composite of the first irreducible-map representative along each arrow."""
    _check_path(fragment, path)
    total = rc.identity(fragment.vertices[path[0]])
    for s, t in zip(path, path[1:]):
        f = fragment.irreducible_maps(s, t)[0]
        total = f.compose(total)
    return total


def sectional_paths(fragment: ARQuiverFragment, max_length: int | None = None) -> list:
    """All sectional paths of length >= 1 in the fragment (finite when it is acyclic)."""
    out = []
    succ: dict = {}
    for (i, j) in sorted(fragment.arrows):
        succ.setdefault(i, []).append(j)
    limit = max_length if max_length is not None else len(fragment.vertices)

    def extend(path):
        if len(path) > 1:
            out.append(tuple(path))
        if len(path) > limit:
            return
        for j in succ.get(path[-1], []):
            if len(path) >= 2 and fragment.tau_of.get(j) == path[-2]:
                continue
            extend(path + [j])

    for i in range(len(fragment.vertices)):
        extend([i])
    return out


# ---------------------------------------------------------------------------
# sections


@dataclass(frozen=True)
class Section:
    vertices: tuple

    def modules(self, fragment: ARQuiverFragment) -> list:
        return [fragment.vertices[i] for i in self.vertices]


def _reachability(n: int, arrows) -> list:
    succ = [set() for _ in range(n)]
    for (i, j) in arrows:
        succ[i].add(j)
    reach = []
    for s in range(n):
        seen = set()
        stack = list(succ[s])
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(succ[u])
        reach.append(seen)
    return reach


def _is_section(chosen: set, comp: list, arrows, reach) -> bool:
    sub_arrows = [(i, j) for (i, j) in arrows if i in chosen and j in chosen]
    # acyclic
    for i in chosen:
        if i in reach[i]:
            return False
    # connected (undirected)
    start = next(iter(chosen))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for i, j in sub_arrows:
            for a_, b_ in ((i, j), (j, i)):
                if a_ == u and b_ not in seen:
                    seen.add(b_)
                    stack.append(b_)
    if seen != chosen:
        return False
    # convex
    for z in comp:
        if z in chosen:
            continue
        if any(z in reach[x] for x in chosen) and any(y in reach[z] for y in chosen):
            return False
    return True


def find_sections(fragment: ARQuiverFragment, required: Sequence[int],
                  component: Sequence[int] | None = None) -> list:
    """All sections of the component containing ``required``, in lexicographic order.

    ``component`` selects a component explicitly (needed when ``required`` is empty
    and the fragment is disconnected).
    """
    required = sorted(set(required))
    comps = fragment.components()
    if component is not None:
        comp = sorted(component)
        if comp not in comps:
            raise NotOneComponent("the given vertex set is not a component of the fragment")
        if any(r not in comp for r in required):
            raise NotOneComponent("required vertices lie outside the given component")
    elif required:
        homes = {next(k for k, c in enumerate(comps) if r in c) for r in required}
        if len(homes) != 1:
            raise NotOneComponent("required vertices lie in different components")
        comp = comps[homes.pop()]
    else:
        if len(comps) != 1:
            raise NotOneComponent("fragment has several components; give a required vertex")
        comp = comps[0]
    comp_set = set(comp)
    orbits = [o for o in fragment.tau_orbits() if o[0] in comp_set]
    choices = []
    for orb in orbits:
        fixed = [r for r in required if r in orb]
        if len(fixed) > 1:
            return []
        choices.append(fixed if fixed else orb)
    arrows = [(i, j) for (i, j) in fragment.arrows if i in comp_set]
    reach = _reachability(len(fragment.vertices), arrows)
    found = []
    for combo in itertools.product(*choices):
        chosen = set(combo)
        if _is_section(chosen, comp, arrows, reach):
            found.append(Section(tuple(sorted(chosen))))
    return sorted(set(found), key=lambda s: s.vertices)


def validate_section(fragment: ARQuiverFragment, section: Section) -> None:
    """Raise InvalidSection unless ``section`` is a section of its component."""
    chosen = set(section.vertices)
    if not chosen:
        raise InvalidSection("empty vertex set")
    comps = [c for c in fragment.components() if chosen & set(c)]
    if len(comps) != 1:
        raise InvalidSection("vertices lie in several components")
    comp = comps[0]
    if not chosen <= set(comp):
        raise InvalidSection("vertices outside the component")
    for orb in fragment.tau_orbits():
        if orb[0] in comp and len(chosen & set(orb)) != 1:
            raise InvalidSection(f"tau-orbit {orb} is not met exactly once")
    arrows = [(i, j) for (i, j) in fragment.arrows if i in comp]
    reach = _reachability(len(fragment.vertices), arrows)
    if not _is_section(chosen, comp, arrows, reach):
        raise InvalidSection("vertex set is not a connected, acyclic, convex subquiver")
