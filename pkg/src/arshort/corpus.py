"""Standard algebras, example inputs and the fixed test corpus."""

from __future__ import annotations

import itertools

from . import artrans as at
from . import repcat as rc
from . import shortchain as sc
from .quiveralg import (
    Arrow,
    BoundQuiverAlgebra,
    Path,
    Quiver,
    Relation,
    build_algebra,
    one_point_extension,
)
from .repcat import Representation


def linear_algebra(n: int, orientation: str | None = None, name: str | None = None) -> BoundQuiverAlgebra:
    """Path algebra of type A_n on vertices 1..n.

    ``orientation`` is a string of ``"r"`` (i -> i+1) and ``"l"`` (i+1 -> i) of
    length n-1; the default is all ``"r"``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    orientation = orientation or "r" * (n - 1)
    if len(orientation) != n - 1 or set(orientation) - {"r", "l"}:
        raise ValueError("orientation must be a string over {r, l} of length n-1")
    verts = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i, o in enumerate(orientation):
        s, t = (verts[i], verts[i + 1]) if o == "r" else (verts[i + 1], verts[i])
        arrows.append(Arrow(f"a{i + 1}", s, t))
    return build_algebra(Quiver(verts, arrows), [], name=name or f"A{n}")


def star_algebra(n: int, name: str | None = None) -> BoundQuiverAlgebra:
    """Arrows i -> 0 for i = 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    verts = [str(i) for i in range(n + 1)]
    arrows = [Arrow(f"a{i}", str(i), "0") for i in range(1, n + 1)]
    return build_algebra(Quiver(verts, arrows), [], name=name or f"star{n}")


def hereditary_by_type(kind: str) -> BoundQuiverAlgebra:
    """Small hereditary algebras by name: ``A1``..``A5`` (linear) and ``D4`` (star)."""
    if len(kind) >= 2 and kind[0] == "A" and kind[1:].isdigit():
        return linear_algebra(int(kind[1:]))
    if kind == "D4":
        return star_algebra(3, name="D4")
    raise ValueError(f"unsupported hereditary type {kind!r}")


def commutative_square() -> BoundQuiverAlgebra:
    """Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with the commutativity relation."""
    q = Quiver(["1", "2", "3", "4"], [Arrow("a", "1", "2"), Arrow("b", "2", "4"),
                                     Arrow("c", "1", "3"), Arrow("d", "3", "4")])
    rel = Relation([(1, Path.of_arrows(q, ["a", "b"])), (-1, Path.of_arrows(q, ["c", "d"]))])
    return build_algebra(q, [rel], name="square")


# ---------------------------------------------------------------------------
# example inputs


def example_5_1(n: int) -> tuple[BoundQuiverAlgebra, Representation]:
    """The star with n arms and M = I(1) + ... + I(n)."""
    a = star_algebra(n)
    m = rc.direct_sum([rc.injective(a, str(i)) for i in range(1, n + 1)], a)
    return a, m


def tilting_modules(h: BoundQuiverAlgebra, fragment: at.ARQuiverFragment | None = None) -> list:
    """All basic tilting modules over a representation-finite hereditary algebra.

    Exhaustive search over subsets of the indecomposables with as many members
    as vertices; each subset is tested by the Ext criterion.
    """
    frag = fragment or at.knit(h)
    if not frag.complete:
        raise ValueError("tilting enumeration needs a complete AR quiver")
    k = len(h.vertices)
    found = []
    for combo in itertools.combinations(range(len(frag.vertices)), k):
        t = rc.direct_sum([frag.vertices[i] for i in combo], h)
        if sc.is_tilting(h, t).ok:
            found.append((combo, t))
    return found


def _rename(a: BoundQuiverAlgebra, tag: str):
    vmap = {v: f"{v}_{tag}" for v in a.vertices}
    amap = {ar.name: f"{ar.name}_{tag}" for ar in a.quiver.arrows}
    return vmap, amap


def product_algebra(parts: list, tags: list | None = None, name: str | None = None):
    """Product of bound quiver algebras (disjoint union of the quivers).

    Returns (algebra, [(vertex map, arrow map)] per factor).
    """
    tags = tags or [str(i + 1) for i in range(len(parts))]
    verts, arrows, rels, maps = [], [], [], []
    for a, tag in zip(parts, tags):
        vmap, amap = _rename(a, tag)
        maps.append((vmap, amap))
        verts += [vmap[v] for v in a.vertices]
        arrows += [Arrow(amap[ar.name], vmap[ar.source], vmap[ar.target]) for ar in a.quiver.arrows]
    q = Quiver(verts, arrows)
    for a, (vmap, amap) in zip(parts, maps):
        for r in a.relations:
            rels.append(Relation([(c, Path.of_arrows(q, [amap[n] for n in p.arrows])) for c, p in r.terms]))
    return build_algebra(q, rels, name=name), maps


def _carry(m: Representation, target: BoundQuiverAlgebra, vmap: dict, amap: dict) -> dict:
    dims = {vmap[v]: m.dims[v] for v in m.algebra.vertices}
    maps = {amap[n]: mat for n, mat in m.maps.items()}
    return {"dims": dims, "maps": maps}


def example_5_2(parts: list) -> dict:
    """One-point extension of a product of tilted algebras by a simple injective of each.

    ``parts`` is a list of (hereditary type, tilting index). Returns a dict with
    the extension algebra ``A``, the module ``M`` (sum of Hom(T_i, D H_i)), the
    product ``B``, the extending module ``S`` and the per-factor data.
    """
    if not parts:
        raise ValueError("need at least one factor")
    factors = []
    for kind, index in parts:
        h = hereditary_by_type(kind)
        tilts = tilting_modules(h)
        if not 0 <= index < len(tilts):
            raise ValueError(f"tilting index {index} out of range for {kind} ({len(tilts)} tilting modules)")
        _, t = tilts[index]
        tilted = sc.tilted_algebra(h, t)
        b_i = tilted.algebra
        m_i = sc.hom_functor_image(h, t, rc.regular_injective(h), tilted=tilted)
        simple_inj = None
        for v in b_i.vertices:
            s = rc.simple(b_i, v)
            if at.is_injective(s):
                simple_inj = v
                break
        if simple_inj is None:
            raise ValueError(f"tilted algebra of {kind} index {index} has no simple injective")
        factors.append({"type": kind, "tilting_index": index, "h": h, "t": t, "b": b_i,
                        "m": m_i, "simple_injective": simple_inj})
    b, maps = product_algebra([f["b"] for f in factors], name="B")
    s_dims = {maps[k][0][f["simple_injective"]]: 1 for k, f in enumerate(factors)}
    s_mod = Representation(b, s_dims)
    ext = one_point_extension(b, s_mod, new_vertex="w", name="A")
    a = ext.algebra
    dims, mats = {}, {}
    for f, (vmap, amap) in zip(factors, maps):
        c = _carry(f["m"], b, vmap, amap)
        dims.update(c["dims"])
        mats.update(c["maps"])
    m = Representation(a, dims, mats)
    m.validate()
    return {"A": a, "M": m, "B": b, "S": s_mod, "factors": factors}


def _by_dim_vector(a: BoundQuiverAlgebra, fragment: at.ARQuiverFragment, dv: tuple) -> Representation:
    for m in fragment.vertices:
        if m.dim_vector() == dv:
            return m
    raise ValueError(f"no indecomposable with dimension vector {dv} over {a.name}")


def theorem1_corpus() -> list:
    """Fixed (label, algebra, module) pairs over Dynkin path algebras.

    Modules are slice sums (projectives, injectives, the regular module and its
    dual) and sincere indecomposables; none is the middle of a short chain.
    """
    out = []
    a2 = linear_algebra(2)
    out += [("A2:P(1)", a2, rc.projective(a2, "1")),
            ("A2:A", a2, rc.regular_module(a2)),
            ("A2:DA", a2, rc.regular_injective(a2))]
    a3 = linear_algebra(3)
    out += [("A3:P(1)", a3, rc.projective(a3, "1")),
            ("A3:A", a3, rc.regular_module(a3)),
            ("A3:DA", a3, rc.regular_injective(a3))]
    a3rl = linear_algebra(3, "rl", name="A3rl")
    out.append(("A3rl:sincere", a3rl, _by_dim_vector(a3rl, at.knit(a3rl), (1, 1, 1))))
    a4 = linear_algebra(4)
    out += [("A4:P(1)", a4, rc.projective(a4, "1")),
            ("A4:DA", a4, rc.regular_injective(a4))]
    d4 = star_algebra(3, name="D4")
    frag = at.knit(d4)
    out += [("D4:I1+I2+I3", d4, rc.direct_sum([rc.injective(d4, v) for v in "123"], d4)),
            ("D4:DA", d4, rc.regular_injective(d4)),
            ("D4:sincere(2;1,1,1)", d4, _by_dim_vector(d4, frag, (2, 1, 1, 1))),
            ("D4:sincere(1;1,1,1)", d4, _by_dim_vector(d4, frag, (1, 1, 1, 1))),
            ("D4:A", d4, rc.regular_module(d4))]
    return out
