import json

import pytest

from arshort import artrans as at
from arshort import corpus
from arshort import repcat as rc
from arshort.errors import InvalidSection, IsProjective, PathNotInFragment

import oracles


def _edges(a):
    return [(ar.source, ar.target) for ar in a.quiver.arrows]


@pytest.mark.parametrize("kind,orientation", [
    ("A2", None), ("A3", "rr"), ("A3", "rl"), ("A3", "lr"), ("A4", "rlr"), ("A5", None), ("D4", None),
])
def test_knitted_dimension_vectors_are_the_positive_roots(kind, orientation):
    a = corpus.star_algebra(3) if kind == "D4" else corpus.linear_algebra(int(kind[1:]), orientation)
    frag = at.knit(a)
    assert frag.complete
    assert frag.mesh_consistent()
    knitted = sorted(m.dim_vector() for m in frag.vertices)
    assert knitted == oracles.positive_roots(list(a.vertices), _edges(a), box=3)


def test_star4_knitting_is_truncated(star4):
    frag = at.knit(star4, max_total_dim=12)
    assert not frag.complete
    assert frag.reason


def test_presentation_is_minimal_and_exact(d4_fragment):
    for m in d4_fragment.vertices:
        pres = at.minimal_projective_presentation(m)
        assert pres.is_exact() and pres.is_minimal()


def test_translates_on_a3(a3):
    s2 = rc.simple(a3, "2")
    assert at.tau(s2).dim_vector() == (0, 0, 1)  # tau S(2) = S(3) = P(3) for 1 -> 2 -> 3
    assert at.tau_minus(rc.simple(a3, "3")).dim_vector() == (0, 1, 0)
    assert at.tau(rc.projective(a3, "2")).total_dim() == 0
    assert at.tau_minus(rc.injective(a3, "2")).total_dim() == 0


def test_dual_lives_over_the_opposite(a3):
    p = rc.projective(a3, "1")
    d = at.dual(p)
    assert d.algebra is a3.opposite()
    assert rc.is_isomorphic(at.dual(d), p)


def test_almost_split_sequences_of_d4(d4_fragment):
    for i, x in enumerate(d4_fragment.vertices):
        if i in d4_fragment.projective_at:
            with pytest.raises(IsProjective):
                at.almost_split_sequence(x)
            continue
        seq = at.almost_split_sequence(x)
        assert seq.verify()
        assert rc.is_isomorphic(seq.left, d4_fragment.vertices[d4_fragment.tau_of[i]])
        mids = sorted(d4_fragment.predecessors(i))
        expected = rc.direct_sum([d4_fragment.vertices[j] for j, k in mids for _ in range(k)])
        assert rc.is_isomorphic(seq.middle, expected)


def test_ext_of_simples_over_a2(a2):
    s1, s2 = rc.simple(a2, "1"), rc.simple(a2, "2")
    assert at.ext1_dim_resolution(s1, s2) == 1
    assert at.ext1_dim_resolution(s2, s1) == 0


def test_sections_of_d4(d4, d4_fragment):
    frag = d4_fragment
    inj = sorted(frag.injective_at)
    secs = at.find_sections(frag, [frag.find(rc.injective(d4, "0"))])
    assert at.Section(tuple(inj)) in secs
    for s in secs:
        at.validate_section(frag, s)
    proj = tuple(sorted(frag.projective_at))
    at.validate_section(frag, at.Section(proj))
    with pytest.raises(InvalidSection):
        at.validate_section(frag, at.Section((proj[0],)))


def test_sectional_paths_and_irreducible_maps(a3_fragment):
    frag = a3_fragment
    for (i, j), k in frag.arrows.items():
        assert len(frag.irreducible_maps(i, j)) == k
    with pytest.raises(PathNotInFragment):
        frag.irreducible_maps(0, 0)
    paths = at.sectional_paths(frag)
    assert paths and all(at.is_sectional(frag, p) for p in paths)


def test_fragment_serialization(a3_fragment):
    d = json.loads(a3_fragment.to_json())
    assert d["format"] == 1
    assert len(d["vertices"]) == 6
    assert "digraph" in a3_fragment.to_dot()
    assert len(a3_fragment.tau_orbits()) == 3
