from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arshort import corpus
from arshort import repcat as rc
from arshort.errors import InfiniteDimensional, InvalidRelation, ImproperIdeal
from arshort.exactla import Matrix
from arshort.quiveralg import (
    Arrow,
    ExceedsBound,
    Path,
    Quiver,
    Relation,
    build_algebra,
    check_algebra_map,
    find_isomorphism,
    fingerprint_isomorphic,
    global_dimension_upto,
    is_hereditary,
    one_point_extension,
    quotient_algebra,
)

from oracles import count_paths


def _quiver_edges(a):
    return [(ar.source, ar.target) for ar in a.quiver.arrows]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_linear_dimension_counts_paths(n):
    a = corpus.linear_algebra(n)
    assert a.dimension == n * (n + 1) // 2
    assert a.dimension == count_paths(list(a.vertices), _quiver_edges(a), n)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.text(alphabet="rl", min_size=n - 1, max_size=n - 1))))
def test_any_orientation_of_a_n_has_path_count_dimension(data):
    n, orient = data
    a = corpus.linear_algebra(n, orient)
    assert a.dimension == count_paths(list(a.vertices), _quiver_edges(a), n)
    assert is_hereditary(a)


def test_multiplication_is_associative_on_the_square():
    a = corpus.commutative_square()
    assert a.dimension == 9  # four idempotents, four arrows, one length-two path
    units = [a.unit_vector(i) for i in range(a.dimension)]
    for x in units:
        for y in units:
            for z in units:
                assert a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z))
    ab = a.path_element(Path.of_arrows(a.quiver, ["a", "b"]))
    cd = a.path_element(Path.of_arrows(a.quiver, ["c", "d"]))
    assert ab == cd


def test_one_is_sum_of_idempotents(a3):
    one = a3.one()
    for i in range(a3.dimension):
        x = a3.unit_vector(i)
        assert a3.multiply(one, x) == x == a3.multiply(x, one)


def test_zero_relation_truncates():
    q = Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")])
    a = build_algebra(q, [Relation([(1, Path.of_arrows(q, ["a", "b"]))])])
    assert a.dimension == 5
    assert not is_hereditary(a)
    assert global_dimension_upto(a, 3) == 2


def test_loop_without_relations_is_infinite():
    q = Quiver(["1"], [Arrow("x", "1", "1")])
    with pytest.raises(InfiniteDimensional):
        build_algebra(q, [], nilpotency_bound=5)


def test_loop_with_nilpotent_relation():
    q = Quiver(["1"], [Arrow("x", "1", "1")])
    a = build_algebra(q, [Relation([(1, Path.of_arrows(q, ["x", "x", "x"]))])])
    assert a.dimension == 3
    assert global_dimension_upto(a, 4) is ExceedsBound


def test_short_relation_is_rejected():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    with pytest.raises(InvalidRelation):
        build_algebra(q, [Relation([(1, Path.of_arrows(q, ["a"]))])])


def test_opposite_is_an_involution(a3):
    op = a3.opposite()
    assert op.opposite() is a3
    assert op.dimension == a3.dimension
    cart = a3.cartan_matrix()
    assert op.cartan_matrix() == [list(r) for r in zip(*cart)]


def test_quotient_by_arrow_ideal(a3):
    x = a3.arrow_element("a1")
    b, qmap = quotient_algebra(a3, [x])
    assert b.dimension == a3.dimension - 2  # a1 and a1*a2 die
    assert qmap.images.shape == (b.dimension, a3.dimension)
    assert qmap.images @ qmap.lift == Matrix.identity(b.dimension)
    with pytest.raises(ImproperIdeal):
        quotient_algebra(a3, [a3.one()])


def test_fingerprint_and_explicit_isomorphism():
    a = corpus.linear_algebra(3, "rr")
    b = corpus.linear_algebra(3, "ll")
    assert fingerprint_isomorphic(a, b) is not None
    m = find_isomorphism(a, b)
    assert m is not None and check_algebra_map(a, b, m)
    c = corpus.linear_algebra(3, "rl")
    assert fingerprint_isomorphic(a, c) is None


def test_identity_is_an_algebra_map(d4):
    assert check_algebra_map(d4, d4, Matrix.identity(d4.dimension))
    assert not check_algebra_map(d4, d4, Matrix.identity(d4.dimension).scale(2))


def test_one_point_extension_of_a2_by_simple_gives_a3(a2):
    ext = one_point_extension(a2, rc.simple(a2, "2"), new_vertex="w")
    a = ext.algebra
    assert len(a.vertices) == 3 and a.dimension == 5
    assert is_hereditary(a)
    rad = rc.radical_submodule(rc.projective(a, "w"))
    assert rad.dim_vector() == (0, 0, 1)
