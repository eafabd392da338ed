import pytest
from hypothesis import assume, given, settings, strategies as st

from dpflex.cone import (
    Cone, Membership, brute_force_rays, cone_from_generators, cone_from_inequalities, contains, dual, intersect, membership,
)
from dpflex.errors import DegenerateInputError, DimensionError, OracleScopeError
from dpflex.lattice import primitive
from dpflex.linalg import rank

QUADRANT = cone_from_generators([(1, 0), (0, 1)], 2)


def test_quadrant_self_dual():
    assert QUADRANT.rays == ((0, 1), (1, 0))
    assert QUADRANT.facets == ((0, 1), (1, 0))
    assert dual(QUADRANT) == QUADRANT
    assert cone_from_inequalities([(1, 0), (0, 1)], 2).rays == ((0, 1), (1, 0))


def test_non_extremal_generator_dropped():
    c = cone_from_generators([(1, 0), (1, 1), (0, 1)], 2)
    assert c.rays == ((0, 1), (1, 0))


def test_full_space_and_zero():
    full = cone_from_inequalities([], 3)
    assert not full.pointed and full.facets == () and full.rays == ()
    assert full.dim == 3 and len(full.lineality) == 3
    zero = dual(full)
    assert zero.rays == () and zero.dim == 0 and zero.pointed
    zero.certify()
    assert membership((0, 0, 0), zero) is Membership.INTERIOR
    assert membership((1, 0, 0), zero) is Membership.OUTSIDE


def test_degenerate_generators():
    with pytest.raises(DegenerateInputError):
        cone_from_generators([], 3)
    with pytest.raises(DegenerateInputError):
        cone_from_generators([(0, 0, 0)], 3)
    with pytest.raises(DimensionError):
        cone_from_generators([(1, 0)], 3)


def test_intersect_examples():
    half = cone_from_inequalities([(-1, 1)], 2)
    assert intersect([QUADRANT, half]).rays == ((0, 1), (1, 1))
    assert intersect([QUADRANT, QUADRANT]) == QUADRANT
    with pytest.raises(DimensionError):
        intersect([QUADRANT, cone_from_inequalities([], 3)])


def test_membership_and_contains():
    assert membership((1, 1), QUADRANT) is Membership.INTERIOR
    assert membership((1, 0), QUADRANT) is Membership.BOUNDARY
    assert membership((0, 0), QUADRANT) is Membership.BOUNDARY
    assert membership((-1, 0), QUADRANT) is Membership.OUTSIDE
    assert contains(QUADRANT, [(1, 2), (2, 1)])
    assert not contains(QUADRANT, [(-1, 0)])
    with pytest.raises(DimensionError):
        membership((1, 1, 1), QUADRANT)


def test_lower_dimensional_cone():
    c = cone_from_generators([(1, 0, 0), (0, 1, 0)], 3)
    c.certify()
    assert c.dim == 2 and c.equations == ((0, 0, 1),)
    assert membership((1, 1, 0), c) is Membership.INTERIOR
    assert membership((1, 0, 0), c) is Membership.BOUNDARY
    assert membership((1, 1, 1), c) is Membership.OUTSIDE


def test_cone_with_lineality():
    c = cone_from_generators([(1, 0, 0), (-1, 0, 0), (0, 1, 1)], 3)
    c.certify()
    assert not c.pointed and c.lineality == ((1, 0, 0),)
    assert c.rays == ((0, 1, 1),)
    assert membership((-5, 2, 2), c) is Membership.INTERIOR
    assert dual(dual(c)) == c
    d = dual(c)
    d.certify()
    assert d == cone_from_inequalities(c.rays, 3, equations=c.lineality)


def test_json_roundtrip():
    c = cone_from_generators([(1, 0, 1), (0, 1, 1), (1, 1, 1), (-1, 0, 1)], 3)
    data = c.to_dict()
    assert set(data) >= {"dim", "rays", "facets", "pointed"}
    assert data["rays"] == sorted(data["rays"])
    assert Cone.from_dict(data) == c


def test_brute_force_guard():
    assert brute_force_rays([(1, 0), (0, 1)], 2) == [(0, 1), (1, 0)]
    with pytest.raises(OracleScopeError):
        brute_force_rays([(1,) * 8], 8)
    with pytest.raises(OracleScopeError):
        brute_force_rays([(1, 0)] * 41, 2)


# -- property tests ---------------------------------------------------------

def normal_sets(max_dim=6, max_count=20):
    return st.integers(2, max_dim).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n).map(tuple), min_size=1, max_size=max_count),
    ))


def pointed_generator_sets(max_dim=6, max_count=10):
    # first coordinate >= 1 keeps every generator in an open halfspace, so the cone is pointed
    return st.integers(2, max_dim).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(1, 3), *[st.integers(-3, 3)] * (n - 1)), min_size=1, max_size=max_count),
    ))


@settings(max_examples=200, deadline=None)
@given(normal_sets())
def test_dd_matches_brute_force(case):
    n, normals = case
    assume(rank(normals, n) == n)
    c = cone_from_inequalities(normals, n)
    c.certify()
    assert c.pointed
    assert list(c.rays) == brute_force_rays(normals, n)


@settings(max_examples=150, deadline=None)
@given(normal_sets())
def test_certified_for_any_inequalities(case):
    n, normals = case
    c = cone_from_inequalities(normals, n)
    c.certify()
    assert dual(dual(c)) == c
    # recompute the dual from scratch rather than by swapping
    d = cone_from_generators(c.facets, n, lineality=c.equations) if (c.facets or c.equations) else dual(c)
    assert d == dual(c)


@settings(max_examples=150, deadline=None)
@given(pointed_generator_sets())
def test_generator_roundtrip(case):
    n, gens = case
    c = cone_from_generators(gens, n)
    c.certify()
    assert c.pointed
    prims = {primitive(g) for g in gens}
    assert set(c.rays) <= prims
    back = cone_from_inequalities(c.facets, n, equations=c.equations)
    assert back.rays == c.rays
    for g in prims:
        rest = [h for h in prims if h != g]
        extremal = not rest or not contains(cone_from_generators(rest, n), [g])
        assert extremal == (g in c.rays)
    if c.full_dimensional:
        assert sorted(brute_force_rays(c.rays, n)) == list(c.facets)
        total = tuple(sum(r[i] for r in c.rays) for i in range(n))
        assert membership(total, c) is Membership.INTERIOR


@settings(max_examples=100, deadline=None)
@given(pointed_generator_sets(max_dim=5, max_count=6), pointed_generator_sets(max_dim=5, max_count=6))
def test_intersection_is_contained(a, b):
    (n, ga), (m, gb) = a, b
    assume(n == m)
    ca, cb = cone_from_generators(ga, n), cone_from_generators(gb, n)
    both = intersect([ca, cb])
    both.certify()
    assert contains(ca, both.rays) and contains(cb, both.rays)
    assert intersect([ca, ca]) == ca


@settings(max_examples=50, deadline=None)
@given(normal_sets(max_dim=4, max_count=8))
def test_deterministic(case):
    n, normals = case
    assert cone_from_inequalities(normals, n) == cone_from_inequalities(list(reversed(normals)), n)
