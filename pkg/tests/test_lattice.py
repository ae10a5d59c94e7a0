"""Tests for polytopes, face lattices, enumeration, and box points."""

import random
from fractions import Fraction

import pytest

from ehrmono.errors import DependentVectors
from ehrmono.linalg import solve
from ehrmono.polytopes import BoxPoint, SimplicialCone, hull, sublattice_index

HEXAGON = [(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)]


class TestHull:
    def test_square(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        dims = sorted(d for d in sq.face_lattice().values())
        assert dims == [-1, 0, 0, 0, 0, 1, 1, 1, 1, 2]

    def test_collinear_points_dropped(self):
        seg = hull([(0, 0), (1, 0), (2, 0)])
        assert seg.vertices == ((0, 0), (2, 0))

    def test_interior_points_dropped(self):
        tri = hull([(0, 0), (3, 0), (0, 3), (1, 1)])
        assert tri.vertices == ((0, 0), (0, 3), (3, 0))

    def test_running_example_support(self):
        # the support of the bivariate running polynomial, plus the origin
        pts = [(0, 0), (5, 0), (4, 2), (1, 5), (0, 5), (1, 2), (2, 1)]
        p = hull(pts)
        assert p.vertices == ((0, 0), (0, 5), (1, 5), (4, 2), (5, 0))

    def test_single_point(self):
        pt = hull([(3, 4)])
        assert pt.dim == 0
        assert pt.face_lattice() == {frozenset(): -1, frozenset({(3, 4)}): 0}


class TestLatticePoints:
    def test_unit_square(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(sq.lattice_points(1)) == 4

    def test_hexagon_counts(self):
        # f(m) = 6m^2 + 3m + 1
        hexa = hull(HEXAGON)
        assert len(hexa.lattice_points(1)) == 10
        assert len(hexa.lattice_points(2)) == 31
        assert hexa.lattice_points(0) == [(0, 0)]

    def test_interior(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert sq.interior_lattice_points(1) == []
        seg = hull([(0,), (2,)])
        assert seg.interior_lattice_points(1) == [(1,)]
        hexa = hull(HEXAGON)
        assert hexa.interior_lattice_points(1) == [(-1, 0), (-1, 1), (0, 0), (0, 1)]

    def test_ehrhart_polynomiality(self):
        rng = random.Random(7)
        for _ in range(8):
            dim = rng.choice([1, 2, 2, 3])
            pts = {tuple(rng.randint(0, 3) for _ in range(dim)) for _ in range(dim + 3)}
            poly = hull(pts)
            d = poly.dim
            counts = [len(poly.lattice_points(m)) for m in range(d + 3)]
            rows = [[Fraction(m**j) for j in range(d + 1)] for m in range(d + 1)]
            coeffs = solve(rows, counts[: d + 1])
            for m in range(d + 1, d + 3):
                assert sum(c * m**j for j, c in enumerate(coeffs)) == counts[m]
            # reciprocity against the interior counts
            for m in (1, 2):
                predicted = sum(c * (-m) ** j for j, c in enumerate(coeffs))
                assert (-1) ** d * predicted == len(poly.interior_lattice_points(m))


class TestVolume:
    def test_segment(self):
        assert hull([(0,), (1,)]).normalized_volume() == 1

    def test_edge_with_induced_lattice(self):
        edge = hull([(1, 5), (5, 2)])
        assert edge.normalized_volume() == 1

    def test_triangle(self):
        assert hull([(0, 0), (2, 0), (0, 2)]).normalized_volume() == 4

    def test_point(self):
        assert hull([(7,)]).normalized_volume() == 1

    def test_cone_volume_is_base_times_distance(self):
        tri = hull([(0, 0), (1, 2), (2, 1)])
        assert tri.normalized_volume() == 3


class TestSublatticeIndex:
    def test_values(self):
        assert sublattice_index([(1, 0), (0, 1)]) == 1
        assert sublattice_index([(2, 0), (0, 3)]) == 6
        assert sublattice_index([(2, 4)]) == 2

    def test_dependent(self):
        with pytest.raises(DependentVectors):
            sublattice_index([(1, 0), (2, 0)])


def brute_force_box(generators):
    """Oracle: scan the bounding box and solve exactly for the coordinates."""
    n = len(generators[0])
    lo = [sum(min(0, g[i]) for g in generators) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in generators) for i in range(n)]
    cols = [[g[i] for g in generators] for i in range(n)]
    out = []

    def rec(i, point):
        if i == n:
            sol = solve(cols, list(point))
            if sol is not None and all(0 <= a < 1 for a in sol):
                if all(
                    sum(Fraction(g[j]) * a for g, a in zip(generators, sol)) == point[j]
                    for j in range(n)
                ):
                    out.append(tuple(point))
            return
        for x in range(lo[i], hi[i] + 1):
            rec(i + 1, point + [x])

    rec(0, [])
    return sorted(out)


class TestBoxPoints:
    def test_unimodular(self):
        cone = SimplicialCone([(0, 1), (1, 1)])
        assert [b.coordinates for b in cone.box_points()] == [(0, 0)]

    def test_segment_cone(self):
        cone = SimplicialCone([(0, 1), (2, 1)])
        assert [b.coordinates for b in cone.box_points()] == [(0, 0), (1, 1)]

    def test_reflexive_triangle_cone(self):
        cone = SimplicialCone([(1, 0, 1), (0, 1, 1), (-1, -1, 1)])
        assert [b.height for b in cone.box_points()] == [0, 1, 2]

    def test_count_is_index(self):
        for gens in [
            [(0, 1), (3, 2)],
            [(2, 0, 1), (0, 3, 1), (0, 0, 1)],
            [(5, 0, 1), (0, 5, 1), (0, 0, 1)],
            [(1, 2, 1), (2, 1, 1), (0, 0, 1)],
        ]:
            cone = SimplicialCone(gens)
            assert len(cone.box_points()) == cone.index()

    def test_against_brute_force(self):
        for gens in [
            [(0, 1), (2, 1)],
            [(4, 2, 1), (1, 5, 1), (0, 0, 1)],
            [(2, 0, 1), (0, 3, 1), (0, 0, 1)],
        ]:
            cone = SimplicialCone(gens)
            got = [b.coordinates for b in cone.box_points()]
            assert got == brute_force_box(gens)

    def test_barycentric_consistency(self):
        cone = SimplicialCone([(4, 2, 1), (1, 5, 1), (0, 0, 1)])
        for b in cone.box_points():
            assert isinstance(b, BoxPoint)
            recon = tuple(
                sum(a * Fraction(g[i]) for a, g in zip(b.barycentric, cone.generators))
                for i in range(3)
            )
            assert recon == b.coordinates
            assert all(0 <= a < 1 for a in b.barycentric)

    def test_dependent_generators_rejected(self):
        with pytest.raises(DependentVectors):
            SimplicialCone([(1, 1), (-1, -1)])
