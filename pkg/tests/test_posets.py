"""Tests for graded posets and g-polynomials."""

import pytest

from ehrmono.errors import NotComparable
from ehrmono.polytopes import hull
from ehrmono.posets import Poset, boolean_poset, face_poset


def polygon(m):
    pts = []
    # a convex m-gon on a circle-ish integer configuration
    shapes = {
        3: [(0, 0), (1, 0), (0, 1)],
        4: [(0, 0), (1, 0), (0, 1), (1, 1)],
        5: [(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)],
        6: [(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)],
    }
    return hull(shapes[m])


def test_face_poset_is_eulerian():
    for m in (3, 4, 5, 6):
        fp = face_poset(polygon(m).face_lattice())
        assert fp.is_eulerian()
        assert fp.total_rank == 3


def test_cube_face_poset():
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    fp = face_poset(cube.face_lattice())
    assert len(fp) == 28  # 8 + 12 + 6 + empty + top
    assert fp.is_eulerian()


class TestInterval:
    def test_singleton(self):
        fp = face_poset(polygon(4).face_lattice())
        bottom = fp.elements[fp.bottom]
        single = fp.interval(bottom, bottom)
        assert len(single) == 1 and single.total_rank == 0

    def test_empty_to_edge(self):
        sq = polygon(4)
        fp = face_poset(sq.face_lattice())
        edge = next(f for f, d in sq.face_lattice().items() if d == 1)
        iv = fp.interval(fp.elements[fp.bottom], edge)
        # empty face, two vertices, the edge
        assert len(iv) == 4 and iv.total_rank == 2

    def test_vertex_to_top_in_cube(self):
        cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
        fp = face_poset(cube.face_lattice())
        vertex = frozenset({(0, 0, 0)})
        iv = fp.interval(vertex, fp.elements[fp.top])
        # a cube vertex figure is a triangle: 1 + 3 + 3 + 1 elements
        assert len(iv) == 8 and iv.total_rank == 3
        assert iv.g_polynomial() == (1,)

    def test_not_comparable(self):
        sq = polygon(4)
        fp = face_poset(sq.face_lattice())
        v1 = frozenset({(0, 0)})
        v2 = frozenset({(1, 1)})
        with pytest.raises(NotComparable):
            fp.interval(v1, v2)


class TestDual:
    def test_involution(self):
        for m in (3, 4, 5):
            fp = face_poset(polygon(m).face_lattice())
            dd = fp.dual().dual()
            assert dd.g_polynomial() == fp.g_polynomial()
            assert dd.is_eulerian()

    def test_dual_eulerian(self):
        fp = face_poset(polygon(6).face_lattice())
        assert fp.dual().is_eulerian()


class TestGPolynomial:
    def test_rank_zero(self):
        p = Poset(["x"], lambda a, b: True)
        assert p.g_polynomial() == (1,)

    def test_boolean_is_one(self):
        for n in range(5):
            assert boolean_poset(n).g_polynomial() == (1,)

    def test_polygon(self):
        for m in (3, 4, 5, 6):
            fp = face_poset(polygon(m).face_lattice())
            expected = (1,) if m == 3 else (1, m - 3)
            assert fp.g_polynomial() == expected

    def test_degree_bound_and_linear_term(self):
        cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
        fp = face_poset(cube.face_lattice())
        for x in fp.elements:
            iv = fp.interval(fp.elements[fp.bottom], x)
            g = iv.g_polynomial()
            n = iv.total_rank
            assert len(g) - 1 <= (n - 1) // 2 if n > 0 else g == (1,)
            if g:
                assert g[0] == 1
            if len(g) > 1:
                atoms = sum(1 for r in iv.rank if r == 1)
                assert g[1] == atoms - n


class TestStanleyResidual:
    def test_zero_on_polytopes(self):
        shapes = [
            hull([(0,), (1,)]),
            polygon(5),
            polygon(6),
            hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]),
            hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        ]
        for poly in shapes:
            fp = face_poset(poly.face_lattice())
            assert fp.stanley_residual() == ()
            assert fp.dual().stanley_residual() == ()
