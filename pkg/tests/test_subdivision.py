"""Tests for lower hulls, links, local h-polynomials, and triangulations."""

from fractions import Fraction

import pytest

from ehrmono.errors import CellNotInSubdivision
from ehrmono.polynomials import Polynomial
from ehrmono.polytopes import hull
from ehrmono.posets import poly_mul, poly_pow_t_minus_1, poly_add
from ehrmono.subdivisions import carrier, lower_hull, pulling_triangulation

from corpus import random_weighted_corpus

T = ("t",)


def hexagon_fan():
    hexa = hull([(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)])
    heights = {v: 1 for v in hexa.vertices}
    heights[(0, 0)] = 0
    return lower_hull(hexa, heights)


class TestLowerHull:
    def test_broken_segment(self):
        seg = hull([(0,), (2,)])
        cg = lower_hull(seg, {(0,): 0, (1,): 0, (2,): 1})
        maximal = sorted(sorted(c) for c in cg.maximal_cells())
        assert maximal == [[(0,), (1,)], [(1,), (2,)]]
        assert cg.nu((1,)) == 0

    def test_lift_above_envelope_ignored(self):
        seg = hull([(0,), (2,)])
        cg = lower_hull(seg, {(0,): 0, (1,): 5, (2,): 1})
        assert cg.maximal_cells() == [frozenset({(0,), (2,)})]
        assert cg.nu((1,)) == Fraction(1, 2)
        # the lifted point is not a vertex of the subdivision
        assert frozenset({(1,)}) not in cg.cells()

    def test_hexagon_fan(self):
        fan = hexagon_fan()
        assert len(fan.maximal_cells()) == 6
        assert all(len(c) == 3 for c in fan.maximal_cells())
        assert fan.nu((0, 1)) == Fraction(1, 2)
        assert fan.nu((-1, 1)) == Fraction(2, 3)

    def test_cone_extension(self):
        fan = hexagon_fan()
        assert fan.nu((-2, 2), 2) == Fraction(4, 3)
        assert fan.nu((0, 0), 2) == 0

    def test_missing_vertex_heights_rejected(self):
        seg = hull([(0,), (2,)])
        with pytest.raises(ValueError):
            lower_hull(seg, {(0,): 0})


class TestSigma:
    def test_trivial_subdivision_is_identity(self):
        hexa = hull([(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)])
        triv = lower_hull(hexa, {v: 0 for v in hexa.vertices})
        for cell in triv.cells():
            assert triv.complex.sigma[cell] == cell

    def test_fan_triangles_map_to_whole(self):
        fan = hexagon_fan()
        top = fan.complex.top_face
        for cell in fan.maximal_cells():
            assert fan.complex.sigma[cell] == top
        # boundary edges map to the edges of P
        for cell, dim in fan.cells().items():
            if dim == 1 and (0, 0) not in cell:
                assert fan.complex.sigma[cell] == cell

    def test_segment_split(self):
        seg = hull([(0,), (2,)])
        cg = lower_hull(seg, {(0,): 0, (1,): -1, (2,): 0})
        assert cg.complex.sigma[frozenset({(0,), (1,)})] == frozenset({(0,), (2,)})


def link_h_oracle(complex_, cell):
    """The defining alternating sum, evaluated without the library's caching."""
    span = complex_.ambient_dim - complex_.cells[cell]
    acc = ()
    for other in complex_.cells_above(cell):
        g = complex_.g_cell_interval(cell, other)
        acc = poly_add(acc, poly_mul(g, poly_pow_t_minus_1(complex_.ambient_dim - complex_.cells[other])))
    return tuple(acc[span - i] if 0 <= span - i < len(acc) else 0 for i in range(span + 1))


class TestLinkH:
    def test_trivial_subdivision_gives_g(self):
        hexa = hull([(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)])
        triv = lower_hull(hexa, {v: 0 for v in hexa.vertices})
        # h(lk(Q)) = g([Q, P]) : 1 + 3t for the empty face of a hexagon
        h = triv.complex.link_h(frozenset())
        assert h == Polynomial(T, {(0,): 1, (1,): 3})
        for cell, dim in triv.cells().items():
            if dim == 1:
                assert triv.complex.link_h(cell) == Polynomial.one(T)

    def test_hexagon_fan(self):
        fan = hexagon_fan()
        assert fan.complex.link_h(frozenset()) == Polynomial(T, {(0,): 1, (1,): 4, (2,): 1})

    def test_segment_split(self):
        seg = hull([(0,), (2,)])
        cg = lower_hull(seg, {(0,): 0, (1,): -1, (2,): 0})
        assert cg.complex.link_h(frozenset()) == Polynomial(T, {(0,): 1, (1,): 1})

    def test_unknown_cell(self):
        fan = hexagon_fan()
        with pytest.raises(CellNotInSubdivision):
            fan.complex.link_h(frozenset({(9, 9)}))

    def test_linear_coefficient(self):
        # linear coefficient is (number of covers) - (dim P - dim F)
        fan = hexagon_fan()
        for cell, dim in fan.cells().items():
            h = fan.complex.link_h(cell)
            covers = sum(
                1
                for other, odim in fan.cells().items()
                if odim == dim + 1 and fan.complex.cell_leq(cell, other)
            )
            expected = covers - (fan.dim - dim)
            if fan.dim - dim >= 1:
                assert h.coefficient((1,)) == expected

    def test_top_coefficient_counts_interior_covers(self):
        # when the carrier is proper, the top coefficient counts covers
        # with carrier equal to the whole polytope
        fan = hexagon_fan()
        top = fan.complex.top_face
        for cell, dim in fan.cells().items():
            if fan.complex.sigma[cell] == top or dim < 0:
                continue
            h = fan.complex.link_h(cell)
            span = fan.dim - dim
            assert h.degree("t") <= span - 1
            interior_covers = sum(
                1
                for other, odim in fan.cells().items()
                if odim == dim + 1
                and fan.complex.cell_leq(cell, other)
                and fan.complex.sigma[other] == top
            )
            assert h.coefficient((span - 1,)) == interior_covers

    def test_matches_oracle_on_corpus(self):
        for cg in random_weighted_corpus(14):
            for cell in cg.cells():
                got = cg.complex.link_h(cell)
                want = link_h_oracle(cg.complex, cell)
                assert got == Polynomial(T, {(i,): c for i, c in enumerate(want)})


class TestLocalH:
    def test_trivial_subdivision_vanishes_on_proper_cells(self):
        hexa = hull([(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)])
        triv = lower_hull(hexa, {v: 0 for v in hexa.vertices})
        top = frozenset(hexa.vertices)
        for cell in triv.cells():
            expected = Polynomial.one(T) if cell == top else Polynomial.zero(T)
            assert triv.complex.local_h(cell) == expected

    def test_segment_split_midpoint(self):
        seg = hull([(0,), (2,)])
        cg = lower_hull(seg, {(0,): 0, (1,): -1, (2,): 0})
        assert cg.complex.local_h(frozenset()) == Polynomial(T, {(1,): 1})

    def test_hexagon_fan(self):
        fan = hexagon_fan()
        assert fan.complex.local_h(frozenset()) == Polynomial(T, {(1,): 1, (2,): 1})

    def test_symmetry_and_nonnegativity_on_corpus(self):
        for cg in random_weighted_corpus(14):
            for cell, dim in cg.cells().items():
                l = cg.complex.local_h(cell)
                span = cg.dim - dim
                coeffs = [l.coefficient((i,)) for i in range(span + 1)]
                assert coeffs == coeffs[::-1], "local h must be palindromic"
                values = [c.forget() for c in coeffs]
                assert all(v >= 0 for v in values)
                # regular subdivisions give unimodal coefficients
                rising = values[: (len(values) + 1) // 2]
                assert all(a <= b for a, b in zip(rising, rising[1:]))


class TestPullingTriangulation:
    def test_simplex_cells_fixed(self):
        fan = hexagon_fan()
        tri = pulling_triangulation(fan)
        assert sorted(map(sorted, tri.maximal_cells())) == sorted(
            map(sorted, fan.maximal_cells())
        )

    def test_square_cell_split(self):
        sq = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        cg = lower_hull(sq, {v: 0 for v in sq.vertices})
        tri = pulling_triangulation(cg)
        assert len(tri.maximal_cells()) == 2
        for cell in tri.maximal_cells():
            assert (0, 0) in cell  # pulled at the least vertex

    def test_vertices_preserved_and_nu_affine(self):
        for cg in random_weighted_corpus(10):
            tri = pulling_triangulation(cg)
            old = {c for c, d in cg.cells().items() if d == 0}
            new = {c for c, d in tri.cells().items() if d == 0}
            assert old == new
            vol = sum(tri.cell_polytope(c).normalized_volume() for c in tri.maximal_cells())
            assert vol == cg.polytope.normalized_volume()
            for simplex in tri.maximal_cells():
                assert len(simplex) == cg.dim + 1
                lin, const = tri.nu_affine[simplex]
                for v in simplex:
                    got = sum(l * x for l, x in zip(lin, v)) + const
                    assert got == cg.nu(v)

    def test_refinement_euler_identity(self):
        # within each original cell, the alternating cell count of the
        # refinement pieces interior to it matches the cell's own sign
        for cg in random_weighted_corpus(10):
            if cg.dim > 2:
                continue
            tri = pulling_triangulation(cg)
            tally = {}
            for simplex, dim in tri.cells().items():
                if not simplex:
                    continue
                inside = carrier(cg, sorted(simplex))
                # smallest cell containing the simplex = the cell whose
                # relative interior meets the simplex's
                tally[inside] = tally.get(inside, 0) + (-1) ** dim
            for cell, dim in cg.cells().items():
                if cell:
                    assert tally.get(cell, 0) == (-1) ** dim
