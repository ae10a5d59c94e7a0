"""Regular subdivisions from integral height functions, and the h/local-h
machinery of polyhedral subdivisions.

A subdivision is stored as a :class:`CellComplex`: a purely combinatorial
object (cells with dimensions and containment order, the face poset of the
ambient polytope, and the carrier map sigma).  Geometric subdivisions carry
coordinates; the rational slice complexes used for monodromy are abstract
instances of the same class, so the h/local-h machinery below is shared.

Dimension conventions: the empty cell and the empty face have dimension -1;
the rank of a face in its poset is dim + 1.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import CellNotInSubdivision
from .polynomials import Polynomial
from .polytopes import LatticePolytope, hull
from .posets import Poset, poly_add, poly_mul, poly_pow_t_minus_1, poly_trim

T = ("t",)


def poly_to_t(coeffs) -> Polynomial:
    return Polynomial(T, {(i,): c for i, c in enumerate(coeffs)})


def _sort_key(c):
    return (len(c), tuple(sorted(c)))


class CellComplex:
    """Combinatorial polyhedral subdivision of a polytope-like ambient.

    ``cells``: map cell key -> dim, including the empty cell.
    ``faces``: map face key -> dim for the ambient face poset.
    ``sigma``: smallest ambient face containing each cell.
    Keys are frozensets; containment order is given by the predicates.
    """

    def __init__(self, cells, cell_leq, faces, face_leq, sigma, ambient_dim):
        self.cells = dict(cells)
        self.faces = dict(faces)
        self.sigma = dict(sigma)
        self.ambient_dim = ambient_dim
        self._cell_leq = cell_leq
        self._face_leq = face_leq
        self._cache = {}

    def cell_dim(self, cell) -> int:
        return self.cells[cell]

    def cell_leq(self, a, b) -> bool:
        return self._cell_leq(a, b)

    def face_leq(self, a, b) -> bool:
        return self._face_leq(a, b)

    @property
    def top_face(self):
        return max(self.faces, key=lambda f: (self.faces[f], len(f)))

    def maximal_cells(self):
        return sorted(
            (c for c in self.cells if self.cells[c] == self.ambient_dim), key=_sort_key
        )

    def cells_above(self, cell):
        return sorted((c for c in self.cells if self._cell_leq(cell, c)), key=_sort_key)

    # -- posets ---------------------------------------------------------------

    def g_cell_interval(self, low, high):
        """g([low, high]; t) in the poset of cells, as coefficient tuple."""
        key = ("gci", low, high)
        if key not in self._cache:
            members = sorted(
                (
                    c
                    for c in self.cells
                    if self._cell_leq(low, c) and self._cell_leq(c, high)
                ),
                key=_sort_key,
            )
            self._cache[key] = Poset(members, self._cell_leq).g_polynomial()
        return self._cache[key]

    def face_interval(self, low, high) -> Poset:
        key = ("fi", low, high)
        if key not in self._cache:
            members = sorted(
                (
                    f
                    for f in self.faces
                    if self._face_leq(low, f) and self._face_leq(f, high)
                ),
                key=_sort_key,
            )
            self._cache[key] = Poset(members, self._face_leq)
        return self._cache[key]

    def restrict(self, face) -> "CellComplex":
        """The induced subdivision of an ambient face."""
        key = ("restrict", face)
        if key not in self._cache:
            cells = {
                c: d for c, d in self.cells.items() if self._face_leq(self.sigma[c], face)
            }
            faces = {f: d for f, d in self.faces.items() if self._face_leq(f, face)}
            self._cache[key] = CellComplex(
                cells,
                self._cell_leq,
                faces,
                self._face_leq,
                {c: self.sigma[c] for c in cells},
                self.faces[face],
            )
        return self._cache[key]

    # -- h and local h -----------------------------------------------------------

    def link_h(self, cell) -> Polynomial:
        """h-polynomial of the link of a cell, in the variable t.

        Defined by  t^(dim P - dim F) h(lk(F); 1/t) =
        sum over cells F' containing F of  g([F, F']; t) (t-1)^(dim P - dim F').
        """
        if cell not in self.cells:
            raise CellNotInSubdivision(f"{sorted(cell)!r}")
        key = ("h", cell)
        if key not in self._cache:
            span = self.ambient_dim - self.cells[cell]
            acc = ()
            for other in self.cells_above(cell):
                g = self.g_cell_interval(cell, other)
                acc = poly_add(
                    acc,
                    poly_mul(g, poly_pow_t_minus_1(self.ambient_dim - self.cells[other])),
                )
            assert len(acc) <= span + 1, "link h-polynomial degree overflow"
            coeffs = [acc[span - i] if 0 <= span - i < len(acc) else 0 for i in range(span + 1)]
            self._cache[key] = poly_to_t(poly_trim(coeffs))
        return self._cache[key]

    def local_h(self, cell) -> Polynomial:
        """Local h-polynomial of a cell, in the variable t: the alternating
        sum of link h-polynomials over ambient faces above the carrier,
        against dual g-polynomials."""
        if cell not in self.cells:
            raise CellNotInSubdivision(f"{sorted(cell)!r}")
        key = ("lh", cell)
        if key not in self._cache:
            carrier = self.sigma[cell]
            top = self.top_face
            faces = self.face_interval(carrier, top)
            out = Polynomial.zero(T)
            for q in faces.elements:
                sign = (-1) ** (self.ambient_dim - self.faces[q])
                h = self.restrict(q).link_h(cell)
                g = poly_to_t(faces.g_interval_dual(q, top))
                out = out + h * g * sign
            self._cache[key] = out
        return self._cache[key]


# -- geometric subdivisions -----------------------------------------------------


def _vertexset_leq(a, b):
    return a <= b


class ConvexGraph:
    """A regular lattice subdivision S(nu) together with the exact piecewise
    affine function nu that induces it."""

    def __init__(self, polytope, complex_, nu_affine, heights=None):
        self.polytope = polytope
        self.complex = complex_
        self.nu_affine = nu_affine  # cell -> (linear: tuple[Fraction], const: Fraction)
        self.heights = heights
        self._cell_polytopes = {}
        self._restrictions = {}
        self.cache = {}

    def cells(self):
        return self.complex.cells

    def cell_polytope(self, cell) -> LatticePolytope:
        if cell not in self._cell_polytopes:
            self._cell_polytopes[cell] = LatticePolytope(
                sorted(cell), self.polytope.ambient_dim
            )
        return self._cell_polytopes[cell]

    def maximal_cells(self):
        return self.complex.maximal_cells()

    @property
    def dim(self) -> int:
        return self.polytope.dim

    @property
    def ambient_dim(self) -> int:
        return self.polytope.ambient_dim

    # -- nu ----------------------------------------------------------------------

    def nu(self, point, dilate: int = 1) -> Fraction:
        """Value of the homogenized nu at a rational point of dilate * P."""
        if dilate == 0:
            if any(point):
                raise ValueError("the 0-th dilate contains only the origin")
            return Fraction(0)
        for cell in self.maximal_cells():
            if self.cell_polytope(cell).contains(point, dilate):
                lin, const = self.nu_affine[cell]
                return sum(l * x for l, x in zip(lin, point)) + dilate * const
        raise ValueError(f"{point!r} is not in {dilate} * P")

    # -- restriction -----------------------------------------------------------------

    def restrict(self, face) -> "ConvexGraph":
        """Restriction to an ambient face or to a cell (by vertex set).

        The empty face is not restrictable; formulas handle it directly.
        """
        face = frozenset(face)
        if not face:
            raise ValueError("cannot restrict to the empty face")
        if face in self._restrictions:
            return self._restrictions[face]
        if face in self.complex.faces:
            sub_complex = self.complex.restrict(face)
            sub_poly = self.polytope.face_polytope(face)
        elif face in self.complex.cells:
            keep = {c: d for c, d in self.complex.cells.items() if c <= face}
            sub_poly = self.cell_polytope(face)
            sub_faces = dict(sub_poly.face_lattice())
            sigma = {
                c: sub_poly.smallest_face_containing(sorted(c)) if c else frozenset()
                for c in keep
            }
            sub_complex = CellComplex(
                keep, _vertexset_leq, sub_faces, _vertexset_leq, sigma, sub_poly.dim
            )
        else:
            raise CellNotInSubdivision(f"{sorted(face)!r}")
        nu = {c: self.nu_affine[c] for c in sub_complex.cells if c}
        out = ConvexGraph(sub_poly, sub_complex, nu)
        self._restrictions[face] = out
        return out

    def shifted(self, linear, const) -> "ConvexGraph":
        """New graph with an integral affine function added to the heights."""
        heights = {
            p: v + sum(l * x for l, x in zip(linear, p)) + const
            for p, v in self.heights.items()
        }
        return lower_hull(self.polytope, heights)


def trivial_heights(polytope: LatticePolytope, value: int = 0):
    return {v: value for v in polytope.vertices}


def lower_hull(polytope: LatticePolytope, heights) -> ConvexGraph:
    """Regular subdivision induced by an integral height function.

    ``heights`` maps lattice points of P (at least the vertices) to ints; the
    cells are the projections of the bounded lower faces of the lifted hull.
    Points lifted strictly above the lower envelope do not become vertices.
    """
    pts = sorted(tuple(int(x) for x in p) for p in heights)
    missing = [v for v in polytope.vertices if v not in heights]
    if missing:
        raise ValueError(f"heights must cover the vertices; missing {missing}")
    local = {}
    for p in pts:
        loc = polytope.to_local(p)
        if loc is None or not polytope.contains(p):
            raise ValueError(f"height point {p} is not a lattice point of P")
        local[p] = loc
    d = polytope.dim

    lifted = {p: local[p] + (int(heights[p]),) for p in pts}
    rows = [[x - y for x, y in zip(lifted[p], lifted[pts[0]])] for p in pts[1:]]
    maximal = []  # (vertexset, linear_local, const_local)
    if not rows or linalg.rank(rows) < d + 1:
        # every lifted point lies on one affine graph: trivial subdivision
        lin, const = _affine_through(local, heights, d)
        maximal.append((frozenset(polytope.vertices), lin, const))
    else:
        lifted_poly = LatticePolytope(sorted(set(lifted.values())), d + 1)
        for normal, off in lifted_poly.ambient_facets():
            if normal[-1] >= 0:
                continue
            members = [
                p for p in pts if sum(n * x for n, x in zip(normal, lifted[p])) == off
            ]
            cell_poly = hull([local[p] for p in members], d)
            cell_vertices = set(cell_poly.vertices)
            cell = frozenset(p for p in members if local[p] in cell_vertices)
            # nu on the cell: lambda = (off - a . x) / a_last in local coords
            a, a_last = normal[:-1], normal[-1]
            lin = tuple(Fraction(-ai, a_last) for ai in a)
            const = Fraction(off, a_last)
            maximal.append((cell, lin, const))

    return _assemble(polytope, maximal, dict(heights))


def _affine_through(local, heights, d):
    pts = list(local)
    rows = [list(local[p]) + [1] for p in pts]
    rhs = [heights[p] for p in pts]
    sol = linalg.solve(rows, rhs)
    assert sol is not None
    return tuple(sol[:d]), sol[d]


def _assemble(polytope, maximal, heights):
    """Close the maximal cells under faces and build the ConvexGraph."""
    cells = {frozenset(): -1}
    nu_local = {}
    for cell, lin, const in maximal:
        cp = LatticePolytope(sorted(cell), polytope.ambient_dim)
        for vset, fdim in cp.face_lattice().items():
            if vset and vset not in cells:
                cells[vset] = fdim
            if vset and vset not in nu_local:
                nu_local[vset] = (lin, const)
    nu_aff = {
        cell: _local_affine_to_ambient(polytope, lin, const)
        for cell, (lin, const) in nu_local.items()
    }
    faces = polytope.face_lattice()
    sigma = {frozenset(): frozenset()}
    for cell in cells:
        if cell:
            sigma[cell] = polytope.smallest_face_containing(sorted(cell))
    complex_ = CellComplex(cells, _vertexset_leq, faces, _vertexset_leq, sigma, polytope.dim)
    cg = ConvexGraph(polytope, complex_, nu_aff, heights)
    _check_integral_vertices(cg)
    return cg


def _local_affine_to_ambient(polytope, lin, const):
    """Rewrite nu(local(p)) = lin . local(p) + const as ambient-affine data."""
    n = polytope.ambient_dim
    if polytope.dim == 0:
        return (tuple(Fraction(0) for _ in range(n)), Fraction(const))
    amb_lin = tuple(
        sum(Fraction(l) * polytope._pinv[i][j] for j, l in enumerate(lin)) for i in range(n)
    )
    amb_const = Fraction(const) - sum(a * x for a, x in zip(amb_lin, polytope._origin))
    return (amb_lin, amb_const)


def _check_integral_vertices(cg: ConvexGraph):
    for cell, dim in cg.cells().items():
        if dim == 0:
            (v,) = cell
            lin, const = cg.nu_affine[cell]
            val = sum(l * x for l, x in zip(lin, v)) + const
            assert val.denominator == 1, "nu must be integral on subdivision vertices"


# -- triangulation ------------------------------------------------------------------


def pulling_triangulation(cg: ConvexGraph) -> ConvexGraph:
    """Lattice triangulation refining S(nu) with the same vertex set.

    Cells are pulled at their lexicographically least vertex, recursively,
    so simplices of adjacent cells agree on shared faces and nu stays
    Q-affine on every simplex.
    """
    cells = {frozenset(): -1}
    nu = {}
    for cell in cg.maximal_cells():
        data = cg.nu_affine[cell]
        for simplex in cg.cell_polytope(cell).triangulation():
            for sub in _subsets(sorted(simplex)):
                if sub:
                    key = frozenset(sub)
                    cells[key] = len(sub) - 1
                    if key not in nu:
                        nu[key] = data
    polytope = cg.polytope
    sigma = {frozenset(): frozenset()}
    for cell in cells:
        if cell:
            sigma[cell] = polytope.smallest_face_containing(sorted(cell))
    complex_ = CellComplex(
        cells, _vertexset_leq, polytope.face_lattice(), _vertexset_leq, sigma, polytope.dim
    )
    return ConvexGraph(polytope, complex_, nu, cg.heights)


def _subsets(items):
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


def carrier(cg: ConvexGraph, points) -> frozenset:
    """Smallest cell of S(nu) containing the given points."""
    best = None
    for cell, dim in cg.cells().items():
        if not cell:
            continue
        if all(cg.cell_polytope(cell).contains(p) for p in points):
            if best is None or dim < cg.complex.cell_dim(best):
                best = cell
    if best is None:
        raise CellNotInSubdivision(f"{points!r}")
    return best
