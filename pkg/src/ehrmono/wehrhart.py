"""Weighted Ehrhart theory.

Given a lattice polytope P with a convex graph nu, each lattice point v of
the cone over P x {1} gets the weight w(v) = [nu(v)] in Q/Z.  The weighted
counting function f(P, nu; m) sums the weights over the m-th dilate; its
generating series has numerator the weighted h*-polynomial.  Three
independent routes to h* are provided (generating function, box points over
a triangulation, assembly from local contributions), and they are required
to agree in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .groupring import GroupRingElement, TorsionClass
from .polynomials import Polynomial
from .polytopes import SimplicialCone
from .subdivisions import ConvexGraph, poly_to_t, pulling_triangulation

U = ("u",)


def weight(cg: ConvexGraph, point, dilate: int = 1) -> TorsionClass:
    """The class [nu(point)] of a lattice point of dilate * P."""
    return TorsionClass.of(cg.nu(point, dilate))


def weighted_count(cg: ConvexGraph, dilate: int) -> GroupRingElement:
    """f(P, nu; m) = sum of w(v) over the lattice points of the dilate."""
    if dilate < 0:
        raise ValueError("dilate must be non-negative")
    key = ("count", dilate)
    if key not in cg.cache:
        terms = {}
        for p in cg.polytope.lattice_points(dilate):
            cls = weight(cg, p, dilate) if dilate else TorsionClass.of(0)
            terms[cls] = terms.get(cls, 0) + 1
        cg.cache[key] = GroupRingElement(terms)
    return cg.cache[key]


def interior_weighted_count(cg: ConvexGraph, dilate: int, conjugated=True) -> GroupRingElement:
    """Sum of conj(w(v)) over interior lattice points of the dilate."""
    terms = {}
    for p in cg.polytope.interior_lattice_points(dilate):
        cls = weight(cg, p, dilate)
        if conjugated:
            cls = cls.conjugate()
        terms[cls] = terms.get(cls, 0) + 1
    return GroupRingElement(terms)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """f(P, nu; m) as one rational polynomial in m per torsion class."""

    components: tuple  # ((TorsionClass, (Fraction coefficients ascending)), ...)

    def component(self, cls) -> tuple:
        cls = cls if isinstance(cls, TorsionClass) else TorsionClass.of(cls)
        for c, coeffs in self.components:
            if c == cls:
                return coeffs
        return ()

    def classes(self):
        return [c for c, _ in self.components]

    @property
    def degree(self) -> int:
        return max((len(c) - 1 for _, c in self.components), default=0)

    def evaluate(self, m: int) -> GroupRingElement:
        terms = {}
        for cls, coeffs in self.components:
            val = sum(c * m**i for i, c in enumerate(coeffs))
            assert val.denominator == 1, "Ehrhart polynomial must be integral at integers"
            terms[cls] = terms.get(cls, 0) + int(val)
        return GroupRingElement(terms)

    def to_json(self):
        return [
            {
                "num": cls.num,
                "den": cls.den,
                "coefficients": [[c.numerator, c.denominator] for c in coeffs],
            }
            for cls, coeffs in self.components
        ]


def ehrhart_polynomial(cg: ConvexGraph) -> EhrhartPolynomial:
    """Interpolate the weighted counts at m = 0..dim P."""
    d = cg.dim
    counts = [weighted_count(cg, m) for m in range(d + 1)]
    classes = sorted({cls for f in counts for cls in f.classes()})
    comps = []
    for cls in classes:
        values = [Fraction(f.coefficient(cls)) for f in counts]
        coeffs = _interpolate(values)
        if any(coeffs):
            comps.append((cls, coeffs))
    return EhrhartPolynomial(tuple(comps))


def _interpolate(values):
    """Coefficients of the unique polynomial with p(i) = values[i]."""
    n = len(values)
    rows = [[Fraction(i**j) for j in range(n)] for i in range(n)]
    from . import linalg

    sol = linalg.solve(rows, values)
    out = list(sol)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def reciprocity_check(cg: ConvexGraph, m: int) -> bool:
    """(-1)^dim f(P, nu; -m) == sum of conjugate weights over Int(mP)."""
    if m < 1:
        raise ValueError("m must be positive")
    f = ehrhart_polynomial(cg)
    lhs = GroupRingElement.zero()
    for cls, coeffs in f.components:
        val = sum(c * (-m) ** i for i, c in enumerate(coeffs)) * (-1) ** cg.dim
        assert val.denominator == 1
        lhs = lhs + GroupRingElement.of_class(cls, int(val))
    return lhs == interior_weighted_count(cg, m)


# -- the weighted h*-polynomial, three ways ------------------------------------


def weighted_hstar(cg: ConvexGraph) -> Polynomial:
    """h*(P, nu; u) from the generating function of weighted counts."""
    if "hstar" not in cg.cache:
        d = cg.dim
        f = [weighted_count(cg, m) for m in range(d + 1)]
        out = Polynomial.zero(U)
        for j in range(d + 1):
            coeff = GroupRingElement.zero()
            for i in range(j + 1):
                coeff = coeff + f[j - i] * ((-1) ** i * comb(d + 1, i))
            out = out + Polynomial.monomial(U, (j,), coeff)
        cg.cache["hstar"] = out
    return cg.cache["hstar"]


def local_weighted_hstar(cg: ConvexGraph) -> Polynomial:
    """l*(P, nu; u): alternating sum of face h*-polynomials against dual g."""
    if "lstar" not in cg.cache:
        faces = cg.complex.face_interval(frozenset(), cg.complex.top_face)
        top = cg.complex.top_face
        out = Polynomial.zero(U)
        for q in faces.elements:
            qdim = cg.complex.faces[q]
            sign = (-1) ** (cg.dim - qdim)
            h = weighted_hstar(cg.restrict(q)) if q else Polynomial.one(U)
            g = poly_to_t(faces.g_interval_dual(q, top)).rename({"t": "u"})
            out = out + h * g * sign
        cg.cache["lstar"] = out
    return cg.cache["lstar"]


def hstar_from_local(cg: ConvexGraph) -> Polynomial:
    """h*(P, nu; u) reassembled as sum of face l*-polynomials against g."""
    faces = cg.complex.face_interval(frozenset(), cg.complex.top_face)
    top = cg.complex.top_face
    out = Polynomial.zero(U)
    for q in faces.elements:
        l = local_weighted_hstar(cg.restrict(q)) if q else Polynomial.one(U)
        g = poly_to_t(faces.g_interval(q, top)).rename({"t": "u"})
        out = out + l * g
    return out


def simplex_box_hstar(cg: ConvexGraph, cell, interior_only=False) -> Polynomial:
    """h* (or l*) of a simplex cell with Q-affine nu, via box points.

    The cone over cell x {1} is simplicial; every box point v contributes
    w(v) u^height, interior box points only for the local version.
    """
    gens = [tuple(v) + (1,) for v in sorted(cell)]
    lin, const = cg.nu_affine[cell]
    out = Polynomial.zero(U)
    for b in SimplicialCone(gens).box_points():
        if interior_only and not b.is_interior():
            continue
        point, h = b.coordinates[:-1], b.height
        val = sum(l * x for l, x in zip(lin, point)) + h * const
        out = out + Polynomial.monomial(U, (h,), GroupRingElement.of_class(TorsionClass.of(val)))
    return out


def weighted_hstar_via_boxes(cg: ConvexGraph) -> Polynomial:
    """h*(P, nu; u) via a triangulation: box sums against link h-polynomials."""
    tri = pulling_triangulation(cg)
    out = Polynomial.zero(U)
    for cell in sorted(tri.cells(), key=lambda c: (len(c), sorted(c))):
        if cell:
            l = simplex_box_hstar(tri, cell, interior_only=True)
            if l.is_zero():
                continue
        else:
            l = Polynomial.one(U)
        h = tri.complex.link_h(cell).rename({"t": "u"})
        out = out + l * h
    return out


def hstar_integer(polytope) -> Polynomial:
    """Ordinary (unweighted) h*-polynomial, directly from point counts."""
    d = polytope.dim
    f = [len(polytope.lattice_points(m)) for m in range(d + 1)]
    out = Polynomial.zero(U)
    for j in range(d + 1):
        c = sum((-1) ** i * comb(d + 1, i) * f[j - i] for i in range(j + 1))
        out = out + Polynomial.monomial(U, (j,), c)
    return out


def hstar_volume_formula(cg: ConvexGraph) -> GroupRingElement:
    """h*(P, nu; 1) as a sum of Vol(F)/m_F full cyclic orbits over maximal
    cells of any nu-integral triangulation."""
    tri = pulling_triangulation(cg)
    out = GroupRingElement.zero()
    for cell in tri.maximal_cells():
        vol = tri.cell_polytope(cell).normalized_volume()
        m = nu_denominator(tri, cell)
        assert vol % m == 0, "Vol(F)/m_F must be an integer"
        orbit = GroupRingElement.zero()
        for i in range(m):
            orbit = orbit + GroupRingElement.of_class(Fraction(i, m))
        out = out + orbit * (vol // m)
    return out


def nu_denominator(cg: ConvexGraph, cell) -> int:
    """Least m >= 1 with m * nu affine w.r.t. the lattice of the cell's span."""
    poly = cg.cell_polytope(cell)
    lin, const = cg.nu_affine[cell]
    v0 = poly.vertices[0]
    vals = [sum(l * x for l, x in zip(lin, v0)) + const]
    for b in poly._basis:
        vals.append(sum(l * x for l, x in zip(lin, b)))
    return lcm(*(v.denominator for v in vals)) if vals else 1


def acceptability_rhs(cg: ConvexGraph) -> Polynomial:
    """sum over faces Q of h*(Q, nu|Q; u) (u-1)^(dim P - dim Q)."""
    out = Polynomial.zero(U)
    um1 = Polynomial.variable(U, "u") - 1
    for q, qdim in cg.complex.faces.items():
        h = weighted_hstar(cg.restrict(q)) if q else Polynomial.one(U)
        out = out + h * um1 ** (cg.dim - qdim)
    return out
