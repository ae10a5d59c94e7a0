"""Limit mixed and refined weighted h*-polynomials.

The two-variable invariant sums, over cells F of S(nu),

    v^(dim F + 1) l*(F, nu|F; u/v) h(lk(F); uv)

(with the local h-polynomial of the subdivision in place of the link h for
the local version); the three-variable refined invariant assembles the local
two-variable invariants of the faces of P against g([Q, P]; uvw^2).  The
u/v substitution always clears because deg l* <= dim F; this is asserted.
"""

from __future__ import annotations

from .errors import NonPolynomialResult
from .groupring import GroupRingElement
from .polynomials import Polynomial
from .subdivisions import ConvexGraph, poly_to_t
from .wehrhart import local_weighted_hstar

UV = ("u", "v")
UVW = ("u", "v", "w")


def _spread(lstar_u: Polynomial, dim_cell: int) -> Polynomial:
    """v^(dim F + 1) l*(F; u v^-1) as a polynomial in (u, v)."""
    out = Polynomial.zero(UV)
    for (j,), coeff in lstar_u.items():
        k = dim_cell + 1 - j
        if k < 0:
            raise NonPolynomialResult("local h*-degree exceeds dim + 1")
        out = out + Polynomial.monomial(UV, (j, k), coeff)
    return out


def _cell_local_star(cg: ConvexGraph, cell) -> Polynomial:
    """l*(F, nu|F; u) for a cell F (1 for the empty cell)."""
    if not cell:
        return Polynomial.one(("u",))
    return local_weighted_hstar(cg.restrict(cell))


def limit_mixed_hstar(cg: ConvexGraph) -> Polynomial:
    """h*(P, nu; u, v)."""
    if "mixed" not in cg.cache:
        out = Polynomial.zero(UV)
        for cell, dim in sorted(cg.cells().items(), key=lambda c: (len(c[0]), sorted(c[0]))):
            ls = _spread(_cell_local_star(cg, cell), dim)
            if ls.is_zero():
                continue
            h = cg.complex.link_h(cell).substitute(
                {"t": Polynomial.monomial(UV, (1, 1))}
            )
            out = out + ls * h
        cg.cache["mixed"] = out
    return cg.cache["mixed"]


def local_limit_mixed_hstar(cg: ConvexGraph) -> Polynomial:
    """l*(P, nu; u, v)."""
    if "local_mixed" not in cg.cache:
        out = Polynomial.zero(UV)
        for cell, dim in sorted(cg.cells().items(), key=lambda c: (len(c[0]), sorted(c[0]))):
            ls = _spread(_cell_local_star(cg, cell), dim)
            if ls.is_zero():
                continue
            lh = cg.complex.local_h(cell).substitute(
                {"t": Polynomial.monomial(UV, (1, 1))}
            )
            out = out + ls * lh
        cg.cache["local_mixed"] = out
    return cg.cache["local_mixed"]


def refined_hstar(cg: ConvexGraph) -> Polynomial:
    """h*(P, nu; u, v, w)."""
    if "refined" not in cg.cache:
        faces = cg.complex.face_interval(frozenset(), cg.complex.top_face)
        top = cg.complex.top_face
        out = Polynomial.zero(UVW)
        for q in faces.elements:
            qdim = cg.complex.faces[q]
            if q:
                l2 = local_limit_mixed_hstar(cg.restrict(q)).extend(UVW)
            else:
                l2 = Polynomial.one(UVW)
            g = poly_to_t(faces.g_interval(q, top)).substitute(
                {"t": Polynomial.monomial(UVW, (1, 1, 2))}
            )
            out = out + l2 * g * Polynomial.monomial(UVW, (0, 0, qdim + 1))
        cg.cache["refined"] = out
    return cg.cache["refined"]


def inverse_local_from_refined(cg: ConvexGraph) -> Polynomial:
    """Recover w^(dim P + 1) l*(P, nu; u, v) from the refined invariants of
    the faces; a consistency oracle for :func:`refined_hstar`."""
    faces = cg.complex.face_interval(frozenset(), cg.complex.top_face)
    top = cg.complex.top_face
    out = Polynomial.zero(UVW)
    for q in faces.elements:
        qdim = cg.complex.faces[q]
        sign = (-1) ** (cg.dim - qdim)
        h3 = refined_hstar(cg.restrict(q)) if q else Polynomial.one(UVW)
        g = poly_to_t(faces.g_interval_dual(q, top)).substitute(
            {"t": Polynomial.monomial(UVW, (1, 1, 2))}
        )
        out = out + h3 * g * sign
    return out


class RefinedTable:
    """The coefficients h*_{p,q,r} of 1 + uvw^2 sum h*_{p,q,r} u^p v^q w^r."""

    def __init__(self, refined: Polynomial, dim: int):
        body = (refined - 1).divide_exact_monomial((1, 1, 2))
        self.dim = dim
        self.entries = {}
        for (p, q, r), coeff in body.items():
            self.entries[(p, q, r)] = coeff

    def coefficient(self, p, q, r) -> GroupRingElement:
        return self.entries.get((p, q, r), GroupRingElement.zero())

    def to_json(self):
        return [
            {"p": p, "q": q, "r": r, "coeff": c.to_json()}
            for (p, q, r), c in sorted(self.entries.items())
        ]


def refined_table(cg: ConvexGraph) -> RefinedTable:
    return RefinedTable(refined_hstar(cg), cg.dim)


def small_coefficient(cg: ConvexGraph, q: int, r: int) -> GroupRingElement:
    """Direct lattice-point formula for h*_{0,q,r}; for q = r = 0 the value
    of h*_{0,0,0} (the dim P + 1 offset is subtracted)."""
    if q < 0 or r < 0 or q > r:
        raise ValueError("need 0 <= q <= r")
    out = GroupRingElement.zero()
    if q > 0:
        for cell, dim in cg.cells().items():
            if dim != q + 1:
                continue
            if cg.complex.faces[cg.complex.sigma[cell]] != r + 1:
                continue
            out = out + _interior_weights(cg, cell)
        return out
    if r > 0:
        for cell, dim in cg.cells().items():
            if dim > 1 or dim < 0:
                continue
            if cg.complex.faces[cg.complex.sigma[cell]] != r + 1:
                continue
            out = out + _interior_weights(cg, cell)
        return out
    for face, dim in cg.complex.faces.items():
        if 0 <= dim <= 1:
            out = out + _interior_weights_face(cg, face)
    return out - (cg.dim + 1)


def _interior_weights(cg: ConvexGraph, cell) -> GroupRingElement:
    out = GroupRingElement.zero()
    poly = cg.cell_polytope(cell)
    lin, const = cg.nu_affine[cell]
    for p in poly.interior_lattice_points(1):
        val = sum(l * x for l, x in zip(lin, p)) + const
        out = out + GroupRingElement.of_class(val)
    return out


def _interior_weights_face(cg: ConvexGraph, face) -> GroupRingElement:
    out = GroupRingElement.zero()
    poly = cg.polytope.face_polytope(face)
    for p in poly.interior_lattice_points(1):
        out = out + GroupRingElement.of_class(cg.nu(p))
    return out
