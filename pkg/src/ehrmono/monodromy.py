"""Monodromy invariants of non-degenerate complex polynomials.

From the support of a polynomial f we build the Newton polytope data and the
three height functions of interest:

* at zero: height 1 at the origin, 0 on the support (f(0) = 0 required);
* at infinity: height 0 at the origin, 1 on the support;
* Milnor fiber: the at-zero data restricted to the cones over the bounded
  faces of the Newton polyhedron.

All outputs (equivariant refined limit Hodge-Deligne polynomials, eigenvalue
classes, Jordan block counts) are exact elements over Z[Q/Z].  Hodge-theoretic
hypotheses (non-degeneracy of coefficients, isolated singularity) are the
caller's responsibility; the combinatorial formulas are evaluated regardless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonUnimodalDecomposition,
    NotConvenient,
    NotFullDimensional,
)
from .groupring import GroupRingElement, TorsionClass
from .mixed import UV, UVW, local_limit_mixed_hstar, refined_hstar, _spread
from .polynomials import Polynomial
from .polytopes import LatticePolytope, hull
from .posets import Poset
from .subdivisions import CellComplex, ConvexGraph, lower_hull, poly_to_t
from .wehrhart import local_weighted_hstar, nu_denominator

AT_ZERO = "at-zero"
AT_INFINITY = "at-infinity"
MILNOR = "milnor"


@dataclass(frozen=True)
class NewtonData:
    """Support of a complex polynomial in n non-negative integer exponents."""

    n: int
    support: tuple

    @staticmethod
    def from_monomials(n, monomials) -> "NewtonData":
        pts = sorted({tuple(int(x) for x in m) for m in monomials})
        if not pts:
            raise ValueError("support must be non-empty")
        for p in pts:
            if len(p) != n or any(x < 0 for x in p):
                raise ValueError(f"bad exponent vector {p}")
        return NewtonData(n, tuple(pts))

    @property
    def has_constant_term(self) -> bool:
        return (0,) * self.n in self.support


class MonodromyProblem:
    """A convenient Newton polytope with one of the three height functions."""

    def __init__(self, kind, newton: NewtonData, graph: ConvexGraph):
        self.kind = kind
        self.newton = newton
        self.graph = graph
        self.n = newton.n
        self._cache = {}

    @staticmethod
    def at_zero(newton: NewtonData) -> "MonodromyProblem":
        if newton.has_constant_term:
            raise ValueError("monodromy at zero needs a polynomial without constant term")
        graph = _cone_graph(newton, origin_height=1, support_height=0)
        problem = MonodromyProblem(AT_ZERO, newton, graph)
        problem.check_convenient()
        return problem

    @staticmethod
    def at_infinity(newton: NewtonData) -> "MonodromyProblem":
        graph = _cone_graph(newton, origin_height=0, support_height=1)
        problem = MonodromyProblem(AT_INFINITY, newton, graph)
        problem.check_convenient()
        return problem

    @staticmethod
    def milnor(newton: NewtonData) -> "MonodromyProblem":
        if newton.has_constant_term:
            raise ValueError("the Milnor fiber needs a polynomial without constant term")
        graph = _cone_graph(newton, origin_height=1, support_height=0)
        problem = MonodromyProblem(MILNOR, newton, graph)
        problem.check_convenient()
        return problem

    # -- convenience -------------------------------------------------------

    def check_convenient(self):
        bad = [
            i + 1
            for i in range(self.n)
            if self.coordinate_face(frozenset([i])).dim != 1
        ]
        if bad:
            raise NotConvenient(bad)
        for s in _subsets_of(self.n):
            if self.coordinate_face(s).dim != len(s):
                raise NotConvenient(sorted(i + 1 for i in s))

    def coordinate_face(self, s: frozenset) -> LatticePolytope:
        """The face P^S = P intersect the coordinate subspace R^S."""
        key = ("pface", s)
        if key not in self._cache:
            p = self.graph.polytope
            verts = [v for v in p.vertices if all(v[i] == 0 for i in range(self.n) if i not in s)]
            self._cache[key] = frozenset(verts)
        face = self._cache[key]
        return self.graph.polytope.face_polytope(face)

    def coordinate_face_key(self, s: frozenset) -> frozenset:
        self.coordinate_face(s)
        return self._cache[("pface", s)]

    # -- base faces of the slice ------------------------------------------------

    def base_faces(self):
        """Faces indexing the slice complex: faces at infinity of P (at
        infinity), or bounded faces of the Newton polyhedron (at zero /
        Milnor), as vertex sets; includes the empty face."""
        key = "base"
        if key not in self._cache:
            origin = (0,) * self.n
            out = []
            if self.kind == AT_INFINITY:
                for face, dim in self.graph.polytope.face_lattice().items():
                    if origin not in face:
                        out.append(frozenset(face))
            else:
                for cell in self.graph.cells():
                    if origin in cell:
                        out.append(frozenset(p for p in cell if p != origin))
            self._cache[key] = sorted(set(out), key=lambda f: (len(f), sorted(f)))
        return self._cache[key]

    def delta(self, base: frozenset) -> frozenset:
        """The cone cell over a base face: conv(base, origin) as a vertex set."""
        return frozenset(base | {(0,) * self.n})


def _cone_graph(newton: NewtonData, origin_height, support_height) -> ConvexGraph:
    origin = (0,) * newton.n
    polytope = hull(set(newton.support) | {origin}, newton.n)
    heights = {p: support_height for p in newton.support}
    heights[origin] = origin_height
    return lower_hull(polytope, heights)


def _subsets_of(n):
    out = [frozenset()]
    for i in range(n):
        out += [s | {i} for s in out]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def support_of(points) -> frozenset:
    return frozenset(i for p in points for i, x in enumerate(p) if x)


# -- slice complexes -----------------------------------------------------------


def slice_complex(problem: MonodromyProblem) -> CellComplex:
    """The rational subdivision cut out on the simplex near the origin.

    Built combinatorially: one cell per base face Q with dim Q_slice = dim Q,
    ordered by inclusion; the ambient is the (n-1)-simplex whose face poset
    is the Boolean lattice of coordinate subsets.
    """
    key = "slice"
    if key not in problem._cache:
        n = problem.n
        cells = {}
        sigma = {}
        for base in problem.base_faces():
            cells[base] = problem.graph.complex.cell_dim(base) if base else -1
            sigma[base] = frozenset(support_of(base))
        faces = {}
        for s in _subsets_of(n):
            faces[frozenset(s)] = len(s) - 1
        complex_ = CellComplex(
            cells,
            lambda a, b: a <= b,
            faces,
            lambda a, b: a <= b,
            sigma,
            n - 1,
        )
        problem._cache[key] = complex_
    return problem._cache[key]


def tilde_local_h(complex_: CellComplex, cell) -> Polynomial:
    """Peel l(t) = sum tilde_i t^i (1 + t + ... + t^(D - 2i)) and return
    sum tilde_i t^i, where D = ambient dim - cell dim."""
    local = complex_.local_h(cell)
    span = complex_.ambient_dim - complex_.cell_dim(cell)
    coeffs = [local.coefficient((i,)) for i in range(span + 1)]
    tilde = []
    for i in range(span // 2 + 1):
        # coefficient i of l is tilde_0 + ... + tilde_i once blocks are peeled
        acc = GroupRingElement.zero()
        for t in tilde:
            acc = acc + t
        c = coeffs[i] - acc
        for cls, val in c.items():
            if val < 0:
                raise NonUnimodalDecomposition(f"negative block count at degree {i}")
        tilde.append(c)
    # verify the reassembly (also catches asymmetric input)
    reassembled = [GroupRingElement.zero() for _ in range(span + 1)]
    for i, t in enumerate(tilde):
        for j in range(i, span - i + 1):
            reassembled[j] = reassembled[j] + t
    if reassembled != coeffs:
        raise NonUnimodalDecomposition("local h-polynomial failed to reassemble")
    return Polynomial(("t",), {(i,): t for i, t in enumerate(tilde)})


# -- refined Hodge-Deligne polynomials ------------------------------------------


def refined_hd_torus(cg: ConvexGraph) -> Polynomial:
    """E(u, v, w) of a family of torus hypersurfaces with Newton data (P, nu):
    uvw^2 E = (uvw^2 - 1)^dim + (-1)^(dim+1) h*(P, nu; u, v, w)."""
    if cg.dim != cg.ambient_dim:
        raise NotFullDimensional("the Newton polytope must span the ambient space")
    d = cg.dim
    t = Polynomial.monomial(UVW, (1, 1, 2))
    numerator = (t - 1) ** d + refined_hstar(cg) * ((-1) ** (d + 1))
    return numerator.divide_exact_monomial((1, 1, 2))


def intersection_lefschetz(polytope: LatticePolytope) -> Polynomial:
    """E_Lef(P; t), defined by (t-1) E_Lef = t^dim g*(1/t) - g*(t) where
    g* = g of the dual face poset of P."""
    faces = Poset(
        sorted(polytope.face_lattice(), key=lambda f: (len(f), sorted(f))),
        lambda a, b: a <= b,
    )
    gstar = faces.dual().g_polynomial()
    d = polytope.dim
    numerator = Polynomial.zero(("t",))
    for i, c in enumerate(gstar):
        numerator = numerator + Polynomial.monomial(("t",), (d - i,), c)
        numerator = numerator - Polynomial.monomial(("t",), (i,), c)
    return numerator.divide_exact_linear("t")


def intersection_hd(cg: ConvexGraph) -> Polynomial:
    """E_int(u, v, w) of the projective compactification:
    uvw^2 E_int = uvw^2 E_Lef(uvw^2) + (-1)^(dim+1) w^(dim+1) l*(u, v)."""
    if cg.dim != cg.ambient_dim:
        raise NotFullDimensional("the Newton polytope must span the ambient space")
    d = cg.dim
    lef = intersection_lefschetz(cg.polytope).substitute(
        {"t": Polynomial.monomial(UVW, (1, 1, 2))}
    )
    local = local_limit_mixed_hstar(cg).extend(UVW) * Polynomial.monomial(UVW, (0, 0, d + 1))
    correction = (local * ((-1) ** (d + 1))).divide_exact_monomial((1, 1, 2))
    return lef + correction


def sum_over_strata_hd(cg: ConvexGraph) -> Polynomial:
    """E_int recomputed as sum over non-empty faces of torus-route E's against
    dual g-polynomials; equality with :func:`intersection_hd` is an oracle."""
    faces = cg.complex.face_interval(frozenset(), cg.complex.top_face)
    top = cg.complex.top_face
    out = Polynomial.zero(UVW)
    for q in faces.elements:
        if not q:
            continue
        sub = cg.restrict(q)
        if sub.dim < sub.ambient_dim:
            sub = _full_dimensional(sub)
        e = refined_hd_torus(sub)
        g = poly_to_t(faces.g_interval_dual(q, top)).substitute(
            {"t": Polynomial.monomial(UVW, (1, 1, 2))}
        )
        out = out + e * g
    return out


def _full_dimensional(cg: ConvexGraph) -> ConvexGraph:
    """Re-express a lower-dimensional graph in the lattice of its span."""
    poly = cg.polytope
    heights = cg.heights
    if heights is None:
        heights = {}
        for cell, dim in cg.cells().items():
            if dim == 0:
                (v,) = cell
                val = cg.nu(v)
                assert val.denominator == 1
                heights[v] = int(val)
    local_pts = {p: poly.to_local(p) for p in heights if poly.contains(p)}
    new_poly = hull(local_pts.values(), poly.dim)
    new_heights = {local_pts[p]: heights[p] for p in local_pts}
    return lower_hull(new_poly, new_heights)


def affine_refined_hd(problem: MonodromyProblem) -> Polynomial:
    """E(u, v, w) for the closure in affine space of a convenient family:
    uvw^2 E = (uvw^2)^n + (-1)^(n-1) sum_S (-1)^(n-|S|) h*(P^S, nu; u, v, w)."""
    key = "affine_hd"
    if key not in problem._cache:
        n = problem.n
        t = Polynomial.monomial(UVW, (1, 1, 2))
        acc = t**n
        for s in _subsets_of(n):
            h = _face_refined_hstar(problem, s)
            acc = acc + h * ((-1) ** (n - 1) * (-1) ** (n - len(s)))
        problem._cache[key] = acc.divide_exact_monomial((1, 1, 2))
    return problem._cache[key]


def nonconvenient_refined_hd(problem_or_graph) -> Polynomial:
    """The same invariant without the convenience hypothesis:
    uvw^2 E = (uvw^2)^n + sum_S (-1)^(dim P^S - 1) (uvw^2 - 1)^(|S| - dim P^S)
    h*(P^S, nu; u, v, w); requires only 0 in P inside the positive orthant."""
    graph = problem_or_graph.graph if isinstance(problem_or_graph, MonodromyProblem) else problem_or_graph
    n = graph.ambient_dim
    origin = (0,) * n
    if not graph.polytope.contains(origin):
        raise ValueError("the polytope must contain the origin")
    if any(x < 0 for v in graph.polytope.vertices for x in v):
        raise ValueError("the polytope must lie in the positive orthant")
    t = Polynomial.monomial(UVW, (1, 1, 2))
    acc = t**n
    for s in _subsets_of(n):
        verts = [
            v for v in graph.polytope.vertices if all(v[i] == 0 for i in range(n) if i not in s)
        ]
        face = frozenset(verts)
        d = graph.polytope.face_polytope(face).dim
        h = refined_hstar(graph.restrict(face)) if len(face) > 1 else Polynomial.one(UVW)
        sign = -1 if (d - 1) % 2 else 1
        acc = acc + h * sign * (t - 1) ** (len(s) - d)
    return acc.divide_exact_monomial((1, 1, 2))


def _face_refined_hstar(problem: MonodromyProblem, s: frozenset) -> Polynomial:
    face = problem.coordinate_face_key(s)
    if len(face) <= 1:
        return Polynomial.one(UVW)
    return refined_hstar(problem.graph.restrict(face))


# -- eigenvalues -------------------------------------------------------------------


def eigenvalue_multiplicities(problem: MonodromyProblem) -> GroupRingElement:
    """Eigenvalue classes with multiplicity of the monodromy action on the
    middle cohomology, by the alternating volume formula

        sum_S sum_F (-1)^(n - |S|) (Vol(F)/m_F) (full orbit of order m_F)

    over maximal cells F of the subdivision restricted to P^S; Milnor
    problems restrict to the cells containing the origin.
    """
    key = "eig"
    if key not in problem._cache:
        n = problem.n
        origin = (0,) * n
        out = GroupRingElement.zero()
        for s in _subsets_of(n):
            face = problem.coordinate_face_key(s)
            sign = (-1) ** (n - len(s))
            if len(face) <= 1:
                # the stratum is the origin: one cell with Vol = m = 1
                out = out + GroupRingElement.of_int(sign)
                continue
            restricted = problem.graph.restrict(face)
            for cell in restricted.maximal_cells():
                if problem.kind == MILNOR and origin not in cell:
                    continue
                vol = restricted.cell_polytope(cell).normalized_volume()
                m = nu_denominator(restricted, cell)
                assert vol % m == 0, "Vol/m must be a positive integer"
                orbit = GroupRingElement.zero()
                for i in range(m):
                    orbit = orbit + GroupRingElement.of_class(Fraction(i, m))
                out = out + orbit * (sign * (vol // m))
        problem._cache[key] = out
    return problem._cache[key]


# -- equivariant limit mixed Hodge numbers -----------------------------------------


def limit_mixed_hodge(problem: MonodromyProblem):
    """The pair (eigenvalue != 1 part, eigenvalue = 1 part) of generating
    polynomials of the equivariant (limit) mixed Hodge numbers of the middle
    cohomology, in the variables (u, v)."""
    key = "lmh"
    if key not in problem._cache:
        if problem.kind == AT_ZERO:
            problem._cache[key] = _limit_mixed_hodge_at_zero(problem)
        else:
            problem._cache[key] = _limit_mixed_hodge_slice(problem)
    return problem._cache[key]


def _limit_mixed_hodge_slice(problem: MonodromyProblem):
    complex_ = slice_complex(problem)
    graph = problem.graph
    not_one = Polynomial.zero(UV)
    one = Polynomial.zero(UV)
    for base in problem.base_faces():
        lh = complex_.local_h(base).substitute({"t": Polynomial.monomial(UV, (1, 1))})
        if lh.is_zero():
            continue
        qdim = complex_.cell_dim(base)
        delta = problem.delta(base)
        ls_delta = local_weighted_hstar(graph.restrict(delta))
        not_one = not_one + _spread(ls_delta, qdim + 1) * lh
        if base:
            ls_base = local_weighted_hstar(graph.restrict(frozenset(base)))
            one = one + _spread(ls_base, qdim) * lh
        else:
            one = one + lh
    return not_one, one


def _limit_mixed_hodge_at_zero(problem: MonodromyProblem):
    graph = problem.graph
    n = problem.n
    origin = (0,) * n
    not_one = Polynomial.zero(UV)
    one = Polynomial.zero(UV)
    for base in problem.base_faces():
        delta = problem.delta(base)
        lh = graph.complex.local_h(delta).substitute({"t": Polynomial.monomial(UV, (1, 1))})
        if not lh.is_zero():
            ls = local_weighted_hstar(graph.restrict(delta))
            not_one = not_one + _spread(ls, graph.complex.cell_dim(delta)) * lh
    # alpha = 1: cells inside the Newton polytope off the faces at infinity
    # (a cell lies in a face at infinity exactly when its carrier misses 0)
    infinity_faces = {f for f in graph.polytope.face_lattice() if origin not in f}
    for cell, dim in graph.cells().items():
        if not cell or origin in cell:
            continue
        if origin not in graph.complex.sigma[cell]:
            continue
        lh = graph.complex.local_h(cell).substitute({"t": Polynomial.monomial(UV, (1, 1))})
        if lh.is_zero():
            continue
        ls = local_weighted_hstar(graph.restrict(cell))
        one = one + _spread(ls, dim) * lh
    for face in infinity_faces:
        fdim = graph.polytope.face_lattice()[face]
        acc = Polynomial.zero(UV)
        for s in _subsets_of(n):
            pface = problem.coordinate_face_key(s)
            if not (face <= pface):
                continue
            sub = graph.complex.restrict(pface)
            if face not in sub.cells:
                continue
            h = sub.link_h(face).substitute({"t": Polynomial.monomial(UV, (1, 1))})
            acc = acc + h * ((-1) ** (n - len(s)))
        if acc.is_zero():
            continue
        if face:
            ls = local_weighted_hstar(graph.restrict(face))
        else:
            ls = Polynomial.one(("u",))
        one = one + _spread(ls, fdim) * acc
    return not_one, one


# -- Jordan blocks ---------------------------------------------------------------------


@dataclass(frozen=True)
class JordanSpectrum:
    """Multiset of Jordan blocks: (size, eigenvalue class) -> count."""

    blocks: tuple  # ((size, TorsionClass, count), ...) sorted

    @staticmethod
    def from_dict(d) -> "JordanSpectrum":
        items = tuple(
            (size, cls, count)
            for (size, cls), count in sorted(d.items(), key=lambda kv: (kv[0][0], kv[0][1]))
            if count
        )
        return JordanSpectrum(items)

    def count(self, size, cls) -> int:
        cls = cls if isinstance(cls, TorsionClass) else TorsionClass.of(cls)
        for s, c, n in self.blocks:
            if s == size and c == cls:
                return n
        return 0

    def total_weighted(self) -> GroupRingElement:
        """sum over blocks of size * (eigenvalue class)."""
        out = GroupRingElement.zero()
        for size, cls, n in self.blocks:
            out = out + GroupRingElement.of_class(cls, size * n)
        return out

    def total_blocks(self) -> int:
        return sum(n for _, _, n in self.blocks)

    def to_json(self):
        return {
            "blocks": [
                {"size": s, "eigenvalue": {"num": c.num, "den": c.den}, "count": n}
                for s, c, n in self.blocks
            ]
        }


def jordan_blocks(problem: MonodromyProblem) -> JordanSpectrum:
    """Jordan block counts of the monodromy action on middle cohomology.

    At infinity / Milnor: via the peeled local h-polynomials of the slice
    complex.  At zero: blocks of the middle weight-graded piece, read off the
    local limit mixed invariant of (P, nu).
    """
    key = "jordan"
    if key not in problem._cache:
        if problem.kind == AT_ZERO:
            problem._cache[key] = _jordan_at_zero(problem)
        else:
            problem._cache[key] = _jordan_slice(problem)
    return problem._cache[key]


def _jordan_slice(problem: MonodromyProblem) -> JordanSpectrum:
    n = problem.n
    complex_ = slice_complex(problem)
    graph = problem.graph
    blocks = {}
    not_one = Polynomial.zero(("x",))
    one = Polynomial.zero(("x",))
    for base in problem.base_faces():
        tilde = tilde_local_h(complex_, base)
        if tilde.is_zero():
            continue
        tilde2 = tilde.substitute({"t": Polynomial.monomial(("x",), (2,))})
        qdim = complex_.cell_dim(base)
        delta = problem.delta(base)
        ls_delta = local_weighted_hstar(graph.restrict(delta)).at_ones()
        not_one = not_one + tilde2 * Polynomial.monomial(("x",), (qdim + 2,)) * ls_delta
        if base:
            ls_base = local_weighted_hstar(graph.restrict(frozenset(base))).at_ones().forget()
        else:
            ls_base = 1
        one = one + tilde2 * Polynomial.monomial(("x",), (qdim + 1,)) * ls_base
    for (k,), coeff in not_one.items():
        size = n - (k - 2)
        for cls, val in coeff.items():
            if cls.is_zero():
                assert val == 0, "trivial classes cannot appear in the != 1 book"
            blocks[(size, cls)] = blocks.get((size, cls), 0) + val
    for (k,), coeff in one.items():
        size = n - 1 - (k - 2)
        val = coeff.forget()
        if val:
            blocks[(size, TorsionClass.of(0))] = (
                blocks.get((size, TorsionClass.of(0)), 0) + val
            )
    return JordanSpectrum.from_dict(blocks)


def _jordan_at_zero(problem: MonodromyProblem) -> JordanSpectrum:
    local = local_limit_mixed_hstar(problem.graph)
    return jordan_from_middle_weight(local, problem.n)


def jordan_from_middle_weight(local_uv: Polynomial, n: int) -> JordanSpectrum:
    """Jordan structure of the weight-(n-1) piece from uv sum h^{p,q} u^p v^q.

    Block counts of size k come from differences of dimensions along the
    p+q grading, centered at n-1.
    """
    degrees = {}
    for (p, q), coeff in local_uv.items():
        m = (p - 1) + (q - 1)
        degrees[m] = degrees.get(m, GroupRingElement.zero()) + coeff
    blocks = {}
    r = n - 1
    top = max(degrees, default=0)
    for k in range(1, r + 2):
        diff = degrees.get(r + k - 1, GroupRingElement.zero()) - degrees.get(
            r + k + 1, GroupRingElement.zero()
        )
        for cls, val in diff.items():
            assert val >= 0, "weight filtration dimensions must be unimodal"
            if val:
                blocks[(k, cls)] = val
    return JordanSpectrum.from_dict(blocks)


def weight_dimensions(problem: MonodromyProblem):
    """Eigenvalue classes of each weight-graded piece of middle cohomology,
    from the affine refined Hodge-Deligne polynomial (the pure class of the
    ambient top cohomology is removed)."""
    e = affine_refined_hd(problem)
    n = problem.n
    sign = (-1) ** (n - 1)
    e = e - Polynomial.monomial(UVW, (n - 1, n - 1, 2 * (n - 1)))
    out = {}
    for (p, q, r), coeff in e.items():
        val = coeff * sign
        out[r] = out.get(r, GroupRingElement.zero()) + val
    return {r: v for r, v in sorted(out.items()) if v}


# -- closed-form block books -------------------------------------------------------


def jordan_size_formulas(problem: MonodromyProblem):
    """Direct lattice-point formulas for the largest and second largest block
    sizes; an independent check on :func:`jordan_blocks`.

    Returns a dict with the two eigenvalue != 1 books (classes for sizes n
    and n-1) and the two eigenvalue = 1 counts (sizes n-1 and n-2).
    """
    n = problem.n
    graph = problem.graph
    if problem.kind == AT_ZERO:
        from .mixed import small_coefficient

        top = small_coefficient(graph, 0, n - 1)
        second = (
            small_coefficient(graph, 1, n - 1) if n >= 2 else GroupRingElement.zero()
        )
        return {
            "size_n_not1": _drop_trivial(top),
            "size_n-1_not1": _drop_trivial(second + second.conjugate()),
            "size_n_1": top.coefficient(TorsionClass.of(0)),
            "size_n-1_1": (second + second.conjugate()).coefficient(TorsionClass.of(0)),
        }
    full = frozenset(range(n))
    top = GroupRingElement.zero()
    second = GroupRingElement.zero()
    ones_top = 0
    ones_second = 0
    for base in problem.base_faces():
        if not base or support_of(base) != full:
            continue
        dim = problem.graph.complex.cell_dim(frozenset(base))
        delta = problem.delta(base)
        if dim == 0:
            top = top + _interior_cone_weights(graph, delta)
        if dim == 1:
            w = _interior_cone_weights(graph, delta)
            second = second + w + w.conjugate()
        if dim <= 1:
            ones_top += len(graph.cell_polytope(frozenset(base)).interior_lattice_points(1))
        if dim == 2:
            ones_second += 2 * len(
                graph.cell_polytope(frozenset(base)).interior_lattice_points(1)
            )
    return {
        "size_n_not1": top,
        "size_n-1_not1": second,
        "size_n-1_1": ones_top,
        "size_n-2_1": ones_second,
    }


def _drop_trivial(x: GroupRingElement) -> GroupRingElement:
    return x - GroupRingElement.of_int(x.coefficient(TorsionClass.of(0)))


def _interior_cone_weights(graph: ConvexGraph, cell) -> GroupRingElement:
    out = GroupRingElement.zero()
    poly = graph.cell_polytope(cell)
    for p in poly.interior_lattice_points(1):
        out = out + GroupRingElement.of_class(graph.nu(p))
    return out


# -- motivic nearby fiber (symbolic) --------------------------------------------------


@dataclass(frozen=True)
class MotivicTerm:
    """One summand [V ~ action] (1 - L)^power of the motivic nearby fiber."""

    cell: tuple  # sorted vertex tuple of the subdivision cell
    lefschetz_power: int
    action: tuple  # Fractions in [0,1): exp(-2 pi i nu|_F) componentwise
    sign: int = 1

    def to_json(self):
        return {
            "cell": [list(v) for v in self.cell],
            "lefschetz_power": self.lefschetz_power,
            "action": [[a.numerator, a.denominator] for a in self.action],
            "sign": self.sign,
        }


def motivic_nearby_fiber(source, ambient="torus"):
    """Symbolic motivic nearby fiber: one term per positive-dimensional cell
    whose carrier is the whole polytope (torus) or a coordinate face
    (affine); vertices contribute empty strata and are omitted."""
    if isinstance(source, MonodromyProblem):
        graph = source.graph
        problem = source
    else:
        graph = source
        problem = None
    if ambient == "torus":
        if graph.dim != graph.ambient_dim:
            raise NotFullDimensional("torus mode needs a full-dimensional polytope")
        admissible = {graph.complex.top_face}
    elif ambient == "affine":
        if problem is None:
            raise ValueError("affine mode needs a monodromy problem")
        admissible = {
            problem.coordinate_face_key(s) for s in _subsets_of(problem.n)
        }
    else:
        raise ValueError(f"unknown ambient {ambient!r}")
    out = []
    for cell, dim in sorted(graph.cells().items(), key=lambda c: (len(c[0]), sorted(c[0]))):
        if dim < 1:
            continue
        sigma = graph.complex.sigma[cell]
        if sigma not in admissible:
            continue
        sdim = graph.complex.faces[sigma]
        lin, _ = graph.nu_affine[cell]
        action = tuple((-l) % 1 for l in lin)
        out.append(
            MotivicTerm(tuple(sorted(cell)), sdim - dim, action, 1)
        )
    return out
