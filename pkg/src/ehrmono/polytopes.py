"""Lattice polytopes, face lattices, exact enumeration.

All geometry is exact.  A polytope lives in an ambient Z^n but may span a
lower-dimensional affine subspace; computations happen in coordinates with
respect to the saturated lattice of that subspace, so the restriction of the
ambient lattice is always respected (this matters for normalized volumes of
faces).  Instance sizes are small, so facet enumeration simply scans vertex
subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .errors import DependentVectors


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


class LatticePolytope:
    """Convex hull of lattice points; construct via :func:`hull`."""

    def __init__(self, vertices, ambient_dim):
        self.vertices = tuple(sorted(tuple(int(x) for x in v) for v in vertices))
        self.ambient_dim = ambient_dim
        self._init_frame()
        self._face_lattice = None
        self._cache = {}

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.vertices == other.vertices
            and self.ambient_dim == other.ambient_dim
        )

    def __hash__(self):
        return hash((self.vertices, self.ambient_dim))

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"

    # -- affine frame ----------------------------------------------------------

    def _init_frame(self):
        v0 = self.vertices[0]
        dirs = [[x - y for x, y in zip(v, v0)] for v in self.vertices[1:]]
        basis = linalg.saturation_basis(dirs) if dirs else []
        if len(basis) == self.ambient_dim:
            basis = linalg.identity(self.ambient_dim)
        self.dim = len(basis)
        self._origin = v0
        self._basis = basis
        if basis:
            # right pseudo-inverse of the basis matrix: local = (p - v0) . pinv
            bt = linalg.transpose(basis)
            gram = linalg.mat_mul(basis, bt)
            n = len(basis)
            cols = []
            for i in range(n):
                e = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
                cols.append(linalg.solve(gram, e))
            gram_inv = linalg.transpose(cols)
            self._pinv = linalg.mat_mul([[Fraction(x) for x in row] for row in bt], gram_inv)
        else:
            self._pinv = []
        self._local_vertices = tuple(self.to_local(v) for v in self.vertices)
        self._facets = self._enumerate_facets()

    def to_local(self, point, dilate: int = 1):
        """Exact coordinates of an ambient point of ``dilate * P`` w.r.t. the
        saturated lattice of the affine span; None if off the span."""
        diff = [p - dilate * o for p, o in zip(point, self._origin)]
        if not self._basis:
            return () if not any(diff) else None
        loc = [sum(d * col[j] for d, col in zip(diff, self._pinv)) for j in range(self.dim)]
        # verify: loc . basis == diff (pinv only inverts on the span)
        for i in range(self.ambient_dim):
            if sum(l * b[i] for l, b in zip(loc, self._basis)) != diff[i]:
                return None
        if any(x.denominator != 1 for x in loc):
            return None
        return tuple(int(x) for x in loc)

    def from_local(self, loc, dilate: int = 1):
        return tuple(
            dilate * o + sum(l * b[i] for l, b in zip(loc, self._basis))
            for i, o in enumerate(self._origin)
        )

    # -- facets ------------------------------------------------------------------

    def _enumerate_facets(self):
        """Facets as (normal, offset) in local coordinates, normal primitive,
        oriented so that normal . x <= offset on the polytope."""
        d = self.dim
        pts = self._local_vertices
        if d == 0:
            return ()
        facets = {}
        for subset in combinations(range(len(pts)), d):
            base = pts[subset[0]]
            rows = [[pts[i][j] - base[j] for j in range(d)] for i in subset[1:]]
            if d > 1 and linalg.rank(rows) != d - 1:
                continue
            normal = _normal_vector(rows, d)
            if normal is None:
                continue
            offset = sum(n * x for n, x in zip(normal, base))
            lo = hi = False
            for p in pts:
                val = sum(n * x for n, x in zip(normal, p))
                if val > offset:
                    hi = True
                elif val < offset:
                    lo = True
            if lo and hi:
                continue
            if hi:
                normal = tuple(-x for x in normal)
                offset = -offset
            facets[(normal, offset)] = True
        return tuple(facets)

    def ambient_facets(self):
        """Facets as (normal, offset) valid on ambient points; full-dim only."""
        assert self.dim == self.ambient_dim, "polytope must be full-dimensional"
        v0 = self._origin
        return tuple(
            (normal, off + sum(n * x for n, x in zip(normal, v0)))
            for normal, off in self._facets
        )

    # -- membership -----------------------------------------------------------------

    def contains(self, point, dilate: int = 1) -> bool:
        loc = self.to_local_q(point, dilate)
        if loc is None:
            return False
        return all(
            sum(n * x for n, x in zip(normal, loc)) <= dilate * off
            for normal, off in self._facets
        )

    def relint_contains(self, point, dilate: int = 1) -> bool:
        loc = self.to_local_q(point, dilate)
        if loc is None:
            return False
        if self.dim == 0:
            return True
        return all(
            sum(n * x for n, x in zip(normal, loc)) < dilate * off
            for normal, off in self._facets
        )

    def to_local_q(self, point, dilate: int = 1):
        """Like :meth:`to_local` but for rational points (no integrality)."""
        diff = [Fraction(p) - dilate * o for p, o in zip(point, self._origin)]
        if not self._basis:
            return () if not any(diff) else None
        loc = [sum(d * col[j] for d, col in zip(diff, self._pinv)) for j in range(self.dim)]
        for i in range(self.ambient_dim):
            if sum(l * b[i] for l, b in zip(loc, self._basis)) != diff[i]:
                return None
        return tuple(loc)

    # -- enumeration --------------------------------------------------------------------

    def lattice_points(self, dilate: int = 1):
        """All lattice points of ``dilate * P``, sorted; dilate 0 gives the origin."""
        return self._points(dilate, strict=False)

    def interior_lattice_points(self, dilate: int = 1):
        """Lattice points in the relative interior of ``dilate * P``."""
        if dilate < 1:
            raise ValueError("dilate must be positive")
        return self._points(dilate, strict=True)

    def _points(self, dilate, strict):
        if dilate == 0:
            return [(0,) * self.ambient_dim]
        key = ("pts", dilate, strict)
        if key in self._cache:
            return self._cache[key]
        d = self.dim
        if d == 0:
            pt = tuple(dilate * x for x in self._origin)
            out = [pt]
        else:
            locs = [tuple(dilate * x for x in v) for v in self._local_vertices]
            lo = [min(v[j] for v in locs) for j in range(d)]
            hi = [max(v[j] for v in locs) for j in range(d)]
            out = []
            for loc in _box_iter(lo, hi):
                ok = True
                for normal, off in self._facets:
                    val = sum(n * x for n, x in zip(normal, loc))
                    if val > dilate * off or (strict and val == dilate * off):
                        ok = False
                        break
                if ok:
                    out.append(self.from_local(loc, dilate))
            out.sort()
        self._cache[key] = out
        return out

    # -- volume ---------------------------------------------------------------------------

    def normalized_volume(self) -> int:
        """dim! times the Euclidean volume w.r.t. the lattice of the affine span."""
        if "vol" in self._cache:
            return self._cache["vol"]
        if self.dim == 0:
            vol = 1
        else:
            vol = 0
            for simplex in self.triangulation():
                base = simplex[0]
                loc = [self.to_local(v) for v in simplex]
                rows = [[x - y for x, y in zip(loc[i], loc[0])] for i in range(1, len(simplex))]
                vol += abs(linalg.det(rows))
        self._cache["vol"] = vol
        return vol

    def triangulation(self):
        """Pulling triangulation using only the vertices; list of vertex tuples."""
        if "tri" in self._cache:
            return self._cache["tri"]
        tri = _pull_triangulate(self)
        self._cache["tri"] = tri
        return tri

    # -- face lattice ----------------------------------------------------------------------

    def face_lattice(self):
        """All faces as sorted ``(vertexset, dim)`` pairs, including the empty
        face (dim -1) and the polytope itself."""
        if self._face_lattice is not None:
            return self._face_lattice
        full = frozenset(self.vertices)
        faces = {frozenset(): -1, full: self.dim}
        if self.dim > 0:
            facet_sets = []
            for normal, off in self._facets:
                members = frozenset(
                    v
                    for v, loc in zip(self.vertices, self._local_vertices)
                    if sum(n * x for n, x in zip(normal, loc)) == off
                )
                facet_sets.append(members)
                faces[members] = _affine_dim(members)
            work = list(facet_sets)
            while work:
                f = work.pop()
                for g in facet_sets:
                    h = f & g
                    if h and h not in faces:
                        faces[h] = _affine_dim(h)
                        work.append(h)
        self._face_lattice = faces
        return faces

    def face_polytope(self, vertexset) -> "LatticePolytope":
        key = ("facep", vertexset)
        if key not in self._cache:
            self._cache[key] = LatticePolytope(sorted(vertexset), self.ambient_dim)
        return self._cache[key]

    def smallest_face_containing(self, points) -> frozenset:
        """Vertex set of the smallest face containing all given points."""
        if not points:
            return frozenset()
        active = None
        for normal, off in self._facets:
            if all(
                sum(n * x for n, x in zip(normal, self.to_local_q(p))) == off for p in points
            ):
                members = frozenset(
                    v
                    for v, loc in zip(self.vertices, self._local_vertices)
                    if sum(n * x for n, x in zip(normal, loc)) == off
                )
                active = members if active is None else active & members
        return frozenset(self.vertices) if active is None else active


def _affine_dim(points):
    pts = sorted(points)
    base = pts[0]
    rows = [[x - y for x, y in zip(p, base)] for p in pts[1:]]
    return linalg.rank(rows) if rows else 0


def _normal_vector(rows, d):
    """Primitive integer normal to the span of d-1 independent rows in Z^d."""
    if d == 1:
        return (1,)
    # cofactor expansion: normal_i = (-1)^i det(rows without column i)
    normal = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in rows]
        normal.append((-1) ** i * linalg.det(minor))
    if not any(normal):
        return None
    return _primitive(normal)


def _box_iter(lo, hi):
    if not lo:
        yield ()
        return
    for first in range(lo[0], hi[0] + 1):
        for rest in _box_iter(lo[1:], hi[1:]):
            yield (first,) + rest


def _pull_triangulate(poly: LatticePolytope):
    """Recursive pulling triangulation at the lexicographically least vertex."""
    verts = poly.vertices
    if poly.dim <= 0 or len(verts) == poly.dim + 1:
        return [verts]
    v = verts[0]
    out = []
    faces = poly.face_lattice()
    for vset, fdim in faces.items():
        if fdim != poly.dim - 1 or v in vset:
            continue
        sub = poly.face_polytope(vset)
        for simplex in _pull_triangulate(sub):
            out.append(tuple(sorted(simplex + (v,))))
    return out


def hull(points, ambient_dim=None) -> LatticePolytope:
    """Convex hull of integer points; vertices are exactly the extreme points."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("need at least one point")
    if ambient_dim is None:
        ambient_dim = len(pts[0])
    probe = LatticePolytope(pts, ambient_dim)
    if probe.dim == 0:
        return probe
    locs = [probe.to_local(p) for p in pts]
    extreme = []
    for p, loc in zip(pts, locs):
        active = []
        for normal, off in probe._facets:
            if sum(n * x for n, x in zip(normal, loc)) == off:
                active.append(normal)
        if linalg.rank(active) == probe.dim if active else False:
            extreme.append(p)
    return LatticePolytope(extreme, ambient_dim)


def sublattice_index(vectors) -> int:
    """Index of the lattice spanned by the vectors inside its saturation."""
    return linalg.lattice_index([list(v) for v in vectors])


@dataclass(frozen=True)
class BoxPoint:
    """A lattice point of the half-open parallelepiped of a simplicial cone."""

    coordinates: tuple
    barycentric: tuple  # Fractions in [0, 1), one per generator
    height: int  # last coordinate

    def is_interior(self) -> bool:
        return all(a > 0 for a in self.barycentric)


class SimplicialCone:
    """Cone spanned by linearly independent primitive integer generators."""

    def __init__(self, generators):
        gens = [tuple(int(x) for x in g) for g in generators]
        if any(_primitive(g) != g for g in gens):
            raise ValueError("generators must be primitive")
        if linalg.rank([list(g) for g in gens]) != len(gens):
            raise DependentVectors("cone generators are dependent")
        self.generators = tuple(gens)

    def box_points(self):
        """All lattice points v = sum a_i g_i with 0 <= a_i < 1, sorted.

        Enumerates one representative per residue class of the saturation
        modulo the generator lattice, via Smith normal form.
        """
        gens = self.generators
        k = len(gens)
        basis = linalg.saturation_basis([list(g) for g in gens])
        # coordinates of each generator in the saturated basis (integer, k x k)
        coords = []
        for g in gens:
            sol = linalg.solve(linalg.transpose(basis), list(g))
            coords.append([int(x) for x in sol])
        c = linalg.transpose(coords)  # columns = generators
        d, u, _ = smith_with_inverse_cache(c)
        uinv = linalg.invert_unimodular(u)
        diag = [d[i][i] for i in range(k)]
        out = []
        for residue in _box_iter([0] * k, [x - 1 for x in diag]):
            rep = [sum(uinv[i][j] * residue[j] for j in range(k)) for i in range(k)]
            bary = linalg.solve(c, rep)
            bary = tuple(a % 1 for a in bary)
            sat = [
                sum(c[i][j] * bary[j] for j in range(k)) for i in range(k)
            ]
            assert all(x.denominator == 1 for x in sat)
            ambient = tuple(
                sum(int(s) * basis[j][i] for j, s in enumerate(sat))
                for i in range(len(gens[0]))
            )
            out.append(BoxPoint(ambient, bary, int(ambient[-1])))
        out.sort(key=lambda b: b.coordinates)
        return out

    def index(self) -> int:
        return sublattice_index(self.generators)


def smith_with_inverse_cache(c):
    return linalg.smith_normal_form(c)
