"""Shared deterministic corpora for the test suites.

``random_weighted_corpus`` yields (polytope, heights) ConvexGraphs across
dimensions 1..3 from a fixed seed; ``monodromy_corpus`` lists convenient
polynomial supports exercising all three problem kinds.
"""

import random

from ehrmono.monodromy import NewtonData
from ehrmono.polytopes import hull
from ehrmono.subdivisions import lower_hull

SEED = 20240817


def random_weighted_corpus(count=52):
    rng = random.Random(SEED)
    out = []
    # fixed small instances first: segments, triangles, squares
    fixed = [
        ([(0,), (1,)], {(0,): 0, (1,): 0}),
        ([(0,), (2,)], {(0,): 0, (2,): 1}),
        ([(0,), (3,)], {(0,): 0, (3,): 1, (1,): 0}),
        ([(0, 0), (1, 0), (0, 1)], None),
        ([(0, 0), (1, 0), (0, 1), (1, 1)], None),
        ([(0, 0), (2, 0), (0, 2)], None),
    ]
    for vertices, heights in fixed:
        poly = hull(vertices)
        if heights is None:
            heights = {v: rng.randint(0, 2) for v in poly.vertices}
        out.append(lower_hull(poly, heights))
    while len(out) < count:
        made = _random_instance(rng, len(out))
        if made is not None:
            out.append(made)
    return out


def _random_instance(rng, index):
    # keep the handful of 3-dimensional instances small
    dim = 1 if index % 4 == 0 else (3 if index % 5 == 0 else 2)
    box = 2 if dim == 3 else 4
    npts = rng.randint(dim + 1, 6 if dim == 3 else 8)
    pts = set()
    while len(pts) < npts:
        pts.add(tuple(rng.randint(0, box) for _ in range(dim)))
    poly = hull(pts)
    if poly.dim == 0:
        return None
    support = set(poly.vertices)
    extra = [p for p in poly.lattice_points(1) if p not in support]
    rng.shuffle(extra)
    support.update(extra[: rng.randint(0, min(3, len(extra)))])
    heights = {p: rng.randint(-2, 3) for p in support}
    return lower_hull(poly, heights)


MONODROMY_SUPPORTS = [
    ("cusp", 2, [(2, 0), (0, 3)]),
    ("running", 2, [(5, 0), (4, 2), (1, 5), (0, 5), (1, 2), (2, 1)]),
    ("quartic-node", 2, [(4, 0), (0, 4), (1, 1)]),
    ("asymmetric", 2, [(3, 0), (0, 2), (1, 1), (2, 1)]),
    ("bp-235", 3, [(2, 0, 0), (0, 3, 0), (0, 0, 5)]),
    ("space-corner", 3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)]),
]


def monodromy_corpus():
    return [
        (name, NewtonData.from_monomials(n, monomials))
        for name, n, monomials in MONODROMY_SUPPORTS
    ]
