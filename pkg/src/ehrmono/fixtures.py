"""Built-in regression fixtures with frozen expected values.

Each fixture computes invariants of a named instance and compares them
exactly against the recorded results.  ``run_fixture`` returns a list of
(check name, ok, got, expected) tuples; the CLI ``fixtures`` subcommand and
the acceptance tests drive these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import ceil

from .groupring import GroupRingElement, TorsionClass
from .mixed import limit_mixed_hstar, local_limit_mixed_hstar, refined_hstar
from .monodromy import (
    MonodromyProblem,
    NewtonData,
    eigenvalue_multiplicities,
    jordan_blocks,
    weight_dimensions,
)
from .polynomials import FractionalPolynomial, Polynomial, fractional_from_hstar, parse_polynomial
from .polytopes import hull
from .subdivisions import lower_hull
from .wehrhart import (
    ehrhart_polynomial,
    hstar_integer,
    local_weighted_hstar,
    weighted_hstar,
)

U, UV, UVW = ("u",), ("u", "v"), ("u", "v", "w")

# the bivariate running example; the support is pinned by the published
# figure and by every numeric invariant (see tests)
RUNNING_SUPPORT = ((5, 0), (4, 2), (1, 5), (0, 5), (1, 2), (2, 1))


def hexagon_graph():
    hexa = hull([(1, 0), (0, 2), (-1, 2), (-2, 1), (-2, 0), (0, -1)])
    heights = {v: 1 for v in hexa.vertices}
    heights[(0, 0)] = 0
    return lower_hull(hexa, heights)


def segment_half_graph():
    """The segment [0, 2] with nu(x) = x/2."""
    return lower_hull(hull([(0,), (2,)]), {(0,): 0, (2,): 1})


def running_problem(kind):
    nd = NewtonData.from_monomials(2, RUNNING_SUPPORT)
    return getattr(MonodromyProblem, kind)(nd)


def cusp_problem():
    return MonodromyProblem.milnor(NewtonData.from_monomials(2, [(2, 0), (0, 3)]))


def brieskorn_pham_problem(exponents, kind="at_infinity"):
    n = len(exponents)
    monomials = [
        tuple(m if j == i else 0 for j in range(n)) for i, m in enumerate(exponents)
    ]
    return getattr(MonodromyProblem, kind)(NewtonData.from_monomials(n, monomials))


def brieskorn_pham_box_classes(exponents) -> GroupRingElement:
    """Independent oracle: sum of [i_1/m_1 + ... + i_n/m_n] over the box."""
    out = GroupRingElement.zero()
    for tup in product(*[range(1, m) for m in exponents]):
        out = out + GroupRingElement.of_class(
            sum(Fraction(i, m) for i, m in zip(tup, exponents))
        )
    return out


def brieskorn_pham_closed_form(exponents) -> Polynomial:
    """The closed-form affine refined Hodge-Deligne polynomial at infinity."""
    n = len(exponents)
    t = Polynomial.monomial(UVW, (1, 1, 2))
    acc = t**n
    for tup in product(*[range(1, m) for m in exponents]):
        nu = sum(Fraction(i, m) for i, m in zip(tup, exponents))
        a, b = ceil(nu), ceil(n - nu)
        acc = acc + Polynomial.monomial(
            UVW, (a, b, a + b), GroupRingElement.of_class(nu)
        ) * ((-1) ** (n - 1))
    return acc.divide_exact_monomial((1, 1, 2))


def _jordan(blocks) -> dict:
    return {
        (size, TorsionClass.of(Fraction(num, den))): count
        for size, num, den, count in blocks
    }


HEXAGON_EXPECTED = {
    "hstar": "1 + 4*u + 2*[1/2]*u + [2/3]*u + u^2 + 2*[1/2]*u^2 + [1/3]*u^2",
    "hstar_integer": "1 + 7*u + 4*u^2",
    "lstar": "u + 2*[1/2]*u + [2/3]*u + u^2 + 2*[1/2]*u^2 + [1/3]*u^2",
    "lstar_integer": "4*u + 4*u^2",
    "mixed": "1 + 4*u*v + 2*[1/2]*u*v + [1/3]*u^2*v + [2/3]*u*v^2 + u^2*v^2 + 2*[1/2]*u^2*v^2",
    "local_mixed": "u*v + 2*[1/2]*u*v + [1/3]*u^2*v + [2/3]*u*v^2 + u^2*v^2 + 2*[1/2]*u^2*v^2",
    "refined": "1 + 3*u*v*w^2 + u*v*w^3 + 2*[1/2]*u*v*w^3 + [1/3]*u^2*v*w^3 + [2/3]*u*v^2*w^3 + u^2*v^2*w^3 + 2*[1/2]*u^2*v^2*w^3",
    # counting functions: class -> coefficients of the polynomial in m
    "ehrhart": {
        Fraction(0): (Fraction(1), Fraction(3), Fraction(3)),
        Fraction(1, 2): (Fraction(0), Fraction(0), Fraction(2)),
        Fraction(1, 3): (Fraction(0), Fraction(-1, 2), Fraction(1, 2)),
        Fraction(2, 3): (Fraction(0), Fraction(1, 2), Fraction(1, 2)),
    },
    "fractional": {
        Fraction(0): 1,
        Fraction(1, 2): 2,
        Fraction(2, 3): 1,
        Fraction(1): 4,
        Fraction(4, 3): 1,
        Fraction(3, 2): 2,
        Fraction(2): 1,
    },
}

RUNNING_EXPECTED = {
    "at_zero_jordan": _jordan(
        [(1, 0, 1, 14), (1, 1, 3, 1), (1, 2, 3, 1), (2, 0, 1, 2)]
    ),
    "at_zero_grw0": 4,
    "at_infinity_jordan": _jordan(
        [
            (1, 0, 1, 4),
            (1, 1, 2, 2),
            (1, 1, 6, 3),
            (1, 1, 3, 3),
            (1, 2, 3, 3),
            (1, 5, 6, 3),
            (1, 1, 10, 1),
            (1, 3, 10, 1),
            (1, 7, 10, 1),
            (1, 9, 10, 1),
            (2, 1, 2, 1),
        ]
    ),
    "milnor_jordan": _jordan([(1, 0, 1, 2), (1, 1, 3, 1), (1, 2, 3, 1)]),
    "milnor_eigenvalues": [(0, 1, 2), (1, 3, 1), (2, 3, 1)],  # (num, den, coeff)
}


def _gre(items) -> GroupRingElement:
    out = GroupRingElement.zero()
    for num, den, coeff in items:
        out = out + GroupRingElement.of_class(Fraction(num, den), coeff)
    return out


def run_fixture_hexagon():
    cg = hexagon_graph()
    results = []

    def cmp(name, got, expected):
        results.append((name, got == expected, str(got), str(expected)))

    e = HEXAGON_EXPECTED
    cmp("hstar", weighted_hstar(cg), parse_polynomial(e["hstar"], U))
    cmp("hstar-integer", hstar_integer(cg.polytope), parse_polynomial(e["hstar_integer"], U))
    cmp("lstar", local_weighted_hstar(cg), parse_polynomial(e["lstar"], U))
    cmp(
        "lstar-integer",
        local_weighted_hstar(cg).forget(),
        parse_polynomial(e["lstar_integer"], U),
    )
    cmp("mixed", limit_mixed_hstar(cg), parse_polynomial(e["mixed"], UV))
    cmp("local-mixed", local_limit_mixed_hstar(cg), parse_polynomial(e["local_mixed"], UV))
    cmp("refined", refined_hstar(cg), parse_polynomial(e["refined"], UVW))
    ep = ehrhart_polynomial(cg)
    got = {cls.fraction: coeffs for cls, coeffs in ep.components}
    cmp("ehrhart", got, e["ehrhart"])
    cmp(
        "fractional",
        fractional_from_hstar(weighted_hstar(cg)),
        FractionalPolynomial(e["fractional"]),
    )
    return results


def run_fixture_running():
    results = []

    def cmp(name, got, expected):
        results.append((name, got == expected, str(got), str(expected)))

    zero = running_problem("at_zero")
    jb = jordan_blocks(zero)
    cmp("at-zero-jordan", dict(((s, c), n) for s, c, n in jb.blocks), RUNNING_EXPECTED["at_zero_jordan"])
    dims = weight_dimensions(zero)
    cmp("at-zero-grw0", dims.get(0, GroupRingElement.zero()).forget(), RUNNING_EXPECTED["at_zero_grw0"])

    inf = running_problem("at_infinity")
    jb_inf = jordan_blocks(inf)
    cmp(
        "at-infinity-jordan",
        dict(((s, c), n) for s, c, n in jb_inf.blocks),
        RUNNING_EXPECTED["at_infinity_jordan"],
    )

    mil = running_problem("milnor")
    jb_mil = jordan_blocks(mil)
    cmp("milnor-jordan", dict(((s, c), n) for s, c, n in jb_mil.blocks), RUNNING_EXPECTED["milnor_jordan"])
    cmp(
        "milnor-eigenvalues",
        eigenvalue_multiplicities(mil),
        _gre(RUNNING_EXPECTED["milnor_eigenvalues"]),
    )
    return results


def run_fixture_cusp():
    results = []
    mil = cusp_problem()
    eig = eigenvalue_multiplicities(mil)
    expected = _gre([(1, 6, 1), (5, 6, 1)])
    results.append(("cusp-eigenvalues", eig == expected, str(eig), str(expected)))
    jb = jordan_blocks(mil)
    ok = jb.total_blocks() == 2 and all(s == 1 for s, _, _ in jb.blocks)
    results.append(("cusp-jordan-sizes", ok, str(jb.blocks), "two blocks of size 1"))
    return results


def run_fixture_brieskorn_pham():
    results = []
    for exponents in [(2,), (3,), (2, 3), (4, 4), (2, 3, 5)]:
        prob = brieskorn_pham_problem(exponents)
        eig = eigenvalue_multiplicities(prob)
        box = brieskorn_pham_box_classes(exponents)
        results.append(
            (f"bp-{exponents}-eigenvalues", eig == box, str(eig), str(box))
        )
        from .monodromy import affine_refined_hd

        got = affine_refined_hd(prob)
        want = brieskorn_pham_closed_form(exponents)
        results.append((f"bp-{exponents}-refined-hd", got == want, "", ""))
    return results


def run_fixture_segment():
    results = []
    cg = segment_half_graph()
    h = weighted_hstar(cg)
    expected = parse_polynomial("1 + [1/2]*u", U)
    results.append(("segment-hstar", h == expected, str(h), str(expected)))
    frac = fractional_from_hstar(h)
    want = FractionalPolynomial({Fraction(0): 1, Fraction(1, 2): 1})
    results.append(("segment-fractional", frac == want, str(frac), str(want)))
    mixed = limit_mixed_hstar(cg)
    expected_mixed = parse_polynomial("1 + [1/2]*u*v", UV)
    results.append(
        ("segment-mixed", mixed == expected_mixed, str(mixed), str(expected_mixed))
    )
    return results


FIXTURES = {
    "hexagon": run_fixture_hexagon,
    "running-example": run_fixture_running,
    "cusp": run_fixture_cusp,
    "brieskorn-pham": run_fixture_brieskorn_pham,
    "weighted-segment": run_fixture_segment,
}


def run_fixtures(select=None):
    """Run the registry; returns {fixture: [(check, ok, got, expected)]}."""
    report = {}
    for name, fn in FIXTURES.items():
        if select and select not in name:
            continue
        report[name] = fn()
    return report
