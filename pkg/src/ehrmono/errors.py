"""Exception types shared across the library.

``DomainError`` subclasses map to CLI exit status 1; anything else escaping
to the CLI is a bug.
"""


class DomainError(Exception):
    """Input is well-formed but outside the domain of the requested operation."""

    code = "domain-error"


class NonPolynomialResult(DomainError):
    """A substitution left a negative exponent after expansion."""

    code = "non-polynomial-result"


class DependentVectors(DomainError):
    """Vectors required to be linearly independent are not."""

    code = "dependent-vectors"


class NotComparable(DomainError):
    """Interval endpoints are not ordered in the poset."""

    code = "not-comparable"


class CellNotInSubdivision(DomainError):
    """The given cell does not belong to the subdivision."""

    code = "cell-not-in-subdivision"


class NotFullDimensional(DomainError):
    """The polytope must span the ambient lattice for this operation."""

    code = "not-full-dimensional"


class NotConvenient(DomainError):
    """The Newton polytope misses some coordinate ray.

    ``rays`` lists the failing coordinate indices (1-based).
    """

    code = "not-convenient"

    def __init__(self, rays):
        self.rays = tuple(rays)
        super().__init__(f"polytope misses coordinate rays {self.rays}")


class NonUnimodalDecomposition(Exception):
    """Internal error: a local h-polynomial failed to peel into
    non-negative symmetric blocks.  Indicates an upstream bug."""
