"""The group algebra Z[Q/Z].

A class ``[k/m]`` in Q/Z stands for the root of unity exp(2*pi*i*k/m); the
group operation is addition of fractions mod 1.  Elements of the algebra are
finite integer combinations of classes.  ``1`` and ``[0]`` are the same
element (the unit).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class TorsionClass:
    """A class [num/den] in Q/Z, stored reduced with 0 <= num < den.

    Field order (den, num) gives the canonical sort used everywhere.
    """

    den: int
    num: int

    @staticmethod
    def of(value) -> "TorsionClass":
        f = Fraction(value) % 1
        return TorsionClass(f.denominator, f.numerator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def conjugate(self) -> "TorsionClass":
        return TorsionClass.of(-self.fraction)

    def __add__(self, other: "TorsionClass") -> "TorsionClass":
        return TorsionClass.of(self.fraction + other.fraction)

    def is_zero(self) -> bool:
        return self.num == 0

    def __str__(self):
        return f"[{self.num}/{self.den}]" if self.num else "[0]"


ZERO_CLASS = TorsionClass(1, 0)


class GroupRingElement:
    """Immutable element of Z[Q/Z] as a sparse class -> coefficient map."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for cls, coeff in terms.items():
                if coeff:
                    clean[cls] = clean.get(cls, 0) + coeff
                    if not clean[cls]:
                        del clean[cls]
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "GroupRingElement":
        return GroupRingElement()

    @staticmethod
    def one() -> "GroupRingElement":
        return GroupRingElement({ZERO_CLASS: 1})

    @staticmethod
    def of_int(n: int) -> "GroupRingElement":
        return GroupRingElement({ZERO_CLASS: n})

    @staticmethod
    def of_class(value, coeff: int = 1) -> "GroupRingElement":
        cls = value if isinstance(value, TorsionClass) else TorsionClass.of(value)
        return GroupRingElement({cls: coeff})

    @staticmethod
    def coerce(x) -> "GroupRingElement":
        if isinstance(x, GroupRingElement):
            return x
        if isinstance(x, int):
            return GroupRingElement.of_int(x)
        if isinstance(x, (Fraction, TorsionClass)):
            return GroupRingElement.of_class(x)
        raise TypeError(f"cannot coerce {x!r} into the group algebra")

    # -- structure ---------------------------------------------------------

    def items(self):
        """Terms sorted by (den, num); the canonical iteration order."""
        return sorted(self._terms.items())

    def classes(self):
        return sorted(self._terms)

    def coefficient(self, cls) -> int:
        cls = cls if isinstance(cls, TorsionClass) else TorsionClass.of(cls)
        return self._terms.get(cls, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.of_int(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = GroupRingElement.coerce(other)
        out = dict(self._terms)
        for cls, c in other._terms.items():
            out[cls] = out.get(cls, 0) + c
        return GroupRingElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({cls: -c for cls, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-GroupRingElement.coerce(other))

    def __rsub__(self, other):
        return GroupRingElement.coerce(other) - self

    def __mul__(self, other):
        other = GroupRingElement.coerce(other)
        out = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                cls = a + b
                out[cls] = out.get(cls, 0) + ca * cb
        return GroupRingElement(out)

    __rmul__ = __mul__

    # -- the two structure maps ---------------------------------------------

    def conjugate(self) -> "GroupRingElement":
        """The involution [k] -> [-k]."""
        return GroupRingElement({cls.conjugate(): c for cls, c in self._terms.items()})

    def forget(self) -> int:
        """The ring map to Z sending every class to 1 (sum of coefficients)."""
        return sum(self._terms.values())

    # -- encoding ------------------------------------------------------------

    def to_json(self):
        return [{"num": cls.num, "den": cls.den, "coeff": c} for cls, c in self.items()]

    @staticmethod
    def from_json(data) -> "GroupRingElement":
        return GroupRingElement(
            {TorsionClass(int(t["den"]), int(t["num"])): int(t["coeff"]) for t in data}
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for cls, c in self.items():
            if cls.is_zero():
                parts.append(str(c))
            elif c == 1:
                parts.append(str(cls))
            elif c == -1:
                parts.append(f"-{cls}")
            else:
                parts.append(f"{c}*{cls}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    __repr__ = __str__
