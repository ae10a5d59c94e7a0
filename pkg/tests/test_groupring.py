"""Tests for the group algebra Z[Q/Z]."""

from fractions import Fraction

from hypothesis import given
import hypothesis.strategies as st

from ehrmono.groupring import GroupRingElement, TorsionClass


def gre(*pairs):
    out = GroupRingElement.zero()
    for value, coeff in pairs:
        out = out + GroupRingElement.of_class(Fraction(value), coeff)
    return out


classes = st.fractions(min_value=0, max_value=1, max_denominator=12).map(TorsionClass.of)
elements = st.dictionaries(classes, st.integers(-9, 9), max_size=5).map(GroupRingElement)


class TestTorsionClass:
    def test_canonical_form(self):
        assert TorsionClass.of(Fraction(7, 3)) == TorsionClass(3, 1)
        assert TorsionClass.of(Fraction(-1, 4)) == TorsionClass(4, 3)
        assert TorsionClass.of(0) == TorsionClass(1, 0)
        assert TorsionClass.of(Fraction(4, 6)) == TorsionClass(3, 2)

    def test_group_law(self):
        assert TorsionClass.of("1/2") + TorsionClass.of("2/3") == TorsionClass.of("1/6")

    def test_sort_order_is_den_then_num(self):
        cs = sorted([TorsionClass.of("1/2"), TorsionClass.of(0), TorsionClass.of("2/3")])
        assert cs == [TorsionClass.of(0), TorsionClass.of("1/2"), TorsionClass.of("2/3")]


class TestConjugate:
    def test_unit_is_fixed(self):
        assert GroupRingElement.one().conjugate() == GroupRingElement.one()

    def test_termwise(self):
        x = gre(("1/2", 2), ("1/3", 1))
        assert x.conjugate() == gre(("1/2", 2), ("2/3", 1))

    def test_integer_part_fixed(self):
        x = GroupRingElement.of_int(3) + GroupRingElement.of_class("2/3")
        assert x.conjugate() == GroupRingElement.of_int(3) + GroupRingElement.of_class("1/3")

    @given(elements)
    def test_involution(self, x):
        assert x.conjugate().conjugate() == x

    @given(elements, elements)
    def test_ring_map(self, x, y):
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


class TestForget:
    def test_values(self):
        assert (GroupRingElement.of_int(1) + GroupRingElement.of_class(0, 4)).forget() == 5
        assert gre(("1/2", 2), ("2/3", 1), ("1/3", 1)).forget() == 4
        assert GroupRingElement.zero().forget() == 0

    @given(elements, elements)
    def test_multiplicative(self, x, y):
        assert (x * y).forget() == x.forget() * y.forget()

    @given(elements, elements)
    def test_additive(self, x, y):
        assert (x + y).forget() == x.forget() + y.forget()


class TestRingLaws:
    @given(elements, elements, elements)
    def test_distributive(self, x, y, z):
        assert (x + y) * z == x * z + y * z

    @given(elements, elements)
    def test_commutative(self, x, y):
        assert x * y == y * x

    @given(elements)
    def test_unit(self, x):
        assert x * GroupRingElement.one() == x
        assert x * 1 == x

    def test_class_multiplication_is_group_law(self):
        x = GroupRingElement.of_class("1/2") * GroupRingElement.of_class("1/2")
        assert x == GroupRingElement.one()


class TestEncoding:
    def test_json_sorted_by_den_num(self):
        x = gre(("2/3", 1), ("1/2", 2), (0, 7))
        assert x.to_json() == [
            {"num": 0, "den": 1, "coeff": 7},
            {"num": 1, "den": 2, "coeff": 2},
            {"num": 2, "den": 3, "coeff": 1},
        ]

    @given(elements)
    def test_round_trip(self, x):
        assert GroupRingElement.from_json(x.to_json()) == x
