from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crosscode import normvalue
from crosscode.normvalue import MapValue, Unencodable


def test_canonical_decimal_strips_exponent_and_zeros():
    assert normvalue.canonical_decimal(Decimal("1.500")) == "1.5"
    assert normvalue.canonical_decimal(Decimal("1E+2")) == "100"
    assert normvalue.canonical_decimal(Decimal("0.000")) == "0"
    assert normvalue.canonical_decimal(Decimal("-0")) == "0"
    assert normvalue.canonical_decimal(Decimal("-12.30")) == "-12.3"


@pytest.mark.parametrize("bad", ["NaN", "Infinity", "-Infinity"])
def test_canonical_decimal_rejects_non_finite(bad):
    with pytest.raises(Unencodable):
        normvalue.canonical_decimal(Decimal(bad))


def test_normalize_scalars():
    assert normvalue.normalize(None) is None
    assert normvalue.normalize(True) is True
    assert normvalue.normalize(7) == Decimal(7)
    assert normvalue.normalize(0.5) == Decimal("0.5")
    assert normvalue.normalize("abc") == "abc"


def test_normalize_containers():
    assert normvalue.normalize([1, [2, 3]]) == (Decimal(1), (Decimal(2), Decimal(3)))
    assert normvalue.normalize((1, 2)) == (Decimal(1), Decimal(2))
    # Sets get a canonical order.
    assert normvalue.normalize({3, 1, 2}) == (Decimal(1), Decimal(2), Decimal(3))
    mapped = normvalue.normalize({2: "b", 1: "a"})
    assert isinstance(mapped, MapValue)
    assert mapped.items == ((Decimal(1), "a"), (Decimal(2), "b"))


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), b"bytes", object()])
def test_normalize_rejects_unencodable(bad):
    with pytest.raises(Unencodable):
        normvalue.normalize(bad)


def test_encode_canonical_forms():
    assert normvalue.encode(None) == "null"
    assert normvalue.encode(True) == "true"
    assert normvalue.encode(Decimal("2.50")) == "2.5"
    assert normvalue.encode((Decimal(1), "x")) == '[1,"x"]'
    assert normvalue.encode(normvalue.normalize({1: [1, 2], "a": 0})) == (
        '{"~map":[["a",0],[1,[1,2]]]}'
    )


def test_map_pairs_sort_by_encoded_key():
    # Insertion order never leaks into the canonical form.
    m1 = normvalue.normalize({1: "a", 2: "b"})
    m2 = normvalue.normalize({2: "b", 1: "a"})
    assert m1 == m2
    assert normvalue.encode(m1) == normvalue.encode(m2)


def test_bool_is_not_a_number():
    assert not normvalue.equal(True, Decimal(1))
    assert not normvalue.equal(False, Decimal(0))
    assert normvalue.equal(True, True)
    # And numbers are not numeric strings.
    assert not normvalue.equal(Decimal(1), "1")


def test_equal_relative_tolerance():
    assert normvalue.equal(Decimal("1.0000001"), Decimal("1.0000002"))
    assert not normvalue.equal(Decimal("1.0"), Decimal("1.1"))
    # Tolerance scales with magnitude.
    assert normvalue.equal(Decimal("1000000"), Decimal("1000001"))
    assert not normvalue.equal(Decimal("1"), Decimal("2"))


def test_equal_recurses_through_containers():
    a = (Decimal("0.3333333"), "x")
    b = (Decimal("0.3333334"), "x")
    assert normvalue.equal(a, b)
    assert not normvalue.equal(a, (Decimal("0.3333333"),))
    m1 = normvalue.normalize({1: 0.5})
    m2 = normvalue.normalize({1: 0.5000001})
    assert normvalue.equal(m1, m2)


def test_from_jsonable_rejects_plain_objects():
    with pytest.raises(ValueError):
        normvalue.from_jsonable({"a": 1})
    with pytest.raises(ValueError):
        normvalue.from_jsonable({"~map": [[1]]})


def test_decode_round_trip_for_tagged_map():
    value = normvalue.normalize({1: [1, 2], 2: None})
    assert normvalue.decode(normvalue.encode(value)) == value


# Recursive strategy over exactly the value domain the wire format supports.
_scalars = st.one_of(
    st.none(),
    st.booleans(),
    st.integers(min_value=-(10**12), max_value=10**12).map(Decimal),
    st.floats(allow_nan=False, allow_infinity=False, width=32).map(lambda f: Decimal(repr(f))),
    st.text(max_size=8),
)
_values = st.recursive(
    _scalars,
    lambda inner: st.one_of(
        st.lists(inner, max_size=4).map(tuple),
        st.lists(st.tuples(inner, inner), max_size=3).map(
            lambda pairs: MapValue(_dedupe(pairs))
        ),
    ),
    max_leaves=12,
)


def _dedupe(pairs):
    seen = {}
    for k, v in pairs:
        seen[normvalue.encode(k)] = (k, v)
    return tuple(seen.values())


@given(_values)
def test_encode_decode_round_trip(value):
    assert normvalue.decode(normvalue.encode(value)) == value


@given(_values)
def test_to_jsonable_round_trip(value):
    assert normvalue.from_jsonable(normvalue.to_jsonable(value)) == value


@given(_values)
def test_equal_is_reflexive(value):
    assert normvalue.equal(value, value)
