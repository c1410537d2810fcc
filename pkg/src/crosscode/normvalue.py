"""Language-neutral normalized values for behavioral comparison.

Outputs observed from different languages are reduced to one value model:

    null | bool | number | string | seq(values...) | map(key/value pairs)

Numbers are arbitrary-precision decimals so that ``2``, ``2.0`` and a Java
``2L`` all normalize identically; comparison allows a small relative
tolerance for float noise. Maps keep their keys as normalized values and are
ordered by the canonical encoding of the key. The canonical JSON encoding is
total order over values, used both on the wire and as a dict key when
intersecting observation tables.

Canonical encoding grammar (everything else is rejected):

    null | true | false | <plain decimal> | "string"
    [v, ...]                      -- seq
    {"~map": [[k, v], ...]}       -- map, pairs sorted by encoded key

A plain JSON object never encodes anything but a map, so the ``~map`` tag
cannot collide with user data.
"""

from __future__ import annotations

import dataclasses
import json
from decimal import Decimal, InvalidOperation
from typing import Any, Union

REL_TOL = Decimal("1e-6")

NormValue = Union[None, bool, Decimal, str, tuple, "MapValue"]

MAP_TAG = "~map"


@dataclasses.dataclass(frozen=True)
class MapValue:
    """Normalized mapping: pairs sorted by canonical encoding of the key."""

    items: tuple[tuple[NormValue, NormValue], ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.items, key=lambda kv: encode(kv[0])))
        object.__setattr__(self, "items", ordered)


class Unencodable(ValueError):
    """Raised when a raw value has no normalized representation."""


def canonical_decimal(value: Decimal) -> str:
    """Plain-format decimal string: no exponent, no trailing zeros, -0 -> 0."""
    if value.is_nan() or value.is_infinite():
        raise Unencodable(f"non-finite number: {value}")
    if value == 0:
        return "0"
    text = format(value.normalize(), "f")
    return text


def normalize(raw: Any) -> NormValue:
    """Normalize a native Python value (as produced by executed code)."""
    if raw is None or isinstance(raw, bool):
        return raw
    if isinstance(raw, int):
        return Decimal(raw)
    if isinstance(raw, float):
        dec = Decimal(repr(raw))
        if dec.is_nan() or dec.is_infinite():
            raise Unencodable(f"non-finite float: {raw!r}")
        return dec
    if isinstance(raw, Decimal):
        if raw.is_nan() or raw.is_infinite():
            raise Unencodable(f"non-finite decimal: {raw!r}")
        return raw
    if isinstance(raw, str):
        return raw
    if isinstance(raw, (bytes, bytearray)):
        raise Unencodable("bytes have no cross-language normalization")
    if isinstance(raw, (list, tuple)):
        return tuple(normalize(v) for v in raw)
    if isinstance(raw, (set, frozenset)):
        normalized = [normalize(v) for v in raw]
        return tuple(sorted(normalized, key=encode))
    if isinstance(raw, dict):
        return MapValue(tuple((normalize(k), normalize(v)) for k, v in raw.items()))
    raise Unencodable(f"unsupported type: {type(raw).__name__}")


def encode(value: NormValue) -> str:
    """Canonical JSON text; byte-equal iff values are identical."""
    parts: list[str] = []
    _encode_into(value, parts)
    return "".join(parts)


def _encode_into(value: NormValue, parts: list[str]) -> None:
    if value is None:
        parts.append("null")
    elif isinstance(value, bool):
        parts.append("true" if value else "false")
    elif isinstance(value, Decimal):
        parts.append(canonical_decimal(value))
    elif isinstance(value, str):
        parts.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, tuple):
        parts.append("[")
        for i, item in enumerate(value):
            if i:
                parts.append(",")
            _encode_into(item, parts)
        parts.append("]")
    elif isinstance(value, MapValue):
        parts.append('{"~map":[')
        for i, (key, val) in enumerate(value.items):
            if i:
                parts.append(",")
            parts.append("[")
            _encode_into(key, parts)
            parts.append(",")
            _encode_into(val, parts)
            parts.append("]")
        parts.append("]}")
    else:
        raise Unencodable(f"not a normalized value: {type(value).__name__}")


def decode(text: str) -> NormValue:
    """Parse canonical (or any JSON-compatible) encoding back to a NormValue."""
    try:
        raw = json.loads(text, parse_float=Decimal, parse_int=Decimal)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid value encoding: {exc}") from exc
    return from_jsonable(raw)


def from_jsonable(raw: Any) -> NormValue:
    """Convert a json.loads result (ideally Decimal-parsed) to a NormValue."""
    if raw is None or isinstance(raw, bool):
        return raw
    if isinstance(raw, Decimal):
        return raw
    if isinstance(raw, (int, float)):
        return normalize(raw)
    if isinstance(raw, str):
        return raw
    if isinstance(raw, list):
        return tuple(from_jsonable(v) for v in raw)
    if isinstance(raw, dict):
        if set(raw) != {MAP_TAG} or not isinstance(raw[MAP_TAG], list):
            raise ValueError(f"object is not a tagged map: keys {sorted(raw)}")
        items = []
        for entry in raw[MAP_TAG]:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ValueError("map entry must be a [key, value] pair")
            items.append((from_jsonable(entry[0]), from_jsonable(entry[1])))
        return MapValue(tuple(items))
    raise ValueError(f"unsupported JSON value of type {type(raw).__name__}")


def to_jsonable(value: NormValue) -> Any:
    """Inverse of from_jsonable, for embedding in larger JSON documents."""
    return json.loads(encode(value), parse_float=Decimal, parse_int=Decimal)


def _numbers_equal(a: Decimal, b: Decimal) -> bool:
    if a == b:
        return True
    diff = abs(a - b)
    scale = max(abs(a), abs(b))
    return diff <= REL_TOL * scale


def equal(a: NormValue, b: NormValue) -> bool:
    """Structural equality with relative tolerance on numbers.

    Booleans never equal numbers, and numbers never equal numeric strings;
    sequences and maps compare elementwise/pairwise.
    """
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if a is None or b is None:
        return a is None and b is None
    if isinstance(a, Decimal) and isinstance(b, Decimal):
        return _numbers_equal(a, b)
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(equal(x, y) for x, y in zip(a, b))
    if isinstance(a, MapValue) and isinstance(b, MapValue):
        if len(a.items) != len(b.items):
            return False
        return all(
            equal(ka, kb) and equal(va, vb)
            for (ka, va), (kb, vb) in zip(a.items, b.items)
        )
    return False


def parse_decimal(text: str) -> Decimal:
    try:
        dec = Decimal(text)
    except InvalidOperation as exc:
        raise ValueError(f"not a decimal: {text!r}") from exc
    if dec.is_nan() or dec.is_infinite():
        raise ValueError(f"non-finite decimal: {text!r}")
    return dec
