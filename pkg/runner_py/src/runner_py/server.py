#!/usr/bin/env python3
"""Stateless Python snippet runner speaking JSON lines on stdio.

On start the runner prints a handshake line and then answers one response
per request line, in order:

    -> {"ready": true, "language": "python"}
    <- {"id": 1, "op": "exec", "code": "def f(x): return x+1", "entry": "f",
        "args": [2], "timeout_ms": 2000}
    -> {"id": 1, "status": "ok", "value": 3}

Statuses are "ok" (with "value"), "timeout", and "error" (with
"error_kind"). Error kinds: "exception" (the snippet raised or has no such
entry point), "unencodable" (the result has no portable form, e.g. NaN or
a file handle), and "protocol" (malformed request; id is -1 when the
request id itself was unreadable).

Each request runs in a fresh namespace, so nothing leaks between requests.
The snippet's stdin/stdout/stderr are detached from the protocol stream at
the file-descriptor level; printing cannot corrupt the framing. Wall-clock
timeouts are enforced with setitimer, which needs a POSIX platform. When
the host sets RUNNER_NO_NET=1, socket creation is disabled before any
snippet runs.

Result values are normalized to the shared cross-language form: numbers
serialize as plain decimals (no exponent, no trailing zeros, -0 is 0),
tuples and sets become arrays (sets sorted by their encoded form), and
dicts become {"~map": [[key, value], ...]} sorted by encoded key.
"""

from __future__ import annotations

import json
import os
import signal
import sys
from decimal import Decimal

MAP_TAG = "~map"
MAX_DEPTH = 64


class Unencodable(Exception):
    pass


class ProtocolError(Exception):
    pass


class _Timeout(BaseException):
    """Raised by the alarm handler; BaseException so snippets can't catch it."""


# --- value serialization --------------------------------------------------------


def canonical_decimal(value: Decimal) -> str:
    if value.is_nan() or value.is_infinite():
        raise Unencodable("non-finite number")
    if value == 0:
        return "0"
    return format(value.normalize(), "f")


def encode_value(value, depth: int = 0) -> str:
    """Canonical JSON text for a snippet result; raises Unencodable."""
    if depth > MAX_DEPTH:
        raise Unencodable("value nested too deeply")
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return canonical_decimal(Decimal(value))
    if isinstance(value, float):
        return canonical_decimal(Decimal(repr(value)))
    if isinstance(value, Decimal):
        return canonical_decimal(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(encode_value(v, depth + 1) for v in value) + "]"
    if isinstance(value, (set, frozenset)):
        return "[" + ",".join(sorted(encode_value(v, depth + 1) for v in value)) + "]"
    if isinstance(value, dict):
        entries = sorted(
            (encode_value(k, depth + 1), encode_value(v, depth + 1)) for k, v in value.items()
        )
        return '{"%s":[%s]}' % (MAP_TAG, ",".join(f"[{k},{v}]" for k, v in entries))
    raise Unencodable(f"unsupported type: {type(value).__name__}")


def _freeze(value):
    """Hashable mirror of a decoded value, for use as a dict key."""
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    if isinstance(value, dict):
        return tuple(sorted((_freeze(k), _freeze(v)) for k, v in value.items()))
    return value


def decode_value(raw):
    """JSON argument -> natural Python value (tagged objects are dicts)."""
    if isinstance(raw, dict):
        if set(raw) != {MAP_TAG} or not isinstance(raw[MAP_TAG], list):
            raise ProtocolError("plain JSON objects are not valid argument values")
        out = {}
        for entry in raw[MAP_TAG]:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ProtocolError("map entry must be a [key, value] pair")
            out[_freeze(decode_value(entry[0]))] = decode_value(entry[1])
        return out
    if isinstance(raw, list):
        return [decode_value(v) for v in raw]
    return raw


# --- execution ------------------------------------------------------------------


def _alarm(signum, frame):
    raise _Timeout()


def run_snippet(code: str, entry: str, args: list, timeout_ms: int) -> tuple[str, str | None]:
    """Execute one request; returns (status, value_or_error_kind_text)."""
    namespace: dict = {"__name__": "__snippet__"}
    signal.setitimer(signal.ITIMER_REAL, timeout_ms / 1000.0)
    try:
        exec(code, namespace)  # noqa: S102 - executing snippets is the whole job
        fn = namespace.get(entry)
        if not callable(fn):
            return "error", "exception"
        result = fn(*args)
    except _Timeout:
        return "timeout", None
    except BaseException:  # noqa: BLE001 - report, don't die
        return "error", "exception"
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0.0)
    try:
        return "ok", encode_value(result)
    except (Unencodable, RecursionError):
        return "error", "unencodable"


def handle_line(line: str) -> str:
    try:
        req = json.loads(line)
    except json.JSONDecodeError:
        return _response(-1, "error", error_kind="protocol")
    if not isinstance(req, dict) or not isinstance(req.get("id"), int):
        return _response(-1, "error", error_kind="protocol")
    req_id = req["id"]
    code = req.get("code")
    entry = req.get("entry")
    raw_args = req.get("args")
    timeout_ms = req.get("timeout_ms")
    if (
        req.get("op") != "exec"
        or not isinstance(code, str)
        or not isinstance(entry, str)
        or not isinstance(raw_args, list)
        or not isinstance(timeout_ms, int)
        or isinstance(timeout_ms, bool)
        or timeout_ms < 1
    ):
        return _response(req_id, "error", error_kind="protocol")
    try:
        args = [decode_value(v) for v in raw_args]
    except ProtocolError:
        return _response(req_id, "error", error_kind="protocol")
    status, payload = run_snippet(code, entry, args, timeout_ms)
    if status == "ok":
        return _response(req_id, "ok", value_text=payload)
    if status == "timeout":
        return _response(req_id, "timeout")
    return _response(req_id, "error", error_kind=payload)


def _response(req_id: int, status: str, value_text: str | None = None, error_kind: str | None = None) -> str:
    parts = [f'{{"id": {req_id}, "status": "{status}"']
    if value_text is not None:
        parts.append(f', "value": {value_text}')
    if error_kind is not None:
        parts.append(f', "error_kind": {json.dumps(error_kind)}')
    parts.append("}")
    return "".join(parts)


# --- process setup --------------------------------------------------------------


def _disable_network() -> None:
    import socket

    def _deny(*_args, **_kwargs):
        raise OSError("network access disabled (RUNNER_NO_NET=1)")

    socket.socket = _deny  # type: ignore[misc,assignment]
    socket.create_connection = _deny  # type: ignore[assignment]
    socket.socketpair = _deny  # type: ignore[assignment]


def main() -> int:
    # Keep private handles on the real stdio, then point fds 0/1 at
    # /dev/null so snippet-level reads and writes (even via C code)
    # cannot touch the protocol stream.
    proto_in = os.fdopen(os.dup(0), "r", encoding="utf-8")
    proto_out = os.fdopen(os.dup(1), "w", encoding="utf-8")
    devnull = os.open(os.devnull, os.O_RDWR)
    os.dup2(devnull, 0)
    os.dup2(devnull, 1)
    os.close(devnull)
    sys.stdin = open(os.devnull, "r", encoding="utf-8")  # noqa: SIM115
    sys.stdout = open(os.devnull, "w", encoding="utf-8")  # noqa: SIM115

    if os.environ.get("RUNNER_NO_NET") == "1":
        _disable_network()
    signal.signal(signal.SIGALRM, _alarm)

    proto_out.write('{"ready": true, "language": "python"}\n')
    proto_out.flush()
    for line in proto_in:
        if not line.strip():
            continue
        proto_out.write(handle_line(line) + "\n")
        proto_out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
