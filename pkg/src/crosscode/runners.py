"""Execution backends: live subprocess runners, recorded replay, recording.

A runner executes one entry point of one snippet with one argument vector and
reports the outcome. Live runners are language-specific subprocesses speaking
a JSON-lines protocol on stdin/stdout:

    -> {"id": 1, "op": "exec", "code": "...", "entry": "f",
        "args": [...], "timeout_ms": 2000}
    <- {"id": 1, "status": "ok", "value": ...}
    <- {"id": 2, "status": "error", "error_kind": "exception"}
    <- {"id": 3, "status": "timeout"}

On startup a runner prints a handshake line ``{"ready": true, "language":
"python"}``. Requests are strictly serial; every request gets exactly one
response, in order. Argument and result values use the canonical encoding of
:mod:`crosscode.normvalue`. Runners are launched with ``RUNNER_NO_NET=1`` in
the environment; a conforming runner must not touch the network.

The replay runner answers from a recorded store instead of executing,
keyed by (sha256 of the code, entry name, canonical argument encoding), which
makes indexing reproducible on machines without the target language installed.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import os
import select
import subprocess
import time
from decimal import Decimal
from pathlib import Path
from typing import Mapping, Protocol

from . import normvalue
from .corpus import Language
from .normvalue import NormValue


@dataclasses.dataclass(frozen=True)
class Outcome:
    status: str  # ok | error | timeout
    value: NormValue | None = None
    error_kind: str | None = None

    def __post_init__(self) -> None:
        if self.status not in ("ok", "error", "timeout"):
            raise ValueError(f"bad outcome status: {self.status!r}")


class Runner(Protocol):
    def execute(self, code: str, entry: str, args: tuple[NormValue, ...], timeout_ms: int) -> Outcome: ...

    def close(self) -> None: ...


def _encode_args(args: tuple[NormValue, ...]) -> str:
    return "[" + ",".join(normvalue.encode(a) for a in args) + "]"


def replay_key(code: str, entry: str, args: tuple[NormValue, ...]) -> str:
    sha = hashlib.sha256(code.encode("utf-8")).hexdigest()
    return f"{sha}|{entry}|{_encode_args(args)}"


# --- live subprocess runner ---------------------------------------------------


class RunnerProtocolError(RuntimeError):
    pass


class SubprocessRunner:
    """Client for one live runner process; restarts it when it is lost."""

    def __init__(self, cmd: list[str], outer_grace_ms: int = 2000):
        self.cmd = list(cmd)
        self.outer_grace_ms = outer_grace_ms
        self._proc: subprocess.Popen | None = None
        self._next_id = 1
        self._buffer = b""
        self._eof = False
        self.language: str | None = None

    # -- process management

    def _ensure_started(self) -> None:
        if self._proc is not None and self._proc.poll() is None:
            return
        env = dict(os.environ)
        env["RUNNER_NO_NET"] = "1"
        self._buffer = b""
        self._proc = subprocess.Popen(
            self.cmd,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            env=env,
        )
        line = self._read_line(deadline=time.monotonic() + 10.0)
        if line is None:
            self._kill()
            raise RunnerProtocolError(f"runner {self.cmd} produced no handshake")
        try:
            hello = json.loads(line)
        except json.JSONDecodeError as exc:
            self._kill()
            raise RunnerProtocolError(f"bad handshake from {self.cmd}: {line!r}") from exc
        if hello.get("ready") is not True:
            self._kill()
            raise RunnerProtocolError(f"runner not ready: {hello!r}")
        self.language = hello.get("language")

    def _kill(self) -> None:
        if self._proc is not None:
            try:
                self._proc.kill()
                self._proc.wait(timeout=5)
            except Exception:
                pass
            self._proc = None

    def close(self) -> None:
        self._kill()

    def _read_line(self, deadline: float) -> bytes | None:
        """One newline-terminated line, or None on timeout/EOF (see _eof)."""
        assert self._proc is not None and self._proc.stdout is not None
        self._eof = False
        fd = self._proc.stdout.fileno()
        while b"\n" not in self._buffer:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                return None
            ready, _, _ = select.select([fd], [], [], remaining)
            if not ready:
                return None
            chunk = os.read(fd, 65536)
            if not chunk:
                self._eof = True
                return None
            self._buffer += chunk
        line, self._buffer = self._buffer.split(b"\n", 1)
        return line

    # -- the one operation

    def execute(self, code: str, entry: str, args: tuple[NormValue, ...], timeout_ms: int) -> Outcome:
        try:
            self._ensure_started()
        except RunnerProtocolError:
            return Outcome("error", error_kind="runner_lost")
        assert self._proc is not None and self._proc.stdin is not None
        req_id = self._next_id
        self._next_id += 1
        request = (
            f'{{"id": {req_id}, "op": "exec", "code": {json.dumps(code)}, '
            f'"entry": {json.dumps(entry)}, "args": {_encode_args(args)}, '
            f'"timeout_ms": {timeout_ms}}}\n'
        )
        try:
            self._proc.stdin.write(request.encode("utf-8"))
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError):
            self._kill()
            return Outcome("error", error_kind="runner_lost")
        # The runner enforces timeout_ms itself; the outer deadline only
        # catches a hung or dead runner process.
        deadline = time.monotonic() + (timeout_ms + self.outer_grace_ms) / 1000.0
        line = self._read_line(deadline)
        if line is None:
            died = self._eof
            self._kill()
            return Outcome("error", error_kind="runner_lost") if died else Outcome("timeout")
        try:
            resp = json.loads(line, parse_float=Decimal, parse_int=Decimal)
        except json.JSONDecodeError:
            self._kill()
            return Outcome("error", error_kind="protocol")
        if int(resp.get("id", -1)) != req_id:
            self._kill()
            return Outcome("error", error_kind="protocol")
        status = resp.get("status")
        if status == "ok":
            try:
                value = normvalue.from_jsonable(resp.get("value"))
            except ValueError:
                return Outcome("error", error_kind="unencodable")
            return Outcome("ok", value=value)
        if status == "timeout":
            return Outcome("timeout")
        if status == "error":
            kind = resp.get("error_kind") or "exception"
            return Outcome("error", error_kind=str(kind))
        self._kill()
        return Outcome("error", error_kind="protocol")


# --- replay -------------------------------------------------------------------


class ReplayRunner:
    """Serves recorded outcomes; anything unrecorded is a replay_miss error."""

    def __init__(self, store: Mapping[str, Outcome]):
        self.store = dict(store)

    def execute(self, code: str, entry: str, args: tuple[NormValue, ...], timeout_ms: int) -> Outcome:
        del timeout_ms
        return self.store.get(replay_key(code, entry, args), Outcome("error", error_kind="replay_miss"))

    def close(self) -> None:
        pass


def _outcome_to_jsonable(outcome: Outcome) -> dict:
    raw: dict = {"status": outcome.status}
    if outcome.status == "ok":
        raw["value"] = normvalue.to_jsonable(outcome.value)
    if outcome.error_kind is not None:
        raw["error_kind"] = outcome.error_kind
    return raw


def _outcome_from_jsonable(raw: dict) -> Outcome:
    value = normvalue.from_jsonable(raw["value"]) if "value" in raw else None
    return Outcome(raw["status"], value=value, error_kind=raw.get("error_kind"))


class _DecimalSafeEncoder(json.JSONEncoder):
    def default(self, o):  # pragma: no cover - Decimal is the only case
        if isinstance(o, Decimal):
            return json.loads(normvalue.canonical_decimal(o))
        return super().default(o)


def load_replay(path: str | Path) -> ReplayRunner:
    store: dict[str, Outcome] = {}
    text = Path(path).read_text("utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line, parse_float=Decimal, parse_int=Decimal)
            key = f"{raw['code_sha256']}|{raw['entry']}|{raw['args']}"
            store[key] = _outcome_from_jsonable(raw["response"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"replay store line {lineno}: {exc}") from exc
    return ReplayRunner(store)


def save_replay(path: str | Path, records: Mapping[str, Outcome]) -> None:
    lines = []
    for key in sorted(records):
        sha, entry, args_text = key.split("|", 2)
        raw = {
            "args": args_text,
            "code_sha256": sha,
            "entry": entry,
            "response": _outcome_to_jsonable(records[key]),
        }
        lines.append(json.dumps(raw, sort_keys=True, cls=_DecimalSafeEncoder))
    Path(path).write_text("".join(line + "\n" for line in lines), "utf-8")


class RecordingRunner:
    """Tees every execution through ``inner`` into a replayable store."""

    def __init__(self, inner: Runner):
        self.inner = inner
        self.records: dict[str, Outcome] = {}

    def execute(self, code: str, entry: str, args: tuple[NormValue, ...], timeout_ms: int) -> Outcome:
        outcome = self.inner.execute(code, entry, args, timeout_ms)
        self.records[replay_key(code, entry, args)] = outcome
        return outcome

    def close(self) -> None:
        self.inner.close()


# --- per-language dispatch ----------------------------------------------------


class RunnerSet:
    """Maps languages to runners, with an optional replay fallback for all."""

    def __init__(
        self,
        live: Mapping[Language, Runner] | None = None,
        fallback: Runner | None = None,
    ):
        self.live = dict(live or {})
        self.fallback = fallback

    def for_language(self, language: Language) -> Runner | None:
        if language in self.live:
            return self.live[language]
        return self.fallback

    def close(self) -> None:
        for runner in self.live.values():
            runner.close()
        if self.fallback is not None:
            self.fallback.close()
