import hashlib
import sys
from decimal import Decimal

import pytest

from crosscode.corpus import Language
from crosscode.runners import (
    Outcome,
    RecordingRunner,
    ReplayRunner,
    RunnerSet,
    SubprocessRunner,
    load_replay,
    replay_key,
    save_replay,
)

ADD_ONE = "def f(n):\n    return n + 1\n"


@pytest.fixture(scope="module")
def live(runner_cmd):
    runner = SubprocessRunner(runner_cmd)
    yield runner
    runner.close()


def test_replay_key_format():
    key = replay_key("code", "f", (Decimal(1), "x"))
    sha = hashlib.sha256(b"code").hexdigest()
    assert key == sha + '|f|[1,"x"]'


def test_outcome_validates_status():
    with pytest.raises(ValueError):
        Outcome("weird")


def test_replay_runner_hits_and_misses():
    key = replay_key(ADD_ONE, "f", (Decimal(1),))
    runner = ReplayRunner({key: Outcome("ok", value=Decimal(2))})
    assert runner.execute(ADD_ONE, "f", (Decimal(1),), 1000) == Outcome("ok", value=Decimal(2))
    miss = runner.execute(ADD_ONE, "f", (Decimal(5),), 1000)
    assert miss == Outcome("error", error_kind="replay_miss")


def test_replay_store_round_trip(tmp_path):
    records = {
        replay_key("a", "f", (Decimal(1),)): Outcome("ok", value=Decimal("2.5")),
        replay_key("a", "f", (Decimal(2),)): Outcome("error", error_kind="exception"),
        replay_key("b", "g", ()): Outcome("timeout"),
        replay_key("b", "g", ("x", (Decimal(1), False))): Outcome("ok", value=("x",)),
    }
    path = tmp_path / "replay.jsonl"
    save_replay(path, records)
    loaded = load_replay(path)
    assert loaded.store == records
    # Saving what was loaded reproduces the file byte for byte.
    save_replay(tmp_path / "again.jsonl", loaded.store)
    assert (tmp_path / "again.jsonl").read_bytes() == path.read_bytes()


def test_load_replay_rejects_garbage(tmp_path):
    path = tmp_path / "replay.jsonl"
    path.write_text('{"entry": "f"}\n')
    with pytest.raises(ValueError, match="line 1"):
        load_replay(path)


def test_recording_runner_tees():
    inner = ReplayRunner({replay_key(ADD_ONE, "f", (Decimal(1),)): Outcome("ok", value=Decimal(2))})
    recorder = RecordingRunner(inner)
    recorder.execute(ADD_ONE, "f", (Decimal(1),), 1000)
    recorder.execute(ADD_ONE, "f", (Decimal(9),), 1000)  # a miss is still recorded
    assert recorder.records == {
        replay_key(ADD_ONE, "f", (Decimal(1),)): Outcome("ok", value=Decimal(2)),
        replay_key(ADD_ONE, "f", (Decimal(9),)): Outcome("error", error_kind="replay_miss"),
    }


def test_runner_set_dispatch():
    py = ReplayRunner({})
    fallback = ReplayRunner({})
    rs = RunnerSet(live={Language.PYTHON: py}, fallback=fallback)
    assert rs.for_language(Language.PYTHON) is py
    assert rs.for_language(Language.JAVA) is fallback
    assert RunnerSet().for_language(Language.JAVA) is None
    rs.close()


# --- live subprocess runner ------------------------------------------------------


def test_live_execute_ok(live):
    outcome = live.execute(ADD_ONE, "f", (Decimal(41),), 2000)
    assert outcome == Outcome("ok", value=Decimal(42))
    assert live.language == "python"


def test_live_execute_sequence_reuses_process(live):
    pid = live._proc.pid
    for n in (1, 2, 3):
        assert live.execute(ADD_ONE, "f", (Decimal(n),), 2000).value == Decimal(n + 1)
    assert live._proc.pid == pid


def test_live_exception(live):
    outcome = live.execute("def f(n):\n    raise ValueError(n)\n", "f", (Decimal(1),), 2000)
    assert outcome == Outcome("error", error_kind="exception")


def test_live_unencodable(live):
    outcome = live.execute("def f(n):\n    return float('nan')\n", "f", (Decimal(1),), 2000)
    assert outcome == Outcome("error", error_kind="unencodable")


def test_live_timeout(live):
    outcome = live.execute("def f(n):\n    while True:\n        pass\n", "f", (Decimal(1),), 300)
    assert outcome == Outcome("timeout")


def test_live_restarts_after_kill(live):
    assert live.execute(ADD_ONE, "f", (Decimal(1),), 2000).status == "ok"
    old_pid = live._proc.pid
    live._proc.kill()
    live._proc.wait()
    # A dead process is noticed before the next request and restarted.
    outcome = live.execute(ADD_ONE, "f", (Decimal(1),), 2000)
    assert outcome == Outcome("ok", value=Decimal(2))
    assert live._proc.pid != old_pid


def test_death_mid_request_is_runner_lost():
    script = (
        "import sys;"
        "print('{\"ready\": true, \"language\": \"python\"}');"
        "sys.stdout.flush();"
        "sys.stdin.readline();"
        "sys.exit(1)"
    )
    runner = SubprocessRunner([sys.executable, "-c", script])
    try:
        outcome = runner.execute(ADD_ONE, "f", (Decimal(1),), 500)
    finally:
        runner.close()
    assert outcome == Outcome("error", error_kind="runner_lost")


def test_bad_handshake_is_runner_lost():
    runner = SubprocessRunner([sys.executable, "-c", "print('hello')"])
    try:
        outcome = runner.execute(ADD_ONE, "f", (Decimal(1),), 500)
    finally:
        runner.close()
    assert outcome == Outcome("error", error_kind="runner_lost")


def test_garbage_response_is_protocol_error():
    script = 'import sys;print(\'{"ready": true, "language": "python"}\');sys.stdout.flush();input();print("not json");sys.stdout.flush()'
    runner = SubprocessRunner([sys.executable, "-c", script])
    try:
        outcome = runner.execute(ADD_ONE, "f", (Decimal(1),), 500)
    finally:
        runner.close()
    assert outcome == Outcome("error", error_kind="protocol")
