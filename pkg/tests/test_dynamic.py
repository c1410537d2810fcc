from decimal import Decimal

import pytest

from crosscode import normvalue
from crosscode.corpus import Config, Language, SnippetRecord, load_corpus
from crosscode.dynamic import (
    IoIndex,
    IoProfile,
    Observation,
    build_io_index,
    generate_args,
    io_similarity,
    parse_sig_type,
    profile_segment,
    segment,
    segment_similarity,
)
from crosscode.runners import Outcome, RunnerSet

CONFIG = Config(args_max=24)


class TableRunner:
    """Fake runner: entry name -> python callable, code is ignored."""

    def __init__(self, table):
        self.table = table

    def execute(self, code, entry, args, timeout_ms):
        fn = self.table.get(entry)
        if fn is None:
            return Outcome("error", error_kind="exception")
        try:
            result = fn(*args)
        except Exception:
            return Outcome("error", error_kind="exception")
        try:
            return Outcome("ok", value=normvalue.normalize(result))
        except normvalue.Unencodable:
            return Outcome("error", error_kind="unencodable")

    def close(self):
        pass


def record_for(source: str, language=Language.PYTHON, snippet_id="s.py") -> SnippetRecord:
    from crosscode.gast import list_functions
    from crosscode.corpus import FunctionSpan

    return SnippetRecord(
        id=snippet_id,
        path=snippet_id,
        language=language,
        group_label=None,
        source=source,
        functions=tuple(FunctionSpan(*f) for f in list_functions(source, language)),
    )


def profile(source, table, config=CONFIG, language=Language.PYTHON):
    rec = record_for(source, language)
    segs = segment(rec, config)
    assert len(segs) == 1, segs
    return profile_segment(TableRunner(table), rec, segs[0], config)


# --- segmentation -------------------------------------------------------------


def test_segment_picks_invocable_functions():
    rec = record_for(
        "def idle(): pass\n"
        "def work(n: int):\n    return n\n"
        "class C:\n"
        "    def method(self):\n        return 1\n"
    )
    segs = segment(rec, CONFIG)
    assert [(s.segment_id, s.entry, s.sig) for s in segs] == [("work", "work", ("int",))]
    assert segs[0].snippet_id == "s.py"


def test_segment_applies_min_stmts():
    source = "def tiny(n):\n    return n\ndef meaty(n):\n    m = n + 1\n    m *= 2\n    return m\n"
    rec = record_for(source)
    assert [s.entry for s in segment(rec, CONFIG)] == ["tiny", "meaty"]
    strict = Config(min_stmts=3)
    assert [s.entry for s in segment(rec, strict)] == ["meaty"]


def test_segment_disambiguates_java_overloads():
    source = (
        "static int f(int x) {\n    return x;\n}\n"
        "static int f(int x, int y) {\n    return x + y;\n}\n"
    )
    rec = record_for(source, Language.JAVA, "s.java")
    segs = segment(rec, CONFIG)
    assert [(s.segment_id, s.entry) for s in segs] == [("f", "f"), ("f#1", "f")]
    assert [s.sig for s in segs] == [("int",), ("int", "int")]


# --- signature grammar ----------------------------------------------------------


@pytest.mark.parametrize(
    "text,parsed",
    [
        ("int", ("int", ())),
        ("string", ("string", ())),
        ("seq[int]", ("seq", (("int", ()),))),
        ("seq", ("seq", (("unknown", ()),))),
        ("map[string,seq[int]]", ("map", (("string", ()), ("seq", (("int", ()),))))),
        ("unknown", ("unknown", ())),
    ],
)
def test_parse_sig_type(text, parsed):
    assert parse_sig_type(text) == parsed


@pytest.mark.parametrize("bad", ["intt", "seq[", "map[int]", "List[int]"])
def test_parse_sig_type_rejects(bad):
    with pytest.raises(ValueError):
        parse_sig_type(bad)


# --- argument generation ---------------------------------------------------------


def test_generate_args_deterministic_prefix():
    sig = ("int", "seq[int]")
    short = generate_args(sig, seed=1729, n=10)
    long = generate_args(sig, seed=1729, n=50)
    assert long[:10] == short
    assert generate_args(sig, seed=1729, n=50) == long


def test_generate_args_boundaries_first():
    assert generate_args(("int",), 1729, 3) == [(Decimal(0),), (Decimal(-1),), (Decimal(1),)]
    assert generate_args(("bool",), 1729, 2) == [(False,), (True,)]
    assert generate_args(("string",), 1729, 1) == [("",)]
    assert generate_args(("seq[int]",), 1729, 1) == [((),)]
    two = generate_args(("int", "bool"), 1729, 3)
    assert two == [(Decimal(0), False), (Decimal(-1), True), (Decimal(1), False)]


def test_generate_args_empty_signature():
    assert generate_args((), 1729, 4) == [(), (), (), ()]


def test_generate_args_values_in_range():
    vectors = generate_args(("int",), 1729, 200)
    assert all(abs(v[0]) <= 256 and isinstance(v[0], Decimal) for v in vectors)
    assert len({v[0] for v in vectors}) > 50  # actually random, not constant


def test_generate_args_seed_matters():
    assert generate_args(("int",), 1, 50) != generate_args(("int",), 2, 50)


# --- profiling -------------------------------------------------------------------


def test_profile_refines_unknown_to_int():
    prof = profile("def f(x):\n    return x + 1\n", {"f": lambda x: x + 1})
    assert prof.sig == ("int",)
    assert prof.seed == CONFIG.rng_seed
    assert prof.ok_count() == len(prof.obs)
    by_args = {o.args: o for o in prof.obs}
    assert by_args[(Decimal(0),)].value == Decimal(1)
    assert by_args[(Decimal(-1),)].value == Decimal(0)


def test_profile_refines_unknown_to_string():
    prof = profile("def f(s):\n    return s.upper()\n", {"f": lambda s: s.upper()})
    assert prof.sig == ("string",)


def test_profile_ties_resolve_to_first_candidate():
    # A constant function succeeds under every assignment; int is listed first.
    prof = profile("def f(x):\n    return 7\n", {"f": lambda x: 7})
    assert prof.sig == ("int",)


def test_profile_keeps_annotated_types():
    prof = profile("def f(flag: bool):\n    return not flag\n", {"f": lambda b: not b})
    assert prof.sig == ("bool",)
    assert [o.args for o in prof.obs] == [(False,), (True,)]  # deduplicated
    assert prof.obs[0].value is True


def test_profile_records_errors():
    prof = profile(
        "def f(n: int):\n    return 1 // n\n",
        {"f": lambda n: 1 // int(n)},
    )
    statuses = {o.args: o.status for o in prof.obs}
    assert statuses[(Decimal(0),)] == "error"
    assert statuses[(Decimal(1),)] == "ok"
    assert 0 < prof.ok_count() < len(prof.obs)


# --- similarity --------------------------------------------------------------------


def _prof(entry, sig, pairs, snippet="s", segment_id=None):
    obs = []
    for args, value in pairs:
        vec = tuple(Decimal(a) if isinstance(a, int) else a for a in args)
        if value is None:
            obs.append(Observation(args=vec, status="error", error_kind="exception"))
        else:
            obs.append(Observation(args=vec, status="ok", value=normvalue.normalize(value)))
    return IoProfile(
        snippet_id=snippet,
        segment_id=segment_id or entry,
        entry=entry,
        sig=sig,
        seed=1729,
        obs=tuple(obs),
    )


def test_segment_similarity_counts_matches_over_shared():
    q = _prof("q", ("int",), [((0,), 0), ((1,), 1), ((2,), 4)])
    s = _prof("s", ("int",), [((1,), 1), ((2,), 5), ((3,), 9)])
    assert segment_similarity(q, s) == pytest.approx(1 / 2)  # shared: 1 and 2


def test_segment_similarity_requires_ok_on_both():
    q = _prof("q", ("int",), [((0,), None), ((1,), 1)])
    s = _prof("s", ("int",), [((0,), None), ((1,), 1)])
    assert segment_similarity(q, s) == pytest.approx(1 / 2)  # errors never match


def test_segment_similarity_sig_unification():
    q = _prof("q", ("int",), [((1,), 1)])
    assert segment_similarity(q, _prof("s", ("string",), [((1,), 1)])) == 0.0
    assert segment_similarity(q, _prof("s", ("int", "int"), [((1, 1), 1)])) == 0.0
    assert segment_similarity(q, _prof("s", ("unknown",), [((1,), 1)])) == 1.0


def test_segment_similarity_no_shared_vectors():
    q = _prof("q", ("int",), [((0,), 0)])
    s = _prof("s", ("int",), [((1,), 1)])
    assert segment_similarity(q, s) == 0.0


def test_segment_similarity_tolerant_numbers():
    q = _prof("q", ("int",), [((1,), Decimal("0.30000001"))])
    s = _prof("s", ("int",), [((1,), Decimal("0.3"))])
    assert segment_similarity(q, s) == 1.0


def test_io_similarity_worked_example():
    shared = [(i,) for i in range(20)]

    def seg_profile(name, values, snippet):
        return _prof(name, ("int",), list(zip(shared, values)), snippet=snippet)

    # Three query segments find partial matches (16/20, 19/20, 14/20); two
    # segments match nothing. Candidate fillers are unique garbage so each
    # query segment's best match is the intended one.
    q_values = [[(seg, i) for i in range(20)] for seg in range(5)]
    queries = [seg_profile(f"q{k}", q_values[k], "query") for k in range(5)]
    fills = [[("x", k, i) for i in range(20)] for k in range(3)]
    s_values = [
        [q_values[0][i] if i < 16 else fills[0][i] for i in range(20)],
        [q_values[1][i] if i < 19 else fills[1][i] for i in range(20)],
        [q_values[2][i] if i < 14 else fills[2][i] for i in range(20)],
    ]
    candidates = [seg_profile(f"s{k}", s_values[k], "cand") for k in range(3)]

    result = io_similarity(queries, candidates)
    assert result == (16 / 20 + 19 / 20 + 14 / 20) / 5
    assert result == pytest.approx(0.49, abs=1e-12)


def test_io_similarity_asymmetric():
    q = [_prof("q", ("int",), [((0,), 0), ((1,), 1)])]
    s = [
        _prof("s1", ("int",), [((0,), 0), ((1,), 1)], segment_id="s1"),
        _prof("s2", ("int",), [((0,), 9), ((1,), 8)], segment_id="s2"),
    ]
    assert io_similarity(q, s) == 1.0
    assert io_similarity(s, q) == 0.5


def test_io_similarity_empty():
    q = [_prof("q", ("int",), [((0,), 0)])]
    assert io_similarity([], q) == 0.0
    assert io_similarity(q, []) == 0.0
    assert io_similarity([], []) == 0.0


# --- the index ------------------------------------------------------------------


def test_build_io_index_without_runners_warns():
    corpus_dir_source = "def f(n: int):\n    return n\n"
    rec = record_for(corpus_dir_source)
    from crosscode.corpus import Corpus

    index, warnings = build_io_index(Corpus([rec]), CONFIG, RunnerSet())
    assert index.profiles == {}
    assert not index.executable("s.py")
    assert warnings == ["s.py: no python runner, not profiled"]


def test_build_io_index_with_fallback(tmp_path):
    (tmp_path / "good.py").write_text("def double(n: int):\n    return n * 2\n")
    (tmp_path / "dead.py").write_text("def boom(n: int):\n    raise ValueError(n)\n")
    (tmp_path / "bare.py").write_text("x = 1\n")
    corpus, _ = load_corpus(tmp_path)
    table = TableRunner({"double": lambda n: n * 2})
    index, warnings = build_io_index(corpus, CONFIG, RunnerSet(fallback=table))
    assert sorted(index.profiles) == ["dead.py", "good.py"]
    assert index.executable("good.py")
    assert not index.executable("dead.py")
    assert index.attempted == {"bare.py", "dead.py", "good.py"}
    assert sorted(warnings) == [
        "bare.py: no profileable functions",
        "dead.py: no successful executions, behavior unavailable",
    ]


def test_io_index_round_trip(groups_bundle):
    io = groups_bundle.io
    again = IoIndex.from_jsonl(io.to_jsonl())
    assert again == io
    assert again.to_jsonl() == io.to_jsonl()


def test_io_index_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        IoIndex.from_jsonl('{"id": "x"}\n')
