import json
import random

import pytest

from crosscode.corpus import Config, load_corpus
from crosscode.eval import (
    DEFAULT_KS,
    EvalRun,
    MODES,
    QueryJudgment,
    clone_metrics,
    clone_report_csv,
    correlation_report,
    correlation_report_json,
    eval_report_csv,
    eval_report_json,
    leave_one_out,
    retrieval_metrics,
)
from crosscode.rank import PairCache
from crosscode.store import build_indices
from oracles import retrieval_reference


def judgment(query_id, ranked, relevant):
    return QueryJudgment(query_id, tuple(ranked), frozenset(relevant))


# --- raw metrics -----------------------------------------------------------------


def test_best_rank():
    j = judgment("q", ["a", "b", "c"], {"c", "x"})
    assert j.best_rank() == 3
    assert judgment("q", ["a", "b"], {"x"}).best_rank() is None


def test_retrieval_metrics_single_query():
    metrics = retrieval_metrics([judgment("q", ["a", "b", "c"], {"b", "c"})], ks=(1, 2, 3))
    assert metrics["query_count"] == 1
    assert metrics["mrr"] == pytest.approx(1 / 2)
    assert metrics["p"] == {1: 0.0, 2: pytest.approx(1 / 2), 3: pytest.approx(2 / 3)}
    assert metrics["sr"] == {1: 0.0, 2: 1.0, 3: 1.0}


def test_retrieval_metrics_empty_raises():
    with pytest.raises(ValueError):
        retrieval_metrics([])


def test_retrieval_metrics_dedupes_ks():
    metrics = retrieval_metrics([judgment("q", ["a"], {"a"})], ks=(5, 1, 5))
    assert sorted(metrics["p"]) == [1, 5]


def _random_judgments(rng, n):
    out = []
    universe = [f"s{i}" for i in range(12)]
    for q in range(n):
        ranked = rng.sample(universe, rng.randint(0, len(universe)))
        relevant = set(rng.sample(universe, rng.randint(0, 4)))
        out.append(judgment(f"q{q}", ranked, relevant))
    return out


def test_retrieval_metrics_match_reference():
    rng = random.Random(11)
    for _ in range(200):
        judgments = _random_judgments(rng, rng.randint(1, 8))
        ks = sorted(rng.sample([1, 2, 3, 5, 8, 10], 3))
        got = retrieval_metrics(judgments, ks)
        want = retrieval_reference(
            [(j.ranked_ids, j.relevant) for j in judgments], ks
        )
        assert got["mrr"] == pytest.approx(want["mrr"])
        for k in ks:
            assert got["p"][k] == pytest.approx(want["p"][k])
            assert got["sr"][k] == pytest.approx(want["sr"][k])


def test_success_rate_monotone_and_p1_equals_sr1():
    rng = random.Random(12)
    for _ in range(100):
        judgments = _random_judgments(rng, rng.randint(1, 6))
        metrics = retrieval_metrics(judgments, ks=(1, 2, 3, 5, 10))
        srs = [metrics["sr"][k] for k in (1, 2, 3, 5, 10)]
        assert srs == sorted(srs)
        assert metrics["p"][1] == metrics["sr"][1]


def test_clone_metrics_worked_example():
    # Two queries: one finds its clone, one proposes a spurious top-1 while
    # having no real clone available -> P 1/2, R 1/1.
    labels = {"q1": "g", "hit": "g", "q2": "h", "stray": "x"}
    predictions = [("q1", "hit"), ("q2", "stray")]
    clone = clone_metrics(predictions, labels, {"q1": True, "q2": False})
    assert clone == {
        "c_plus": 1,
        "nc_plus": 1,
        "c_minus": 0,
        "precision": 0.5,
        "recall": 1.0,
        "f1": pytest.approx(2 / 3),
    }


def test_clone_metrics_counts_misses_and_empties():
    labels = {"q": "g", "other": "g", "noise": "x"}
    missed = clone_metrics([("q", "noise")], labels, {"q": True})
    assert (missed["nc_plus"], missed["c_minus"]) == (1, 1)
    assert missed["precision"] == 0.0 and missed["recall"] == 0.0 and missed["f1"] == 0.0
    empty_top = clone_metrics([("q", None)], labels, {"q": True})
    assert (empty_top["nc_plus"], empty_top["c_minus"]) == (0, 1)
    unlabeled = clone_metrics([("u", "other")], {"u": None, "other": "g"}, {"u": False})
    assert unlabeled["c_plus"] == 0 and unlabeled["nc_plus"] == 1


# --- leave-one-out on a small static corpus -----------------------------------------


@pytest.fixture(scope="module")
def static_bundle(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    pairs = {
        "double": ("def double(n):\n    return n * 2\n", "static int double(int n) {\n    return n * 2;\n}\n"),
        "negate": ("def negate(n):\n    return -n\n", "static int negate(int n) {\n    return -n;\n}\n"),
        "greet": ("def greet(s):\n    return 'hi ' + s\n", 'static String greet(String s) {\n    return "hi " + s;\n}\n'),
    }
    for group, (py, java) in pairs.items():
        d = root / group
        d.mkdir()
        (d / "a.py").write_text(py)
        (d / "b.java").write_text(java)
    corpus, report = load_corpus(root)
    assert not report.warnings
    bundle, _ = build_indices(corpus, Config(), with_dynamic=False)
    return bundle


def test_leave_one_out_modes_restrict_pools(static_bundle):
    runs = {mode: leave_one_out(static_bundle, mode=mode) for mode in MODES}
    for mode, run in runs.items():
        assert run.mode == mode
        assert run.metrics["query_count"] == 6
        assert run.warnings == []
        for j in run.judgments:
            query_is_py = j.query_id.endswith(".py")
            for sid in j.ranked_ids:
                assert sid != j.query_id
                if mode == "cross_language":
                    assert sid.endswith(".py") != query_is_py
                elif mode == "within_language":
                    assert sid.endswith(".py") == query_is_py
    assert all(len(j.ranked_ids) == 5 for j in runs["all"].judgments)


def test_leave_one_out_relevance_follows_labels(static_bundle):
    run = leave_one_out(static_bundle, mode="cross_language")
    by_query = {j.query_id: j for j in run.judgments}
    assert by_query["double/a.py"].relevant == {"double/b.java"}
    assert by_query["greet/b.java"].relevant == {"greet/a.py"}


def test_leave_one_out_unlabeled_corpus(tmp_path):
    (tmp_path / "x.py").write_text("def f(n):\n    return n\n")
    (tmp_path / "y.py").write_text("def g(n):\n    return n + 1\n")
    bundle, _ = build_indices(load_corpus(tmp_path)[0], Config(), with_dynamic=False)
    run = leave_one_out(bundle, mode="within_language", with_clone=True)
    assert run.metrics["mrr"] == 0.0
    assert all(not j.relevant for j in run.judgments)
    assert run.clone["c_plus"] == 0 and run.clone["c_minus"] == 0
    with pytest.raises(ValueError, match="no usable queries"):
        leave_one_out(bundle, mode="cross_language")


def test_leave_one_out_validates(static_bundle, tmp_path):
    with pytest.raises(ValueError, match="unknown mode"):
        leave_one_out(static_bundle, mode="sideways")
    (tmp_path / "only.py").write_text("def f(n):\n    return n\n")
    lonely, _ = build_indices(load_corpus(tmp_path)[0], Config(), with_dynamic=False)
    with pytest.raises(ValueError, match="at least two"):
        leave_one_out(lonely)


def test_leave_one_out_cross_language_on_groups(groups_bundle):
    cache = PairCache()
    run = leave_one_out(groups_bundle, mode="cross_language", ranker="cosal",
                        pair_cache=cache, with_clone=True)
    assert run.metrics["query_count"] == 120
    assert run.metrics["mrr"] == 1.0
    assert run.metrics["p"][1] == run.metrics["sr"][1] == 1.0
    assert run.clone == {
        "c_plus": 120, "nc_plus": 0, "c_minus": 0,
        "precision": 1.0, "recall": 1.0, "f1": 1.0,
    }
    # Sharing the pair cache makes the single-measure follow-up almost free.
    tokens_run = leave_one_out(groups_bundle, mode="cross_language",
                               ranker="token_only", pair_cache=cache)
    assert 0.0 < tokens_run.metrics["mrr"] <= 1.0


# --- correlation ---------------------------------------------------------------------


def test_correlation_report_deterministic(groups_bundle):
    first = correlation_report(groups_bundle, pairs_per_repeat=40, repeats=3, seed=7)
    second = correlation_report(groups_bundle, pairs_per_repeat=40, repeats=3, seed=7)
    assert first == second
    assert first != correlation_report(groups_bundle, pairs_per_repeat=40, repeats=3, seed=8)


def test_correlation_report_defaults_to_config_seed(groups_bundle):
    first = correlation_report(groups_bundle, pairs_per_repeat=25, repeats=2)
    second = correlation_report(groups_bundle, pairs_per_repeat=25, repeats=2)
    assert first == second


def test_correlation_report_shape(groups_bundle):
    report = correlation_report(groups_bundle, pairs_per_repeat=30, repeats=2, seed=3)
    assert report["pairs_per_repeat"] == 30 and report["repeats"] == 2
    assert len(report["sample_sizes"]) == 2
    assert all(size == 30 for size in report["sample_sizes"])  # every snippet has a tree
    for name in ("token_ast", "token_io", "ast_io"):
        r = report["r"][name]
        assert r is None or -1.0 <= r <= 1.0
        assert 0 <= report["undefined_repeats"][name] <= 2
    text = correlation_report_json(report)
    assert text.endswith("\n") and json.loads(text) == report


def test_correlation_needs_two_snippets(tmp_path):
    (tmp_path / "only.py").write_text("def f(n):\n    return n\n")
    bundle, _ = build_indices(load_corpus(tmp_path)[0], Config(), with_dynamic=False)
    with pytest.raises(ValueError):
        correlation_report(bundle, pairs_per_repeat=5, repeats=1)


# --- report files ---------------------------------------------------------------------


def _fake_run(with_clone=False):
    metrics = {
        "query_count": 4,
        "mrr": 0.75,
        "p": {1: 0.5, 10: 0.125},
        "sr": {1: 0.5, 10: 1.0},
    }
    clone = None
    if with_clone:
        clone = {"c_plus": 2, "nc_plus": 2, "c_minus": 0,
                 "precision": 0.5, "recall": 1.0, "f1": 2 / 3}
    return EvalRun("cosal", "cross_language", metrics, clone, [], ["w1"])


def test_eval_report_csv_format():
    text = eval_report_csv([_fake_run()])
    assert text == (
        "ranker,mode,MRR,P@1,P@10,SR@1,SR@10\n"
        "cosal,cross_language,75.0,50.0,12.5,50.0,100.0\n"
    )


def test_eval_report_json_round_trips():
    text = eval_report_json([_fake_run(with_clone=True)])
    assert text.endswith("\n")
    (payload,) = json.loads(text)
    assert payload["ranker"] == "cosal"
    assert payload["warnings"] == ["w1"]
    assert payload["clone"]["precision"] == 0.5
    # ks arrive as strings after JSON round-trip; values survive exactly
    assert payload["metrics"]["p"] == {"1": 0.5, "10": 0.125}


def test_clone_report_csv_format():
    text = clone_report_csv([_fake_run(), _fake_run(with_clone=True)])
    assert text == (
        "ranker,mode,precision,recall,f1,c_plus,nc_plus,c_minus\n"
        "cosal,cross_language,50.0,100.0,66.7,2,2,0\n"
    )


def test_default_ks():
    assert DEFAULT_KS == (1, 3, 5, 10)
