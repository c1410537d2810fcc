import dataclasses

import pytest

from crosscode.corpus import (
    Config,
    Corpus,
    Language,
    SnippetRecord,
    corpus_from_jsonl,
    corpus_to_jsonl,
    load_corpus,
)


def test_load_flat_directory(repo_root):
    corpus, report = load_corpus(repo_root / "fixtures" / "fig1" / "corpus")
    assert report.loaded == 4
    assert not report.warnings
    assert corpus.ids() == ["all_odds.py", "even_nums.py", "func.java", "get_evens.java"]
    rec = corpus.get("get_evens.java")
    assert rec.language is Language.JAVA
    assert rec.group_label is None  # files directly under the root are unlabeled
    assert rec.source.startswith("public static")
    assert [f.name for f in rec.functions] == ["getEvens"]


def test_group_label_is_first_directory(repo_root):
    corpus, _ = load_corpus(repo_root / "fixtures" / "groups20" / "corpus")
    assert len(corpus) == 120
    rec = corpus.get("sum_below/py_loop.py")
    assert rec.group_label == "sum_below"
    assert rec.language is Language.PYTHON
    assert {r.group_label for r in corpus} == {
        r.id.split("/")[0] for r in corpus
    }


def test_by_language_partition(repo_root):
    corpus, _ = load_corpus(repo_root / "fixtures" / "groups20" / "corpus")
    py = corpus.by_language(Language.PYTHON)
    java = corpus.by_language(Language.JAVA)
    assert len(py) == len(java) == 60
    assert all(r.id.endswith(".py") for r in py)
    assert all(r.id.endswith(".java") for r in java)


def test_unknown_extensions_are_ignored(tmp_path):
    (tmp_path / "a.py").write_text("def f():\n    return 1\n")
    (tmp_path / "notes.txt").write_text("not code")
    (tmp_path / "b.rb").write_text("puts 1")
    corpus, report = load_corpus(tmp_path)
    assert corpus.ids() == ["a.py"]
    assert not report.warnings  # unknown extensions are not even warnings


def test_non_utf8_file_is_skipped_with_warning(tmp_path):
    (tmp_path / "ok.py").write_text("def f():\n    return 1\n")
    (tmp_path / "bad.py").write_bytes(b"\xff\xfe def broken")
    corpus, report = load_corpus(tmp_path)
    assert corpus.ids() == ["ok.py"]
    assert report.warnings == ["bad.py: not valid UTF-8, skipped"]


def test_missing_root_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "nope")


def test_manifest_selects_and_labels(tmp_path):
    (tmp_path / "x.py").write_text("def f():\n    return 1\n")
    (tmp_path / "y.py").write_text("def g():\n    return 2\n")
    manifest = tmp_path / "manifest.csv"
    manifest.write_text(
        "path,language,group_label\n"
        "x.py,python,alpha\n"
        "gone.py,python,alpha\n"
        "y.py,klingon,beta\n"
    )
    corpus, report = load_corpus(tmp_path, manifest=manifest)
    assert corpus.ids() == ["x.py"]
    assert corpus.get("x.py").group_label == "alpha"
    assert sorted(report.warnings) == [
        "gone.py: missing file, skipped",
        "y.py: unknown language, skipped",
    ]


def test_manifest_requires_columns(tmp_path):
    (tmp_path / "x.py").write_text("def f():\n    return 1\n")
    manifest = tmp_path / "manifest.csv"
    manifest.write_text("file,lang\nx.py,python\n")
    with pytest.raises(ValueError, match="path,language,group_label"):
        load_corpus(tmp_path, manifest=manifest)


def test_corpus_jsonl_round_trip(repo_root):
    corpus, _ = load_corpus(repo_root / "fixtures" / "fig1" / "corpus")
    again = corpus_from_jsonl(corpus_to_jsonl(corpus))
    assert again == corpus
    assert corpus_to_jsonl(again) == corpus_to_jsonl(corpus)


def test_corpus_jsonl_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        corpus_from_jsonl('{"id": "x"}\n')


def test_corpus_container_basics():
    rec = SnippetRecord(
        id="g/a.py", path="g/a.py", language=Language.PYTHON, group_label="g", source="pass\n"
    )
    corpus = Corpus([rec])
    assert "g/a.py" in corpus
    assert "other" not in corpus
    assert len(corpus) == 1
    with pytest.raises(KeyError):
        corpus.get("other")


def test_config_round_trip_and_defaults():
    config = Config()
    assert config.min_tok_len == 3
    assert config.min_stmts == 1
    assert config.args_max == 256
    assert config.top_n == 100
    assert config.sim_t == 1.0
    assert config.exec_timeout_ms == 2000
    assert config.rng_seed == 1729
    assert Config.from_json(config.to_json()) == config
    tweaked = dataclasses.replace(config, args_max=48)
    assert Config.from_json(tweaked.to_json()) == tweaked


@pytest.mark.parametrize(
    "kwargs",
    [
        {"min_tok_len": 0},
        {"args_max": -1},
        {"top_n": 0},
        {"sim_t": 1.5},
        {"exec_timeout_ms": 0},
        {"rng_seed": "x"},
    ],
)
def test_config_validates(kwargs):
    with pytest.raises(ValueError):
        Config(**kwargs)


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config keys"):
        Config.from_json('{"min_tok_len": 3, "bogus": 1}')
