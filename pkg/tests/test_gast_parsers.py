import pytest

from crosscode.corpus import Language
from crosscode.gast import (
    KINDS,
    GastNode,
    ParseError,
    function_facts,
    gast_from_json,
    gast_to_json,
    list_functions,
    node,
    parse_to_gast,
)

PY = Language.PYTHON
JAVA = Language.JAVA


def walk(tree: GastNode):
    yield tree
    for child in tree.children:
        yield from walk(child)


def test_identical_skeletons_across_languages():
    py = parse_to_gast("def add_one(x):\n    return x + 1\n", PY)
    java = parse_to_gast("public static int addOne(int x) {\n    return x + 1;\n}\n", JAVA)
    expected = node(
        "file",
        node("func", node("var"), node("block", node("return", node("op", node("var"), node("lit"))))),
    )
    assert py == expected
    assert java == expected
    assert gast_to_json(py) == gast_to_json(java)


def test_ternaries_align():
    py = parse_to_gast("def f(x):\n    return 1 if x > 0 else 2\n", PY)
    java = parse_to_gast("static int f(int x) {\n    return x > 0 ? 1 : 2;\n}\n", JAVA)
    assert py == java
    kinds = [n.kind for n in walk(py)]
    assert kinds.count("if") == 1 and kinds.count("block") == 3


def test_augmented_assignment_expands():
    tree = parse_to_gast("def f(x):\n    x += 1\n    return x\n", PY)
    func = tree.children[0]
    body = func.children[-1]
    assert body.children[0] == node(
        "assign", node("var"), node("op", node("var"), node("lit"))
    )


def test_comprehension_desugars_to_loop():
    comp = parse_to_gast("def f(xs):\n    return [x * 2 for x in xs if x > 0]\n", PY)
    kinds = [n.kind for n in walk(comp)]
    assert "loop" in kinds and "if" in kinds
    # The three comprehension spellings share one skeleton.
    as_set = parse_to_gast("def f(xs):\n    return {x * 2 for x in xs if x > 0}\n", PY)
    as_gen = parse_to_gast("def f(xs):\n    return (x * 2 for x in xs if x > 0)\n", PY)
    assert comp == as_set == as_gen


def test_docstrings_and_pass_vanish():
    tree = parse_to_gast('def f():\n    "doc"\n    pass\n', PY)
    assert tree == node("file", node("func", node("block")))


def test_name_chains_collapse_to_var():
    tree = parse_to_gast("def f(a):\n    return a.b.c\n", PY)
    ret = tree.children[0].children[-1].children[0]
    assert ret == node("return", node("var"))


def test_match_statement_becomes_switch():
    source = "def f(x):\n    match x:\n        case 1:\n            return 1\n        case _:\n            return 0\n"
    kinds = [n.kind for n in walk(parse_to_gast(source, PY))]
    assert "switch" in kinds


def test_java_constructor_call_is_a_literal():
    source = (
        "static int f(int x) {\n"
        "    List<Integer> l = new ArrayList<Integer>();\n"
        "    return x;\n"
        "}\n"
    )
    tree = parse_to_gast(source, JAVA)
    body = tree.children[0].children[-1]
    assert body.children[0] == node("assign", node("var"), node("lit"))


def test_java_class_wrapper_and_imports():
    bare = "static int f(int x) {\n    return x;\n}\n"
    wrapped = (
        "import java.util.List;\n"
        "public class Demo {\n"
        "    static int f(int x) {\n        return x;\n    }\n"
        "}\n"
    )
    bare_tree = parse_to_gast(bare, JAVA)
    wrapped_tree = parse_to_gast(wrapped, JAVA)
    assert wrapped_tree == node("file", node("import"), node("class", bare_tree.children[0]))
    for source in (bare, wrapped):
        facts = function_facts(source, JAVA)
        assert [f.name for f in facts] == ["f"]
        assert facts[0].entry_ok
        assert facts[0].params == (("x", "int"),)


def test_java_statement_variety_parses():
    source = (
        "static int grind(int n) {\n"
        "    char c = 'a';\n"
        "    int y = (int) n;\n"
        "    int total = 0;\n"
        "    for (int i = 0; i < n; i++) {\n"
        "        total += i;\n"
        "    }\n"
        "    while (y > 0) {\n"
        "        y--;\n"
        "        if (y == 3) break;\n"
        "    }\n"
        "    switch (n) {\n"
        "        case 0: return 0;\n"
        "        default: break;\n"
        "    }\n"
        "    return total + c;\n"
        "}\n"
    )
    kinds = {n.kind for n in walk(parse_to_gast(source, JAVA))}
    assert {"loop", "if", "switch", "break", "assign", "op"} <= kinds
    assert kinds <= KINDS


def test_java_foreach_and_chained_calls():
    source = (
        "static int total(int n) {\n"
        "    int[] xs = IntStream.range(0, n).toArray();\n"
        "    int sum = 0;\n"
        "    for (int v : xs) {\n"
        "        sum += v;\n"
        "    }\n"
        "    return sum;\n"
        "}\n"
    )
    kinds = [n.kind for n in walk(parse_to_gast(source, JAVA))]
    assert kinds.count("loop") == 1
    assert kinds.count("call") == 2  # range(...) and .toArray()


def test_python_entry_rules():
    source = (
        "def top(a, b):\n    return a\n"
        "def _nest():\n"
        "    def inner(x):\n        return x\n"
        "    return inner\n"
        "class C:\n"
        "    def method(self, x):\n        return x\n"
        "def kw_only(*, flag):\n    return flag\n"
        "def kw_defaulted(*, flag=True):\n    return flag\n"
    )
    facts = {f.name: f for f in function_facts(source, PY)}
    assert facts["top"].entry_ok
    assert not facts["inner"].entry_ok  # nested, not addressable by name
    assert not facts["method"].entry_ok
    assert not facts["kw_only"].entry_ok  # required keyword-only argument
    assert facts["kw_defaulted"].entry_ok


def test_python_param_types_from_annotations():
    source = "def f(n: int, xs: list, m: dict, s: 'str', u):\n    return n\n"
    (facts,) = function_facts(source, PY)
    assert facts.params == (
        ("n", "int"),
        ("xs", "seq[unknown]"),
        ("m", "map[unknown,unknown]"),
        ("s", "string"),
        ("u", "unknown"),
    )


def test_python_generic_annotations():
    source = "def f(xs: 'List[int]', m: 'Dict[str, int]'):\n    return xs\n"
    (facts,) = function_facts(source, PY)
    assert facts.params == (("xs", "seq[int]"), ("m", "map[string,int]"))


def test_statement_count_skips_documentation():
    source = 'def f(x):\n    "doc"\n    pass\n    if x:\n        y = 1\n    return x\n'
    (facts,) = function_facts(source, PY)
    assert facts.stmt_count == 3  # if + nested assign + return


def test_line_spans_match_corpus_records(fig1_bundle):
    for rec in fig1_bundle.corpus:
        spans = [(f.name, f.start, f.end) for f in rec.functions]
        assert spans == list_functions(rec.source, rec.language)
        assert spans and spans[0][1] == 1


@pytest.mark.parametrize(
    "source,language",
    [
        ("def f(:\n", PY),
        ("def f()\n    return 1\n", PY),
        ("static int f( {\n", JAVA),
        ("static int f(int x) { return 1 + ; }", JAVA),
    ],
)
def test_syntax_errors_raise(source, language):
    with pytest.raises(ParseError):
        parse_to_gast(source, language)


def test_fixture_trees_round_trip(groups_bundle):
    seen = set()
    for snippet_id, tree in groups_bundle.asts.by_snippet.items():
        text = gast_to_json(tree)
        again = gast_from_json(text)
        assert again == tree
        assert gast_to_json(again) == text
        seen |= {n.kind for n in walk(tree)}
    assert seen <= KINDS
    assert {"file", "func", "block", "loop", "if", "assign", "op", "call", "var", "lit", "return"} <= seen


def test_gast_json_rejects_bad_input():
    with pytest.raises(ValueError, match="invalid kind"):
        gast_from_json('{"kind": "nope", "children": []}')
    with pytest.raises(ValueError, match="/children/0"):
        gast_from_json('{"kind": "file", "children": [{"kind": "var", "extra": 1}]}')
    with pytest.raises(ValueError, match="unparseable"):
        gast_from_json("{")


def test_node_helpers():
    tree = node("file", node("func", node("var"), node("block")))
    assert tree.size() == 4
    with pytest.raises(ValueError, match="unknown GAST kind"):
        GastNode("statement")
