import os
import pathlib

import pytest

import ctxpath

FIXTURES = pathlib.Path(
    os.environ.get("CTXPATH_FIXTURE_DIR", pathlib.Path(__file__).parents[2] / "fixtures")
)
DESK = str(FIXTURES / "desk" / "manifest.json")
EX = "http://example.org/"
WHO_KNOWS_TIM = f"?v <{EX}knows> <{EX}Tim>"
BOBS_FRIEND = f"{{ <{EX}Bob> <{EX}knows> ?v AND {WHO_KNOWS_TIM} }}"


@pytest.fixture(scope="module")
def desk():
    return ctxpath.load_fixture(DESK)


def test_analyze():
    report = ctxpath.analyze(BOBS_FRIEND)
    assert report["web_safe"] is True
    report = ctxpath.analyze(WHO_KNOWS_TIM)
    assert report["web_safe"] is False
    assert report["missing"] == ["?v"]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        ctxpath.normalize("<a> <p>+ ?x")
    assert ctxpath.normalize(f"?x <{EX}p>/<{EX}q> ?y") == f"?x (<{EX}p>/<{EX}q>) ?y"


def test_fixture(desk):
    assert desk.document_count == 3
    assert len(desk.terms()) == 9
    assert desk.context(f"{EX}Carol") == ""
    assert desk.context(f"{EX}Tim").count("\n") == 2


def test_eval_context(desk):
    out = ctxpath.eval_context(BOBS_FRIEND, desk)
    assert out["rows"] == [({"v": f"<{EX}Alice>"}, 1)]
    assert out["distinct_lookups"] == 2


def test_eval_context_refusal_and_bindings(desk):
    with pytest.raises(ctxpath.NotWebBounded):
        ctxpath.eval_context(WHO_KNOWS_TIM, desk)
    out = ctxpath.eval_context(WHO_KNOWS_TIM, desk, bindings={"v": f"<{EX}Alice>"})
    assert out["rows"] == [({"v": f"<{EX}Alice>"}, 1)]
    with pytest.raises(ctxpath.LookupBudgetExceeded):
        ctxpath.eval_context(BOBS_FRIEND, desk, max_lookups=1)


def test_semantics_differ(desk):
    full = ctxpath.eval_fullweb(WHO_KNOWS_TIM, desk)
    assert sorted(r[0]["v"] for r in full) == [f"<{EX}Alice>", f"<{EX}Carol>"]
    assert ctxpath.eval_reference(WHO_KNOWS_TIM, desk) == [({"v": f"<{EX}Alice>"}, 1)]


def test_missing_fixture():
    with pytest.raises(OSError):
        ctxpath.load_fixture("/nonexistent/manifest.json")
