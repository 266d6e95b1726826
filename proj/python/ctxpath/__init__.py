import json

from . import _core
from ._core import (
    FixtureError,
    LookupBudgetExceeded,
    NotWebBounded,
    NTriplesError,
    ParseError,
    Wold,
    eval_context,
    eval_fullweb,
    eval_reference,
    eval_standard,
    load_fixture,
    normalize,
)


def analyze(query):
    """Safety report of a query as a dict."""
    return json.loads(_core._analyze_json(query))
