"""Finite semirings, their matrix semirings, and the rational example semiring."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import run_harness_json as _run_harness_json


def run_harness(s, n=2, bi_ideal_layer_n3=True):
    """Harness report for one semiring as a dict."""
    return _json.loads(_run_harness_json(s, n, bi_ideal_layer_n3))
