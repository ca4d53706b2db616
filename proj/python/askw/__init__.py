"""Exact canonical-ideal computations for a family of cyclic p-covers.

Documents (info, generators, certificates, oracle reports) are returned as
plain dicts with the same layout as the command-line JSON output.
"""

import json

from ._askw import AskwError, anchors, genus, index_set, minkowski_sum, sigma
from . import _askw

__all__ = [
    "AskwError",
    "anchors",
    "certify",
    "generators",
    "genus",
    "index_set",
    "info",
    "kernel_oracle",
    "minkowski_sum",
    "sigma",
]


def _spec(values):
    return None if values is None else [str(v) for v in values]


def info(p, q, ell):
    return json.loads(_askw._info(p, q, ell))


def generators(p, q, ell, fibre="relative", tie_break="default", all_pairs=False):
    return json.loads(_askw._generators(p, q, ell, fibre, tie_break, all_pairs))


def certify(p, q, ell, oracle=False, tie_break="default", seed=1, specialization=None, corrupt_one=False):
    return json.loads(
        _askw._certify(p, q, ell, oracle, tie_break, seed, _spec(specialization), corrupt_one)
    )


def kernel_oracle(p, q, ell, fibre="generic", specialization=None):
    return json.loads(_askw._oracle(p, q, ell, fibre, _spec(specialization)))
