"""Stack-sorting maps on permutations, their closed-form counts, and
exhaustive checks of those counts.

Permutations are plain lists of the values 1..n.  Maps are named by the
short codes ``west``, ``s12``, ``s21``, ``m12`` and ``m21``.
"""

import json as _json

from ._core import (
    GuardError,
    apply,
    brute_fixed_points,
    brute_image,
    brute_ord,
    brute_t_sortable,
    claims,
    contains_pattern,
    count,
    delete_one,
    format,
    image_machine12,
    image_s12_power,
    inc,
    ins,
    iterate,
    orbit,
    parse,
    peak_runs,
    peaks,
    rank,
    rev,
    sorts_in,
    standardize,
    trace,
    unrank,
    valley_runs,
    valleys,
    witness,
)
from ._core import verify_json as _verify_json

__all__ = [
    "GuardError",
    "apply",
    "brute_fixed_points",
    "brute_image",
    "brute_ord",
    "brute_t_sortable",
    "claims",
    "contains_pattern",
    "count",
    "delete_one",
    "format",
    "image_machine12",
    "image_s12_power",
    "inc",
    "ins",
    "iterate",
    "orbit",
    "parse",
    "peak_runs",
    "peaks",
    "rank",
    "rev",
    "sorts_in",
    "standardize",
    "trace",
    "unrank",
    "valley_runs",
    "valleys",
    "verify",
    "witness",
]


def verify(claim, n_min=1, n_max=9, jobs=1, force=False):
    """Run one claim (or ``"all"``) and return the JSON report as a dict."""
    return _json.loads(_verify_json(claim, n_min, n_max, jobs, force))
