"""
Suite Summary Module

Aggregates per-instance suite records into the counts and counterexample
list reported by the CLI.
"""

from typing import Any, Dict, List

import numpy as np
import pandas as pd

from validation.property_suites import fingerprint


def _native(value: Any) -> Any:
    """Plain Python scalar for JSON; missing values become None."""
    if value is None or (np.isscalar(value) and pd.isna(value)):
        return None
    return value.item() if isinstance(value, np.generic) else value


def counterexamples(records: pd.DataFrame) -> List[Dict]:
    """Failed, non-skipped records sorted by instance encoding."""
    if records.empty:
        return []
    failed = records[~records["passed"].astype(bool) & ~records["skipped"].astype(bool)]
    failed = failed.sort_values("instance", kind="mergesort")
    return [
        {
            "fingerprint": fingerprint(row.suite, row.instance),
            "instance": row.instance,
            "expected": _native(row.expected),
            "observed": _native(row.observed),
            "detail": row.detail,
        }
        for row in failed.itertuples(index=False)
    ]


def summarize_suite(records: pd.DataFrame) -> Dict:
    """
    Summarize suite records.

    Args:
        records (pd.DataFrame): Output of PropertySuiteRunner.run

    Returns:
        Dict: Instance counts, failures, per-size breakdown and sorted counterexamples
    """
    if records.empty:
        return {
            "instances": 0,
            "checked": 0,
            "skipped": 0,
            "failures": 0,
            "by_n": {},
            "counterexamples": [],
        }

    skipped = records["skipped"].astype(bool)
    checked = records[~skipped]
    failures = int((~checked["passed"].astype(bool)).sum())

    by_n = (
        checked.assign(failed=~checked["passed"].astype(bool))
        .groupby("n")
        .agg(instances=("passed", "size"), failures=("failed", "sum"))
    )
    return {
        "instances": int(len(records)),
        "checked": int(len(checked)),
        "skipped": int(skipped.sum()),
        "failures": failures,
        "by_n": {
            str(int(n)): {"instances": int(row.instances), "failures": int(row.failures)}
            for n, row in by_n.iterrows()
        },
        "counterexamples": counterexamples(records),
    }
