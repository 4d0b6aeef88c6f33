"""
Filename: survey.py
Created Date: 2026-10-18
Description: Survey service module.

This module enumerates every unordered coprime triple up to a bound, keeps
those with a passing orientation, audits relation uniqueness and compares
the resulting count with published counts.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Dict, List, Optional

from src.config.settings import config
from src.models.survey import SurveyResult
from src.models.wps import PlaneRecord
from src.services.wps import passing_orientations, qualifies, relation_keys
from src.utils.error_handler import CalibrationError, ValidationError
from src.utils.helpers import format_duration, timed
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.survey")


def _scan_largest_weights(first: int, last: int) -> List[PlaneRecord]:
    """Qualifying sorted triples a <= b <= c with first <= c <= last."""
    records = []
    for c in range(first, last + 1):
        for b in range(1, c + 1):
            for a in range(1, b + 1):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                found = qualifies(a, b, c)
                if found is not None:
                    orientation, relation, report = found
                    records.append(PlaneRecord((a, b, c), orientation, relation, report))
    return records


def _chunks(bound: int, size: int):
    for first in range(1, bound + 1, size):
        yield first, min(first + size - 1, bound)


def enumerate_qualifying(bound: int, jobs: Optional[int] = None) -> SurveyResult:
    """All qualifying planes with weights at most bound."""
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise ValidationError(f"bound must be a positive integer, got {bound!r}")
    settings = config.get("survey", {})
    jobs = jobs or settings.get("jobs", 1)
    if jobs < 1:
        raise ValidationError(f"jobs must be positive, got {jobs}")
    chunk_size = settings.get("chunkSize", 10)

    ranges = list(_chunks(bound, chunk_size))
    logger.info(f"Surveying weights up to {bound} in {len(ranges)} ranges with {jobs} worker(s)")
    with timed() as watch:
        if jobs > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_scan_largest_weights, *zip(*ranges)))
        else:
            parts = [_scan_largest_weights(first, last) for first, last in ranges]
        records = sorted((r for part in parts for r in part), key=lambda r: r.weights)

    result = SurveyResult(bound=bound, records=tuple(records), elapsed=watch.elapsed)
    logger.success(f"✅ {len(result)} qualifying planes up to {bound} ({format_duration(watch.elapsed)})")
    return result


def uniqueness_audit(result: SurveyResult) -> bool:
    """True iff every recorded plane has exactly one width-below-one relation."""
    ok = True
    for record in result.records:
        keys = relation_keys(*record.weights)
        if len(keys) != 1:
            logger.warning(f"P{record.weights} has {len(keys)} relations with w < 1: {sorted(keys)}")
            ok = False
    return ok


def alternative_counts(result: SurveyResult) -> Dict[str, int]:
    """Counts of the same survey under other dedup conventions."""
    orientations = 0
    ordered = 0
    for record in result.records:
        orientations += len(passing_orientations(*record.weights))
        ordered += len(set(permutations(record.weights)))
    return {"orientations": orientations, "ordered": ordered}


def calibrate(result: SurveyResult, known_counts: Optional[Dict[int, int]] = None) -> bool:
    """Compare against a published count; False when none is known for the bound."""
    if known_counts is None:
        known_counts = config.get("survey", {}).get("knownCounts", {}) or {}
    known = {int(k): int(v) for k, v in known_counts.items()}
    if result.bound not in known:
        logger.debug(f"No published count for bound {result.bound}")
        return False
    expected = known[result.bound]
    if len(result) == expected:
        logger.success(f"✅ Count {expected} at bound {result.bound} matches the published value")
        return True

    alternatives = alternative_counts(result)
    raise CalibrationError(
        f"found {len(result)} planes at bound {result.bound}, expected {expected}",
        bound=result.bound,
        expected=expected,
        found=len(result),
        alternatives=alternatives,
    )
