"""
Filename: survey.py
Created Date: 2026-10-18
Description: Survey result data model.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .wps import PlaneRecord

DEDUP_UNORDERED = "unordered"


@dataclass(frozen=True)
class SurveyResult:
    """Qualifying planes up to a weight bound, one record per unordered triple"""
    bound: int
    records: Tuple[PlaneRecord, ...]
    dedup_mode: str = DEDUP_UNORDERED
    elapsed: float = 0.0
    alternative_counts: Dict[str, int] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def triples(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(r.weights for r in self.records)

    def to_dict(self, include_timing: bool = True) -> Dict:
        data = {
            "bound": self.bound,
            "dedup_mode": self.dedup_mode,
            "count": len(self.records),
            "records": [r.to_dict() for r in self.records],
        }
        if self.alternative_counts:
            data["alternative_counts"] = dict(sorted(self.alternative_counts.items()))
        if include_timing:
            data["elapsed"] = round(self.elapsed, 3)
        return data
