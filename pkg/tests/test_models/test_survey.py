"""Tests for src/models/survey.py"""

from src.models.survey import DEDUP_UNORDERED, SurveyResult
from src.models.wps import PlaneRecord
from src.services.wps import qualifies


def _result(**overrides):
    orientation, relation, report = qualifies(7, 15, 26)
    record = PlaneRecord((7, 15, 26), orientation, relation, report)
    data = dict(bound=26, records=(record,), elapsed=0.4567)
    data.update(overrides)
    return SurveyResult(**data)


class TestSurveyResult:
    """Tests for the SurveyResult model"""

    def test_len_and_triples(self):
        result = _result()
        assert len(result) == 1
        assert result.triples == ((7, 15, 26),)
        assert result.dedup_mode == DEDUP_UNORDERED

    def test_to_dict(self):
        data = _result().to_dict()
        assert data["count"] == 1
        assert data["elapsed"] == 0.457
        assert data["records"][0] == {
            "weights": [7, 15, 26],
            "orientation": [15, 7, 26],
            "relation": [3, 1, 2],
            "w": "104/105",
            "n": 1,
        }
        assert "alternative_counts" not in data

    def test_to_dict_without_timing(self):
        assert "elapsed" not in _result().to_dict(include_timing=False)

    def test_alternative_counts_sorted(self):
        data = _result(alternative_counts={"ordered": 6, "orientations": 2}).to_dict()
        assert list(data["alternative_counts"]) == ["ordered", "orientations"]
