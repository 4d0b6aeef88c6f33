"""Tests for src/models/moduli.py"""

import pytest

from src.models.moduli import BuiltinReport, ConfigReport, Configuration, is_ray
from src.models.wps import Weights
from src.services.moduli import builtin_example_13
from src.utils.error_handler import ValidationError


def _report(**overrides):
    data = dict(
        basis_are_rays=True, rank_ok=True, saturated=True, quotient_generated=True,
        relation_holds=True, invariant_factors=(1, 1),
    )
    data.update(overrides)
    return ConfigReport(**data)


class TestIsRay:
    """Tests for is_ray"""

    @pytest.mark.parametrize("vector,expected", [
        ((1, 0, 1), True),
        ((0, -1, -1), True),
        ((0, 0, 0), False),
        ((1, -1, 0), False),
        ((2, 0, 0), False),
    ])
    def test_is_ray(self, vector, expected):
        assert is_ray(vector) is expected


class TestConfiguration:
    """Tests for the Configuration model"""

    def test_dimension(self):
        assert builtin_example_13().dimension == 10

    def test_round_trip_dict(self):
        cfg = builtin_example_13()
        assert Configuration.from_dict(cfg.to_dict()) == cfg

    def test_small_n_raises(self):
        with pytest.raises(ValidationError):
            Configuration(n=6, basis=((1, 0, 0),), u=(1, 0, 0), v=(0, 1, 0), w=(0, 0, 1),
                          weights=Weights(1, 1, 1))

    def test_wrong_basis_size_raises(self):
        data = builtin_example_13().to_dict()
        data["basis"] = data["basis"][:7]
        with pytest.raises(ValidationError):
            Configuration.from_dict(data)

    def test_wrong_vector_length_raises(self):
        data = builtin_example_13().to_dict()
        data["u"] = [1, 0, 0]
        with pytest.raises(ValidationError):
            Configuration.from_dict(data)

    def test_non_ray_u_raises(self):
        data = builtin_example_13().to_dict()
        data["u"] = [2] + [0] * 9
        with pytest.raises(ValidationError):
            Configuration.from_dict(data)

    def test_missing_key_raises(self):
        data = builtin_example_13().to_dict()
        del data["weights"]
        with pytest.raises(ValidationError):
            Configuration.from_dict(data)

    def test_basis_must_be_list(self):
        data = builtin_example_13().to_dict()
        data["basis"] = "a1..a8"
        with pytest.raises(ValidationError):
            Configuration.from_dict(data)


class TestConfigReport:
    """Tests for the ConfigReport model"""

    def test_passes(self):
        assert _report().passes

    def test_any_failure_fails(self):
        assert not _report(saturated=False).passes

    def test_to_dict(self):
        data = _report(coefficients=(1, -2)).to_dict()
        assert data["coefficients"] == [1, -2]
        assert data["passes"] is True


class TestBuiltinReport:
    """Tests for the BuiltinReport model"""

    def test_passes_needs_unit_determinant(self):
        kwargs = dict(report=_report(), w_identity=True, relation_identity=True,
                      coefficients_match=True, ray_count=6, expected_ray_count=6)
        assert BuiltinReport(determinant=1, **kwargs).passes
        assert not BuiltinReport(determinant=2, **kwargs).passes
