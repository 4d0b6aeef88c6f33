"""
Filename: moduli.py
Created Date: 2026-10-18
Description: Lattice configuration service module.

This module enumerates the rays of the Losev-Manin fan, checks the
sublattice hypotheses (rays, rank, saturation, quotient generation and the
weighted relation modulo the sublattice) for a configuration and verifies
the built-in n = 13 witness together with its displayed identities.
"""

import json
from itertools import product
from typing import Dict, List, Optional

from src.algebra.linalg import (
    integer_determinant,
    integer_solve,
    invariant_factors,
    rank_over_q,
    rational_solve,
)
from src.config.settings import config
from src.models.matrix import IntMatrix
from src.models.moduli import BuiltinReport, Configuration, ConfigReport, Vector, is_ray
from src.models.wps import Weights
from src.utils.error_handler import CoxCheckError, ValidationError
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.moduli")

N13_COEFFICIENTS = (11, 8, 4, 1, 1, 1, -1, -3)


def sigma_rays(n: int) -> List[Vector]:
    """Nonzero 0/1 vectors of Z^(n-3) followed by their negatives."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 5:
        raise ValidationError(f"n must be an integer >= 5, got {n!r}")
    positive = [v for v in product((0, 1), repeat=n - 3) if any(v)]
    return positive + [tuple(-x for x in v) for v in positive]


def _unit(dim: int, *indices: int) -> Vector:
    """Sum of standard basis vectors e_i, 1-based."""
    return tuple(int(k + 1 in indices) for k in range(dim))


def _combine(terms, dim: int) -> Vector:
    total = [0] * dim
    for coeff, vector in terms:
        for k, x in enumerate(vector):
            total[k] += coeff * x
    return tuple(total)


def _spanned_by_rays(cfg: Configuration, basis_rows: List[List[int]]) -> bool:
    """True iff the rays inside span_Q(basis) span it."""
    inside = [r for r in sigma_rays(cfg.n) if rational_solve(basis_rows, list(r)) is not None]
    if not inside:
        return False
    return rank_over_q(IntMatrix.from_columns(inside)) == len(cfg.basis)


def check_configuration(cfg: Configuration, require_basis_rays: Optional[bool] = None) -> ConfigReport:
    """Check the sublattice hypotheses for cfg."""
    if require_basis_rays is None:
        require_basis_rays = config.get("moduli", {}).get("requireBasisRays", True)

    B = IntMatrix.from_columns(cfg.basis)
    basis_rows = B.to_rows()
    factors = invariant_factors(B)

    if require_basis_rays:
        basis_are_rays = all(is_ray(b) for b in cfg.basis)
    else:
        basis_are_rays = _spanned_by_rays(cfg, basis_rows)
    rank_ok = rank_over_q(B) == cfg.n - 5
    saturated = all(d == 1 for d in factors)

    extended = B.hstack(IntMatrix.from_columns([cfg.u, cfg.v, cfg.w]))
    extended_factors = invariant_factors(extended)
    quotient_generated = len(extended_factors) == cfg.dimension and all(d == 1 for d in extended_factors)

    a, b, c = cfg.weights.as_tuple()
    target = _combine(((a, cfg.u), (b, cfg.v), (c, cfg.w)), cfg.dimension)
    integral = integer_solve(B, list(target))
    rational = rational_solve(basis_rows, list(target))
    if saturated and (integral is None) != (rational is None):
        raise CoxCheckError(
            "integral and rational membership disagree for a saturated basis",
            "Internal inconsistency while checking the relation",
        )

    report = ConfigReport(
        basis_are_rays=basis_are_rays,
        rank_ok=rank_ok,
        saturated=saturated,
        quotient_generated=quotient_generated,
        relation_holds=integral is not None,
        invariant_factors=factors,
        coefficients=None if integral is None else tuple(integral),
    )
    if report.passes:
        logger.success(f"✅ Configuration for n = {cfg.n} satisfies every hypothesis")
    else:
        failed = [k for k, v in report.to_dict().items() if v is False]
        logger.info(f"Configuration for n = {cfg.n} fails: {', '.join(failed)}")
    return report


def builtin_basis_13() -> List[Vector]:
    """a_1, ..., a_10 of the n = 13 witness."""
    dim = 10
    return [
        _unit(dim, 1, 5),
        _unit(dim, 1, 2, 6),
        _unit(dim, 1, 2, 3, 7),
        _unit(dim, 1, 2, 3, 4, 8),
        _unit(dim, 1, 2, 3, 4, 9),
        _unit(dim, 1, 2, 3, 4, 10),
        _unit(dim, 5, 6, 7, 8, 9, 10),
        _unit(dim, 4, 5, 7),
        _unit(dim, 1),
        _unit(dim, 4),
    ]


def builtin_example_13() -> Configuration:
    """The n = 13 witness: basis a_1..a_8, u = e_1, v = e_2, w = e_3 + e_5 + e_6."""
    a = builtin_basis_13()
    return Configuration(
        n=13,
        basis=tuple(a[:8]),
        u=_unit(10, 1),
        v=_unit(10, 2),
        w=_unit(10, 3, 5, 6),
        weights=Weights(26, 15, 7),
    )


def verify_builtin() -> BuiltinReport:
    """check_configuration on the witness plus its displayed identities."""
    cfg = builtin_example_13()
    a = builtin_basis_13()
    dim = cfg.dimension
    report = check_configuration(cfg, require_basis_rays=True)

    determinant = integer_determinant(IntMatrix.from_columns(a))
    w_expr = _combine(
        ((-4, cfg.u), (-2, cfg.v), (2, a[0]), (1, a[1]), (1, a[2]), (-1, a[7]), (1, a[9])),
        dim,
    )
    lhs = _combine(((26, cfg.u), (15, cfg.v), (7, cfg.w)), dim)
    rhs = _combine(zip(N13_COEFFICIENTS, a[:8]), dim)
    ray_count = len(sigma_rays(cfg.n))

    notes = []
    if report.coefficients is not None:
        notes.append(f"recovered coefficients {list(report.coefficients)}")
    result = BuiltinReport(
        report=report,
        determinant=determinant,
        w_identity=w_expr == cfg.w,
        relation_identity=lhs == rhs,
        coefficients_match=report.coefficients == N13_COEFFICIENTS,
        ray_count=ray_count,
        expected_ray_count=2 * (2 ** (cfg.n - 3) - 1),
        notes=tuple(notes),
    )
    if result.passes:
        logger.success("✅ n = 13 witness verified")
    else:
        logger.error(f"n = 13 witness failed: {result.to_dict()}")
    return result


def load_configuration(path: str) -> Configuration:
    """Read a JSON configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data: Dict = json.load(f)
    except FileNotFoundError as e:
        raise ValidationError(f"configuration file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON in {path}: {e}") from e
    if not isinstance(data, dict):
        raise ValidationError(f"{path} must hold a JSON object")
    return Configuration.from_dict(data)
