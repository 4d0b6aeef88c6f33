"""
Filename: __init__.py
Created Date: 2026-10-18
Description: Data models package.

This package contains the immutable data models exchanged between the
services: matrices, triangles and their reports, weighted projective planes
and relations, jet systems and oracle verdicts, lattice configurations and
survey results.
"""

from .matrix import IntMatrix, ModMatrix, SnfResult
from .triangle import LatticeSample, NormalFan, Triangle, TriangleReport
from .wps import PlaneRecord, Relation, Weights, WpsReport
from .jets import DerivativeOp, DerivativeTerm, JetSystem, LemmaCheck, LemmaSuiteReport, Monomial, ProofFrame, Verdict
from .moduli import BuiltinReport, Configuration, ConfigReport, is_ray
from .survey import SurveyResult

__all__ = [
    'IntMatrix', 'ModMatrix', 'SnfResult',
    'LatticeSample', 'NormalFan', 'Triangle', 'TriangleReport',
    'PlaneRecord', 'Relation', 'Weights', 'WpsReport',
    'DerivativeOp', 'DerivativeTerm', 'JetSystem', 'LemmaCheck', 'LemmaSuiteReport',
    'Monomial', 'ProofFrame', 'Verdict',
    'BuiltinReport', 'Configuration', 'ConfigReport', 'is_ray',
    'SurveyResult',
]
