"""
Filename: __init__.py
Created Date: 2026-10-18
Description: Services package initialization.
"""

from .triangle import check_triangle_criterion, lattice_points, normal_fan_rays
from .wps import check_wps_criterion, find_relations, qualifies, wps_to_triangle
from .jet_oracle import JetOracle, vanishing_oracle
from .moduli import check_configuration, verify_builtin
from .survey import enumerate_qualifying

__all__ = [
    'check_triangle_criterion',
    'lattice_points',
    'normal_fan_rays',
    'check_wps_criterion',
    'find_relations',
    'qualifies',
    'wps_to_triangle',
    'JetOracle',
    'vanishing_oracle',
    'check_configuration',
    'verify_builtin',
    'enumerate_qualifying',
]
