"""
Filename: __init__.py
Created Date: 2026-10-18
Description: coxcheck application package.

Exact checks of sufficient criteria for non-finite generation of Cox rings of
blown-up toric surfaces and weighted projective planes, together with the
linear-algebra oracle behind them and the lattice configuration checker.
"""

__version__ = "1.0.0"
