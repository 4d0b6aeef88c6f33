"""
Filename: __init__.py
Created Date: 2026-10-18
Description: Exact arithmetic and linear algebra package.
"""
