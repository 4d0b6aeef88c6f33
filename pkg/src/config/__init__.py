"""
Filename: __init__.py
Created Date: 2026-10-18
Description: Configuration package.

This package handles loading, validating, and providing access to
application configuration settings from YAML files.
"""
