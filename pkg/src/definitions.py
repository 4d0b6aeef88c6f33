"""
Filename: definitions.py
Created Date: 2026-10-18
Description: Project path definitions module.

This module defines the paths used throughout the application, including
paths for configuration files, logs and generated survey reports.
"""

import os

# Set Projects Root Directory
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.normpath(__file__)))

# Set Projects Configuration path
CONFIG_PATH = os.path.join(ROOT_DIR, "config.yaml")
CONFIG_EXAMPLE_PATH = os.path.join(ROOT_DIR, "config_example.yaml")
LOG_PATH = os.path.join(ROOT_DIR, "logs", "coxcheck.log")
ERROR_LOG_PATH = os.path.join(ROOT_DIR, "logs", "error.log")

# Generated survey reports
REPORTS_PATH = os.path.join(ROOT_DIR, "reports")

# Configuration files shipped with the project (moduli witnesses)
DATA_PATH = os.path.join(ROOT_DIR, "data")


def report_path(filename: str, directory: str = None) -> str:
    """Resolve a report filename against the reports directory.

    Absolute filenames are returned unchanged.
    """
    if os.path.isabs(filename):
        return filename
    base = os.path.join(ROOT_DIR, directory) if directory else REPORTS_PATH
    return os.path.join(base, filename)
