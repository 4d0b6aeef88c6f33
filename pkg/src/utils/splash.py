"""
Filename: splash.py
Created Date: 2026-10-18
Description: Version banner module.
"""

import platform

from colorama import Fore, Style

from src import __version__


def get_version_banner() -> str:
    """Get the version banner text

    Returns:
        str: Formatted banner
    """
    return "\n".join([
        f"{Fore.CYAN}coxcheck Version: {__version__}",
        f"{Fore.CYAN}{'═' * 50}",
        f"{Fore.GREEN}🧮 Exact checks for non-finitely generated Cox rings",
        f"{Fore.CYAN}Python: {platform.python_version()}",
        f"{Fore.CYAN}{'═' * 50}{Style.RESET_ALL}",
    ])


def show_version():
    """Show version information"""
    print(get_version_banner())
