"""Tests for src/utils/splash.py"""

from src import __version__
from src.utils.splash import get_version_banner, show_version


class TestVersionBanner:
    """Tests for the version banner"""

    def test_contains_version(self):
        assert f"coxcheck Version: {__version__}" in get_version_banner()

    def test_show_version_prints(self, capsys):
        show_version()
        assert __version__ in capsys.readouterr().out
