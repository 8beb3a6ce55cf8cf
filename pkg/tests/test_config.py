"""Tests for configuration settings."""

import pytest
from pydantic import ValidationError

from app.core.config import Settings, get_settings


class TestSettings:
    """Test configuration settings."""

    def test_default_values(self):
        settings = Settings()
        assert settings.app_name == "bohrnet"
        assert settings.log_level == "INFO"
        assert settings.include_trivial_context is True
        assert settings.threads == 1

    def test_cap_defaults(self):
        settings = Settings()
        assert settings.cover_cap == 512
        assert settings.section_cap == 1_000_000
        assert settings.context_cap == 4096
        assert settings.ambient_dim_cap == 64

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("BOHRNET_COVER_CAP", "7")
        monkeypatch.setenv("BOHRNET_LOG_LEVEL", "debug")
        settings = Settings()
        assert settings.cover_cap == 7
        assert settings.log_level == "DEBUG"

    def test_non_positive_cap_rejected(self):
        with pytest.raises(ValidationError):
            Settings(section_cap=0)
        with pytest.raises(ValidationError):
            Settings(ambient_dim_cap=-1)

    def test_zero_threads_rejected(self):
        with pytest.raises(ValidationError):
            Settings(threads=0)

    def test_cached_settings(self):
        s1 = get_settings()
        s2 = get_settings()
        assert s1 is s2
