from __future__ import annotations

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from relsig.core.config import Settings, get_settings


def test_settings_defaults():
    with patch.dict(os.environ, {}, clear=True):
        s = Settings(_env_file=None)
    assert s.default_route == "table"
    assert s.oracle_max_components == 12
    assert s.permutation_max_components == 8
    assert s.enumeration_max_components == 5
    assert s.verify_max_components == 8
    assert s.log_level == "WARNING"


def test_settings_read_prefixed_environment():
    with patch.dict(os.environ, {"RELSIG_DEFAULT_ROUTE": "closed", "RELSIG_VERIFY_MAX_COMPONENTS": "3"}):
        s = Settings(_env_file=None)
    assert s.default_route == "closed"
    assert s.verify_max_components == 3


def test_settings_reject_unknown_route():
    with patch.dict(os.environ, {"RELSIG_DEFAULT_ROUTE": "fastest"}):
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


def test_get_settings_is_cached():
    assert get_settings() is get_settings()
