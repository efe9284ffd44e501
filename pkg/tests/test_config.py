from __future__ import annotations

import pytest

import config
from errors import ConfigError


@pytest.fixture
def clean_env(monkeypatch):
    monkeypatch.delenv('ISOPX_VERTEX_CAP', raising=False)
    monkeypatch.delenv('ISOPX_JOBS', raising=False)
    return monkeypatch


def test_defaults_apply_when_unset(clean_env):
    assert config.get_vertex_cap() == config.DEFAULT_VERTEX_CAP
    assert config.get_jobs() == config.DEFAULT_JOBS
    assert config.validate_config() == []


def test_settings_are_read_on_every_call(clean_env):
    clean_env.setenv('ISOPX_VERTEX_CAP', '500')
    assert config.get_vertex_cap() == 500
    clean_env.setenv('ISOPX_JOBS', '3')
    assert config.get_jobs() == 3


def test_bad_integers_are_reported_not_raised_on_import(clean_env):
    clean_env.setenv('ISOPX_VERTEX_CAP', 'abc')
    with pytest.raises(ConfigError) as info:
        config.get_vertex_cap()
    assert info.value.details == {'setting': 'ISOPX_VERTEX_CAP', 'value': 'abc'}
    assert config.validate_config() == ["ISOPX_VERTEX_CAP 'abc' is not an integer"]


def test_out_of_range_values_are_reported(clean_env):
    clean_env.setenv('ISOPX_VERTEX_CAP', '0')
    clean_env.setenv('ISOPX_JOBS', '0')
    assert config.validate_config() == [
        "ISOPX_VERTEX_CAP must be a positive integer",
        "ISOPX_JOBS must be at least 1",
    ]
