"""
Test cases for configuration classes and their environment overrides.
"""
import logging

import pytest

from fmachina import create_app
from fmachina.config import Config, TestingConfig, activate
from fmachina.models.base import BaseObject
from fmachina.services.base_service import BaseCategoryService
from fmachina.utils.errors import EnumerationTooLarge

from tests.conftest import fixture_path


@pytest.fixture
def environment(app, monkeypatch):
    """Environment overrides that are dropped, with the testing config restored, afterwards."""
    yield monkeypatch
    monkeypatch.undo()
    create_app('testing')


def test_size_guard_override(environment):
    environment.setenv('FMACHINA_SIZE_GUARD', '4')
    activate('testing')
    with pytest.raises(EnumerationTooLarge) as error:
        BaseCategoryService.enumerate_hom(BaseObject(('a', 'b', 'c')), BaseObject(('x', 'y')))
    assert error.value.bound == 4


@pytest.mark.parametrize('value', ['1e6', 'many', '0', '-3', ''])
def test_malformed_size_guard_keeps_the_default(environment, caplog, value):
    environment.setenv('FMACHINA_SIZE_GUARD', value)
    with caplog.at_level(logging.WARNING, logger='fmachina.config'):
        settings = TestingConfig()
    assert settings.ENUMERATION_BOUND == Config.ENUMERATION_BOUND
    assert 'FMACHINA_SIZE_GUARD' in caplog.text


@pytest.mark.parametrize('value, level', [
    ('debug', logging.DEBUG),
    ('Info', logging.INFO),
    ('10', 10),
    (' WARNING ', logging.WARNING),
    ('loud', TestingConfig.LOG_LEVEL)
])
def test_log_level_override(environment, value, level):
    environment.setenv('FMACHINA_LOG_LEVEL', value)
    assert TestingConfig().LOG_LEVEL == level


def test_overrides_reach_the_command_line(environment, runner):
    environment.setenv('FMACHINA_SIZE_GUARD', '3')
    environment.setenv('FMACHINA_LOG_LEVEL', 'debug')
    cli = create_app('testing')
    parity = fixture_path('parity.json')
    result = runner.invoke(cli, ['check-universal', 'product', parity, parity])
    assert result.exit_code == 3


def test_malformed_overrides_do_not_break_the_command_line(environment, runner):
    environment.setenv('FMACHINA_SIZE_GUARD', '1e6')
    environment.setenv('FMACHINA_LOG_LEVEL', '10')
    cli = create_app('testing')
    result = runner.invoke(cli, ['validate', fixture_path('parity.json')])
    assert result.exit_code == 0
