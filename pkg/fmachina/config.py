"""
Toolkit configuration classes for different environments.
"""
import logging
import os

log = logging.getLogger(__name__)


def env_int(name, default):
    """
    Read a positive integer override; malformed values keep the default.

    Args:
        name (str): Environment variable
        default (int): Value used when the variable is unset or malformed

    Returns:
        int: The bound to use
    """
    value = os.getenv(name)
    if value is None:
        return default
    try:
        number = int(value.strip())
    except ValueError:
        number = 0
    if number < 1:
        log.warning('Ignoring %s=%r: expected a positive integer, using %d', name, value, default)
        return default
    return number


def env_log_level(name, default):
    """
    Read a log level given by name (any case) or by number.

    Args:
        name (str): Environment variable
        default (int): Level used when the variable is unset or unknown

    Returns:
        int: A logging level
    """
    value = os.getenv(name)
    if value is None:
        return default
    value = value.strip()
    if value.isdigit():
        return int(value)
    level = logging.getLevelName(value.upper())
    if not isinstance(level, int):
        log.warning('Ignoring %s=%r: unknown log level', name, value)
        return default
    return level


class Config:
    """Base configuration with the bounds every size guard reads."""

    # Get the base directory (project root)
    BASE_DIR = os.path.abspath(os.path.dirname(os.path.dirname(__file__)))
    FIXTURES_DIR = os.path.join(BASE_DIR, 'fixtures')

    # Size guards
    ENUMERATION_BOUND = 10 ** 6
    OBJECT_SIZE_BOUND = 10 ** 5

    # Universal-property oracle
    ORACLE_BOUND = 4
    ORACLE_COMPETITOR_SIZE = 2

    # Reports
    JSON_INDENT = 2

    # Functor images kept per adjunction value
    MEMO_SIZE = 256

    LOG_LEVEL = logging.INFO
    TESTING = False

    def __init__(self):
        self.ENUMERATION_BOUND = env_int('FMACHINA_SIZE_GUARD', self.ENUMERATION_BOUND)
        self.OBJECT_SIZE_BOUND = env_int('FMACHINA_OBJECT_GUARD', self.OBJECT_SIZE_BOUND)
        self.LOG_LEVEL = env_log_level('FMACHINA_LOG_LEVEL', self.LOG_LEVEL)


class DevelopmentConfig(Config):
    """Development environment configuration."""

    LOG_LEVEL = logging.DEBUG


class ProductionConfig(Config):
    """Production environment configuration."""

    LOG_LEVEL = logging.WARNING


class TestingConfig(Config):
    """Testing environment configuration."""

    LOG_LEVEL = logging.WARNING
    TESTING = True


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}

_active = None


def activate(config_name='default'):
    """
    Make a configuration the one services read their defaults from.

    Args:
        config_name (str): Configuration name (development, production, testing)

    Returns:
        Config: The activated configuration instance
    """
    global _active
    _active = config[config_name]()
    return _active


def current_config():
    """Return the active configuration, activating the default one on first use."""
    if _active is None:
        return activate('default')
    return _active
