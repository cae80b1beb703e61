"""Defaults for the cli: built in, then a key=value file, then the environment."""
import os
from collections import namedtuple

from dyck_tools.logger import custom_logger
from . import cli_constants as cc

logger = custom_logger(__name__)

Settings = namedtuple('Settings', 'r order log_level')

DEFAULTS = Settings(cc.DEFAULT_R, cc.DEFAULT_ORDER, cc.DEFAULT_LOG_LEVEL)


def _to_int(key, text):
    try:
        return int(text)
    except ValueError:
        raise ValueError(cc.BAD_INT.format(key, text))


def _to_level(text):
    level = text.upper()
    if level not in cc.LOG_LEVELS:
        raise ValueError(cc.BAD_LEVEL.format(', '.join(cc.LOG_LEVELS), text))
    return level


def read_config_file(path):
    """key=value lines with '#' comments; unknown keys are skipped with a warning"""
    if not os.path.isfile(path):
        raise ValueError(cc.NO_CONFIG.format(path))

    values = {}
    with open(path) as f:
        for number, raw in enumerate(f, 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ValueError(cc.BAD_LINE.format(path, number, raw.rstrip('\n')))
            key, text = (part.strip() for part in line.split('=', 1))
            if key not in cc.CONFIG_KEYS:
                logger.warning(cc.UNKNOWN_KEY.format(path, number, key))
                continue
            values[key] = _to_level(text) if key == 'log_level' else _to_int(key, text)
    return values


def load_settings(config_path=None, environ=None):
    """Settings with precedence built-in < config file < environment

    The file comes from config_path or DYCK_TOOLS_CONFIG; DYCK_TOOLS_ORDER
    overrides the truncation order.  Flags are applied by the caller.
    """
    environ = os.environ if environ is None else environ
    settings = DEFAULTS

    config_path = config_path or environ.get(cc.CONFIG_ENV)
    if config_path:
        settings = settings._replace(**read_config_file(config_path))

    if environ.get(cc.ORDER_ENV):
        settings = settings._replace(order=_to_int(cc.ORDER_ENV, environ[cc.ORDER_ENV]))

    logger.debug('settings %s', dict(settings._asdict()))
    return settings
