import logging
import sys

FORMAT_STRING = '%(asctime)s [%(levelname)s] [%(pathname)s:%(funcName)s:%(lineno)d] - %(message)s'
DEFAULT_LEVEL = logging.WARNING


def custom_logger(name, level=None):
    """Configure log as we want it here.  Records go to stderr so stdout
    stays free for the machine-readable output of the cli"""
    root_logger = logging.getLogger(name)
    if not root_logger.handlers:
        root_logger.setLevel(DEFAULT_LEVEL)
        formatter = logging.Formatter(FORMAT_STRING)

        # console
        err_handler = logging.StreamHandler(sys.stderr)
        err_handler.setLevel(logging.DEBUG)
        err_handler.setFormatter(formatter)

        root_logger.addHandler(err_handler)
        root_logger.propagate = False

    if level is not None:
        root_logger.setLevel(level)

    return root_logger


def set_level(level):
    """Apply a level (name or number) to every dyck_tools logger created so far"""
    if isinstance(level, str):
        numeric = logging.getLevelName(level.upper())
        if not isinstance(numeric, int):
            raise ValueError('unknown log level: {0}'.format(level))
        level = numeric

    for name, obj in logging.Logger.manager.loggerDict.items():
        if name.startswith('dyck_tools') and isinstance(obj, logging.Logger):
            obj.setLevel(level)

    return level
