from .logger import custom_logger, set_level
