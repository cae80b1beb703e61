from .cli import main, build_parser, parse_range, parse_r_set
from .config import Settings, load_settings, read_config_file
