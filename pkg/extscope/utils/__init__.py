"""Export resources."""

from .utils import get_error_info, get_level_name, get_logging_method, parse_level, sentinel
