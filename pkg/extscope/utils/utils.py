"""Utils that can be used across all files."""

import logging
import math
import sys
import traceback
from logging import CRITICAL, DEBUG, ERROR, INFO, WARNING
from typing import Any, AnyStr, Callable, Dict, Union

from extscope.errors import InvalidLogLevel

LEVELS = {
    DEBUG: 'DEBUG',
    INFO: 'INFO',
    WARNING: 'WARNING',
    ERROR: 'ERROR',
    CRITICAL: 'CRITICAL',
}


def get_level_name(level: int) -> str:
    """Return level name from logging package levels

    :param level: Logging level

    :raise InvalidLogLevel: For an invalid level value

    :return str: Level name
    """

    level_name = LEVELS.get(level, None)

    if level_name is None:
        raise InvalidLogLevel(f"Invalid logging level detected: [{level}]")

    return level_name


def parse_level(value: Union[int, str]) -> int:
    """Turn a level name (``"debug"``, ``"WARNING"``) or number into a logging level.

    :param value: Level name or number

    :raise InvalidLogLevel: For an unknown level

    :return int: Logging level
    """

    if isinstance(value, int):
        get_level_name(value)
        return value

    names = {name: level for level, name in LEVELS.items()}
    level = names.get(str(value).strip().upper(), None)

    if level is None:
        raise InvalidLogLevel(f"Invalid logging level detected: [{value}]")

    return level


def get_logging_method(level: int, logger: logging.Logger) -> Callable:
    """Return logging method from an instance of a logger

    :param level: Logging level
    :param logger: Current instance of a Logger object

    :raise InvalidLogLevel: For an invalid level value

    :return Callable: Bound logging method
    """

    methods = {
        DEBUG: logger.debug,
        INFO: logger.info,
        WARNING: logger.warning,
        ERROR: logger.error,
        CRITICAL: logger.critical
    }

    log_method = methods.get(level, None)

    if log_method is None:
        raise InvalidLogLevel(f'Invalid logging level: [{level}]')

    return log_method


def get_error_info(error: Any) -> Dict[AnyStr, Any]:
    """Extract error information from a given error object.

    Engine errors also carry their type and the exit code the CLI maps them to.

    :param error: Error information

    :return Dict[AnyStr, Any]: Extracted error information
    """

    error_info = {}

    if error is None:
        return error_info

    if isinstance(error, Exception):
        error_info['error'] = error.args[0] if error.args else error.__class__.__name__
        error_info['error_type'] = error.__class__.__name__
        exit_code = getattr(error, 'exit_code', None)
        if exit_code is not None:
            error_info['exit_code'] = exit_code
    else:
        error_info['error'] = str(error)

    exc_type, exc_value, exc_tb = sys.exc_info()
    trace_length = len(traceback.format_exception(exc_type, exc_value, exc_tb))

    if trace_length > 1:
        error_info["trace"] = traceback.format_exc()

    return error_info


def sentinel(value: Any) -> Any:
    """JSON-safe form of an invariant value: infinities become the string ``"inf"``."""

    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"

    return value
