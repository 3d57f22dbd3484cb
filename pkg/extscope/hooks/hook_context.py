"""Hook context that keeps data to be modified."""

from dataclasses import dataclass, field
from logging import WARNING
from typing import Any, AnyStr, Dict


@dataclass
class HookContext:
    """Context information for hook execution.

    ``message`` and ``extra_data`` may be changed by hooks; the remaining fields describe the record.

    :param level: Current log record level
    :param logger_level: Global logger level
    :param logger_name: Global logger name
    :param message: Current log record message
    :param extra_data: Current log record extra data
    """

    level: int
    logger_level: int
    logger_name: AnyStr
    message: AnyStr
    extra_data: Dict[AnyStr, Any] = field(default_factory=dict)

    @property
    def is_warning(self) -> bool:
        """True for records at WARNING or above."""
        return self.level >= WARNING
