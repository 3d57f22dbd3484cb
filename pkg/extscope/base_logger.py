"""JSON records on stderr with per-thread extra fields, shared by every layer of the engine."""

import logging
import threading
from abc import abstractmethod
from logging import CRITICAL, DEBUG, ERROR, INFO, WARNING
from typing import Any, AnyStr, Dict, NoReturn, Optional

from pythonjsonlogger import jsonlogger

from extscope import utils
from extscope.types.context import Context
from extscope.types.json_encoder import ReportJSONEncoder


class BaseLogger:
    """Emits one JSON object per record on stderr, leaving stdout to reports.

    Extra fields set with ``fields``/``field``/``err`` belong to the calling thread and are consumed by its next
    record, so suite items running on a thread pool never mix their fields. Engine objects in the fields
    (polynomials, ideals, Hilbert series) are serialized by ``ReportJSONEncoder``.

    :param name: Logger name
    :param level: Threshold for emitted records, WARNING unless ``EXTSCOPE_LOG_LEVEL`` says otherwise
    :param fmt: Standard fields of each record (Def: %(asctime) %(levelname) %(name) %(message))
    """

    RESERVED_KEYS = ["name", "level", "asctime", "levelname", "message"]

    def __init__(self, name: AnyStr, level: Optional[int] = None, fmt: Optional[AnyStr] = None):
        self.__local = threading.local()
        self.__level = level if level else WARNING
        self.__name = name
        self.__context = Context()
        self.__logger = self.__create_logger(name=name, level=self.__level, fmt=fmt)

    @property
    def level(self):
        """Threshold of emitted records."""
        return self.__level

    @property
    def name(self):
        """Name of the underlying ``logging`` logger."""
        return self.__name

    @property
    def context(self):
        """Fields attached to every record, such as the scenario being run."""
        return self.__context

    @property
    def logger(self):
        """The configured ``logging.Logger``."""
        return self.__logger

    def set_level(self, level: int) -> NoReturn:
        """Change the configured level of the logger."""

        self.__level = level
        self.__logger.setLevel(level)

    def is_enabled_for(self, level: int) -> bool:
        """Whether a record of ``level`` would be emitted; lets callers skip building costly fields."""
        return self.__logger.isEnabledFor(level)

    def fields(self, fields: Dict[AnyStr, Any]):
        """Attach fields to the calling thread's next record; anything but a dict is ignored.

        :param fields: Field names and values, such as ``{'index': 2, 'rank': 3}``
        :return: The logger, for chaining into ``debug``/``info``/``warning``
        """

        if not isinstance(fields, dict):
            return self

        self.__extra.update(fields)
        return self

    def field(self, name: AnyStr, value: Any):
        """Attach one field to the calling thread's next record.

        :param name: Field name
        :param value: Field value; engine objects are serialized by ReportJSONEncoder
        :return: The logger
        """

        self.__extra[name] = value
        return self

    def err(self, error: Any):
        """Attach the type, message and trace of ``error`` to the next record without raising its level.

        Used when an engine error becomes a failed suite item or a failed scenario task.

        :return: The logger
        """

        self.__extra.update(utils.get_error_info(error))
        return self

    def debug(self, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Progress records of long computations (Groebner pairs, resolution steps)."""
        self.log(DEBUG, message, *args, **kwargs)

    def info(self, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Task level records."""
        self.log(INFO, message, *args, **kwargs)

    def warning(self, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Records a report must mention: truncated windows, unsupported flags."""
        self.log(WARNING, message, *args, **kwargs)

    def error(self, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Failed commands, failed expectations and cross-checks that disagree."""
        self.log(ERROR, message, *args, **kwargs)

    def critical(self, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Unrecoverable failures of an embedding application."""
        self.log(CRITICAL, message, *args, **kwargs)

    @abstractmethod
    def log(self, level: int, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Emit ``message`` at ``level`` with the pending fields.

        :param level: A ``logging`` level
        :param message: Record message
        """

        raise NotImplementedError('Method is not implemented')

    @property
    def __extra(self) -> Dict[AnyStr, Any]:
        extra = getattr(self.__local, 'extra', None)
        if extra is None:
            extra = self.__local.extra = {}
        return extra

    def _get_extra_data(self) -> Dict[AnyStr, Any]:
        """Context fields overlaid with the calling thread's pending fields, which are consumed.

        :return Dict[AnyStr, Any]: Fields of the record, reserved keys removed
        """

        with self.__context as context:
            data = context.data

        data.update(self.__extra)
        self.__extra.clear()

        return self.__clean_reserved_keys(data)

    @staticmethod
    def __create_logger(name: AnyStr, level: int, fmt: AnyStr = None) -> logging.Logger:
        """A ``logging.Logger`` writing through ``jsonlogger.JsonFormatter`` to stderr.

        The stream handler is attached once per logger name, so building a second logger with the same name
        does not duplicate records.

        :return logging.Logger: Configured logger
        """

        logger = logging.getLogger(name)
        fmt = "%(asctime) %(levelname) %(name) %(message)" if not fmt else fmt

        if not logger.handlers:
            formatter = jsonlogger.JsonFormatter(fmt, json_encoder=ReportJSONEncoder)
            handler = logging.StreamHandler()
            handler.setFormatter(formatter)
            logger.addHandler(handler)

        logger.setLevel(level)

        return logger

    def __clean_reserved_keys(self, extra_data: Dict[AnyStr, Any]) -> Dict[AnyStr, Any]:
        """Drop fields named like the standard ones (name, level, asctime, levelname, message).

        :return Dict[AnyStr, Any]: The remaining fields
        """

        for key in self.RESERVED_KEYS:
            extra_data.pop(key, None)

        return extra_data
