"""Logger context data store"""

import threading
from contextlib import ContextDecorator
from typing import Any, AnyStr, Dict

from extscope.errors import ContextKeyError


class Context(ContextDecorator):
    """Persistent log fields shared by every record of a run (scenario name, task, seed).

    Entering the context returns a snapshot, so readers never see a half-updated mapping
    while worker threads of a parallel run keep logging.
    """

    def __init__(self):
        self.__data: Dict[AnyStr, Any] = {}
        self.__lock = threading.Lock()

    def __enter__(self) -> 'Context':
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        pass

    @property
    def data(self) -> Dict[AnyStr, Any]:
        """Return a copy of the stored data."""

        with self.__lock:
            return dict(self.__data)

    def field(self, name: AnyStr, value: Any) -> 'Context':
        """Add single field to context data. Context data is logged in all records and never auto cleaned

        :param name: New key name for the field
        :param value: Value of the field (if it's an object needs to be json serializable)
        :return Context: Self instance
        :raises ContextKeyError: When the given context key is not a str
        """

        if not isinstance(name, str):
            raise ContextKeyError(f"Invalid context value key, expected 'str' got '{name.__class__.__name__}'")

        with self.__lock:
            self.__data[name] = value

        return self

    def fields(self, fields: Dict[AnyStr, Any]) -> 'Context':
        """Add many fields at once.

        :param fields: Extra fields to add in the json log
        :return Context: Self instance
        """

        for name, value in fields.items():
            self.field(name, value)

        return self

    def remove(self, name: AnyStr) -> 'Context':
        """Forget one field, ignoring unknown names."""

        with self.__lock:
            self.__data.pop(name, None)

        return self

    def clear(self):
        """Delete all previous context data"""

        with self.__lock:
            self.__data = {}
