"""Hook that keeps warnings so they can be copied into a report."""

import threading
from typing import Any, Dict, List, NoReturn, Optional

from extscope import utils
from extscope.hooks.hook_context import HookContext


class WarningCollector:
    """Callable hook storing every WARNING-or-above record it sees, tagged with the emitting thread.

    Example:

        collector = WarningCollector()
        LOGGER.add_hook(collector)
        ...
        report["warnings"] = collector.drain()
    """

    def __init__(self):
        self.__records: List[Dict[str, Any]] = []
        self.__threads: List[int] = []
        self.__lock = threading.Lock()

    def __call__(self, context: HookContext) -> NoReturn:
        if not context.is_warning:
            return

        record = {'level': utils.get_level_name(context.level), 'message': context.message}
        record.update({key: value for key, value in context.extra_data.items() if key != 'trace'})

        with self.__lock:
            self.__records.append(record)
            self.__threads.append(threading.get_ident())

    @property
    def records(self) -> List[Dict[str, Any]]:
        """Collected records, oldest first."""

        with self.__lock:
            return list(self.__records)

    def drain(self, thread: Optional[int] = None) -> List[Dict[str, Any]]:
        """Return the collected records and forget them; with ``thread`` only those emitted by that thread."""

        with self.__lock:
            if thread is None:
                records, self.__records, self.__threads = self.__records, [], []
                return records

            taken = [r for r, t in zip(self.__records, self.__threads) if t == thread]
            kept = [(r, t) for r, t in zip(self.__records, self.__threads) if t != thread]
            self.__records = [r for r, _ in kept]
            self.__threads = [t for _, t in kept]

        return taken
