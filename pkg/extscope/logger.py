"""The engine logger and the hook chain that lets reports collect its warnings."""

import threading
from typing import AnyStr, Iterable, List, NoReturn, Optional

from extscope import utils
from extscope.config import Settings
from extscope.hooks import Hook, HookContext

from .base_logger import BaseLogger


class Logger(BaseLogger):
    """JSON logger of the engine. Every record passes through the registered hooks before it is emitted;
    ``WarningCollector`` is such a hook, copying truncation and unsupported-flag warnings into task reports.

    :param name: Logger name
    :param level: Threshold of emitted records (Def: WARNING)
    :param fmt: Standard fields of each record (Def: %(asctime) %(levelname) %(name) %(message))
    :param hooks: Hooks called with a ``HookContext`` for every record
    """

    def __init__(
        self,
        name: AnyStr,
        level: Optional[int] = None,
        fmt: Optional[AnyStr] = None,
        hooks: Optional[Iterable[Hook]] = None
    ):
        super().__init__(name, level, fmt)
        self.__hooks: List[Hook] = list(hooks) if hooks is not None else []
        self.__hooks_lock = threading.Lock()

    def add_hook(self, hook: Hook) -> NoReturn:
        """Register a hook; it sees every later record, from any thread.

        :param hook: Callable taking a ``HookContext``
        """

        with self.__hooks_lock:
            self.__hooks.append(hook)

    def remove_hook(self, hook: Hook) -> NoReturn:
        """Unregister a hook, ignoring unknown ones."""

        with self.__hooks_lock:
            if hook in self.__hooks:
                self.__hooks.remove(hook)

    def clear_hooks(self) -> NoReturn:
        """Unregister every hook."""

        with self.__hooks_lock:
            self.__hooks = []

    def log(self, level: int, message: AnyStr, *args, **kwargs) -> NoReturn:
        """Run the hooks on the record, then emit it if ``level`` reaches the threshold.

        Hooks see warnings even when the logger level would drop them. A hook that raises is reported as an
        error record and does not stop the others.

        :param level: A ``logging`` level
        :param message: Record message
        """

        log_method = utils.get_logging_method(level, self.logger)
        context = self.__apply_hooks(self.__get_hook_context(level, message))

        kwargs['extra'] = context.extra_data
        log_method(context.message, *args, **kwargs)

    def __get_hook_context(self, level: int, message: AnyStr) -> HookContext:
        return HookContext(
            level=level,
            logger_level=self.level,
            logger_name=self.name,
            message=message,
            extra_data=self._get_extra_data()
        )

    def __apply_hooks(self, context: HookContext) -> HookContext:
        with self.__hooks_lock:
            hooks = list(self.__hooks)

        for hook in hooks:
            try:
                hook(context)
            except Exception as error:  # pylint: disable=broad-except
                name = getattr(hook, '__name__', hook.__class__.__name__)
                self.logger.error('error applying hook %s', name, extra=utils.get_error_info(error))

        return context


LOGGER = Logger("extscope", level=Settings().log_level)
