"""Definition of a hook.

Logger hooks are functions or callable classes that receive every record before it is emitted by
the engine logger. They may rewrite the message or the extra data, or only observe it.

Example:

    def drop_trace(context: HookContext) -> NoReturn:
        context.extra_data.pop('trace', None)

    LOGGER.add_hook(drop_trace)
"""

from typing import Callable, NoReturn

from extscope.hooks.hook_context import HookContext

Hook = Callable[[HookContext], NoReturn]
