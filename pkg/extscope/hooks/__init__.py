"""Export resources."""

from .collector import WarningCollector
from .hooks import Hook, HookContext
