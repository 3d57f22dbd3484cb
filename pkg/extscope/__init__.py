"""Ext modules and homological invariants of graded modules over polynomial rings and their quotients"""

from .errors import ExtscopeError
from .logger import LOGGER, Logger

__version__ = '1.0.0'
