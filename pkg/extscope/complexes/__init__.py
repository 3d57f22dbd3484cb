"""Complexes layer: graded free modules, maps, complexes, Koszul complexes and free resolutions."""

from .free_module import FreeModule, ModuleMap
from .complex import FreeComplex
from .koszul import koszul_complex
from .resolution import Resolution, free_resolution
