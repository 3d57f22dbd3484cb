"""Ext layer: presented modules, homology with coefficients and Ext modules."""

from .presented import PresentedModule, prune_constants
from .homology import homology, subquotient
from .ext import (ComparisonReport, ExtResult, StabilityReport, annihilator, bridger_stability_check, compare_modules,
                  diagonal_ext, diagonal_stabilization_check, ext, ext_shift_check, iterated_ext)
