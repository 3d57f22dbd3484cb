"""Krull dimension of R/I and of modules."""

from typing import Union

from extscope.errors import ConsistencyError
from extscope.ext.ext import ExtResult
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.logger import LOGGER
from extscope.poly.ring import combinatorial_dimension

ZERO_MODULE_DIMENSION = -1


def ideal_dimension(ideal: Ideal) -> int:
    """dim R/I from the lead monomials of I + J; -1 for the unit ideal."""
    return combinatorial_dimension(ideal.leading_monomials(), ideal.ring.ngens)


def dimension(target: Union[Ideal, PresentedModule, ExtResult]) -> int:
    """dim R/I for an ideal, dim R/Ann M for a module.

    The module value is cross-checked against the pole order of the Hilbert series at t = 1.
    The zero module has dimension -1.

    :raise ConsistencyError: when the two computations disagree
    """

    if isinstance(target, Ideal):
        return ideal_dimension(target)

    module = target.module if isinstance(target, ExtResult) else target
    if module.is_zero():
        return ZERO_MODULE_DIMENSION

    by_leads = ideal_dimension(module.annihilator())
    by_pole = module.hilbert_series().dimension()
    if by_leads != by_pole:
        LOGGER.fields({'module': module.provenance, 'leads': by_leads, 'pole': by_pole}).error('dimension mismatch')
        raise ConsistencyError(
            f"dimension of {module.provenance}: {by_leads} from the annihilator, {by_pole} from the Hilbert series"
        )
    return by_leads
