"""Exact toolkit for Newton polyhedra, weighted blow-ups and the
exceptionality classification of 3-fold Brieskorn singularities."""

from .errors import InvariantError, NotInScope, PreconditionError, SingforgeError, UsageError
from .lattice import Weight
from .newton import Membership, SupportSet, classify_one, facet_enumeration, find_plt_weight, leading_support
from .wps import BrieskornType, surface_model

__version__ = "0.1.0"

__all__ = [
    "BrieskornType",
    "InvariantError",
    "Membership",
    "NotInScope",
    "PreconditionError",
    "SingforgeError",
    "SupportSet",
    "UsageError",
    "Weight",
    "classify_one",
    "facet_enumeration",
    "find_plt_weight",
    "leading_support",
    "surface_model",
]
