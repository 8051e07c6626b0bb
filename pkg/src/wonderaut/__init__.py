"""Luna spherical systems of wonderful varieties and their connected automorphism groups."""

from .automorphism import (AutReport, FactorVerdict, aut_group, main2_criterion, psp_criterion,
                           psp_to_psl_transform)
from .colors import Color, ColorSet, boundary_under_aut, compute_colors, fixed_divisors
from .errors import (InconsistentQuotient, InvalidSystem, NotClassified, ParseError,
                     PreconditionError, UnsupportedSubdiagram, WonderError)
from .io import Fixture, load_fixture, load_fixture_dir, parse_system, serialize_system
from .quotient import QuotientResult, positive_colors, quotient_by
from .roots import RootSystem, SimpleComponent, SimpleRootId, Weight, cartan_pairing, coroot_eval
from .structure import Decomposition, cuspidal_core, decompose, is_cuspidal, product
from .system import AColor, SphericalSystem, induce, localize, validate

__all__ = [
    "AColor", "AutReport", "Color", "ColorSet", "Decomposition", "FactorVerdict", "Fixture",
    "InconsistentQuotient", "InvalidSystem", "NotClassified", "ParseError", "PreconditionError",
    "QuotientResult", "RootSystem", "SimpleComponent", "SimpleRootId", "SphericalSystem",
    "UnsupportedSubdiagram", "Weight", "WonderError", "aut_group", "boundary_under_aut",
    "cartan_pairing", "compute_colors", "coroot_eval", "cuspidal_core", "decompose",
    "fixed_divisors", "induce", "is_cuspidal", "load_fixture", "load_fixture_dir", "localize",
    "main2_criterion", "parse_system", "positive_colors", "product", "psp_criterion",
    "psp_to_psl_transform", "quotient_by", "serialize_system", "validate",
]
