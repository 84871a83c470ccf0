"""Symbolic Chow rings of quadric bundles and isotropic flag bundles."""
from .scalars import Coefficient, Variant, VariantMismatch, dyadic_normalize, scalar_arith
from .polynomials import GeneratorTable, Polynomial
from .rings import (NonterminationGuard, RingElement, RingPresentation, comparison_embed,
                    normal_form, point_degree, pushforward, ring_mul)
from .catalog import RingKind, UnsupportedParameter, make_ring

__all__ = [
    "Coefficient", "Variant", "VariantMismatch", "dyadic_normalize", "scalar_arith",
    "GeneratorTable", "Polynomial",
    "NonterminationGuard", "RingElement", "RingPresentation", "comparison_embed",
    "normal_form", "point_degree", "pushforward", "ring_mul",
    "RingKind", "UnsupportedParameter", "make_ring",
]
