"""Presentations, Fox calculus, Smith normal form and branched-cover homology."""

from .fox import alexander_poly, fox_derivative, torus_alexander
from .homology import INFINITE, branched_cover_homology, fox_formula_order, group_order, resultant
from .laurent import LaurentPolynomial
from .presentations import (CyclicPresentation, Presentation, cyclic_presentation, cyclic_word,
                            torus_group_presentation)
from .smith import SmithForm, smith_normal_form
