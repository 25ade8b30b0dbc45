"""(1,1)-knots as words in the mapping class group of the twice-punctured torus."""

from .errors import DomainError, MCGError, NotInKernelError, NotPureError, VerificationError, WordSyntaxError
from .knotwords import (ConwayParams, even_continued_fraction, torus_knot_word, two_bridge_word,
                        two_bridge_word_from_fraction)
from .omega import LensSpace, SL2Matrix, is_kernel, lens_of, omega
from .pi1 import auto_of, mcg_equal, pushed_loop
from .standard import adjust_rs, continued_fraction, psi_standard, standard_decompose
from .words import Letter, Word, compose, expand, format_word, invert, parse_word

__version__ = "0.1.0"
