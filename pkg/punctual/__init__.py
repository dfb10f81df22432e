# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"

__date__ = "2026-10-17"
# Created: 2026-09-28 20:38

from .__version__ import __version__
from .apolar import InverseSystem, apolar_ideal, apolar_local_invariants
from .controller import Punctual
from .exact import Polynomial, Matrix
from .hilbert import HilbertFunction, enumerate_o_sequences
from .model import TangentSeries, ApolarReport, MarginReport, \
    DimensionEstimate, RegularityVerdict, CheckReport
from .monomial import MonomialIdeal, enumerate_monomial_ideals, \
    enumerate_strongly_stable
from .tangent import GradedIdeal, tangent_report

__all__ = [
    "Punctual", "Polynomial", "Matrix", "HilbertFunction", "MonomialIdeal",
    "GradedIdeal", "InverseSystem", "TangentSeries", "ApolarReport",
    "MarginReport", "DimensionEstimate", "RegularityVerdict", "CheckReport",
    "enumerate_o_sequences", "enumerate_monomial_ideals",
    "enumerate_strongly_stable", "tangent_report", "apolar_ideal",
    "apolar_local_invariants",
]
