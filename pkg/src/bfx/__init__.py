"""Exact complexity measures, zebra functions, certificate algorithms, graph
properties and lifting checks for explicit Boolean truth tables."""

from .core import (
    AlternationProfile,
    ArityError,
    CapExceeded,
    MultilinearPolynomial,
    Subcube,
    TruthTable,
    affine_zebra,
    alt,
    alternation_profile,
    and_,
    compose,
    evaluate,
    identify,
    ind,
    maj,
    mobius_polynomial,
    or_,
    restrict,
    sym,
    tribes,
    xor,
)
from .funcspec import ParseError, parse_function
from .measures import MeasureReport, measure_report

__version__ = "0.1.0"
