"""Slope words and exact decisions in H(0;n) = <a, b | (ab)^n>."""

__version__ = "0.1.0"

from .slopes import Slope, ContinuedFraction, continued_fraction, evaluate_cf, in_fundamental_interval
from .words import Word, CyclicWord, SSequence, free_reduce, cyclic_reduce, s_sequence, is_alternating
from .riley import SlopeWord, epsilon, riley_word, cs_of_slope
from .algebra import (
    NormalForm,
    CyclicNormalForm,
    ElementClass,
    to_normal_form,
    to_cyclic_normal_form,
    is_trivial,
    are_conjugate,
    classify,
    dehn_reduce,
    pieces,
)
from .farey_orbit import BoundaryMap, ReductionTrace, generators, apply, reduce_slope, same_orbit
from .hecke_rep import Mat2, TraceClass, hecke_generators, rho, classify_matrix
