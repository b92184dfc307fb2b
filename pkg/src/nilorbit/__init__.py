"""Nilpotent orbit closures of classical groups: degenerations, candidate
modules, diminutive K-type multiplicities and character formulas."""

from __future__ import annotations

from .degeneration import UNBOUNDED, NormSet, Quad, Site, degeneration_sites, fundamental_degeneration, norm_set
from .errors import (
    IncompatibleSign,
    MissingFixture,
    NilorbitError,
    NonIntegralResult,
    NotDecreasing,
    NotDegenerable,
    NotEvenGeneric,
    OrbitError,
    ParityPairViolation,
    RankMismatch,
    ShapeMismatch,
    SizeMismatch,
    UnsupportedFamily,
)
from .kmult import (
    DimTable,
    diminutive_table,
    exterior_mult,
    normality_report,
    verify_column_lemma,
    verify_main_theorem,
)
from .liecore import KType, Weight, WeylSubgroupSpec, dominant, irrep_dimension, weight_multiplicity, weyl_elements
from .orbits import Family, GroupType, Orbit, generic_part, is_generic, parity, parse_orbit, tau
from .parameters import (
    GLString,
    ModuleParam,
    NormalForm,
    SignVector,
    b_orbit_normal_form,
    distinguished_epsilon,
    gamma_normal_form,
    module_param,
    normal_form,
    param_group,
)

__version__ = "0.1.0"
