"""Exact toolkit for root-system and Weyl-coset combinatorics, weight
character filtrations, and Boolean-lattice incidence algebras.

Everything is computed over exact integers and rationals; no floating
point enters any kernel.  All enumeration orders are deterministic and
all randomized routines take explicit seeds, so every run is
reproducible bit for bit.
"""

__version__ = "0.1.0"

from catx.errors import InputError, ResourceGuardError
from catx.rootsystem import CartanType, RootSystem, build_root_system
from catx.weyl import (
    WeylElement,
    element_from_word,
    enumerate_biclosed,
    enumerate_weyl,
    longest_element,
    min_coset_reps,
)
from catx.charcalc import (
    FormalCharacter,
    ModuleCharacter,
    TwistedCharacter,
    Weight,
    costandard_character,
    decompose_character,
    induced_character,
    simple_character,
    weight_lt,
)
from catx.incidence import (
    AlgebraModule,
    IncidenceAlgebra,
    build_incidence_algebra,
    krull_schmidt_decompose,
)

__all__ = [
    "AlgebraModule",
    "CartanType",
    "FormalCharacter",
    "IncidenceAlgebra",
    "InputError",
    "ModuleCharacter",
    "ResourceGuardError",
    "RootSystem",
    "TwistedCharacter",
    "Weight",
    "WeylElement",
    "build_incidence_algebra",
    "build_root_system",
    "costandard_character",
    "decompose_character",
    "element_from_word",
    "enumerate_biclosed",
    "enumerate_weyl",
    "induced_character",
    "krull_schmidt_decompose",
    "longest_element",
    "min_coset_reps",
    "simple_character",
    "weight_lt",
]
