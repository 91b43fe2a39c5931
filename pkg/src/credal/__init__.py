"""Belief-function mass functions and discounting operators.

The package covers: frames and bitmask subsets, sparse mass functions with
belief/implicability transforms and the disjunctive rule of combination;
classical and contextual discounting plus the conservative, proportional,
and optimistic schemes; the canonical disjunctive decomposition with its
weight-scaling discount route; and a temporal layer mapping per-context
half-lives to discount-rate vectors.
"""

from . import errors
from .frame import Frame, Subset, build_frame, format_subset
from .mass import (
    MassFunction,
    belief_of,
    drc_combine,
    implicability_of,
    make_mass,
    vacuous,
)
from .lattice import SignedMassVector, mobius_transform, zeta_transform
from .discount import (
    ContextVector,
    SCHEME_DISCOUNTS,
    classical_discount,
    conservative_discount,
    contextual_component_mass,
    contextual_discount,
    contextual_discount_singleton,
    grouped_discount,
    optimistic_discount,
    proportional_discount,
)
from .decompose import (
    DisjunctiveWeights,
    disjunctive_decompose,
    generalized_contextual_discount,
    recompose_weights,
)
from .temporal import (
    ALPHA_MODES,
    DecaySpec,
    KappaVector,
    contextual_alphas_from_kappa,
    kappa_at,
    lambda_from_fraction_life,
    lambda_from_half_life,
    scheme_alphas_from_kappa,
    temporal_discount,
)
from .documents import (
    load_context_document,
    load_decay_document,
    load_mass_document,
    mass_to_document,
    parse_context_document,
    parse_decay_document,
    parse_mass_document,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_MODES",
    "ContextVector",
    "DecaySpec",
    "DisjunctiveWeights",
    "Frame",
    "KappaVector",
    "MassFunction",
    "SCHEME_DISCOUNTS",
    "SignedMassVector",
    "Subset",
    "belief_of",
    "build_frame",
    "classical_discount",
    "conservative_discount",
    "contextual_alphas_from_kappa",
    "contextual_component_mass",
    "contextual_discount",
    "contextual_discount_singleton",
    "disjunctive_decompose",
    "drc_combine",
    "errors",
    "format_subset",
    "generalized_contextual_discount",
    "grouped_discount",
    "implicability_of",
    "kappa_at",
    "lambda_from_fraction_life",
    "lambda_from_half_life",
    "load_context_document",
    "load_decay_document",
    "load_mass_document",
    "make_mass",
    "mass_to_document",
    "mobius_transform",
    "optimistic_discount",
    "parse_context_document",
    "parse_decay_document",
    "parse_mass_document",
    "proportional_discount",
    "recompose_weights",
    "scheme_alphas_from_kappa",
    "temporal_discount",
    "vacuous",
    "zeta_transform",
]
