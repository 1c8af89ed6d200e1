"""Strongly hollow elements of finite bounded lattices.

Computes the strongly hollow (sh) elements of a finite bounded lattice,
builds the SH- and W-topologies on the nonzero sh point set, derives the
Cantor-Bendixson (derived) dimension and the dual-classical Krull
dimension, and machine-checks a registry of order/topology claims over
exhaustively enumerated and generated lattice corpora.
"""

from .dimensions import (
    AnalysisBundle,
    DimensionReport,
    YFiltration,
    analyze,
    dclk_dimension_oracle,
    y_filtration,
)
from .generators import (
    ENUM_MAX,
    GenerationError,
    SpecParseError,
    chain,
    enumerate_lattices,
    expand_spec_ranges,
    ideal_lattice_zn,
    named_lattice,
    parse_spec,
    product,
    random_lattice,
)
from .hollow import ShAnalysis, is_strongly_hollow, sh_set
from .lattice import (
    FiniteLattice,
    LatticeError,
    LatticeDocumentError,
    LatticeValidationError,
    Violation,
    canonical_key,
    dump_doc,
    from_doc,
    is_isomorphic,
    load_doc,
    to_doc,
    validate,
)
from .topology import (
    AxiomViolation,
    CBFiltration,
    FiniteTopology,
    sh_topology,
    w_base,
    w_topology,
)
from .verify import (
    REGISTRY,
    Claim,
    ClaimActuallyPasses,
    ClaimContext,
    CorpusConfig,
    VerificationRun,
    minimize_witness,
    registry_problems,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisBundle",
    "AxiomViolation",
    "CBFiltration",
    "Claim",
    "ClaimActuallyPasses",
    "ClaimContext",
    "CorpusConfig",
    "DimensionReport",
    "ENUM_MAX",
    "FiniteLattice",
    "FiniteTopology",
    "GenerationError",
    "LatticeDocumentError",
    "LatticeError",
    "LatticeValidationError",
    "REGISTRY",
    "ShAnalysis",
    "SpecParseError",
    "VerificationRun",
    "Violation",
    "YFiltration",
    "analyze",
    "canonical_key",
    "chain",
    "dclk_dimension_oracle",
    "dump_doc",
    "enumerate_lattices",
    "expand_spec_ranges",
    "from_doc",
    "ideal_lattice_zn",
    "is_isomorphic",
    "is_strongly_hollow",
    "load_doc",
    "minimize_witness",
    "named_lattice",
    "parse_spec",
    "product",
    "random_lattice",
    "registry_problems",
    "run_suite",
    "sh_set",
    "sh_topology",
    "to_doc",
    "validate",
    "w_base",
    "w_topology",
    "y_filtration",
]
