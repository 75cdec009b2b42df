"""Order-theoretic pattern mining: pattern setups, structures, multistructures and their completions."""

from .completion import (
    AntichainPoset,
    AntichainSpace,
    CompletionReport,
    DMCompletion,
    DownsetSpace,
    IffReport,
    antichain_completion_of_poset,
    antichain_completion_of_setup,
    antichain_leq,
    antichain_to_multilattice_check,
    check_boldi_vigna,
    completion_iff_theorem,
    completion_report,
    dedekind_macneille,
    direct_completion,
    intersection_closure,
)
from .descspace import (
    TOP,
    Description,
    DescriptionSpace,
    ExplicitSpace,
    IntervalSpace,
    ItemsetSpace,
    OmegaSpace,
    RaySpace,
    SpaceCaps,
    SymbolicSet,
    TopAugmented,
    WordSpace,
    augment_with_top,
    minf_of_pair_oracle,
    principal_ideal,
    restrict_to_relevant,
    sort_key,
    subsumes,
)
from .errors import (
    CapExceeded,
    CycleDetected,
    InfiniteIdeal,
    NotAStructure,
    ParseError,
    PatternSetupError,
    SpaceMismatch,
    UndefinedForSpace,
    UnknownElement,
    UnknownFixture,
    UnsupportedCapability,
)
from .fixtures import FIXTURE_NAMES, fixture_dataset, load_fixture
from .poset import (
    ClassificationReport,
    FinitePoset,
    MultiBound,
    build_poset,
    classify,
    is_distributive_lattice,
    poset_from_order,
    verify_order_embedding,
)
from .setup import ExtentFamily, MultistructureReport, PatternSetup, is_extent_system
from .structure import Concept, ConceptLattice, closure, concept_lattice, intent, is_pattern_structure

__version__ = "0.1.0"
