"""
Domain models for network recovery
"""
from .benchmark import (
    CSV_HEADER,
    ROBUSTNESS_HEADER,
    BenchRow,
    RobustnessRow,
    RunRecord,
    Scenario,
)
from .complex import (
    RECOVERED,
    BettiPair,
    ComplexKind,
    Edge,
    SimplicialComplex2,
    Triangle,
    iter_bits,
)
from .geometry import (
    Domain,
    Point2,
    PointTag,
    TaggedPoint,
    as_array,
    from_array,
    tag_points,
)
from .kernel import GinibreKernel, SamplerSettings
from .network import NetworkFile
from .recovery import (
    UNREMOVABLE,
    AdditionRound,
    RecoveryConfig,
    RecoveryResult,
    ReductionResult,
    ReductionStep,
    VertexIndex,
)
from .strategy import (
    GREEDY,
    AdditionBudget,
    AdditionStrategy,
    GreedyConfig,
    StrategyKind,
)

__all__ = [
    # Geometry models
    "Domain",
    "Point2",
    "PointTag",
    "TaggedPoint",
    "as_array",
    "from_array",
    "tag_points",

    # Complex models
    "RECOVERED",
    "BettiPair",
    "ComplexKind",
    "Edge",
    "SimplicialComplex2",
    "Triangle",
    "iter_bits",

    # Sampler models
    "GinibreKernel",
    "SamplerSettings",

    # Strategy models
    "GREEDY",
    "AdditionBudget",
    "AdditionStrategy",
    "GreedyConfig",
    "StrategyKind",

    # Recovery models
    "UNREMOVABLE",
    "AdditionRound",
    "RecoveryConfig",
    "RecoveryResult",
    "ReductionResult",
    "ReductionStep",
    "VertexIndex",

    # Benchmark models
    "CSV_HEADER",
    "ROBUSTNESS_HEADER",
    "BenchRow",
    "RobustnessRow",
    "RunRecord",
    "Scenario",

    # Serialization
    "NetworkFile",
]
