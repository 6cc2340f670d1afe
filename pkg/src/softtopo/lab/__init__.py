"""Enumeration, theorem sweeps and the worked-example fixtures."""

from .enumeration import (
    enumerate_crisp_topologies,
    enumerate_soft_topologies,
    random_crisp_topology,
    random_soft_topology,
)
from .fixtures import Fixture, fixture, fixtures
from .theorems import (
    THEOREMS,
    SweepBounds,
    VerificationOutcome,
    replay,
    search_converse_counterexample,
    verify_theorem,
)
