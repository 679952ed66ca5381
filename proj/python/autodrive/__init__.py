"""Headless 2D driving benchmark: tabular Q-learning against NEAT."""

from ._autodrive import (
    Action,
    CarState,
    EnvConfig,
    Environment,
    Pose,
    TrackMap,
    apply_action,
    cli,
    generate_map,
    genome_fitness,
    load_map,
    run_neat,
    train_q,
)

__all__ = [
    "Action",
    "CarState",
    "EnvConfig",
    "Environment",
    "Pose",
    "TrackMap",
    "apply_action",
    "cli",
    "generate_map",
    "genome_fitness",
    "load_map",
    "run_neat",
    "train_q",
]
