"""Python access to the netmate reduction lab.

States and lines travel as the same JSON documents the CLI reads and writes.
"""

from ._core import (
    SCHEMA_VERSION,
    InstanceError,
    SerializationError,
    SolverPreconditionError,
    balanced_partition,
    balanced_partition_by_table,
    compile,
    render,
    replay,
    solve,
)

__all__ = [
    "SCHEMA_VERSION",
    "InstanceError",
    "SerializationError",
    "SolverPreconditionError",
    "balanced_partition",
    "balanced_partition_by_table",
    "compile",
    "render",
    "replay",
    "solve",
]
