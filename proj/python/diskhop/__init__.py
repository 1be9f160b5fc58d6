"""Hop distances in disk graphs."""

from ._core import (
    DegenerateInstance,
    GenerationError,
    InputError,
    edge,
    format_result,
    generate,
    oracle_bfs,
    read_instance,
    solve,
    verify,
)

__all__ = [
    "DegenerateInstance",
    "GenerationError",
    "InputError",
    "edge",
    "format_result",
    "generate",
    "oracle_bfs",
    "read_instance",
    "solve",
    "verify",
]
