"""Exact toolkit for 2-interval graph classes."""

from . import gadgets, graphs, io_cli, model, recognize, reductions, simplicial, transforms

__all__ = [
    "gadgets",
    "graphs",
    "io_cli",
    "model",
    "recognize",
    "reductions",
    "simplicial",
    "transforms",
]
