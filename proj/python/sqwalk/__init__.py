from ._sqwalk import (
    Walk,
    density,
    evolve,
    grover_delta,
    oracle_histogram,
    quadrature_mass,
    quadrature_moment,
)

__all__ = [
    "Walk",
    "density",
    "evolve",
    "grover_delta",
    "oracle_histogram",
    "quadrature_mass",
    "quadrature_moment",
]
