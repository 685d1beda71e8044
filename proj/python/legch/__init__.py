from ._core import (
    Dga,
    LegchError,
    Poly,
    Tangle,
    acceptance,
    connect_sum,
    family_verdicts,
    fibonacci_lengths,
    fly_tangle,
    kalman_monodromy,
    path_matrix,
    run_script,
    tangle_from_knot,
    torus_knot_dga,
)

__all__ = [
    "Dga",
    "LegchError",
    "Poly",
    "Tangle",
    "acceptance",
    "connect_sum",
    "family_verdicts",
    "fibonacci_lengths",
    "fly_tangle",
    "kalman_monodromy",
    "path_matrix",
    "run_script",
    "tangle_from_knot",
    "torus_knot_dga",
]
