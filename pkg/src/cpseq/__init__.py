"""cpseq: composite pulse sequences that suppress systematic amplitude
errors to arbitrary order.

Subpackages/modules:

* :mod:`cpseq.su2` — 2x2 unitary kernel (rotations, products, metrics)
* :mod:`cpseq.phasesums` — phase-sum algebra, constraint residuals, Jacobians
* :mod:`cpseq.closedform` — regular-chain closed forms for the low orders
* :mod:`cpseq.groebner` — exact Buchberger engine over rational functions
* :mod:`cpseq.continuation` — seed families and predictor-corrector tracking
* :mod:`cpseq.search` — multi-start Newton enumeration of solution classes
* :mod:`cpseq.transforms` — toggling, Vitanov sequences, reparametrizations
* :mod:`cpseq.bench` — error curves, noise Monte Carlo, literature data
* :mod:`cpseq.cli` — command-line interface
"""

from .su2 import (
    PulseSequence,
    Unitary2,
    compose,
    faulty_pulse,
    infidelity,
    rotation,
    trace_distance,
    transition_probability,
)

__version__ = "0.1.0"

__all__ = [
    "PulseSequence",
    "Unitary2",
    "compose",
    "faulty_pulse",
    "infidelity",
    "rotation",
    "trace_distance",
    "transition_probability",
    "__version__",
]
