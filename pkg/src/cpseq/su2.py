"""Numeric kernel for 2x2 unitaries: primitive rotations about equatorial
axes, faulty (over/under-rotating) pulses, left-to-right sequence products,
and distance metrics.

Conventions
-----------
* ``rotation(phi, theta)`` is ``exp(-i*theta*sigma_phi/2)`` with
  ``sigma_phi = X*cos(phi) + Y*sin(phi)``; the global phase is part of the
  value (a ``2*pi`` rotation is ``-I``, not ``I``).
* Sequences multiply in listed order with index 1 as the *leftmost* operator
  factor.
* All angles are radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "Unitary2",
    "PulseSequence",
    "rotation",
    "faulty_pulse",
    "compose",
    "trace_distance",
    "infidelity",
    "transition_probability",
]

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

#: A 2x2 complex ndarray, row-major.  Kept as a plain ndarray so the linear
#: algebra composes with numpy without wrapper friction.
Unitary2 = np.ndarray

_VALID_SYMMETRIES = ("none", "AP", "PD")


@dataclass(frozen=True)
class PulseSequence:
    """An ordered list of equal-amplitude pulses at programmable phases.

    Parameters
    ----------
    theta0:
        Base pulse amplitude in radians (``pi`` or ``2*pi`` for the solver
        families; arbitrary for free-form use).
    phases:
        Full phase list ``phi_1 .. phi_L``, index 1 leftmost in the product.
    symmetry:
        ``"AP"`` (antipalindromic, ``phi_k == -phi_{L-k+1}``), ``"PD"``
        (palindromic, ``phi_k == phi_{L-k+1}``) or ``"none"``.  The mirror
        conditions are required to hold exactly (bitwise on floats), which is
        what :func:`cpseq.phasesums.expand_symmetry` produces.
    gamma:
        Optional target ratio ``theta_T / theta0``.
    label:
        Free-form display name.
    provenance:
        Which pipeline produced the sequence (e.g. ``"closed-form:AP2"``).
    """

    theta0: float
    phases: tuple[float, ...]
    symmetry: str = "none"
    gamma: float | None = None
    label: str = ""
    provenance: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "phases", tuple(float(p) for p in self.phases))
        if len(self.phases) < 1:
            raise ValueError("a pulse sequence needs at least one pulse")
        if self.symmetry not in _VALID_SYMMETRIES:
            raise ValueError(f"unknown symmetry tag {self.symmetry!r}")
        L = len(self.phases)
        if self.symmetry == "AP":
            for k in range(L):
                if self.phases[k] != -self.phases[L - 1 - k]:
                    raise ValueError("AP tag requires phi_k == -phi_{L-k+1} exactly")
        elif self.symmetry == "PD":
            for k in range(L):
                if self.phases[k] != self.phases[L - 1 - k]:
                    raise ValueError("PD tag requires phi_k == phi_{L-k+1} exactly")

    def __len__(self) -> int:
        return len(self.phases)

    @property
    def L(self) -> int:
        return len(self.phases)

    def theta_target(self) -> float:
        if self.gamma is None:
            raise ValueError("sequence has no target gamma")
        return self.gamma * self.theta0


def rotation(phase: float, amplitude: float) -> Unitary2:
    """Rotation ``exp(-i*amplitude*sigma_phase/2)``, global phase included.

    Closed form ``cos(theta/2)*I - i*sin(theta/2)*sigma_phi`` with
    ``sigma_phi = [[0, e^{-i phi}], [e^{i phi}, 0]]``.
    """
    half = 0.5 * amplitude
    c = math.cos(half)
    s = math.sin(half)
    e = complex(math.cos(phase), math.sin(phase))  # e^{i phi}
    return np.array(
        [[c + 0.0j, -1.0j * s * e.conjugate()], [-1.0j * s * e, c + 0.0j]]
    )


def faulty_pulse(phase: float, amplitude: float, eps: float) -> Unitary2:
    """A pulse whose amplitude systematically overshoots by the fraction ``eps``."""
    return rotation(phase, (1.0 + eps) * amplitude)


def compose(seq: PulseSequence, eps: float) -> Unitary2:
    """Operator product of the sequence's faulty pulses, index 1 leftmost."""
    out = np.eye(2, dtype=complex)
    for phi in seq.phases:
        out = out @ faulty_pulse(phi, seq.theta0, eps)
    return out


def trace_distance(U: Unitary2, V: Unitary2) -> float:
    """Half the sum of the singular values of ``U - V``.

    For a 2x2 difference ``A`` the singular values satisfy
    ``(s1 + s2)^2 = ||A||_F^2 + 2*|det A|``, which avoids an SVD.
    """
    A = np.asarray(U, dtype=complex) - np.asarray(V, dtype=complex)
    frob2 = float(np.sum(A.real**2 + A.imag**2))
    absdet = abs(A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
    val = frob2 + 2.0 * absdet
    return 0.5 * math.sqrt(val) if val > 0.0 else 0.0


def infidelity(U: Unitary2, V: Unitary2) -> float:
    """``1 - |Tr(U V^dag)| / 2``.

    Vanishes iff ``U = e^{i a} V``: unlike :func:`trace_distance` this metric
    is blind to the global phase, which is why the two obey only the one-sided
    bound ``infidelity <= trace_distance``.
    """
    prod_trace = np.trace(np.asarray(U) @ np.asarray(V).conj().T)
    return max(0.0, 1.0 - 0.5 * abs(prod_trace))


def transition_probability(U: Unitary2) -> float:
    """``|<1|U|0>|^2``: population transferred from the ground state."""
    return float(abs(np.asarray(U)[1, 0]) ** 2)
