"""Pure-Python reference kernels for the hot numeric paths.

The compiled extension ``_ckernels`` mirrors this module function-for-function;
:mod:`cpseq.kernels` picks whichever is available (``CPSEQ_PURE=1`` forces
this one).  Both operate on plain float64/complex128 numpy arrays.

Sign/stacking conventions shared by all kernels: subset exponents carry
alternating signs (``exp(-i * sum_k (-1)^k phi_{h_k})``), and reduced residual
stacks are, entry ``i`` running 1..n:

* antipalindromic (sym=0):  odd ``i`` -> ``Re(table[i]) - f[i]``,
  even ``i`` -> ``Im(table[i])``;
* palindromic (sym=1):      odd ``i`` -> ``Re(table[i]) - f[i]``,
  even ``i`` -> ``Im(table[i-1])``.
"""

from __future__ import annotations

import numpy as np

AP = 0
PD = 1


def expand_half(half: np.ndarray, sym: int) -> np.ndarray:
    """Mirror a half phase list into the full list (negated mirror for AP)."""
    half = np.asarray(half, dtype=np.float64)
    if sym == AP:
        return np.concatenate([half, -half[::-1]])
    return np.concatenate([half, half[::-1]])


def phase_table(phases: np.ndarray, jmax: int) -> np.ndarray:
    """Subset phase sums for orders ``0..jmax`` of a full phase list."""
    phases = np.asarray(phases, dtype=np.float64)
    vals = np.zeros(jmax + 1, dtype=np.complex128)
    vals[0] = 1.0
    for k in range(phases.shape[0]):
        ep = np.exp(1j * phases[k])
        em = ep.conjugate()
        top = min(jmax, k + 1)
        for j in range(top, 0, -1):
            vals[j] = vals[j] + vals[j - 1] * (ep if j % 2 == 1 else em)
    return vals


def _prefix_tables(full: np.ndarray, jmax: int) -> np.ndarray:
    """All intermediate stages of the phase-sum recursion, shape (L+1, jmax+1)."""
    L = full.shape[0]
    V = np.zeros((L + 1, jmax + 1), dtype=np.complex128)
    V[0, 0] = 1.0
    for k in range(L):
        ep = np.exp(1j * full[k])
        em = ep.conjugate()
        V[k + 1] = V[k]
        top = min(jmax, k + 1)
        for j in range(top, 0, -1):
            V[k + 1, j] = V[k, j] + V[k, j - 1] * (ep if j % 2 == 1 else em)
    return V


def full_derivative_table(full: np.ndarray, jmax: int) -> np.ndarray:
    """d(table[j]) / d(full phase p), shape (L, jmax+1)."""
    full = np.asarray(full, dtype=np.float64)
    L = full.shape[0]
    V = _prefix_tables(full, jmax)
    dT = np.zeros((L, jmax + 1), dtype=np.complex128)
    for p in range(L):
        d = np.zeros(jmax + 1, dtype=np.complex128)
        for k in range(p, L):
            ep = np.exp(1j * full[k])
            em = ep.conjugate()
            top = min(jmax, k + 1)
            for j in range(top, 0, -1):
                e = ep if j % 2 == 1 else em
                d[j] = d[j] + d[j - 1] * e
                if k == p:
                    sgn = 1.0 if j % 2 == 1 else -1.0
                    d[j] = d[j] + V[k, j - 1] * (1j * sgn) * e
        dT[p] = d
    return dT


def reduced_residual(half: np.ndarray, fvals: np.ndarray, sym: int) -> np.ndarray:
    """Stacked residual of the symmetry-reduced constraint system."""
    half = np.asarray(half, dtype=np.float64)
    n = half.shape[0]
    table = phase_table(expand_half(half, sym), n)
    r = np.empty(n, dtype=np.float64)
    for i in range(1, n + 1):
        if i % 2 == 1:
            r[i - 1] = table[i].real - fvals[i - 1]
        elif sym == AP:
            r[i - 1] = table[i].imag
        else:
            r[i - 1] = table[i - 1].imag
    return r


def reduced_jacobian(half: np.ndarray, sym: int) -> np.ndarray:
    """Jacobian of :func:`reduced_residual` with respect to the half phases."""
    half = np.asarray(half, dtype=np.float64)
    n = half.shape[0]
    L = 2 * n
    full = expand_half(half, sym)
    dT = full_derivative_table(full, n)
    mirror_sign = -1.0 if sym == AP else 1.0
    J = np.empty((n, n), dtype=np.float64)
    for k in range(n):
        dvec = dT[k] + mirror_sign * dT[L - 1 - k]
        for i in range(1, n + 1):
            if i % 2 == 1:
                J[i - 1, k] = dvec[i].real
            elif sym == AP:
                J[i - 1, k] = dvec[i].imag
            else:
                J[i - 1, k] = dvec[i - 1].imag
    return J


def newton_reduced(
    half: np.ndarray,
    fvals: np.ndarray,
    sym: int,
    tol: float = 1e-12,
    maxit: int = 60,
):
    """Damped Newton on the reduced system; returns (root, norm, converged)."""
    x = np.array(half, dtype=np.float64)
    r = reduced_residual(x, fvals, sym)
    rn = float(np.sqrt(r @ r))
    for _ in range(maxit):
        if rn <= tol:
            return x, rn, True
        J = reduced_jacobian(x, sym)
        try:
            step = np.linalg.solve(J, -r)
        except np.linalg.LinAlgError:
            return x, rn, False
        lam = 1.0
        moved = False
        for _ in range(25):
            xn = x + lam * step
            rnew = reduced_residual(xn, fvals, sym)
            rnn = float(np.sqrt(rnew @ rnew))
            if rnn <= tol or rnn < rn * (1.0 - 1e-4 * lam):
                x, r, rn = xn, rnew, rnn
                moved = True
                break
            lam *= 0.5
        if not moved:
            return x, rn, rn <= tol
    return x, rn, rn <= tol


def multistart(
    starts: np.ndarray,
    fvals: np.ndarray,
    sym: int,
    tol: float = 1e-12,
    maxit: int = 60,
):
    """Run :func:`newton_reduced` from every row of ``starts``."""
    starts = np.asarray(starts, dtype=np.float64)
    m, n = starts.shape
    roots = np.empty((m, n), dtype=np.float64)
    norms = np.empty(m, dtype=np.float64)
    ok = np.zeros(m, dtype=np.uint8)
    for i in range(m):
        root, rn, conv = newton_reduced(starts[i], fvals, sym, tol, maxit)
        roots[i] = root
        norms[i] = rn
        ok[i] = 1 if conv else 0
    return roots, norms, ok
