"""Scalar quantumness measures and both sides of the complementary relations.

Constants come from the closed-form single-qubit Roughness
R^2 = 55/108 - (37/108) A00 (2 - A00) - (39/108) delta
and its quadratic form R^2 = v^dag Lambda v with
Lambda = (1/108) [[18, 0, -21], [0, 39, 0], [-21, 0, 55]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, states
from .errors import ContractViolation, InvariantViolation
from .states import SingleQubitState, TwoQubitState

LAMBDA = np.array([[18.0, 0.0, -21.0], [0.0, 39.0, 0.0], [-21.0, 0.0, 55.0]]) / 108.0

R2_MIN = 1.0 / 6.0
R2_MAX = 55.0 / 108.0
KAPPA = 19.0 / 108.0

# Eigenvalues of the concurrence matrix M = sqrt(rho) rho_tilde sqrt(rho) below
# this cutoff are rank-deficiency noise (exact zeros for pure states); clipping
# them keeps the lambda-sum accurate to ~1e-14 instead of sqrt(eps).
_M_EIGENVALUE_CLIP = 1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class MeasureTuple:
    """All per-state measures used by the campaigns and the CLI."""

    C: float
    C2: float
    delta1: float
    delta2: float
    R2_1: float
    R2_2: float
    Rplus2: float
    Ne: float
    fC: float
    z: float
    w: float
    purity: float

    def as_dict(self) -> dict:
        return {
            "C": self.C,
            "C2": self.C2,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "R2_1": self.R2_1,
            "R2_2": self.R2_2,
            "Rplus2": self.Rplus2,
            "Ne": self.Ne,
            "fC": self.fC,
            "z": self.z,
            "w": self.w,
            "purity": self.purity,
        }


def concurrence(state: TwoQubitState) -> float:
    """Two-qubit concurrence max(0, l1 - l2 - l3 - l4).

    Uses the Hermitian route: M = sqrt(rho) rho_tilde sqrt(rho) with
    rho_tilde = (sy x sy) rho* (sy x sy); the l_k are the square roots of the
    eigenvalues of M in decreasing order.
    """
    rho = state.rho
    rho_tilde = _SYSY @ rho.conj() @ _SYSY
    s = linalg.sqrt_psd(rho)
    m = linalg.hermitianize(s @ rho_tilde @ s)
    w = np.linalg.eigvalsh(m)
    if w.min() < -1e-10:
        raise ContractViolation(f"concurrence matrix eigenvalue {w.min():.3e} below floor")
    w = np.where(w < _M_EIGENVALUE_CLIP, 0.0, w)
    lam = np.sqrt(w)[::-1]
    c = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(max(c, 0.0), 1.0))


def linear_entropy(state: SingleQubitState) -> float:
    """delta = 1 - Tr{rho^2}, in [0, 1/2] for a qubit."""
    return 1.0 - state.purity


def roughness_sq_qubit(state: SingleQubitState) -> float:
    """Closed-form squared Roughness of a single-qubit state."""
    a00 = state.a00
    delta = linear_entropy(state)
    return R2_MAX - (37.0 / 108.0) * a00 * (2.0 - a00) - (39.0 / 108.0) * delta


def roughness_sq_vform(state: SingleQubitState) -> float:
    """Squared Roughness via the quadratic form v^dag Lambda v (same value)."""
    v = state.v_vector
    return float(np.real(v.conj() @ (LAMBDA @ v)))


def r_plus_sq(state: TwoQubitState) -> float:
    """Mean of the two subsystem squared-Roughness values."""
    r1 = roughness_sq_qubit(states.reduce(state, 1))
    r2 = roughness_sq_qubit(states.reduce(state, 2))
    return 0.5 * (r1 + r2)


def excitation_number(state: TwoQubitState) -> float:
    """Total excitation number N_e = 2 - z - w, in [0, 2]."""
    z, w = states.extract_zw(state)
    return 2.0 - z - w


def f_c(state: TwoQubitState) -> float:
    """Ground-state auto-correlation f_C = (z^2 + w^2)/2, in [0, 1]."""
    z, w = states.extract_zw(state)
    return 0.5 * (z * z + w * w)


def combined_sum_lhs(state: TwoQubitState) -> float:
    """R_+^2 + (39/216)(delta1 + delta2); guaranteed inside [1/6, 55/108]."""
    d1 = linear_entropy(states.reduce(state, 1))
    d2 = linear_entropy(states.reduce(state, 2))
    value = r_plus_sq(state) + (39.0 / 216.0) * (d1 + d2)
    if value < R2_MIN - 1e-10 or value > R2_MAX + 1e-10:
        raise InvariantViolation(
            f"combined sum {value:.15g} outside [1/6, 55/108]; measure bug"
        )
    return value


def relation_rhs(state: TwoQubitState) -> float:
    """(37/108)(N_e + f_C) - 19/108, the measurable side of the identity."""
    return (37.0 / 108.0) * (excitation_number(state) + f_c(state)) - KAPPA


def relation_residual_mixed(state: TwoQubitState) -> float:
    """|LHS - RHS| of the any-rank identity; an algebraic zero up to rounding."""
    return abs(combined_sum_lhs(state) - relation_rhs(state))


def relation_residual_pure(state: TwoQubitState, c: float | None = None) -> float:
    """|R_+^2 + C~^2 - RHS| for a globally pure state, with C~^2 = (39/216) C^2."""
    if state.purity < 1.0 - 1e-10:
        raise ContractViolation(
            f"pure-state relation requires purity >= 1 - 1e-10, got {state.purity:.12g}"
        )
    if c is None:
        c = concurrence(state)
    lhs = r_plus_sq(state) + (39.0 / 216.0) * c * c
    return abs(lhs - relation_rhs(state))


def measure_tuple(state: TwoQubitState) -> MeasureTuple:
    """Every measure of one state in a single record."""
    red1 = states.reduce(state, 1)
    red2 = states.reduce(state, 2)
    d1 = linear_entropy(red1)
    d2 = linear_entropy(red2)
    r2_1 = roughness_sq_qubit(red1)
    r2_2 = roughness_sq_qubit(red2)
    z, w = states.extract_zw(state)
    c = concurrence(state)
    return MeasureTuple(
        C=c,
        C2=c * c,
        delta1=d1,
        delta2=d2,
        R2_1=r2_1,
        R2_2=r2_2,
        Rplus2=0.5 * (r2_1 + r2_2),
        Ne=2.0 - z - w,
        fC=0.5 * (z * z + w * w),
        z=z,
        w=w,
        purity=state.purity,
    )
