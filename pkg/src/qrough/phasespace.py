"""Numerical Roughness oracle: grid-sampled Wigner and Husimi fields.

Convention (hbar = 1 quadratures, alpha = (q + i p)/sqrt(2)):

  W kernels: W_00 = (1/pi) e^{-r^2},  W_11 = (1/pi)(2 r^2 - 1) e^{-r^2},
             W_{|0><1|} = (sqrt(2)/pi)(q + i p) e^{-r^2}
  Q kernels: Q_00 = (1/2pi) e^{-r^2/2},  Q_11 = (1/2pi)(r^2/2) e^{-r^2/2},
             Q_{|0><1|} = (1/2pi) (q + i p)/sqrt(2) e^{-r^2/2}

with r^2 = q^2 + p^2. Both fields integrate to 1 over dq dp. This is the
unique scaling under which the grid-integrated squared Roughness
2 pi Int |W - Q|^2 dq dp reproduces the closed-form coefficient matrix, which
is the ground truth for convention correctness. (A coherent-state-peak
normalization of Q would put its vacuum peak at 1/pi; here it is 1/(2 pi).)

This module is verification harness only: campaigns always use the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import CoverageError
from .states import SingleQubitState

DEFAULT_HALF_WIDTH = 7.0
DEFAULT_POINTS = 512
COVERAGE_TOL = 1e-4


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Uniform symmetric (q, p) lattice."""

    half_width: float = DEFAULT_HALF_WIDTH
    points_per_axis: int = DEFAULT_POINTS

    def __post_init__(self):
        if self.points_per_axis < 64:
            raise ValueError(f"points_per_axis must be >= 64, got {self.points_per_axis}")
        if self.half_width <= 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")

    @property
    def q(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points_per_axis)

    @property
    def p(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points_per_axis)

    def mesh(self):
        return np.meshgrid(self.q, self.p, indexing="ij")

    def integrate(self, field: np.ndarray) -> float:
        return float(simpson(simpson(field, x=self.p, axis=1), x=self.q))


def _check_coverage(grid: PhaseSpaceGrid, field: np.ndarray, name: str) -> None:
    total = grid.integrate(field)
    if abs(total - 1.0) > COVERAGE_TOL:
        raise CoverageError(
            f"{name} field integrates to {total:.8g}; grid does not cover the state support"
        )


def wigner_qubit(state: SingleQubitState, grid: PhaseSpaceGrid) -> np.ndarray:
    """Wigner field of a state supported on the two lowest Fock levels."""
    qm, pm = grid.mesh()
    r2 = qm * qm + pm * pm
    g = np.exp(-r2)
    a01 = state.a(0, 1)
    field = (
        state.a00 * g
        + state.a11 * (2.0 * r2 - 1.0) * g
        + 2.0 * np.real(a01 * (qm + 1j * pm)) * np.sqrt(2.0) * g
    ) / np.pi
    _check_coverage(grid, field, "Wigner")
    return field


def husimi_qubit(state: SingleQubitState, grid: PhaseSpaceGrid) -> np.ndarray:
    """Husimi field of a state supported on the two lowest Fock levels."""
    qm, pm = grid.mesh()
    r2 = qm * qm + pm * pm
    h = np.exp(-r2 / 2.0)
    a01 = state.a(0, 1)
    field = (
        state.a00 * h
        + state.a11 * (r2 / 2.0) * h
        + 2.0 * np.real(a01 * (qm + 1j * pm)) / np.sqrt(2.0) * h
    ) / (2.0 * np.pi)
    _check_coverage(grid, field, "Husimi")
    return field


def roughness_numeric(state: SingleQubitState, grid: PhaseSpaceGrid | None = None) -> float:
    """R = sqrt(2 pi Int |W - Q|^2 dq dp) by composite Simpson integration."""
    if grid is None:
        grid = PhaseSpaceGrid()
    w = wigner_qubit(state, grid)
    q = husimi_qubit(state, grid)
    diff2 = (w - q) ** 2
    return float(np.sqrt(2.0 * np.pi * grid.integrate(diff2)))


def field_to_csv(grid: PhaseSpaceGrid, field: np.ndarray) -> str:
    """CSV dump 'q,p,value', row-major over the grid, 17-significant-digit reals."""
    lines = ["q,p,value"]
    qv, pv = grid.q, grid.p
    for i in range(grid.points_per_axis):
        for j in range(grid.points_per_axis):
            lines.append(f"{qv[i]:.17g},{pv[j]:.17g},{field[i, j]:.17g}")
    return "\n".join(lines) + "\n"
