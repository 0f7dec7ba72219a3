"""Single- and two-qubit density matrices: construction, validation, sampling, I/O.

Basis ordering is |00>, |01>, |10>, |11|; the first qubit is subsystem 1.
Sampling is deterministic: every draw is a pure function of an explicit seed,
and campaign code derives per-sample seeds from (master_seed, index) so results
do not depend on how work is partitioned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DegenerateInputError, DimensionError, ValidationError

RANK_EIGENVALUE_CUTOFF = 1e-9


def _validated(m, dim: int) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (dim, dim):
        raise DimensionError(f"expected {dim}x{dim} matrix, got shape {a.shape}")
    tr = np.trace(a)
    if abs(tr - 1.0) > 1e-12:
        raise ValidationError(f"unit-trace invariant violated: trace = {tr:.15g}")
    if linalg.hermitian_defect(a) > 1e-10:
        raise ValidationError(
            f"hermiticity invariant violated: defect = {linalg.hermitian_defect(a):.3e}"
        )
    w = np.linalg.eigvalsh(linalg.hermitianize(a))
    if w.min() < -1e-10:
        raise ValidationError(f"positivity invariant violated: eigenvalue {w.min():.3e}")
    return a


def _rank_hint(rho: np.ndarray) -> int:
    w = np.linalg.eigvalsh(linalg.hermitianize(rho))
    return int(np.sum(w > RANK_EIGENVALUE_CUTOFF))


@dataclass(frozen=True)
class SingleQubitState:
    """2x2 density matrix with the A-coefficient and v-vector views."""

    rho: np.ndarray

    def a(self, n: int, np_: int) -> complex:
        return complex(self.rho[n, np_])

    @property
    def a00(self) -> float:
        return float(self.rho[0, 0].real)

    @property
    def a11(self) -> float:
        return float(self.rho[1, 1].real)

    @property
    def v_vector(self) -> np.ndarray:
        """(A00, sqrt(2) A01, A11); satisfies v^dag v = Tr{rho^2}.

        The sqrt(2) scaling (rather than 1/sqrt(2)) is what makes both
        delta = 1 - v^dag v and the quadratic-form Roughness hold at once.
        """
        return np.array(
            [self.rho[0, 0].real, np.sqrt(2.0) * self.rho[0, 1], self.rho[1, 1].real],
            dtype=complex,
        )

    @property
    def purity(self) -> float:
        return float(np.trace(self.rho @ self.rho).real)


@dataclass(frozen=True)
class TwoQubitState:
    """4x4 density matrix with the Psi coefficient view and a rank hint."""

    rho: np.ndarray
    rank_hint: int

    def psi(self, m: int, mp: int, k: int, kp: int) -> complex:
        return complex(self.rho[2 * m + k, 2 * mp + kp])

    @property
    def purity(self) -> float:
        return float(np.trace(self.rho @ self.rho).real)


def validate_single(m) -> SingleQubitState:
    return SingleQubitState(rho=_validated(m, 2))


def validate_two(m) -> TwoQubitState:
    a = _validated(m, 4)
    return TwoQubitState(rho=a, rank_hint=_rank_hint(a))


def validate_density(m):
    """Typed state from a raw 2x2 or 4x4 matrix, with all invariants checked."""
    a = np.asarray(m, dtype=complex)
    if a.shape == (2, 2):
        return validate_single(a)
    if a.shape == (4, 4):
        return validate_two(a)
    raise DimensionError(f"expected 2x2 or 4x4 matrix, got shape {a.shape}")


_BELL_AMPLITUDES = {
    "phi+": (1, 0, 0, 1),
    "phi-": (1, 0, 0, -1),
    "psi+": (0, 1, 1, 0),
    "psi-": (0, 1, -1, 0),
}

BELL_KINDS = tuple(_BELL_AMPLITUDES)


def bell(kind: str) -> TwoQubitState:
    """Projector of one of the four Bell states ('phi+', 'phi-', 'psi+', 'psi-')."""
    key = kind.lower()
    if key not in _BELL_AMPLITUDES:
        raise ValueError(f"unknown Bell state {kind!r}; expected one of {BELL_KINDS}")
    return pure_from_amplitudes(*_BELL_AMPLITUDES[key])


def pure_from_amplitudes(c00, c01, c10, c11) -> TwoQubitState:
    """Normalized projector |psi><psi| from basis amplitudes."""
    v = np.array([c00, c01, c10, c11], dtype=complex)
    norm = np.linalg.norm(v)
    if norm < 1e-150:
        raise DegenerateInputError("all-zero amplitude vector")
    v = v / norm
    return TwoQubitState(rho=np.outer(v, v.conj()), rank_hint=1)


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def derive_seed(master_seed: int, index: int) -> tuple:
    """Per-sample seed key; independent of worker partitioning."""
    return (master_seed, index)


def haar_random_pure(seed) -> TwoQubitState:
    """Haar-random pure two-qubit state (normalized complex Gaussian 4-vector)."""
    rng = _rng(seed)
    while True:
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        if np.linalg.norm(v) > 1e-300:
            break
    v /= np.linalg.norm(v)
    return TwoQubitState(rho=np.outer(v, v.conj()), rank_hint=1)


def ginibre_random(rank: int, seed) -> TwoQubitState:
    """Random density matrix G G^dag / Tr{G G^dag} with G a 4 x rank Ginibre draw."""
    if rank not in (1, 2, 3, 4):
        raise ValueError(f"rank must be in 1..4, got {rank!r}")
    rng = _rng(seed)
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    w = g @ g.conj().T
    rho = linalg.hermitianize(w / np.trace(w).real)
    return TwoQubitState(rho=rho, rank_hint=rank)


def reduce(state: TwoQubitState, part: int) -> SingleQubitState:
    """Reduced state of subsystem `part` (1 or 2) via the partial trace."""
    return SingleQubitState(rho=linalg.partial_trace(state.rho, keep=part))


def extract_zw(state: TwoQubitState) -> tuple[float, float]:
    """(z, w) = (Psi_0000 + Psi_0011, Psi_0000 + Psi_1100); both in [0, 1]."""
    z = (state.psi(0, 0, 0, 0) + state.psi(0, 0, 1, 1)).real
    w = (state.psi(0, 0, 0, 0) + state.psi(1, 1, 0, 0)).real
    return z, w


# --- state file format -------------------------------------------------------
#
# JSON object {"dim": d, "matrix": [[[re, im], ...], ...]}, row-major nesting,
# reals serialized with 17 significant digits.


def state_to_json(state) -> str:
    rho = state.rho
    dim = rho.shape[0]
    matrix = [
        [[float(f"{rho[i, j].real:.17g}"), float(f"{rho[i, j].imag:.17g}")] for j in range(dim)]
        for i in range(dim)
    ]
    return json.dumps({"dim": dim, "matrix": matrix})


def state_from_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed state JSON: {exc}") from exc
    if not isinstance(obj, dict) or "dim" not in obj or "matrix" not in obj:
        raise ValidationError('state JSON must be an object with "dim" and "matrix"')
    dim = obj["dim"]
    try:
        m = np.array(
            [[complex(re, im) for re, im in row] for row in obj["matrix"]], dtype=complex
        )
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed matrix field: {exc}") from exc
    if m.shape != (dim, dim):
        raise ValidationError(f"matrix shape {m.shape} does not match dim {dim}")
    return validate_density(m)


def load_state(path):
    with open(path, "r", encoding="utf-8") as fh:
        return state_from_json(fh.read())


def dump_state(state, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(state_to_json(state))
        fh.write("\n")
