"""Rebuild the Roughness quadratic-form matrix from phase-space overlap integrals.

Everything here is exact rational arithmetic: for qubit indices (all in {0, 1})
each overlap value is a rational number, so the reconstruction of the 3x3
coefficient matrix is a bit-exact computation, not a floating-point estimate.

Overlap kinds, for operator indices (n, m) and (n', m'):
  pipi    : delta_{nn'} delta_{mm'}
  psipsi  : delta_{n-m,n'-m'} / sqrt(n! m! n'! m'!) * (1/2)^(1+v) * v!
  pipsi   : (2/3) delta_{n-m,n'-m'} (-1)^Y  sqrt(Y!/(X!Y!Y'!)) 2^(X-Y)  (1/3)^u
              * 2F1(-Y,  u+1;  X-Y+1;  4/3)
  psipi   : the primed counterpart, with u' = (X'-Y'+X+Y)/2
with X = max(n, m), Y = min(n, m), primed analogues, u = (X-Y+X'+Y')/2 and
v = (n+m+n'+m')/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

import numpy as np

from .errors import QroughError
from .states import SingleQubitState

KINDS = ("pipi", "psipsi", "pipsi", "psipi")

#: target of the reconstruction, entries of the closed-form coefficient matrix
LAMBDA_TARGET = [
    [Fraction(18, 108), Fraction(0), Fraction(-21, 108)],
    [Fraction(0), Fraction(39, 108), Fraction(0)],
    [Fraction(-21, 108), Fraction(0), Fraction(55, 108)],
]


def hyp2f1_terminating(a: int, b, c, x):
    """Terminating Gauss hypergeometric sum 2F1(a, b; c; x) for a in {0, -1, -2, ...}.

    Evaluated as the finite series sum_k (a)_k (b)_k / (c)_k x^k / k! with
    rising factorials; exact when called with Fraction arguments.
    """
    if not (isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1)) or a > 0:
        raise QroughError(f"series does not terminate: a = {a!r} is not a non-positive integer")
    n_terms = -int(a)
    total = x * 0 + 1  # matches the arithmetic type of x
    term = total
    for k in range(n_terms):
        denom = c + k
        if denom == 0:
            raise QroughError(f"pole in denominator parameter c = {c!r} at term {k + 1}")
        term = term * (a + k) * (b + k) * x / (denom * (k + 1))
        total = total + term
    return total


def _exact_inv_sqrt(n: int) -> Fraction:
    # every factorial product reaching here must be a perfect square
    r = isqrt(n)
    if r * r != n:
        raise QroughError(f"non-square factorial product {n}; outside the exact-rational domain")
    return Fraction(1, r)


def overlap(kind: str, n: int, m: int, np_: int, mp_: int) -> Fraction:
    """One overlap integral value for indices in {0, 1}, as an exact rational."""
    if kind not in KINDS:
        raise QroughError(f"unknown overlap kind {kind!r}; expected one of {KINDS}")
    for idx in (n, m, np_, mp_):
        if idx not in (0, 1):
            raise QroughError(f"index {idx!r} outside the qubit range {{0, 1}}")

    if kind == "pipi":
        return Fraction(int(n == np_ and m == mp_))

    if n - m != np_ - mp_:  # delta_{n-m, n'-m'} selection rule
        return Fraction(0)

    x_, y_ = max(n, m), min(n, m)
    xp_, yp_ = max(np_, mp_), min(np_, mp_)

    if kind == "psipsi":
        v = (n + m + np_ + mp_) // 2
        pref = _exact_inv_sqrt(factorial(n) * factorial(m) * factorial(np_) * factorial(mp_))
        return pref * Fraction(1, 2) ** (1 + v) * factorial(v)

    if kind == "pipsi":
        u = (x_ - y_ + xp_ + yp_) // 2
        pref = _exact_inv_sqrt(factorial(x_) * factorial(y_) * factorial(yp_)) * isqrt(
            factorial(y_)
        )
        f = hyp2f1_terminating(-y_, Fraction(u + 1), Fraction(x_ - y_ + 1), Fraction(4, 3))
        return (
            Fraction(2, 3)
            * (-1) ** y_
            * pref
            * Fraction(2) ** (x_ - y_)
            * Fraction(1, 3) ** u
            * f
        )

    # psipi: primed counterpart
    u = (xp_ - yp_ + x_ + y_) // 2
    pref = _exact_inv_sqrt(factorial(x_) * factorial(y_) * factorial(xp_)) * isqrt(
        factorial(yp_)
    )
    f = hyp2f1_terminating(-yp_, Fraction(u + 1), Fraction(xp_ - yp_ + 1), Fraction(4, 3))
    return (
        Fraction(2, 3)
        * (-1) ** yp_
        * pref
        * Fraction(2) ** (xp_ - yp_)
        * Fraction(1, 3) ** u
        * f
    )


def bracket(n: int, m: int, np_: int, mp_: int) -> Fraction:
    """pipi + psipsi - pipsi - psipi for one index tuple."""
    return (
        overlap("pipi", n, m, np_, mp_)
        + overlap("psipsi", n, m, np_, mp_)
        - overlap("pipsi", n, m, np_, mp_)
        - overlap("psipi", n, m, np_, mp_)
    )


def overlap_table() -> dict:
    """All 4 x 16 overlap values keyed by kind and index tuple."""
    return {
        kind: {
            f"{n}{m}{np_}{mp_}": overlap(kind, n, m, np_, mp_)
            for n in (0, 1)
            for m in (0, 1)
            for np_ in (0, 1)
            for mp_ in (0, 1)
        }
        for kind in KINDS
    }


@dataclass(frozen=True)
class LambdaMatrix:
    """Symmetric 3x3 coefficient matrix in the (A00, sqrt(2) A01, A11) basis."""

    entries: tuple  # 3x3 nested tuple of Fractions

    def as_array(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries])

    def max_deviation_from_target(self) -> Fraction:
        return max(
            abs(self.entries[i][j] - LAMBDA_TARGET[i][j]) for i in range(3) for j in range(3)
        )


def build_lambda() -> LambdaMatrix:
    """Assemble the quadratic-form coefficients from the overlap brackets.

    Diagonal entries come from the (0,0,0,0) and (1,1,1,1) brackets; the
    (A00, A11) coupling from the (0,0)<->(1,1) cross bracket; the middle entry
    from the two |A01|^2 brackets divided by 2, which absorbs the sqrt(2)
    scaling of the middle vector component. Brackets mixing A01 with a
    diagonal coefficient vanish by the selection rules.
    """
    l11 = bracket(0, 0, 0, 0)
    l33 = bracket(1, 1, 1, 1)
    l13 = bracket(0, 0, 1, 1)
    if bracket(1, 1, 0, 0) != l13:
        raise QroughError("cross brackets (0,0,1,1) and (1,1,0,0) disagree")
    l22 = (bracket(0, 1, 0, 1) + bracket(1, 0, 1, 0)) / 2
    for tup in ((0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 1), (1, 1, 1, 0)):
        if bracket(*tup) != 0:
            raise QroughError(f"selection rules broken: bracket{tup} is nonzero")
    zero = Fraction(0)
    return LambdaMatrix(entries=((l11, zero, l13), (zero, l22, zero), (l13, zero, l33)))


def roughness_sq_from_overlaps(state: SingleQubitState) -> float:
    """Squared Roughness by direct double sum over all 16 index tuples.

    Independent of the closed form: uses only the overlap brackets and the
    raw A coefficients.
    """
    total = 0.0 + 0.0j
    for n in (0, 1):
        for m in (0, 1):
            for np_ in (0, 1):
                for mp_ in (0, 1):
                    b = bracket(n, m, np_, mp_)
                    if b:
                        total += np.conj(state.a(n, m)) * state.a(np_, mp_) * float(b)
    return float(total.real)
