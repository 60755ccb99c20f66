"""Diagonal Hermitian forms, simplexes in the positive orthant, and the Psi map.

The squared-modulus map Psi(z) = (|z_1|^2, ..., |z_n|^2) identifies bounded
complete Reinhardt ellipsoids {sum |X_j|^2 / a_j < 1} with simplexes
T_a = {u in R^n_+ : sum u_j / a_j < 1}, and vol T_a = prod(a_j) / n!.
Everything downstream (the minimal-ellipsoid computation in particular)
happens on the simplex side, so these two parametrizations share the same
intercept tuple and convert losslessly.

Infinite intercepts/axes are first-class: an infinite entry means the
figure is unbounded along that coordinate and the corresponding term is
simply absent from the defining sum. No sentinel values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

DEFAULT_TOL = 1e-12

CVector = tuple[complex, ...]
PsiPoint = tuple[float, ...]


class UnboundedSimplexError(ValueError):
    """Volume requested for a simplex with an infinite intercept."""


def _check_axes(axes: Sequence[float]) -> tuple[float, ...]:
    t = tuple(float(a) for a in axes)
    if not t:
        raise ValueError("need at least one axis")
    for a in t:
        if not (a > 0.0):  # rejects 0, negatives and NaN
            raise ValueError(f"axes must lie in (0, inf], got {a!r}")
    return t


@dataclass(frozen=True)
class DiagonalHermitianForm:
    """Seminorm q(X) = sqrt(sum over finite axes of |X_j|^2 / a_j).

    ``axes`` are the squared semi-axes of the unit ball; an infinite entry
    removes the coordinate from the sum (the ball is a cylinder there).
    """

    axes: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "axes", _check_axes(self.axes))

    @property
    def dim(self) -> int:
        return len(self.axes)

    def __call__(self, X: Sequence[complex]) -> float:
        if len(X) != self.dim:
            raise ValueError("dimension mismatch")
        return math.sqrt(
            sum(abs(x) ** 2 / a for x, a in zip(X, self.axes) if math.isfinite(a))
        )


@dataclass(frozen=True)
class SimplexParams:
    """Simplex T_a = {u in R^n_+ : sum over finite intercepts of u_j/a_j < 1}."""

    intercepts: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intercepts", _check_axes(self.intercepts))

    @property
    def dim(self) -> int:
        return len(self.intercepts)


def psi(z: Sequence[complex]) -> PsiPoint:
    """Coordinatewise squared modulus, Psi(z)_j = |z_j|^2."""
    return tuple(abs(w) ** 2 for w in z)


def simplex_volume(t: SimplexParams) -> float:
    """vol T_a = prod(a_j) / n!.  Raises for unbounded simplexes."""
    if any(math.isinf(a) for a in t.intercepts):
        raise UnboundedSimplexError("unbounded simplex has no volume")
    return math.prod(t.intercepts) / math.factorial(t.dim)


def form_contains(q: DiagonalHermitianForm, p: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    """Whether the Psi-point p satisfies sum over finite axes of p_j/a_j <= 1.

    This is exactly membership of p in the closed simplex T_axes, i.e.
    membership of any preimage under Psi in the closed ellipsoid of q.
    """
    if len(p) != q.dim:
        raise ValueError("dimension mismatch")
    for u in p:
        if u < 0:
            raise ValueError("Psi-points have nonnegative coordinates")
    s = sum(u / a for u, a in zip(p, q.axes) if math.isfinite(a))
    return s <= 1.0 + tol + tol * abs(s)


def simplex_contains(t: SimplexParams, p: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    return form_contains(DiagonalHermitianForm(t.intercepts), p, tol)


def form_to_simplex(q: DiagonalHermitianForm) -> SimplexParams:
    """Psi-image of the unit ball of q; parameters carry over unchanged."""
    return SimplexParams(q.axes)


def simplex_to_form(t: SimplexParams) -> DiagonalHermitianForm:
    """Inverse of :func:`form_to_simplex`; exact round-trip including inf."""
    return DiagonalHermitianForm(t.intercepts)
