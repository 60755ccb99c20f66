"""Shared deterministic test fixtures.

Seedless by design: the cloud generator walks a generalized-golden-ratio
Kronecker sequence, so every run sees the same "random" cases.
"""

from __future__ import annotations

import math


def generalized_golden(d: int) -> float:
    x = 2.0
    for _ in range(64):
        x = (1.0 + x) ** (1.0 / (d + 1))
    return x


def kronecker_sequence(dim: int, count: int, skip: int = 0) -> list[tuple[float, ...]]:
    """Low-discrepancy points in [0, 1)^dim."""
    g = generalized_golden(dim)
    alphas = [g ** -(j + 1) for j in range(dim)]
    return [
        tuple((0.5 + (i + 1 + skip) * a) % 1.0 for a in alphas)
        for i in range(count)
    ]


def cloud_cases(count: int) -> list[tuple[int, list[tuple[float, ...]]]]:
    """Deterministic Psi-point clouds: n in {2, 3}, 1..12 points, coords in [0, 2].

    Each axis keeps at least one coordinate bounded away from zero so the
    enclosing-simplex program never degenerates.
    """
    sizes = kronecker_sequence(1, count, skip=17)
    streams = {2: iter(kronecker_sequence(2, 13 * count)),
               3: iter(kronecker_sequence(3, 13 * count))}
    cases = []
    for i in range(count):
        n = 2 if i % 5 < 3 else 3
        size = 1 + int(sizes[i][0] * 12.0)
        pts = [tuple(2.0 * c for c in next(streams[n])) for _ in range(size)]
        for j in range(n):
            if max(p[j] for p in pts) < 0.05:
                pts[0] = tuple(0.8 if jj == j else c for jj, c in enumerate(pts[0]))
        cases.append((n, pts))
    return cases


def covering_kappa_punctured(z: complex, X: complex) -> float:
    """Kobayashi metric of the punctured disc, computed from scratch.

    p(lam) = exp((lam + 1)/(lam - 1)) is a universal covering of the
    punctured disc, so kappa at p(lam0) is the disc metric pushed forward:
    kappa(p(lam0); p'(lam0) v) = |v| / (1 - |lam0|^2).  Rotation invariance
    reduces everything to |z|.
    """
    import mpmath as mp

    with mp.workdps(50):
        w = mp.log(abs(mp.mpc(z)))  # real and negative on the punctured disc
        lam = (w + 1) / (w - 1)
        dp = mp.exp(w) * (-2) / (lam - 1) ** 2
        return float(abs(mp.mpc(X)) / abs(dp) / (1 - abs(lam) ** 2))


def sphere_directions(n: int, count: int, skip: int = 0) -> list[tuple[complex, ...]]:
    """Deterministic complex unit vectors (moduli + phases from the sequence)."""
    dirs = []
    for row in kronecker_sequence(2 * n, count, skip=skip):
        vec = [
            (0.05 + 0.95 * row[2 * j]) * complex(math.cos(2 * math.pi * row[2 * j + 1]),
                                                 math.sin(2 * math.pi * row[2 * j + 1]))
            for j in range(n)
        ]
        norm = math.sqrt(sum(abs(v) ** 2 for v in vec))
        dirs.append(tuple(v / norm for v in vec))
    return dirs
