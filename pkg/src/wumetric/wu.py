"""Minimal-volume enclosing simplexes and the induced Wu pseudometrics.

A diagonal Hermitian ellipsoid {sum |X_j|^2 / a_j < 1} corresponds under
Psi(z) = (|z_1|^2, ..., |z_n|^2) to the simplex T_a with axis intercepts
a.  Minimizing vol T_a = prod a_j / n! over simplexes containing a finite
point set u_1..u_m is, in the reciprocal variables b_j = 1/a_j, the concave
program

    maximize sum_j log b_j   subject to  <u_i, b> <= 1,  b > 0,

whose Lagrange dual is a diagonal D-optimal design problem over weights w
on the points: maximize sum_j log (U^T w)_j on the probability simplex.
The solver runs the classical multiplicative ascent w <- w * s / n_f with
s_i = sum_j u_ij / (U^T w)_j, interleaved with Newton solves of the active
set equations s_i = n_f, and certifies optimality through the duality gap
n_f * log(max_i s_i / n_f).

Axes may be fixed (intercept pinned, e.g. by an a-priori inclusion) or
dropped (degenerate directions removed before solving).  Fixing reduces to
a free-axes program of the same shape via u~_i = u_i,free / rho_i with
rho_i = 1 - <u_i,fixed part>.

``wu_metric`` chains degeneracy analysis, certificate-point extraction and
the simplex program into the minimal ellipsoid seminorm of an indicatrix,
and ``certify_contradiction_*`` package the volume-comparison arguments
that rule out distance decrease under particular holomorphic maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .busemann import (
    Indicatrix,
    UnsupportedIndicatrixError,
    absolute_directions,
    convexify,
    degeneracy,
    _polish_direction,
)
from .geometry import (
    DiagonalHermitianForm,
    PsiPoint,
    SimplexParams,
    simplex_volume,
)

DEFAULT_SOLVER_TOL = 1e-10


class InfeasibleProgramError(ValueError):
    """Fixed intercepts exclude one of the points."""


class DegenerateAxisError(ValueError):
    """Axis admits no enclosing simplex of finite positive volume."""


class SolverError(RuntimeError):
    def __init__(self, message: str, gap: float):
        super().__init__(message)
        self.gap = gap


@dataclass(frozen=True)
class SimplexProgram:
    """Minimal-volume enclosing simplex instance.

    points: Psi-points to enclose; fixed: axis -> pinned intercept;
    dropped: axes removed from the program (reported back as infinite
    intercepts); tolerance: duality-gap certificate threshold.
    """

    points: tuple[PsiPoint, ...]
    fixed: tuple[tuple[int, float], ...] = ()
    dropped: frozenset[int] = frozenset()
    tolerance: float = DEFAULT_SOLVER_TOL

    def __post_init__(self) -> None:
        pts = tuple(tuple(float(c) for c in p) for p in self.points)
        if not pts:
            raise ValueError("at least one point required")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points must share a dimension")
        for p in pts:
            for j, c in enumerate(p):
                if c < 0 or math.isnan(c):
                    raise ValueError("coordinates must be nonnegative")
                if math.isinf(c) and j not in self.dropped:
                    raise DegenerateAxisError(
                        f"infinite coordinate on axis {j}: degenerate, drop the axis first"
                    )
        object.__setattr__(self, "points", pts)
        fixed = tuple(sorted((int(j), float(v)) for j, v in dict(self.fixed).items()))
        for j, v in fixed:
            if not 0 <= j < n:
                raise ValueError(f"fixed axis {j} out of range")
            if j in self.dropped:
                raise ValueError(f"axis {j} both fixed and dropped")
            if not (v > 0 and math.isfinite(v)):
                raise ValueError("fixed intercepts must be positive and finite")
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "dropped", frozenset(int(j) for j in self.dropped))
        if any(not 0 <= j < n for j in self.dropped):
            raise ValueError("dropped axis out of range")

    @property
    def dim(self) -> int:
        return len(self.points[0])


def simplex_program(
    points: Sequence[Sequence[float]],
    fixed: Mapping[int, float] | None = None,
    dropped: Sequence[int] = (),
    tolerance: float = DEFAULT_SOLVER_TOL,
) -> SimplexProgram:
    return SimplexProgram(
        points=tuple(tuple(p) for p in points),
        fixed=tuple((fixed or {}).items()),
        dropped=frozenset(dropped),
        tolerance=tolerance,
    )


@dataclass(frozen=True)
class SolveInfo:
    params: SimplexParams
    gap: float
    iterations: int
    active: tuple[int, ...]
    weights: tuple[float, ...]

    @property
    def volume(self) -> float:
        finite = [a for a in self.params.intercepts if math.isfinite(a)]
        return math.prod(finite) / math.factorial(len(finite))


def _reduce(prog: SimplexProgram) -> tuple[np.ndarray, list[int], dict[int, float]]:
    """Scale out fixed axes; returns (reduced matrix, free axes, fixed map)."""
    n = prog.dim
    fixed = dict(prog.fixed)
    free = [j for j in range(n) if j not in fixed and j not in prog.dropped]
    u = np.array([[p[j] for j in range(n)] for p in prog.points], dtype=float)
    rho = np.ones(len(prog.points))
    for j, aj in fixed.items():
        rho -= u[:, j] / aj
    free_mass = u[:, free].sum(axis=1) if free else np.zeros(len(prog.points))
    feas_tol = 1e-12
    keep = []
    for i in range(len(prog.points)):
        if rho[i] < -feas_tol:
            raise InfeasibleProgramError(
                f"point {i} violates the fixed intercepts (slack {rho[i]:.3e})"
            )
        if free_mass[i] > 0.0:
            if rho[i] <= 0.0:
                raise InfeasibleProgramError(
                    f"point {i} saturates the fixed intercepts with free mass left"
                )
            keep.append(i)
        # rho >= 0 with no free mass: point already enclosed, constraint void
    reduced = u[np.ix_(keep, free)] / rho[keep, None] if keep else np.zeros((0, len(free)))
    if free:
        if reduced.shape[0] == 0:
            raise DegenerateAxisError(
                f"no point mass on free axes {free}: volume infimum 0 is not attained"
            )
        dead = [free[j] for j in range(len(free)) if reduced[:, j].max() <= 0.0]
        if dead:
            raise DegenerateAxisError(
                f"no point mass on axes {dead}: volume infimum 0 is not attained"
            )
    return reduced, free, fixed


def _assemble(
    prog: SimplexProgram, free: list[int], fixed: dict[int, float], b: np.ndarray
) -> SimplexParams:
    a = [math.inf] * prog.dim
    for j, v in fixed.items():
        a[j] = v
    for col, j in enumerate(free):
        a[j] = 1.0 / b[col]
    return SimplexParams(intercepts=tuple(a))


def _newton_attempt(
    u: np.ndarray, w: np.ndarray, tol: float
) -> tuple[np.ndarray, np.ndarray, float] | None:
    """Solve the active-set equations s_i(v) = K from the current iterate.

    Returns (b, full weights, certified gap) on success, None when the
    guessed support was wrong (caller keeps ascending).
    """
    m, k = u.shape
    mass = u.T @ w
    s = u @ (1.0 / mass)
    order = np.argsort(-s)
    cut = min(m, 3 * k)
    thresh = k * (1.0 - 1e-4)
    active = [int(i) for i in order[:cut] if s[i] >= thresh]
    if not active:
        active = [int(order[0])]
    active_set = set(active)
    for _ in range(2 * k + 10):
        ua = u[sorted(active_set)]
        idx = sorted(active_set)
        v = np.maximum(w[idx], 1e-16)
        v = v / v.sum()
        ok = True
        for _ in range(60):
            mass = ua.T @ v
            if mass.min() <= 0.0:
                ok = False
                break
            sa = ua @ (1.0 / mass)
            f = sa - k
            if np.max(np.abs(f)) <= 1e-13 * k:
                break
            gram = (ua / mass) @ (ua / mass).T
            try:
                step = np.linalg.solve(gram, f)
            except np.linalg.LinAlgError:
                step, *_ = np.linalg.lstsq(gram, f, rcond=None)
            # ds/dv = -gram, so the Newton direction is +gram^{-1} f;
            # damp so the weights stay positive
            scale = 1.0
            neg = -step > v
            if np.any(neg):
                scale = min(scale, 0.8 * float(np.min(v[neg] / -step[neg])))
            v = v + scale * step
            if v.min() < 0.0:
                v = np.maximum(v, 0.0)
        else:
            ok = False
        if not ok:
            return None
        # prune points driven to zero weight, re-add violated points
        drop = [idx[t] for t in range(len(idx)) if v[t] <= 1e-14]
        keep = [t for t in range(len(idx)) if v[t] > 1e-14]
        if len(keep) == 0:
            return None
        mass = ua[keep].T @ v[keep] * (1.0 / v[keep].sum())
        s_all = u @ (1.0 / mass)
        viol = [int(i) for i in np.argsort(-s_all) if s_all[i] > k * (1.0 + 1e-13)]
        if not viol and not drop:
            total = v.sum()
            w_full = np.zeros(m)
            for t, i in enumerate(idx):
                w_full[i] = v[t] / total
            gap = k * math.log(max(float(s_all.max()), k) / k)
            if gap > tol:
                return None
            b = 1.0 / (k * mass)
            return b, w_full, gap
        for i in drop:
            active_set.discard(i)
        for i in viol[:2]:
            active_set.add(i)
        if not active_set:
            return None
    return None


def _solve_reduced(
    u: np.ndarray, tol: float, max_iter: int = 500_000
) -> tuple[np.ndarray, np.ndarray, float, int]:
    """Dual multiplicative ascent with interleaved Newton polishing."""
    m, k = u.shape
    w = np.full(m, 1.0 / m)
    checkpoint = 8
    gap = math.inf
    for it in range(max_iter):
        mass = u.T @ w
        s = u @ (1.0 / mass)
        smax = float(s.max())
        gap = k * math.log(smax / k)
        if it >= checkpoint or gap <= tol:
            got = _newton_attempt(u, w, tol)
            if got is not None:
                b, w_full, cert_gap = got
                return b, w_full, cert_gap, it
            if gap <= tol:
                # ascent already certifies; recover the primal directly
                b = 1.0 / (k * mass)
                top = float(np.max(u @ b))
                if top > 1.0:
                    b = b / top
                return b, w, gap, it
            checkpoint = max(2 * checkpoint, it + 8)
        w = w * (s / k)
        w = w / w.sum()
    raise SolverError(f"no certificate after {max_iter} iterations (gap {gap:.3e})", gap)


def min_vol_simplex_info(prog: SimplexProgram) -> SolveInfo:
    """Solve the program with a duality-gap certificate."""
    reduced, free, fixed = _reduce(prog)
    if not free:
        params = _assemble(prog, free, fixed, np.zeros(0))
        return SolveInfo(params=params, gap=0.0, iterations=0, active=(), weights=())
    b, w, gap, iters = _solve_reduced(reduced, prog.tolerance)
    # conservative rescale: containment of every reduced point, exactly
    top = float(np.max(reduced @ b))
    if top > 1.0:
        b = b / top
    params = _assemble(prog, free, fixed, b)
    active = tuple(int(i) for i in np.nonzero(w > 1e-13)[0])
    return SolveInfo(
        params=params,
        gap=gap,
        iterations=iters,
        active=active,
        weights=tuple(float(x) for x in w),
    )


def min_vol_simplex(prog: SimplexProgram) -> SimplexParams:
    return min_vol_simplex_info(prog).params


def min_vol_simplex_bruteforce(prog: SimplexProgram, grid: int = 601) -> SimplexParams:
    """Grid-search reference solver (free dimension <= 3).

    Scans the optimality box a_j in [max_i u_ij, n_f * max_i u_ij] over all
    free axes but the last, whose intercept has the closed form
    max_i u_i,last / (1 - sum_{j<last} u_ij / a_j); three shrinking local
    refinement passes follow the coarse scan.
    """
    reduced, free, fixed = _reduce(prog)
    k = len(free)
    if k == 0:
        return _assemble(prog, free, fixed, np.zeros(0))
    if k > 3:
        raise ValueError("bruteforce reference handles at most 3 free axes")
    lo = reduced.max(axis=0)
    if k == 1:
        return _assemble(prog, free, fixed, np.array([1.0 / lo[0]]))

    def volumes(partials: np.ndarray) -> np.ndarray:
        """partials: (..., k-1) grids of leading intercepts -> volumes."""
        slack = 1.0 - np.tensordot(1.0 / partials, reduced[:, :-1], axes=([-1], [1]))
        ulast = reduced[:, -1]
        # slack <= 0 with mass on the last axis (or negative slack at all)
        # means no feasible last intercept
        with np.errstate(divide="ignore", invalid="ignore"):
            req = np.where(slack > 0.0, ulast / slack, np.where(ulast > 0.0, np.inf, 0.0))
        req = np.where(slack < 0.0, np.inf, req)
        alast = req.max(axis=-1)
        return np.prod(partials, axis=-1) * alast, alast

    def grid_scan(center: np.ndarray, radius: np.ndarray, cells: int) -> np.ndarray:
        axes = [
            np.linspace(max(lo[j], center[j] - radius[j]), center[j] + radius[j], cells)
            for j in range(k - 1)
        ]
        mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        vol, _ = volumes(mesh)
        flat = int(np.argmin(vol))
        if not math.isfinite(vol.reshape(-1)[flat]):
            raise DegenerateAxisError("no feasible grid point")
        idx = np.unravel_index(flat, vol.shape)
        return mesh[idx]

    center = 0.5 * (1 + k) * lo[:-1]
    radius = 0.5 * (k - 1) * lo[:-1] + 1e-9
    cells = grid if k == 2 else max(101, grid // 3)
    pt = grid_scan(center, radius, cells)
    span = 2.0 * radius / (cells - 1)
    for _ in range(3):
        pt = grid_scan(pt, np.maximum(4.0 * span, 1e-12), 41)
        span = span / 5.0
    a = np.empty(k)
    a[:-1] = pt
    _, alast = volumes(pt)
    a[-1] = alast
    return _assemble(prog, free, fixed, 1.0 / a)


# ---------------------------------------------------------------------------
# Wu pseudometric of an indicatrix


@dataclass(frozen=True)
class WuResult:
    """Minimal-ellipsoid seminorms of an indicatrix.

    w_tilde is the minimal enclosing diagonal Hermitian ellipsoid seminorm
    (vanishing on the degenerate axes); w is its sqrt(m)-normalized variant
    whose restriction to non-degenerate polydiscs matches the Euclidean
    cross-section.  m counts non-degenerate axes.
    """

    w_tilde: DiagonalHermitianForm
    w: DiagonalHermitianForm
    m: int
    v_axes: frozenset[int]
    gap: float
    certificate_points: int

    def simplex(self) -> SimplexParams:
        return SimplexParams(intercepts=self.w_tilde.axes)


def _certificates_from_radial(
    ind: Indicatrix, u_axes: list[int], resolution: int
) -> list[tuple[float, ...]]:
    pts: list[tuple[float, ...]] = []
    for d in absolute_directions(len(u_axes), resolution):
        full = [0.0] * ind.dim
        for col, j in enumerate(u_axes):
            full[j] = float(d[col])
        rho = ind.radial(tuple(complex(c) for c in full))
        if not math.isfinite(rho):
            raise UnsupportedIndicatrixError(
                "radial evaluator unbounded along a declared-bounded axis set"
            )
        if rho > 0.0:
            pts.append(tuple((rho * d[col]) ** 2 for col in range(len(u_axes))))
    return pts


def wu_metric(
    ind: Indicatrix,
    *,
    resolution: int | None = None,
    tolerance: float = DEFAULT_SOLVER_TOL,
    refine: bool = True,
) -> WuResult:
    """Wu seminorms of a balanced Reinhardt indicatrix.

    Degenerate axes (unbounded directions of the hull) are split off; on
    the complement the minimal-volume enclosing diagonal ellipsoid is
    computed from certificate points: the cloud itself, or a boundary
    sample of the radial evaluator (optionally refined by re-solving
    against worst containment violations).
    """
    if not (ind.balanced and ind.reinhardt):
        raise UnsupportedIndicatrixError("wu_metric needs a balanced Reinhardt indicatrix")
    report = degeneracy(ind)
    n = ind.dim
    if report.m == 0:
        zero = DiagonalHermitianForm(axes=(math.inf,) * n)
        return WuResult(
            w_tilde=zero, w=zero, m=0, v_axes=report.v_axes, gap=0.0, certificate_points=0
        )
    u_axes = [j for j in range(n) if j not in report.v_axes]
    if ind.cloud is not None:
        pts = [tuple(p[j] for j in u_axes) for p in ind.cloud]
        refine = False
    else:
        pts = _certificates_from_radial(ind, u_axes, resolution or 256 * len(u_axes))

    def solve(certs: list[tuple[float, ...]]) -> SolveInfo:
        return min_vol_simplex_info(
            SimplexProgram(points=tuple(certs), tolerance=tolerance)
        )

    info = solve(pts)
    rounds = 3 if refine else 0
    for _ in range(rounds):
        a = np.array(info.params.intercepts)

        def violation(d: np.ndarray) -> float:
            full = [0.0] * n
            for col, j in enumerate(u_axes):
                full[j] = float(d[col])
            rho = ind.radial(tuple(complex(c) for c in full))
            if not math.isfinite(rho):
                return 0.0
            return float(rho**2 * np.sum(d**2 / a))

        seeds = absolute_directions(len(u_axes), 4 * len(u_axes))
        worst_d, worst = None, 1.0
        for seed in seeds:
            d, val = _polish_direction(violation, seed, rounds=40)
            if val > worst:
                worst_d, worst = d, val
        if worst_d is None or worst <= 1.0 + 10.0 * tolerance:
            break
        full = [0.0] * n
        for col, j in enumerate(u_axes):
            full[j] = float(worst_d[col])
        rho = ind.radial(tuple(complex(c) for c in full))
        pts.append(tuple((rho * worst_d[col]) ** 2 for col in range(len(u_axes))))
        info = solve(pts)
    axes_tilde = [math.inf] * n
    for col, j in enumerate(u_axes):
        axes_tilde[j] = info.params.intercepts[col]
    w_tilde = DiagonalHermitianForm(axes=tuple(axes_tilde))
    axes_w = tuple(a / report.m for a in axes_tilde)
    return WuResult(
        w_tilde=w_tilde,
        w=DiagonalHermitianForm(axes=axes_w),
        m=report.m,
        v_axes=report.v_axes,
        gap=info.gap,
        certificate_points=len(pts),
    )


def wu_metric_of(ind: Indicatrix, **kwargs) -> WuResult:
    """wu_metric after convexification (no-op for already-hulled inputs)."""
    return wu_metric(convexify(ind), **kwargs)


def wu_product(left: WuResult, right: WuResult) -> WuResult:
    """Wu seminorms of a product: W^2 adds blockwise, m adds.

    Follows from the product rule for minimal enclosing ellipsoids of
    products of balanced sets restricted to diagonal forms.
    """
    m = left.m + right.m
    axes_w = left.w.axes + right.w.axes
    if m == 0:
        axes_tilde = (math.inf,) * len(axes_w)
    else:
        axes_tilde = tuple(a * m if math.isfinite(a) else math.inf for a in axes_w)
    n_left = len(left.w.axes)
    v_axes = frozenset(left.v_axes) | frozenset(n_left + j for j in right.v_axes)
    return WuResult(
        w_tilde=DiagonalHermitianForm(axes=axes_tilde),
        w=DiagonalHermitianForm(axes=axes_w),
        m=m,
        v_axes=v_axes,
        gap=max(left.gap, right.gap),
        certificate_points=left.certificate_points + right.certificate_points,
    )


# ---------------------------------------------------------------------------
# volume-comparison certificates against distance decrease


@dataclass(frozen=True)
class ContradictionReport:
    """Outcome of a volume-comparison certificate.

    ratio > 1 certifies that no simplex with the pinned first intercept
    can both contain the constructed certificate points and have volume
    at most the comparison simplex's, contradicting the assumed metric
    inequality.  ratio_bound is the algebraic prediction of the ratio;
    the two-variable certificate realizes it exactly.
    """

    x: float
    t: float
    constrained: SimplexParams
    constrained_volume: float
    reference: SimplexParams
    reference_volume: float
    ratio: float
    ratio_bound: float
    certified: bool


def certify_contradiction_g2(x: float, t: float) -> ContradictionReport:
    """Two-variable Hartogs-triangle-type certificate at base point (x, 0).

    Certificate points (mu, 0) and (0, nu) with mu = (1-x^2)^2 and
    nu = (1/x - 1)^2 must lie in any enclosing simplex; pinning the first
    intercept to t^2 forces volume ratio >= t^2 (1-x)^2 against the
    reference simplex with intercepts (1, 1/x^2).
    """
    if not 0.0 < x < 1.0:
        raise ValueError("x in (0, 1) required")
    if t <= 1.0:
        raise ValueError("t > 1 required")
    mu = (1.0 - x * x) ** 2
    nu = (1.0 / x - 1.0) ** 2
    prog = SimplexProgram(points=((mu, 0.0), (0.0, nu)), fixed=((0, t * t),))
    params = min_vol_simplex(prog)
    vol_c = simplex_volume(params)
    reference = SimplexParams(intercepts=(1.0, 1.0 / (x * x)))
    vol_r = simplex_volume(reference)
    ratio = vol_c / vol_r
    bound = (t * (1.0 - x)) ** 2
    return ContradictionReport(
        x=x,
        t=t,
        constrained=params,
        constrained_volume=vol_c,
        reference=reference,
        reference_volume=vol_r,
        ratio=ratio,
        ratio_bound=bound,
        certified=ratio > 1.0,
    )


@dataclass(frozen=True)
class ContradictionReportN(ContradictionReport):
    n: int
    ratio_limit: float


def gn_ratio_limit(n: int, t: float) -> float:
    """x -> 0 limit of the n-variable certificate volume ratio."""
    return 4.0 * (n - 2) ** (n - 2) * t**n / (n**n * (t - 1.0) ** (n - 2))


def gn_constrained_optimum(n: int, x: float, t: float) -> tuple[float, ...]:
    """Exact optimum of the pinned two-point program behind the certificate.

    With the first intercept pinned to t, minimizing the volume over
    simplexes containing (mu, 0, 1, ..., 1) and (0, nu, 1, ..., 1) reduces,
    after symmetrizing the trailing intercepts and saturating the second
    constraint, to one variable S = sum_{j>=3} 1/b_j.  The objective
    nu (n-2)^(n-2) / ((1-S) S^(n-2)) is unimodal with interior minimum at
    S = (n-2)/(n-1); the first point's constraint caps S at 1 - mu/t.  The
    fully active stationary point (t, nu t / mu, (n-2) t / (t-mu), ...) is
    therefore optimal exactly when t <= (n-1) mu, and for larger pins the
    first constraint goes slack.
    """
    mu = (1.0 - x * x) ** 2
    nu = (1.0 / x - 1.0) ** 2
    s_opt = min((n - 2) / (n - 1), 1.0 - mu / t)
    return (t, nu / (1.0 - s_opt)) + ((n - 2) / s_opt,) * (n - 2)


def certify_contradiction_gn(n: int, x: float, t: float) -> ContradictionReportN:
    """n-variable analogue with certificate points embedded in a cylinder.

    Points (mu, 0, 1, ..., 1) and (0, nu, 1, ..., 1); first intercept
    pinned to t (required > n/2 so the constrained volume is increasing in
    the pin); reference simplex (n/2, n/(2 x^2), n, ..., n).

    ratio is the solver's volume ratio against the reference; ratio_bound
    evaluates the fully active stationary point, so the two agree only
    while t <= (n-1) mu and ratio_bound overestimates the ratio beyond
    that threshold.  Certification uses the solver value.
    """
    if not (isinstance(n, int) and n >= 3):
        raise ValueError("integer n >= 3 required")
    if not 0.0 < x < 1.0:
        raise ValueError("x in (0, 1) required")
    if t <= n / 2.0:
        raise ValueError("t > n/2 required for the monotone volume bound")
    mu = (1.0 - x * x) ** 2
    nu = (1.0 / x - 1.0) ** 2
    p = (mu, 0.0) + (1.0,) * (n - 2)
    q = (0.0, nu) + (1.0,) * (n - 2)
    prog = SimplexProgram(points=(p, q), fixed=((0, t),))
    params = min_vol_simplex(prog)
    vol_c = simplex_volume(params)
    expected = gn_constrained_optimum(n, x, t)
    vol_expected = math.prod(expected) / math.factorial(n)
    if abs(vol_c - vol_expected) > 1e-9 * vol_expected:
        raise SolverError(
            f"constrained volume {vol_c!r} disagrees with closed form {vol_expected!r}",
            gap=abs(vol_c / vol_expected - 1.0),
        )
    active = (t, nu * t / mu) + ((n - 2) * t / (t - mu),) * (n - 2)
    vol_active = math.prod(active) / math.factorial(n)
    if vol_c > vol_active * (1.0 + 1e-9):
        raise SolverError(
            "constrained volume exceeds a feasible stationary point",
            gap=vol_c / vol_active - 1.0,
        )
    reference = SimplexParams(
        intercepts=(n / 2.0, n / (2.0 * x * x)) + (float(n),) * (n - 2)
    )
    vol_r = simplex_volume(reference)
    ratio = vol_c / vol_r
    return ContradictionReportN(
        x=x,
        t=t,
        constrained=params,
        constrained_volume=vol_c,
        reference=reference,
        reference_volume=vol_r,
        ratio=ratio,
        ratio_bound=vol_active / vol_r,
        certified=ratio > 1.0,
        n=n,
        ratio_limit=gn_ratio_limit(n, t),
    )
