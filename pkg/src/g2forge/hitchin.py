"""Newton solver for the cyclic Hitchin system on a periodic grid.

The reduced system governs the squared norms of the holomorphic data of a
cyclic Higgs bundle under the harmonic metric diag(1/(g1 g2), 1/g2, 1/g1, 1,
g1, g2, g1 g2).  Writing a = ||alpha||^2, b = ||beta||^2, d = ||delta||^2,
the log-norm equations away from the zero sets of the data are

    lap log a = 2a - 3b - d + kappa
    lap log b = 2b - a + kappa

with the third (delta) equation dependent on these two.  The solver works in
the gauge variables v1 = log g1, v2 = log g2, for which

    a = alpha0sq * exp(v2 - v1),
    b = beta0sq  * exp(v1),
    d = delta0sq * exp(-v1 - 2 v2),

discretizes the Laplacian with the 5-point periodic stencil on a uniform
grid of spacing 1, and runs a damped Newton iteration.

Everything here is plain numpy/scipy numerics; no exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

STABLE = "stable"
STRICTLY_POLYSTABLE = "strictly_polystable"
NOT_POLYSTABLE = "not_polystable"

_CSV_MAGIC = "# g2-forge grid v1"


def laplacian(u: np.ndarray) -> np.ndarray:
    """5-point periodic Laplacian with unit grid spacing."""
    return (np.roll(u, 1, axis=0) + np.roll(u, -1, axis=0)
            + np.roll(u, 1, axis=1) + np.roll(u, -1, axis=1) - 4.0 * u)


def _check_positive_or_zero(name: str, f: np.ndarray) -> None:
    if np.any(f < 0):
        raise ValueError(f"{name} must be nonnegative")
    if np.any(f == 0) and np.any(f > 0):
        raise ValueError(
            f"{name} vanishes somewhere but not everywhere; the log-norm "
            "equations only hold away from zeros of the data, so mask the "
            "grid to a region where the field is positive")


class HitchinData:
    """Holomorphic data of the reduced system on an N x M periodic grid:
    the coordinate norms squared alpha0sq, beta0sq, delta0sq and the
    background curvature field kappa.  Each norm field must be positive
    everywhere or identically zero (its equation is then inactive)."""

    def __init__(self, alpha0sq, beta0sq, delta0sq, kappa):
        fields = []
        for name, f in (("alpha0sq", alpha0sq), ("beta0sq", beta0sq),
                        ("delta0sq", delta0sq), ("kappa", kappa)):
            arr = np.asarray(f, dtype=float)
            if arr.ndim != 2:
                raise ValueError(f"{name} must be a 2-d grid field")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} must be finite")
            fields.append(arr)
        self.alpha0sq, self.beta0sq, self.delta0sq, self.kappa = fields
        shapes = {f.shape for f in fields}
        if len(shapes) != 1:
            raise ValueError("all data fields must share one grid shape")
        self.shape = fields[0].shape
        if min(self.shape) < 8:
            raise ValueError("grid must be at least 8 points per period")
        _check_positive_or_zero("alpha0sq", self.alpha0sq)
        _check_positive_or_zero("beta0sq", self.beta0sq)
        _check_positive_or_zero("delta0sq", self.delta0sq)
        if not (np.any(self.alpha0sq > 0) or np.any(self.beta0sq > 0)):
            raise ValueError(
                "degenerate system: alpha0sq and beta0sq both vanish")


class HitchinState:
    """Gauge state (v1, v2) = (log g1, log g2) on the grid."""

    def __init__(self, v1, v2):
        self.v1 = np.asarray(v1, dtype=float)
        self.v2 = np.asarray(v2, dtype=float)
        if self.v1.shape != self.v2.shape or self.v1.ndim != 2:
            raise ValueError("v1 and v2 must be 2-d fields of one shape")
        if not (np.all(np.isfinite(self.v1)) and np.all(np.isfinite(self.v2))):
            raise ValueError("state fields must be finite")
        self.shape = self.v1.shape

    def norms(self, data: HitchinData) -> Dict[str, np.ndarray]:
        """Squared norms of the three Higgs field entries in this gauge."""
        if data.shape != self.shape:
            raise ValueError("state and data shapes differ")
        return {
            "alpha_sq": data.alpha0sq * np.exp(self.v2 - self.v1),
            "beta_sq": data.beta0sq * np.exp(self.v1),
            "delta_sq": data.delta0sq * np.exp(-self.v1 - 2.0 * self.v2),
        }

    def copy(self) -> "HitchinState":
        return HitchinState(self.v1.copy(), self.v2.copy())


def _lap_log(f: np.ndarray) -> np.ndarray:
    """Laplacian of log f, with the convention that an identically zero
    field contributes nothing (its equation is inactive)."""
    if np.all(f == 0):
        return np.zeros_like(f)
    return laplacian(np.log(f))


def residual(data: HitchinData,
             state: HitchinState) -> Tuple[np.ndarray, np.ndarray]:
    """Discrete residuals of the system in the gauge variables.

    The second field is the beta-equation (the v1 equation),
        res_beta = (2b - a + kappa - lap log beta0sq) - lap v1,
    and the first is the sum of the alpha- and beta-equations, in which
    only lap v2 appears,
        res_alpha = (a - b - d + 2 kappa - lap log(alpha0sq beta0sq)) - lap v2.
    Both vanish exactly when the two displayed log-norm equations hold."""
    if data.shape != state.shape:
        raise ValueError("state and data shapes differ")
    n = state.norms(data)
    a, b, d = n["alpha_sq"], n["beta_sq"], n["delta_sq"]
    res_a = (a - b - d + 2.0 * data.kappa
             - _lap_log(data.alpha0sq) - _lap_log(data.beta0sq)
             - laplacian(state.v2))
    res_b = (2.0 * b - a + data.kappa - _lap_log(data.beta0sq)
             - laplacian(state.v1))
    return res_a, res_b


def residual_delta(data: HitchinData, state: HitchinState) -> np.ndarray:
    """Residual of the dependent delta-equation,
        lap log d = 2d - a + kappa,
    which the other two imply whenever the data satisfies the curvature
    consistency lap log(delta0sq alpha0sq^2 beta0sq^3) = 6 kappa.  Requires
    delta0sq positive."""
    if np.any(data.delta0sq <= 0):
        raise ValueError("delta-equation residual needs positive delta0sq")
    n = state.norms(data)
    a, d = n["alpha_sq"], n["delta_sq"]
    return (2.0 * d - a + data.kappa - _lap_log(data.delta0sq)
            + laplacian(state.v1) + 2.0 * laplacian(state.v2))


def _laplacian_matrix(shape: Tuple[int, int]) -> sp.csr_matrix:
    rows, cols = shape

    def ring(k: int) -> sp.csr_matrix:
        ones = np.ones(k - 1)
        t = sp.diags([ones, ones], [1, -1], shape=(k, k), format="lil")
        t[0, k - 1] += 1.0
        t[k - 1, 0] += 1.0
        return t.tocsr()

    eye_r, eye_c = sp.identity(rows, format="csr"), sp.identity(cols, format="csr")
    adj = sp.kron(ring(rows), eye_c) + sp.kron(eye_r, ring(cols))
    return (adj - 4.0 * sp.identity(rows * cols, format="csr")).tocsr()


@dataclass
class SolveResult:
    state: HitchinState
    iterations: int
    final_residual: float
    ratios: Dict[str, Optional[float]]


def _sup_ratios(data: HitchinData,
                state: HitchinState) -> Dict[str, Optional[float]]:
    n = state.norms(data)
    a, b, d = n["alpha_sq"], n["beta_sq"], n["delta_sq"]

    def sup(num, den):
        if np.any(den <= 0):
            return None
        return float(np.sqrt(np.max(num / den)))

    return {
        "alpha_over_beta": sup(a, b),
        "delta_over_beta": sup(d, b),
        "beta_over_alpha": sup(b, a),
    }


def solve(data: HitchinData, init: Optional[HitchinState] = None,
          tol: float = 1e-10, max_iter: int = 200) -> SolveResult:
    """Damped Newton iteration on the discrete system.  Converges when the
    max-norm of both residual fields drops below tol; raises RuntimeError on
    a failed line search, a non-finite Newton step, or too many iterations.
    Deterministic for fixed inputs."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    state = (HitchinState(np.zeros(data.shape), np.zeros(data.shape))
             if init is None else init.copy())
    if state.shape != data.shape:
        raise ValueError("state and data shapes differ")
    size = data.shape[0] * data.shape[1]
    lap = _laplacian_matrix(data.shape)

    def resvec(st: HitchinState) -> np.ndarray:
        ra, rb = residual(data, st)
        return np.concatenate([ra.ravel(), rb.ravel()])

    fvec = resvec(state)
    fnorm = float(np.max(np.abs(fvec)))
    for it in range(1, max_iter + 1):
        if fnorm < tol:
            return SolveResult(state, it - 1, fnorm, _sup_ratios(data, state))
        n = state.norms(data)
        a, b, d = (n["alpha_sq"].ravel(), n["beta_sq"].ravel(),
                   n["delta_sq"].ravel())
        jac = sp.bmat([
            [sp.diags(-a - b + d), sp.diags(a + 2.0 * d) - lap],
            [sp.diags(2.0 * b + a) - lap, sp.diags(-a)],
        ], format="csr")
        step = spsolve(jac, -fvec)
        if not np.all(np.isfinite(step)):
            raise RuntimeError("Newton step is singular or non-finite")
        dv1 = step[:size].reshape(data.shape)
        dv2 = step[size:].reshape(data.shape)
        t = 1.0
        while True:
            trial = HitchinState(state.v1 + t * dv1, state.v2 + t * dv2)
            tvec = resvec(trial)
            tnorm = float(np.max(np.abs(tvec)))
            if tnorm <= (1.0 - 1e-4 * t) * fnorm:
                break
            t *= 0.5
            if t < 1e-10:
                raise RuntimeError(
                    f"line search failed at iteration {it} "
                    f"(residual {fnorm:.3e})")
        state, fvec, fnorm = trial, tvec, tnorm
    if fnorm < tol:
        return SolveResult(state, max_iter, fnorm, _sup_ratios(data, state))
    raise RuntimeError(
        f"no convergence after {max_iter} iterations (residual {fnorm:.3e})")


def solve_report(result: SolveResult) -> Dict[str, object]:
    """JSON-ready summary of a solve."""
    return {
        "iterations": result.iterations,
        "final_residual": result.final_residual,
        "ratios": dict(result.ratios),
    }


# --------------------------------------------------------------------------
# maximum-principle monitors


_BOUNDS = {
    "beta": {"alpha_over_beta": math.sqrt(2.0), "delta_over_beta": 1.0},
    "alpha": {"beta_over_alpha": math.sqrt(3.0 / 5.0)},
}


def check_max_principles(state: HitchinState, data: HitchinData,
                         family: str, slack: float = 1e-8) -> Dict[str, object]:
    """Sup-ratio report against the family's maximum-principle bounds:
    ||alpha||/||beta|| <= sqrt(2) and ||delta||/||beta|| <= 1 for the
    beta-family, ||beta||/||alpha|| <= sqrt(3/5) for the alpha-family.  The
    flat solution attains the beta bounds with equality, so each comparison
    allows the given slack."""
    if family not in _BOUNDS:
        raise ValueError("family must be 'beta' or 'alpha'")
    ratios = _sup_ratios(data, state)
    report: Dict[str, object] = {"family": family, "ratios": {}, "pass": True}
    for key, bound in _BOUNDS[family].items():
        value = ratios[key]
        entry = {"sup": value, "bound": bound,
                 "pass": value is not None and value <= bound + slack}
        report["ratios"][key] = entry
        report["pass"] = report["pass"] and entry["pass"]
    return report


# --------------------------------------------------------------------------
# stability decision tables


def classify_stability(family: str, genus: int, deg: int,
                       alpha_nonzero: Optional[bool] = None,
                       beta_nonzero: Optional[bool] = None,
                       delta_nonzero: Optional[bool] = None,
                       same_divisor: bool = False) -> str:
    """Polystability of a cyclic bundle from its discrete invariants.

    family "beta": deg is deg(B); the table consults alpha_nonzero and
    delta_nonzero (the beta arrows are constant and nonvanishing, so an
    explicit beta_nonzero=False is rejected).  family "alpha": deg is
    deg(T); the table consults beta_nonzero, delta_nonzero and, at the
    strictly polystable corner deg = -g+1, whether beta and delta have the
    same divisor.  Returns one of "stable", "strictly_polystable",
    "not_polystable"."""
    if genus < 2:
        raise ValueError("genus must be at least 2")
    if not isinstance(deg, (int, np.integer)):
        raise ValueError("deg must be an integer")
    g = int(genus)
    if family == "beta":
        if beta_nonzero is False:
            raise ValueError(
                "beta-family bundles have nonvanishing beta by construction")
        a, d = bool(alpha_nonzero), bool(delta_nonzero)
        if a and deg > 6 * g - 6:
            raise ValueError("alpha section cannot exist: deg > 6g-6")
        if d and deg < 0:
            raise ValueError("delta section cannot exist: deg < 0")
        if a:
            if deg < 0:
                return NOT_POLYSTABLE
            if deg == 0:
                return STRICTLY_POLYSTABLE if d else NOT_POLYSTABLE
            if deg <= g - 1:
                return STABLE if d else NOT_POLYSTABLE
            if deg <= 6 * g - 6:
                return STABLE
            return NOT_POLYSTABLE
        if d:
            if deg == 0:
                return STRICTLY_POLYSTABLE
            if 0 < deg < 2 * g - 2:
                return STABLE
            return NOT_POLYSTABLE
        return STRICTLY_POLYSTABLE if deg == g - 1 else NOT_POLYSTABLE
    if family == "alpha":
        if alpha_nonzero is False:
            raise ValueError(
                "alpha-family bundles have nonvanishing alpha by construction")
        b, d = bool(beta_nonzero), bool(delta_nonzero)
        if b and deg > 2 * g - 2:
            raise ValueError("beta section cannot exist: deg > 2g-2")
        if d and deg < -2 * g + 2:
            raise ValueError("delta section cannot exist: deg < -2g+2")
        if b and d:
            if deg == -g + 1 and same_divisor:
                return STRICTLY_POLYSTABLE
            return STABLE
        if b:
            return STABLE if -g + 1 < deg <= 2 * g - 2 else NOT_POLYSTABLE
        if d:
            if -2 * g + 2 <= deg < -g + 1:
                return STRICTLY_POLYSTABLE
            return NOT_POLYSTABLE
        return STRICTLY_POLYSTABLE if deg == -g + 1 else NOT_POLYSTABLE
    raise ValueError("family must be 'beta' or 'alpha'")


# --------------------------------------------------------------------------
# presets and data constructions


def flat_constant_data(n: int = 64) -> HitchinData:
    """Unit data with flat background: the solution is the algebraic fixed
    point a = 2b, d = b, b = 2**(-1/3)."""
    one = np.ones((n, n))
    return HitchinData(one, one, one, np.zeros((n, n)))


def flat_constant_state(n: int = 64) -> HitchinState:
    v1 = -math.log(2.0) / 3.0
    v2 = math.log(2.0) / 3.0
    return HitchinState(np.full((n, n), v1), np.full((n, n), v2))


def hitchin_constant_data(n: int = 64) -> HitchinData:
    """delta = 0 and kappa = -1: the constants solve 2b - a - 1 = 0 and
    a - b - 2 = 0, so (a, b) = (5, 3)."""
    one = np.ones((n, n))
    return HitchinData(one, one, np.zeros((n, n)), -one)


def hitchin_constant_state(n: int = 64) -> HitchinState:
    return HitchinState(np.full((n, n), math.log(3.0)),
                        np.full((n, n), math.log(15.0)))


def _smooth_field(rng: np.random.Generator, n: int,
                  amplitude: float) -> np.ndarray:
    """Random low-frequency periodic field with a handful of Fourier modes."""
    xs = np.arange(n) * (2.0 * np.pi / n)
    xx, yy = np.meshgrid(xs, xs, indexing="ij")
    field = np.zeros((n, n))
    for kx in range(-2, 3):
        for ky in range(-2, 3):
            if kx == 0 and ky == 0:
                continue
            c, s = rng.normal(size=2)
            field += c * np.cos(kx * xx + ky * yy) + s * np.sin(kx * xx + ky * yy)
    peak = np.max(np.abs(field))
    return field * (amplitude / peak) if peak > 0 else field


def consistent_beta_data(n: int = 32, seed: int = 0,
                         amplitude: float = 0.3
                         ) -> Tuple[HitchinData, HitchinState]:
    """Randomized smooth data with a known exact discrete solution.  Takes
    p, q, r smooth periodic, sets the data to (e^p, e^q, e^r) with curvature
    kappa = lap(2p + 3q + r)/6; the state with a = 2b and d = b identically,

        v1 = (2p - 3q + r)/6 - log(2)/3,    v2 = 2 v1 + q - p + log 2,

    then solves the discrete system exactly (the identity uses the same
    5-point Laplacian as the residuals)."""
    rng = np.random.default_rng(seed)
    p = _smooth_field(rng, n, amplitude)
    q = _smooth_field(rng, n, amplitude)
    r = _smooth_field(rng, n, amplitude)
    kappa = laplacian(2.0 * p + 3.0 * q + r) / 6.0
    data = HitchinData(np.exp(p), np.exp(q), np.exp(r), kappa)
    v1 = (2.0 * p - 3.0 * q + r) / 6.0 - math.log(2.0) / 3.0
    v2 = 2.0 * v1 + q - p + math.log(2.0)
    return data, HitchinState(v1, v2)


def consistent_alpha_data(n: int = 32, seed: int = 0,
                          amplitude: float = 0.3,
                          scale: float = 1.0
                          ) -> Tuple[HitchinData, HitchinState]:
    """Randomized smooth data with delta = 0 and a known exact discrete
    solution.  Takes p, q smooth periodic, sets the data to (e^p, e^q, 0)
    with constant curvature kappa = -scale; the state

        v1 = log(3 scale) - q,    v2 = log(15 scale^2) - p - q,

    makes the norms pointwise constant, (a, b) = (5 scale, 3 scale), which
    solves both log-norm equations exactly (the kappa constants absorb the
    algebraic part and the Laplacian terms cancel)."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = np.random.default_rng(seed)
    p = _smooth_field(rng, n, amplitude)
    q = _smooth_field(rng, n, amplitude)
    data = HitchinData(np.exp(p), np.exp(q), np.zeros((n, n)),
                       np.full((n, n), -scale))
    v1 = math.log(3.0 * scale) - q
    v2 = math.log(15.0 * scale * scale) - p - q
    return data, HitchinState(v1, v2)


# --------------------------------------------------------------------------
# grid serialization


def write_grid_csv(path, field: np.ndarray) -> None:
    """Row-major CSV with the one-line header '# g2-forge grid v1 R C'."""
    arr = np.asarray(field, dtype=float)
    if arr.ndim != 2:
        raise ValueError("grid fields are 2-d")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{_CSV_MAGIC} {arr.shape[0]} {arr.shape[1]}\n")
        for row in arr:
            fh.write(",".join(format(x, ".17g") for x in row) + "\n")


def read_grid_csv(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        parts = header.split()
        if " ".join(parts[:4]) != _CSV_MAGIC or len(parts) != 6:
            raise ValueError(f"not a grid CSV: bad header {header!r}")
        rows, cols = int(parts[4]), int(parts[5])
        arr = np.loadtxt(fh, delimiter=",", ndmin=2)
    if arr.shape != (rows, cols):
        raise ValueError(
            f"grid CSV body {arr.shape} does not match header {(rows, cols)}")
    return arr
