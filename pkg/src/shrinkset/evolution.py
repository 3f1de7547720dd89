"""Optimal-strategy area ODE: a'(t) = perimeter(best subset of the grown
domain at area a) - M.

The domain grows at unit speed (dilation), the controlled set is at every
instant the least-perimeter subset of the grown domain with the current
area.  Integration is classical RK4 with a fixed base step; the step is
split exactly at regime-boundary crossings (where the rate has a kink) so
the order-4 accuracy survives, and the extinction time T_star / first
ball time T_dagger are localized by bisection on the final step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import BadConfigError, OutOfRangeError
from .geometry import RoundedSet, contains, rounded_area
from .isoperimetric import BALL, _Scene, optimal_subset, perimeter_of_area
from .morphology import dilate

_EVENT_TIME_TOL = 1e-10


@dataclass(frozen=True)
class EvolutionTrace:
    omega0: RoundedSet
    M: float
    t: np.ndarray
    a: np.ndarray
    perimeter: np.ndarray
    regime: tuple[str, ...]
    rho: np.ndarray
    rate: np.ndarray
    T_star: float | None
    T_dagger: float | None
    horizon: float
    dt: float

    def __len__(self) -> int:
        return len(self.t)


def area_rate(omega0: RoundedSet, t: float, a: float, M: float) -> float:
    """Instantaneous growth rate of the controlled area at time t."""
    return perimeter_of_area(dilate(omega0, t), a) - M


def default_step(omega0: RoundedSet) -> float:
    return 1e-3 * max(1.0, omega0.diameter)


def simulate(
    omega0: RoundedSet,
    M: float,
    horizon: float,
    dt: float | None = None,
    stop_when_growing: bool = False,
) -> EvolutionTrace:
    """Integrate the area ODE from the full initial area.

    Stops at the horizon or at extinction, whichever comes first.  With
    stop_when_growing the integration also stops as soon as the area is
    large enough (2*sqrt(pi*a) > M) that it can only keep growing; the
    threshold search uses this as an early exit.
    """
    if M < 0 or not math.isfinite(M):
        raise BadConfigError(f"budget M must be finite and nonnegative, got {M}")
    if not (horizon > 0 and math.isfinite(horizon)):
        raise BadConfigError(f"horizon must be positive and finite, got {horizon}")
    if dt is None:
        dt = default_step(omega0)
    if not (dt > 0 and math.isfinite(dt)):
        raise BadConfigError(f"dt must be positive and finite, got {dt}")

    scene = _Scene(omega0.kernel)
    c0 = omega0.radius
    a0 = rounded_area(omega0)
    band = 1e-11 * max(1.0, a0)

    # RK4 stage values sit O(dt^2) below the full-area plateau even when the
    # exact trajectory rides it; for sharp kernels dP/da blows up there, so
    # snap a dt^2-band onto the plateau (error O(dt^4), order preserved).
    snap = 4.0 * math.pi * dt * dt

    def rate(t: float, a: float) -> float:
        if a <= 0.0:
            return -M
        c = c0 + t
        if a >= scene.area_full(c) - snap:
            return scene.perim0 + 2.0 * math.pi * c - M
        return scene.query(c, a)[0] - M

    def rk4(t: float, a: float, h: float) -> float:
        k1 = rate(t, a)
        k2 = rate(t + 0.5 * h, a + 0.5 * h * k1)
        k3 = rate(t + 0.5 * h, a + 0.5 * h * k2)
        k4 = rate(t + h, a + h * k3)
        return a + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    # signed distances to the two regime boundaries (kinks of the rate)
    def psi_ball(t: float, a: float) -> float:
        r = scene.rbar(c0 + t)
        return a - math.pi * r * r

    def psi_hat(t: float, a: float) -> float:
        return a - scene.area_hat(c0 + t)

    def bisect(t: float, a: float, h: float, fun, f0: float) -> float:
        lo, hi = 0.0, h
        while hi - lo > _EVENT_TIME_TOL:
            mid = 0.5 * (lo + hi)
            if (fun(t + mid, rk4(t, a, mid)) > 0.0) == (f0 > 0.0):
                lo = mid
            else:
                hi = mid
        return hi

    ts, areas, perims, regimes, rhos, rates = [], [], [], [], [], []
    T_star = None
    T_dagger = 0.0 if psi_ball(0.0, a0) <= 0.0 else None

    def record(t: float, a: float) -> None:
        if a <= 0.0:
            perim, regime, rho, r = 0.0, BALL, 0.0, -M
        else:
            a = min(a, scene.area_full(c0 + t))
            perim, regime, rho, _ = scene.query(c0 + t, a)
            r = perim - M
        ts.append(t)
        areas.append(max(a, 0.0))
        perims.append(perim)
        regimes.append(regime)
        rhos.append(rho)
        rates.append(r)

    def ball_tail(t0: float, ab: float) -> None:
        # inside the ball regime with 2*sqrt(pi*a) < M the set is a shrinking
        # free ball, r' = 1 - M/(2*pi*r); its implicit solution is exact, so
        # sample it directly instead of chasing the sqrt(T-t) tail with RK4
        nonlocal T_star
        rstar = M / (2.0 * math.pi)
        r0 = math.sqrt(ab / math.pi)
        t_end = t0 - r0 - rstar * math.log1p(-r0 / rstar)

        def radius_at(tk: float) -> float:
            def g(r: float) -> float:
                return (r - r0) + rstar * math.log(
                    (rstar - r) / (rstar - r0)
                ) - (tk - t0)

            return brentq(g, 0.0, r0, xtol=1e-15)

        tk = t0 + dt
        while tk < min(t_end, horizon) - 1e-15:
            r = radius_at(tk)
            record(tk, math.pi * r * r)
            tk += dt
        if t_end <= horizon:
            T_star = t_end
            record(t_end, 0.0)
        else:
            r = radius_at(horizon)
            record(horizon, math.pi * r * r)

    t, a = 0.0, a0
    record(t, a)
    while t < horizon - 1e-15:
        if stop_when_growing and 2.0 * math.sqrt(math.pi * a) > M * (1.0 + 1e-9):
            break
        if psi_ball(t, a) <= 0.0 and 2.0 * math.sqrt(math.pi * a) < M:
            ball_tail(t, a)
            break
        h = min(dt, horizon - t)
        a1 = rk4(t, a, h)
        events = []  # (time offset, kind)
        if a1 <= 0.0:
            events.append((bisect(t, a, h, lambda tt, aa: aa, a), "extinct"))
        for psi in (psi_ball, psi_hat):
            f0, f1 = psi(t, a), psi(t + h, a1)
            if abs(f0) > band and (f0 > 0.0) != (f1 > 0.0):
                events.append((bisect(t, a, h, psi, f0), "kink"))
        kind = None
        if events:
            h, kind = min(events)
            a1 = rk4(t, a, h)
        t, a = t + h, a1
        if kind == "extinct" or a <= 0.0:
            T_star = t
            record(t, 0.0)
            break
        record(t, a)
        if T_dagger is None and psi_ball(t, a) <= 0.0:
            T_dagger = t

    return EvolutionTrace(
        omega0=omega0,
        M=M,
        t=np.asarray(ts),
        a=np.asarray(areas),
        perimeter=np.asarray(perims),
        regime=tuple(regimes),
        rho=np.asarray(rhos),
        rate=np.asarray(rates),
        T_star=T_star,
        T_dagger=T_dagger,
        horizon=horizon,
        dt=dt,
    )


def _hermite(trace: EvolutionTrace, t: float) -> float:
    """Cubic Hermite interpolation of a(t) on the sample grid."""
    ts = trace.t
    if t <= ts[0]:
        return float(trace.a[0])
    if t >= ts[-1]:
        return float(trace.a[-1])
    i = int(np.searchsorted(ts, t, side="right")) - 1
    h = ts[i + 1] - ts[i]
    s = (t - ts[i]) / h
    a0, a1 = trace.a[i], trace.a[i + 1]
    f0, f1 = trace.rate[i], trace.rate[i + 1]
    h00 = (1 + 2 * s) * (1 - s) ** 2
    h10 = s * (1 - s) ** 2
    h01 = s * s * (3 - 2 * s)
    h11 = s * s * (s - 1)
    return float(h00 * a0 + h10 * h * f0 + h01 * a1 + h11 * h * f1)


def reconstruct_set(trace: EvolutionTrace, t: float) -> RoundedSet:
    """The controlled set at time t, from the interpolated area."""
    t_end = float(trace.t[-1])
    if t < 0.0 or t > t_end + 1e-12:
        raise OutOfRangeError(f"time {t} outside the trace range [0, {t_end}]")
    if trace.T_star is not None and t >= trace.T_star - _EVENT_TIME_TOL:
        return RoundedSet.empty()
    a = _hermite(trace, t)
    domain = dilate(trace.omega0, t)
    a = min(max(a, 0.0), rounded_area(domain))
    if a <= 0.0:
        return RoundedSet.empty()
    return optimal_subset(domain, a).set


def compute_cost(trace: EvolutionTrace, c1: float, c2: float, T: float) -> float:
    """Running cost c1*integral of a(t) over [0,T] plus terminal c2*a(T).

    The integral uses composite Simpson on each sample interval with the
    Hermite midpoint, which is exact for the cubic interpolant; a(t) is
    identically zero past extinction."""
    t_end = float(trace.t[-1])
    if T < 0.0 or (T > t_end + 1e-12 and trace.T_star is None):
        raise OutOfRangeError(f"cost horizon {T} beyond the trace range")

    def a_of(t: float) -> float:
        if trace.T_star is not None and t >= trace.T_star:
            return 0.0
        return _hermite(trace, t)

    total = 0.0
    ts = trace.t
    for i in range(len(ts) - 1):
        lo, hi = float(ts[i]), min(float(ts[i + 1]), T)
        if hi <= lo:
            break
        h = hi - lo
        total += (h / 6.0) * (a_of(lo) + 4.0 * a_of(lo + 0.5 * h) + a_of(hi))
    return c1 * total + c2 * a_of(T)


def check_admissible(
    trace: EvolutionTrace,
    delta: float,
    tol: float,
    max_checks: int = 40,
) -> bool:
    """Discrete admissibility: the set at t+delta fits in the delta-dilation
    of the set at t, and the area removed per unit time is the budget M."""
    t_end = float(trace.t[-1])
    if trace.T_star is not None:
        t_end = min(t_end, trace.T_star - 10.0 * delta)
    if t_end <= delta:
        return True
    # budget-rate second-order error constant, from the trace itself
    dp = np.abs(np.diff(trace.perimeter))
    dtm = np.maximum(np.diff(trace.t), 1e-300)
    big_c = math.pi + float((dp / dtm).max(initial=0.0))
    times = np.linspace(0.0, t_end - delta, min(max_checks, len(trace.t)))
    for t in times:
        here = reconstruct_set(trace, float(t))
        if here.is_empty:
            continue
        grown = dilate(here, delta)
        nxt = reconstruct_set(trace, float(t) + delta)
        if not nxt.is_empty and not contains(grown, nxt, tol * delta):
            return False
        removed = (rounded_area(grown) - _hermite(trace, float(t) + delta)) / delta
        if abs(removed - trace.M) > tol + big_c * delta:
            return False
    return True
