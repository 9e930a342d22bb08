"""Route validation.

A route is a sampled curvature course ``t -> h(t)`` along a canonical
transversal.  It is realizable by a pairwise disjoint leaf family exactly
when the transformed course ``F(h(t))`` grows no faster than the
transversal's rate bound, one-sidedly: for every pair t1 < t2,

    F(h(t2)) - F(h(t1)) <= L (t2 - t1),       L = sin(phi),

with L = 1 on the geodesic (phi = pi/2 throughout this module means the
geodesic case; every formula specializes continuously).  The condition is
deliberately one-sided; the two-sided Lipschitz estimate is stricter than
disjointness requires, and validators only mention it in their notes.

Samples pinned at the curvature bound (|h| = L) sit at the profile's
infinities and are handled by zone structure instead: a route may open
with a run of ``h = -L`` (tangent leaves) and close with a run of
``h = +L`` (line leaves), but pinned samples anywhere else are violations.

Validation is windowed: only sampled pairs are checked, and every verdict
carries a note that behavior outside the window is unchecked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .halfplane import Transversal, TransversalKind

DEFAULT_TOL = 1e-9

_PIN_EPS = 1e-15  # |h| within this of the bound counts as exactly pinned
_WINDOW_NOTE = "window only: behavior outside the sampled interval is unchecked"


def lipschitz_profile(phi: float, h: float) -> float:
    """The strictly decreasing profile transform F(phi, .).

    F(phi, h) = ln[ (sin phi - h) / (h cos phi + sqrt(1 - h^2) sin phi) ]
    on |h| < sin phi, with F(pi/2, h) = -ath(h).  Arguments at or beyond
    the bound return the divergence signal: +inf at the lower end, -inf
    at the upper end.
    """
    b = _check_phi(phi)
    if h >= b:
        return -math.inf
    if h <= -b:
        return math.inf
    return math.log((b - h) / (h * math.cos(phi) + math.sqrt(1.0 - h * h) * b))


def profile_inverse(phi: float, y: float) -> float:
    """Solve F(phi, h) = y for h by bisection (F is strictly decreasing)."""
    b = _check_phi(phi)
    if phi == math.pi / 2:
        return -math.tanh(y)
    if math.isinf(y):
        return -b if y > 0 else b
    lo, hi = -b, b
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if lipschitz_profile(phi, mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def min_curvature_rate(phi: float, h: float) -> float:
    """Lower bound on dh/dt for a differentiable valid route at level h.

    Equals sin(phi) / F'(h), written in closed form:

        (h - sin phi)(h cos phi + sqrt(1-h^2) sin phi) sqrt(1-h^2)
        ----------------------------------------------------------
              1 - h sin phi + sqrt(1-h^2) cos phi

    Nonpositive on the admissible band, zero exactly at |h| = sin phi,
    and equal to h^2 - 1 at phi = pi/2.
    """
    b = _check_phi(phi)
    if abs(h) > b + 1e-12:
        raise DomainError(f"|h| must not exceed sin(phi)={b!r}, got h={h!r}")
    h = min(max(h, -b), b)
    if b - abs(h) <= _PIN_EPS:
        return 0.0
    root = math.sqrt(1.0 - h * h)
    num = (h - b) * (h * math.cos(phi) + root * b) * root
    den = 1.0 - h * b + root * math.cos(phi)
    return num / den


def min_angle_rate(phi: float, beta: float) -> float:
    """The curvature rate bound expressed for the boundary angle:

        (sin phi + cos beta) cos(phi + beta) / (1 + sin(phi + beta)),

    which is min_curvature_rate(phi, -cos beta) / sin(beta), and -sin(beta)
    at phi = pi/2.
    """
    b = _check_phi(phi)
    if not 0.0 <= beta <= math.pi:
        raise DomainError(f"boundary angle must lie in [0, pi], got {beta!r}")
    if abs(math.cos(beta)) > b + 1e-12:
        raise DomainError(f"angle {beta!r} is not admissible for phi={phi!r}")
    den = 1.0 + math.sin(phi + beta)
    if den <= 1e-15:
        # Only reachable at phi = pi/2, beta = pi, where the rate is -sin(beta) = 0.
        return 0.0
    return (b + math.cos(beta)) * math.cos(phi + beta) / den


def _check_phi(phi: float) -> float:
    if not 0.0 < phi <= math.pi / 2:
        raise DomainError(f"transversal angle must lie in (0, pi/2], got {phi!r}")
    return math.sin(phi)


@dataclass(frozen=True)
class Route:
    """Sampled curvature course along a transversal.

    ``t`` must be strictly increasing; ``h`` has matching length, as does
    the optional derivative track ``dh``.  Curvature bound violations are
    reported by the validators rather than rejected here, so diagnostic
    routes stay representable.
    """

    transversal: Transversal
    t: np.ndarray
    h: np.ndarray
    dh: np.ndarray | None = None
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=float)
        h = np.asarray(self.h, dtype=float)
        if t.ndim != 1 or t.size == 0:
            raise DomainError("t must be a nonempty 1-d array")
        if h.shape != t.shape:
            raise DomainError(f"h has shape {h.shape}, expected {t.shape}")
        if not np.all(np.diff(t) > 0):
            raise DomainError("t must be strictly increasing")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "h", h)
        if self.dh is not None:
            dh = np.asarray(self.dh, dtype=float)
            if dh.shape != t.shape:
                raise DomainError(f"dh has shape {dh.shape}, expected {t.shape}")
            object.__setattr__(self, "dh", dh)
        if not self.tol > 0:
            raise DomainError(f"tolerance must be positive, got {self.tol!r}")

    @property
    def n(self) -> int:
        return int(self.t.size)

    @property
    def window(self) -> tuple[float, float]:
        return float(self.t[0]), float(self.t[-1])


@dataclass(frozen=True)
class Zones:
    """Pinned-run boundaries: the route may sit at h = -bound up to
    ``t_minus`` and at h = +bound from ``t_plus`` on (-inf / +inf when
    the corresponding run is absent)."""

    t_minus: float
    t_plus: float


@dataclass(frozen=True)
class Violation:
    """One broken inequality.

    ``kind`` is ``bound`` (|h| beyond the curvature bound), ``zone``
    (pinned sample outside the allowed leading/trailing runs), ``pair``
    (one-sided growth between t1 and t2), or ``pointwise`` (derivative
    below the rate bound at t1).  Pair and zone violations carry both
    times; the rest leave t2 as nan.
    """

    kind: str
    t1: float
    t2: float
    slack: float


@dataclass(frozen=True)
class Verdict:
    valid: bool
    zones: Zones
    worst_slack: float
    violations: tuple[Violation, ...]
    notes: tuple[str, ...]
    mode: str


def _classify_samples(h: np.ndarray, bound: float, tol: float):
    """Boolean masks (bad, low, high, interior) for the sample levels."""
    bad = np.abs(h) > bound + tol
    low = (~bad) & (np.abs(h + bound) <= tol)
    high = (~bad) & (np.abs(h - bound) <= tol)
    interior = ~(bad | low | high)
    return bad, low, high, interior


def detect_zones(route: Route) -> Zones:
    """Scan the pinned runs.  Pure bookkeeping: violations of the zone
    pattern are reported by the validators, not here."""
    if route.transversal.kind == TransversalKind.HOROCYCLE:
        return Zones(-math.inf, math.inf)
    bound = route.transversal.curvature_bound
    _, low, high, _ = _classify_samples(route.h, bound, route.tol)
    t_minus = -math.inf
    for i in range(route.n):
        if not low[i]:
            break
        t_minus = float(route.t[i])
    t_plus = math.inf
    for i in range(route.n - 1, -1, -1):
        if not high[i]:
            break
        t_plus = float(route.t[i])
    return Zones(t_minus, t_plus)


def _structure_violations(route: Route, bound: float):
    """Bound and zone-pattern violations shared by both validators.

    Returns (violations, usable) where ``usable`` masks the samples that
    take part in the interior checks.
    """
    t, h, tol = route.t, route.h, route.tol
    bad, low, high, interior = _classify_samples(h, bound, tol)
    violations = []
    for i in np.flatnonzero(bad):
        violations.append(
            Violation("bound", float(t[i]), math.nan, bound - abs(float(h[i])))
        )
    # Leading run of lows is legal; any low after the first non-low sample
    # forces an intersection with everything from that sample on.
    not_low = np.flatnonzero(~low)
    if not_low.size:
        k0 = int(not_low[0])
        for j in np.flatnonzero(low[k0:]) + k0:
            violations.append(
                Violation("zone", float(t[k0]), float(t[j]), -math.inf)
            )
    # Mirror image for the trailing run of highs.
    not_high = np.flatnonzero(~high)
    if not_high.size:
        k1 = int(not_high[-1])
        for i in np.flatnonzero(high[:k1]):
            violations.append(
                Violation("zone", float(t[i]), float(t[k1]), -math.inf)
            )
    return violations, interior


def _profile_vector(phi_eff: float, h: np.ndarray, bound: float) -> np.ndarray:
    b = bound
    hc = np.clip(h, -b, b)
    out = np.empty_like(hc)
    inner = np.abs(hc) < b
    hi = hc[inner]
    out[inner] = np.log(
        (b - hi) / (hi * math.cos(phi_eff) + np.sqrt(1.0 - hi * hi) * b)
    )
    out[hc >= b] = -math.inf
    out[hc <= -b] = math.inf
    return out


def _rate_vector(phi_eff: float, h: np.ndarray, bound: float) -> np.ndarray:
    b = bound
    hc = np.clip(h, -b, b)
    root = np.sqrt(np.maximum(1.0 - hc * hc, 0.0))
    num = (hc - b) * (hc * math.cos(phi_eff) + root * b) * root
    den = 1.0 - hc * b + root * math.cos(phi_eff)
    out = np.where(b - np.abs(hc) <= _PIN_EPS, 0.0, num / np.maximum(den, 1e-300))
    return out


def _effective_phi(route: Route) -> float:
    kind = route.transversal.kind
    if kind == TransversalKind.HOROCYCLE:
        raise DomainError("horizontal transversals are handled by validate_horocycle")
    if kind == TransversalKind.GEODESIC:
        return math.pi / 2
    return route.transversal.phi


def validate_c0(route: Route) -> Verdict:
    """Sampled one-sided growth check over every interior pair.

    The slack of a pair (t1, t2) is ``L (t2 - t1) - (F(h(t2)) - F(h(t1)))``;
    the route is valid when no slack drops below -tol and the pinned
    samples follow the leading/trailing zone pattern.
    """
    phi_eff = _effective_phi(route)
    bound = route.transversal.curvature_bound
    L = bound
    tol = route.tol
    violations, interior = _structure_violations(route, bound)
    worst = math.inf if not violations else min(v.slack for v in violations)

    tt = route.t[interior]
    ff = _profile_vector(phi_eff, route.h[interior], bound)
    worst_two_sided = math.inf
    two_sided_at: tuple[float, float] | None = None
    for i in range(tt.size - 1):
        dt = tt[i + 1 :] - tt[i]
        df = ff[i + 1 :] - ff[i]
        slack = L * dt - df
        m = float(slack.min())
        if m < worst:
            worst = m
        for j in np.flatnonzero(slack < -tol):
            violations.append(
                Violation(
                    "pair", float(tt[i]), float(tt[i + 1 + j]), float(slack[j])
                )
            )
        other = L * dt + df
        m2 = float(other.min())
        if m2 < worst_two_sided:
            worst_two_sided = m2
            two_sided_at = (float(tt[i]), float(tt[i + 1 + int(other.argmin())]))

    notes = [_WINDOW_NOTE, "one-sided growth condition is the normative check"]
    if worst_two_sided < -tol:
        notes.append(
            "two-sided Lipschitz estimate fails by "
            f"{-worst_two_sided:.6g} at pair {two_sided_at}; this does not "
            "affect validity"
        )
    elif math.isfinite(worst_two_sided):
        notes.append("two-sided Lipschitz estimate also holds on this window")

    violations.sort(key=lambda v: (v.t1, v.t2 if not math.isnan(v.t2) else v.t1))
    return Verdict(
        valid=not violations,
        zones=detect_zones(route),
        worst_slack=worst,
        violations=tuple(violations),
        notes=tuple(notes),
        mode="c0",
    )


def validate_c1(route: Route) -> Verdict:
    """Pointwise derivative check: dh/dt >= min_curvature_rate(phi, h) - tol
    at every sample off the pins.

    Uses the supplied derivative track when present, otherwise central
    differences (one-sided at the ends).
    """
    phi_eff = _effective_phi(route)
    bound = route.transversal.curvature_bound
    tol = route.tol
    violations, interior = _structure_violations(route, bound)
    worst = math.inf if not violations else min(v.slack for v in violations)

    if route.dh is not None:
        hp = route.dh
        source = "supplied derivative track"
    elif route.n >= 2:
        hp = np.gradient(route.h, route.t)
        source = "central finite differences"
    else:
        hp = np.zeros(1)
        source = "single sample, derivative taken as 0"

    rhs = _rate_vector(phi_eff, route.h, bound)
    ok = ~(np.abs(route.h) > bound + tol)
    slack = hp - rhs
    for i in np.flatnonzero(ok & (slack < -tol)):
        violations.append(
            Violation("pointwise", float(route.t[i]), math.nan, float(slack[i]))
        )
    if np.any(ok):
        worst = min(worst, float(slack[ok].min()))

    violations.sort(key=lambda v: (v.t1, v.t2 if not math.isnan(v.t2) else v.t1))
    return Verdict(
        valid=not violations,
        zones=detect_zones(route),
        worst_slack=worst,
        violations=tuple(violations),
        notes=(_WINDOW_NOTE, f"derivatives: {source}"),
        mode="c1",
    )


def validate_horocycle(route: Route) -> Verdict:
    """Along a horizontal transversal the only realizable course is h = 0;
    the slack at each sample is -|h(t)|."""
    if route.transversal.kind != TransversalKind.HOROCYCLE:
        raise DomainError("validate_horocycle requires a horocycle transversal")
    tol = route.tol
    slack = -np.abs(route.h)
    violations = tuple(
        Violation("pointwise", float(route.t[i]), math.nan, float(slack[i]))
        for i in np.flatnonzero(slack < -tol)
    )
    return Verdict(
        valid=not violations,
        zones=Zones(-math.inf, math.inf),
        worst_slack=float(slack.min()),
        violations=violations,
        notes=(
            _WINDOW_NOTE,
            "only the zero course is realizable over a horizontal transversal",
        ),
        mode="horocycle",
    )
