"""End-to-end acceptance checks, one per headline guarantee.

Each test prints a single ``criterion N: PASS/FAIL`` line (run with
``pytest -s`` to see the table) and then asserts, so the suite both
documents and enforces the contract:

 1. distance oracle and equidistant-offset identities
 2. closed-form disjointness predicates agree with the carrier oracle
 3. hypercycle formulas specialize to the geodesic ones at phi = pi/2
 4. the profile and the curvature rate are FD-dual
 5. the pencil family is exactly valid and synthesizes clean
 6. random valid routes pass and audit clean; perturbed ones fail with
    an oracle-confirmed crossing inside the injected window
 7. only the flat route survives over a horocycle
 8. rendering is deterministic and pins the pencil endpoints to the px
 9. sampled curvature stays inside the hypercycle budget
"""

import math
import re
import time

import numpy as np
import pytest

from umbilic import (
    HPoint,
    Route,
    Transversal,
    Viewport,
    builtin_route,
    equidistant_offset,
    hyperbolic_distance,
    ideal_endpoints,
    lipschitz_profile,
    min_curvature_rate,
    perturbed_invalid_route,
    random_valid_route,
    render_svg,
    run_disjointness_agreement,
    synthesize,
    validate_c0,
    validate_c1,
    validate_horocycle,
    verify_disjoint,
)


def _report(criterion: int, ok: bool, detail: str) -> None:
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def _hypercycle_phi(i: int) -> float:
    return 0.3 + 1.2 * (i / 49.0)


@pytest.fixture(scope="module")
def route_batches():
    """100 valid and 100 perturbed random routes, half per transversal
    kind, shared by criteria 6 and 9."""
    valid = []
    perturbed = []
    for i in range(50):
        valid.append((Transversal.geodesic(), random_valid_route(
            Transversal.geodesic(), seed=1000 + i
        )))
        tr = Transversal.hypercycle(_hypercycle_phi(i))
        valid.append((tr, random_valid_route(tr, seed=1000 + i)))
    for i in range(50):
        route, window = perturbed_invalid_route(
            Transversal.geodesic(), seed=2000 + i
        )
        perturbed.append((Transversal.geodesic(), route, window))
        tr = Transversal.hypercycle(_hypercycle_phi(i))
        route, window = perturbed_invalid_route(tr, seed=2000 + i)
        perturbed.append((tr, route, window))
    return valid, perturbed


def test_01_distance_and_offset_identities():
    d = hyperbolic_distance(HPoint(0.0, 1.0), HPoint(0.0, math.e))
    d_err = abs(d - 1.0)

    worst = 0.0
    for beta in np.linspace(0.05, math.pi - 0.05, 1000):
        delta = equidistant_offset(beta)
        worst = max(
            worst,
            abs(math.cos(beta) - math.tanh(delta)),
            abs(1.0 / math.tan(beta) - math.sinh(delta)),
        )
    ok = d_err <= 1e-12 and worst <= 1e-10
    _report(1, ok, f"|d-1|={d_err:.2e}, worst offset residual={worst:.2e}")


def test_02_disjointness_agreement():
    t0 = time.perf_counter()
    stats = {
        family: run_disjointness_agreement(family, n=10000, seed=20240915)
        for family in ("geodesic", "hypercycle")
    }
    elapsed = time.perf_counter() - t0
    mismatch = sum(len(s.mismatches) for s in stats.values())
    compared = sum(s.compared for s in stats.values())
    ok = mismatch == 0 and compared > 15000 and elapsed < 5.0
    _report(
        2,
        ok,
        f"{compared} comparisons, {mismatch} mismatches, {elapsed:.2f}s",
    )


def test_03_geodesic_specialization():
    worst = 0.0
    for h in np.linspace(-(1 - 1e-3), 1 - 1e-3, 1000):
        worst = max(
            worst,
            abs(lipschitz_profile(math.pi / 2, h) - (-math.atanh(h))),
            abs(min_curvature_rate(math.pi / 2, h) - (h * h - 1.0)),
        )
    ok = worst <= 1e-12
    _report(3, ok, f"worst residual over 1000 levels = {worst:.2e}")


def test_04_profile_rate_duality():
    eps = 1e-6
    worst = 0.0
    for phi in (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2):
        b = math.sin(phi)
        for h in np.linspace(-b * 0.99, b * 0.99, 1000):
            dF = (
                lipschitz_profile(phi, h + eps) - lipschitz_profile(phi, h - eps)
            ) / (2 * eps)
            worst = max(worst, abs(dF * min_curvature_rate(phi, h) - b))
    ok = worst <= 1e-6
    _report(4, ok, f"worst duality residual = {worst:.2e}")


def test_05_pencil_family():
    route = builtin_route("pencil", window=(-3, 3), n=121)
    v0 = validate_c0(route)
    v1 = validate_c1(route)
    slice_ = synthesize(route)
    report = verify_disjoint(slice_)
    end_err = 0.0
    for _, leaf in slice_.leaves:
        ends = ideal_endpoints(leaf)
        end_err = max(end_err, abs(ends.a_minus + 1.0), abs(ends.a_plus - 1.0))
    ok = (
        v0.valid
        and v1.valid
        and abs(v0.worst_slack) <= 1e-9
        and abs(v1.worst_slack) <= 1e-9
        and end_err <= 1e-9
        and report.clean
    )
    _report(
        5,
        ok,
        f"slack c0={v0.worst_slack:.2e} c1={v1.worst_slack:.2e}, "
        f"endpoint error={end_err:.2e}, audit clean={report.clean}",
    )


def test_06_random_routes(route_batches):
    valid, perturbed = route_batches
    valid_ok = 0
    for tr, route in valid:
        verdict = validate_c0(route)
        if not verdict.valid:
            continue
        if verify_disjoint(synthesize(route)).clean:
            valid_ok += 1

    caught = 0
    for tr, route, window in perturbed:
        verdict = validate_c0(route)
        if verdict.valid:
            continue
        report = verify_disjoint(synthesize(route, force=True))
        hits = [
            c
            for c in report.intersecting
            if c.t1 <= window[1] and window[0] <= c.t2
        ]
        if hits:
            caught += 1

    ok = valid_ok == len(valid) and caught == len(perturbed)
    _report(
        6,
        ok,
        f"{valid_ok}/{len(valid)} valid routes clean, "
        f"{caught}/{len(perturbed)} perturbations caught in-window",
    )


def test_07_horocycle_rigidity():
    tr = Transversal.horocycle(1.0)
    t = np.linspace(-2, 2, 21)
    flat_ok = validate_horocycle(Route(tr, t, np.zeros(21))).valid
    rejected = all(
        not validate_horocycle(Route(tr, t, np.full(21, c))).valid
        for c in (1e-6, -1e-6, 0.1, -0.5, 1.0)
    )
    ok = flat_ok and rejected
    _report(7, ok, f"flat valid={flat_ok}, all nonzero levels rejected={rejected}")


_PATH_ENDS = re.compile(
    r'd="M (-?\d+\.\d+),(-?\d+\.\d+) A [^ ]+ \d \d 1 (-?\d+\.\d+),(-?\d+\.\d+)"'
)


def test_08_deterministic_render():
    slice_ = synthesize(builtin_route("pencil", window=(-2, 2), n=41))
    vp = Viewport()
    svg = render_svg(slice_, vp)
    identical = svg == render_svg(slice_, vp)

    left = vp.to_px(-1.0, 0.0)
    right = vp.to_px(1.0, 0.0)
    paths = [ln for ln in svg.splitlines() if 'class="leaf' in ln]
    worst_px = math.inf
    if len(paths) == 41:
        worst_px = 0.0
        for ln in paths:
            m = _PATH_ENDS.search(ln)
            if m is None:
                worst_px = math.inf
                break
            x1, y1, x2, y2 = map(float, m.groups())
            worst_px = max(
                worst_px,
                math.hypot(x1 - left[0], y1 - left[1]),
                math.hypot(x2 - right[0], y2 - right[1]),
            )
    ok = identical and worst_px <= 1.0
    _report(
        8,
        ok,
        f"re-render identical={identical}, {len(paths)} leaf paths, "
        f"worst endpoint offset={worst_px:.3f}px",
    )


def test_09_curvature_budget(route_batches):
    valid, _ = route_batches
    worst = -math.inf
    routes = 0
    for tr, route in valid:
        if tr.phi is None:
            continue
        routes += 1
        c2 = math.cos(tr.phi) ** 2
        worst = max(worst, float(np.max(route.h**2 + c2)))
    ok = routes == 50 and worst <= 1.0 + 1e-9
    _report(9, ok, f"max h^2 + cos^2(phi) = {worst:.12f} over {routes} routes")
