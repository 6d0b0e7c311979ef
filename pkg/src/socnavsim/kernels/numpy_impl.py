"""Pure-numpy kernel implementations.

Reference backend for the numba kernels in :mod:`numba_impl`. Both backends
share the exact same arithmetic (operation order included) so results agree
bitwise; trig tables and direction vectors are computed by the caller so the
kernels themselves stay transcendental-free.

Grid convention throughout: ``values[iy, ix]`` with cell centers at integer
grid coordinates, cell boundaries at half-integers, row 0 at minimum y.
"""

import heapq

import numpy as np


def bilinear_many(values, fx, fy):
    """Bilinear interpolation at fractional grid coords, clamped to the grid.

    ``fx``/``fy`` are arrays of x (column) and y (row) grid coordinates.
    Samples at exact cell centers return the stored value exactly.
    """
    hgt, wdt = values.shape
    fx = np.clip(fx, 0.0, wdt - 1.0)
    fy = np.clip(fy, 0.0, hgt - 1.0)
    x0 = np.clip(np.floor(fx).astype(np.int64), 0, max(wdt - 2, 0))
    y0 = np.clip(np.floor(fy).astype(np.int64), 0, max(hgt - 2, 0))
    x1 = np.minimum(x0 + 1, wdt - 1)
    y1 = np.minimum(y0 + 1, hgt - 1)
    tx = fx - x0
    ty = fy - y0
    v00 = values[y0, x0]
    v01 = values[y0, x1]
    v10 = values[y1, x0]
    v11 = values[y1, x1]
    top = (1.0 - tx) * v00 + tx * v01
    bot = (1.0 - tx) * v10 + tx * v11
    return (1.0 - ty) * top + ty * bot


def _eikonal_update(a, b, h):
    # a, b: axis minima of accepted neighbor values (inf when none)
    if a > b:
        a, b = b, a
    if b - a >= h:
        return a + h
    diff = b - a
    return 0.5 * (a + b + np.sqrt(2.0 * h * h - diff * diff))


def eikonal_solve(occupied, seed_cells, seed_values, h):
    """First-order upwind fast marching on free cells.

    ``occupied`` is uint8 (nonzero = blocked); ``seed_cells`` is (S, 2) of
    (iy, ix) with boundary values ``seed_values``. Returns float64 distances
    with +inf on occupied / unreached cells.
    """
    hgt, wdt = occupied.shape
    dist = np.full((hgt, wdt), np.inf)
    accepted = np.zeros((hgt, wdt), dtype=bool)
    heap = []
    for k in range(seed_cells.shape[0]):
        iy = int(seed_cells[k, 0])
        ix = int(seed_cells[k, 1])
        val = float(seed_values[k])
        if occupied[iy, ix]:
            continue
        if val < dist[iy, ix]:
            dist[iy, ix] = val
            heapq.heappush(heap, (val, iy * wdt + ix))
    while heap:
        d, flat = heapq.heappop(heap)
        iy, ix = divmod(flat, wdt)
        if accepted[iy, ix] or d > dist[iy, ix]:
            continue
        accepted[iy, ix] = True
        for ny, nx in ((iy, ix - 1), (iy, ix + 1), (iy - 1, ix), (iy + 1, ix)):
            if nx < 0 or nx >= wdt or ny < 0 or ny >= hgt:
                continue
            if occupied[ny, nx] or accepted[ny, nx]:
                continue
            a = np.inf
            if nx > 0 and accepted[ny, nx - 1]:
                a = dist[ny, nx - 1]
            if nx < wdt - 1 and accepted[ny, nx + 1] and dist[ny, nx + 1] < a:
                a = dist[ny, nx + 1]
            b = np.inf
            if ny > 0 and accepted[ny - 1, nx]:
                b = dist[ny - 1, nx]
            if ny < hgt - 1 and accepted[ny + 1, nx] and dist[ny + 1, nx] < b:
                b = dist[ny + 1, nx]
            cand = _eikonal_update(a, b, h)
            if cand < dist[ny, nx]:
                dist[ny, nx] = cand
                heapq.heappush(heap, (cand, ny * wdt + nx))
    return dist


def raycast_cells(occupied, sx, sy, dir_x, dir_y, max_cells):
    """DDA traversal of many rays from one origin, distances in cell units.

    Returns ``(t, hit_ix, hit_iy)``: t is the entry distance of the first
    occupied cell along each ray (``max_cells`` and hit index -1 when the ray
    escapes or exceeds range). The origin cell itself is never reported.
    """
    hgt, wdt = occupied.shape
    n = dir_x.shape[0]
    ix0 = int(np.floor(sx + 0.5))
    iy0 = int(np.floor(sy + 0.5))
    ix = np.full(n, ix0, dtype=np.int64)
    iy = np.full(n, iy0, dtype=np.int64)
    step_x = np.where(dir_x > 0.0, 1, -1).astype(np.int64)
    step_y = np.where(dir_y > 0.0, 1, -1).astype(np.int64)
    tmax_x = np.where(
        dir_x > 0.0,
        ((ix0 + 0.5) - sx) / dir_x,
        np.where(dir_x < 0.0, ((ix0 - 0.5) - sx) / dir_x, np.inf),
    )
    tmax_y = np.where(
        dir_y > 0.0,
        ((iy0 + 0.5) - sy) / dir_y,
        np.where(dir_y < 0.0, ((iy0 - 0.5) - sy) / dir_y, np.inf),
    )
    tdelta_x = np.where(dir_x != 0.0, step_x / dir_x, np.inf)
    tdelta_y = np.where(dir_y != 0.0, step_y / dir_y, np.inf)

    t_out = np.full(n, max_cells, dtype=np.float64)
    hit_ix = np.full(n, -1, dtype=np.int64)
    hit_iy = np.full(n, -1, dtype=np.int64)
    active = np.ones(n, dtype=bool)
    while active.any():
        advance_x = tmax_x <= tmax_y
        t_entry = np.where(advance_x, tmax_x, tmax_y)
        exceeded = active & (t_entry >= max_cells)
        active &= ~exceeded
        mx = active & advance_x
        my = active & ~advance_x
        ix = np.where(mx, ix + step_x, ix)
        iy = np.where(my, iy + step_y, iy)
        tmax_x = np.where(mx, tmax_x + tdelta_x, tmax_x)
        tmax_y = np.where(my, tmax_y + tdelta_y, tmax_y)
        oob = active & ((ix < 0) | (ix >= wdt) | (iy < 0) | (iy >= hgt))
        active &= ~oob
        occ_here = np.zeros(n, dtype=bool)
        occ_here[active] = occupied[iy[active], ix[active]] != 0
        hit = active & occ_here
        t_out[hit] = t_entry[hit]
        hit_ix[hit] = ix[hit]
        hit_iy[hit] = iy[hit]
        active &= ~hit
    return t_out, hit_ix, hit_iy


def hermite_controls(p1x, p1y, m0x, m0y, m1x, m1y, horizon, n, omega_eps):
    """Batch cubic Hermite from the origin with inverse-dynamics controls.

    Boundary conditions: position (0, 0) and velocity (m0x, m0y) at t=0;
    position (p1x, p1y) and velocity (m1x, m1y) at t=horizon, per candidate.
    Returns knot positions/velocities (M, n+1, 2) and midpoint-sampled
    controls v (M, n), w (M, n). The angular rate divides by the squared
    speed floored at ``omega_eps``.
    """
    m = p1x.shape[0]
    ax = horizon * m0x
    ay = horizon * m0y
    cx = horizon * m1x
    cy = horizon * m1y
    p1xc = p1x[:, None]
    p1yc = p1y[:, None]
    cxc = cx[:, None]
    cyc = cy[:, None]

    xy = np.empty((m, n + 1, 2))
    dxy = np.empty((m, n + 1, 2))

    s = np.arange(n + 1) / n
    h10 = s * ((s - 1.0) * (s - 1.0))
    b01 = (s * s) * (3.0 - 2.0 * s)
    h11 = (s * s) * (s - 1.0)
    d10 = 3.0 * s * s - 4.0 * s + 1.0
    d01 = 6.0 * s - 6.0 * s * s
    d11 = 3.0 * s * s - 2.0 * s
    xy[:, :, 0] = ax * h10 + p1xc * b01 + cxc * h11
    xy[:, :, 1] = ay * h10 + p1yc * b01 + cyc * h11
    dxy[:, :, 0] = (ax * d10 + p1xc * d01 + cxc * d11) / horizon
    dxy[:, :, 1] = (ay * d10 + p1yc * d01 + cyc * d11) / horizon

    s = (np.arange(n) + 0.5) / n
    d10 = 3.0 * s * s - 4.0 * s + 1.0
    d01 = 6.0 * s - 6.0 * s * s
    d11 = 3.0 * s * s - 2.0 * s
    g10 = 6.0 * s - 4.0
    g01 = 6.0 - 12.0 * s
    g11 = 6.0 * s - 2.0
    vx = (ax * d10 + p1xc * d01 + cxc * d11) / horizon
    vy = (ay * d10 + p1yc * d01 + cyc * d11) / horizon
    accx = (ax * g10 + p1xc * g01 + cxc * g11) / (horizon * horizon)
    accy = (ay * g10 + p1yc * g01 + cyc * g11) / (horizon * horizon)
    q = vx * vx + vy * vy
    v_out = np.sqrt(q)
    w_out = (vx * accy - vy * accx) / np.maximum(q, omega_eps)
    return xy, dxy, v_out, w_out


def rollout_const_xy(x0, y0, cos_tab, sin_tab, v, dt):
    """Euler position rollout for constant-speed commands.

    ``cos_tab``/``sin_tab`` are (M, n) heading tables precomputed by the
    caller; ``v`` is the per-command speed (M,). Returns positions
    (M, n+1, 2) accumulated sequentially per step.
    """
    m, n = cos_tab.shape
    xy = np.empty((m, n + 1, 2))
    x = np.full(m, x0, dtype=np.float64)
    y = np.full(m, y0, dtype=np.float64)
    xy[:, 0, 0] = x
    xy[:, 0, 1] = y
    for k in range(n):
        x = x + v * cos_tab[:, k] * dt
        y = y + v * sin_tab[:, k] * dt
        xy[:, k + 1, 0] = x
        xy[:, k + 1, 1] = y
    return xy
