"""Numba-jitted kernels, arithmetic-identical to :mod:`numpy_impl`.

Every function mirrors the numpy reference operation by operation (fastmath
stays off) so the two backends return bitwise-equal arrays; the only
difference is loop scheduling. ``cache=True`` persists compilations next to
the package.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def bilinear_many(values, fx, fy):
    hgt, wdt = values.shape
    n = fx.shape[0]
    out = np.empty(n)
    x_hi = wdt - 1.0
    y_hi = hgt - 1.0
    x0_max = max(wdt - 2, 0)
    y0_max = max(hgt - 2, 0)
    for i in range(n):
        x = fx[i]
        y = fy[i]
        if x < 0.0:
            x = 0.0
        elif x > x_hi:
            x = x_hi
        if y < 0.0:
            y = 0.0
        elif y > y_hi:
            y = y_hi
        x0 = int(np.floor(x))
        if x0 > x0_max:
            x0 = x0_max
        y0 = int(np.floor(y))
        if y0 > y0_max:
            y0 = y0_max
        x1 = min(x0 + 1, wdt - 1)
        y1 = min(y0 + 1, hgt - 1)
        tx = x - x0
        ty = y - y0
        v00 = values[y0, x0]
        v01 = values[y0, x1]
        v10 = values[y1, x0]
        v11 = values[y1, x1]
        top = (1.0 - tx) * v00 + tx * v01
        bot = (1.0 - tx) * v10 + tx * v11
        out[i] = (1.0 - ty) * top + ty * bot
    return out


@njit(cache=True)
def _heap_less(ka, ia, kb, ib):
    if ka < kb:
        return True
    if ka == kb and ia < ib:
        return True
    return False


@njit(cache=True)
def _heap_push(keys, idxs, size, key, idx):
    i = size
    keys[i] = key
    idxs[i] = idx
    while i > 0:
        parent = (i - 1) >> 1
        if _heap_less(keys[i], idxs[i], keys[parent], idxs[parent]):
            keys[i], keys[parent] = keys[parent], keys[i]
            idxs[i], idxs[parent] = idxs[parent], idxs[i]
            i = parent
        else:
            break
    return size + 1


@njit(cache=True)
def _heap_pop(keys, idxs, size):
    top_key = keys[0]
    top_idx = idxs[0]
    size -= 1
    keys[0] = keys[size]
    idxs[0] = idxs[size]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= size:
            break
        small = left
        right = left + 1
        if right < size and _heap_less(keys[right], idxs[right], keys[left], idxs[left]):
            small = right
        if _heap_less(keys[small], idxs[small], keys[i], idxs[i]):
            keys[i], keys[small] = keys[small], keys[i]
            idxs[i], idxs[small] = idxs[small], idxs[i]
            i = small
        else:
            break
    return top_key, top_idx, size


@njit(cache=True)
def _eikonal_update(a, b, h):
    if a > b:
        a, b = b, a
    if b - a >= h:
        return a + h
    diff = b - a
    return 0.5 * (a + b + np.sqrt(2.0 * h * h - diff * diff))


@njit(cache=True)
def eikonal_solve(occupied, seed_cells, seed_values, h):
    hgt, wdt = occupied.shape
    ncells = hgt * wdt
    dist = np.full((hgt, wdt), np.inf)
    accepted = np.zeros((hgt, wdt), dtype=np.uint8)
    cap = 4 * ncells + seed_cells.shape[0] + 8
    heap_keys = np.empty(cap)
    heap_idxs = np.empty(cap, dtype=np.int64)
    size = 0
    for k in range(seed_cells.shape[0]):
        iy = seed_cells[k, 0]
        ix = seed_cells[k, 1]
        val = seed_values[k]
        if occupied[iy, ix]:
            continue
        if val < dist[iy, ix]:
            dist[iy, ix] = val
            size = _heap_push(heap_keys, heap_idxs, size, val, iy * wdt + ix)
    while size > 0:
        d, flat, size = _heap_pop(heap_keys, heap_idxs, size)
        iy = flat // wdt
        ix = flat % wdt
        if accepted[iy, ix] or d > dist[iy, ix]:
            continue
        accepted[iy, ix] = 1
        for which in range(4):
            if which == 0:
                ny, nx = iy, ix - 1
            elif which == 1:
                ny, nx = iy, ix + 1
            elif which == 2:
                ny, nx = iy - 1, ix
            else:
                ny, nx = iy + 1, ix
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
                size = _heap_push(heap_keys, heap_idxs, size, cand, ny * wdt + nx)
    return dist


@njit(cache=True)
def raycast_cells(occupied, sx, sy, dir_x, dir_y, max_cells):
    hgt, wdt = occupied.shape
    n = dir_x.shape[0]
    ix0 = int(np.floor(sx + 0.5))
    iy0 = int(np.floor(sy + 0.5))
    t_out = np.full(n, max_cells)
    hit_ix = np.full(n, -1, dtype=np.int64)
    hit_iy = np.full(n, -1, dtype=np.int64)
    for r in range(n):
        dx = dir_x[r]
        dy = dir_y[r]
        ix = ix0
        iy = iy0
        if dx > 0.0:
            step_x = 1
            tmax_x = ((ix + 0.5) - sx) / dx
            tdelta_x = step_x / dx
        elif dx < 0.0:
            step_x = -1
            tmax_x = ((ix - 0.5) - sx) / dx
            tdelta_x = step_x / dx
        else:
            step_x = -1
            tmax_x = np.inf
            tdelta_x = np.inf
        if dy > 0.0:
            step_y = 1
            tmax_y = ((iy + 0.5) - sy) / dy
            tdelta_y = step_y / dy
        elif dy < 0.0:
            step_y = -1
            tmax_y = ((iy - 0.5) - sy) / dy
            tdelta_y = step_y / dy
        else:
            step_y = -1
            tmax_y = np.inf
            tdelta_y = np.inf
        while True:
            if tmax_x <= tmax_y:
                t_entry = tmax_x
                if t_entry >= max_cells:
                    break
                ix += step_x
                tmax_x += tdelta_x
            else:
                t_entry = tmax_y
                if t_entry >= max_cells:
                    break
                iy += step_y
                tmax_y += tdelta_y
            if ix < 0 or ix >= wdt or iy < 0 or iy >= hgt:
                break
            if occupied[iy, ix]:
                t_out[r] = t_entry
                hit_ix[r] = ix
                hit_iy[r] = iy
                break
    return t_out, hit_ix, hit_iy


@njit(cache=True)
def hermite_controls(p1x, p1y, m0x, m0y, m1x, m1y, horizon, n, omega_eps):
    m = p1x.shape[0]
    ax = horizon * m0x
    ay = horizon * m0y
    xy = np.empty((m, n + 1, 2))
    dxy = np.empty((m, n + 1, 2))
    v_out = np.empty((m, n))
    w_out = np.empty((m, n))
    for c in range(m):
        cx = horizon * m1x[c]
        cy = horizon * m1y[c]
        px = p1x[c]
        py = p1y[c]
        for k in range(n + 1):
            s = k / n
            h10 = s * ((s - 1.0) * (s - 1.0))
            b01 = (s * s) * (3.0 - 2.0 * s)
            h11 = (s * s) * (s - 1.0)
            d10 = 3.0 * s * s - 4.0 * s + 1.0
            d01 = 6.0 * s - 6.0 * s * s
            d11 = 3.0 * s * s - 2.0 * s
            xy[c, k, 0] = ax * h10 + px * b01 + cx * h11
            xy[c, k, 1] = ay * h10 + py * b01 + cy * h11
            dxy[c, k, 0] = (ax * d10 + px * d01 + cx * d11) / horizon
            dxy[c, k, 1] = (ay * d10 + py * d01 + cy * d11) / horizon
        for k in range(n):
            s = (k + 0.5) / n
            d10 = 3.0 * s * s - 4.0 * s + 1.0
            d01 = 6.0 * s - 6.0 * s * s
            d11 = 3.0 * s * s - 2.0 * s
            g10 = 6.0 * s - 4.0
            g01 = 6.0 - 12.0 * s
            g11 = 6.0 * s - 2.0
            vx = (ax * d10 + px * d01 + cx * d11) / horizon
            vy = (ay * d10 + py * d01 + cy * d11) / horizon
            accx = (ax * g10 + px * g01 + cx * g11) / (horizon * horizon)
            accy = (ay * g10 + py * g01 + cy * g11) / (horizon * horizon)
            q = vx * vx + vy * vy
            v_out[c, k] = np.sqrt(q)
            w_out[c, k] = (vx * accy - vy * accx) / max(q, omega_eps)
    return xy, dxy, v_out, w_out


@njit(cache=True)
def rollout_const_xy(x0, y0, cos_tab, sin_tab, v, dt):
    m, n = cos_tab.shape
    xy = np.empty((m, n + 1, 2))
    for c in range(m):
        x = x0
        y = y0
        xy[c, 0, 0] = x
        xy[c, 0, 1] = y
        vc = v[c]
        for k in range(n):
            x = x + vc * cos_tab[c, k] * dt
            y = y + vc * sin_tab[c, k] * dt
            xy[c, k + 1, 0] = x
            xy[c, k + 1, 1] = y
    return xy
