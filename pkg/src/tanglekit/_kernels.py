"""Compiled state-enumeration kernels for the bracket evaluators."""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["full_state_sum", "monocyclic_counts", "state_loops"]


@njit(cache=True)
def _cyc_mul(x, y):
    out = np.zeros(4, np.int64)
    for i in range(4):
        if x[i] == 0:
            continue
        for j in range(4):
            k = i + j
            if k >= 4:
                out[k - 4] -= x[i] * y[j]
            else:
                out[k] += x[i] * y[j]
    return out


@njit(cache=True)
def _smooth(sm, c, s):
    nb = 0
    for i in range(c):
        b = 4 * i
        if (s >> i) & 1:
            sm[b] = b + 3
            sm[b + 3] = b
            sm[b + 1] = b + 2
            sm[b + 2] = b + 1
            nb += 1
        else:
            sm[b] = b + 1
            sm[b + 1] = b
            sm[b + 2] = b + 3
            sm[b + 3] = b + 2
    return nb


@njit(cache=True)
def _count_cycles(nbr, sm, visited):
    n = nbr.shape[0]
    for k in range(n):
        visited[k] = False
    d = 0
    for st in range(n):
        if visited[st]:
            continue
        d += 1
        x = st
        while not visited[x]:
            visited[x] = True
            y = sm[x]
            visited[y] = True
            x = nbr[y]
    return d


@njit(cache=True)
def state_loops(nbr, c, s):
    """Number of circles (excluding free loops) of state ``s``; bit i set = B at crossing i."""
    sm = np.empty(4 * c, np.int64)
    visited = np.empty(4 * c, np.bool_)
    _smooth(sm, c, s)
    return _count_cycles(nbr, sm, visited)


@njit(cache=True)
def full_state_sum(nbr, c, loops, delta):
    """Sum ``A^(a-b) * delta^(d-1)`` over all ``2^c`` states, as a Z[A] vector.

    States are first tallied by ``(a - b mod 8, d)``; each tally is then
    multiplied by the matching power of ``delta``.
    """
    nmax = loops + 2 * c + 2
    hist = np.zeros((8, nmax), np.int64)
    n = 4 * c
    sm = np.empty(n, np.int64)
    stamp = np.zeros(n, np.int64)
    nb = _smooth(sm, c, 0)
    gray = 0
    for s in range(1 << c):
        if s:
            # Gray-code order: exactly one crossing changes smoothing
            i = 0
            while not (s >> i) & 1:
                i += 1
            gray ^= 1 << i
            b = 4 * i
            if (gray >> i) & 1:
                sm[b] = b + 3
                sm[b + 3] = b
                sm[b + 1] = b + 2
                sm[b + 2] = b + 1
                nb += 1
            else:
                sm[b] = b + 1
                sm[b + 1] = b
                sm[b + 2] = b + 3
                sm[b + 3] = b + 2
                nb -= 1
        d = loops
        mark = s + 1
        for st in range(n):
            if stamp[st] == mark:
                continue
            d += 1
            x = st
            while stamp[x] != mark:
                stamp[x] = mark
                y = sm[x]
                stamp[y] = mark
                x = nbr[y]
        hist[(c - 2 * nb) % 8, d] += 1
    acc = np.zeros(4, np.int64)
    power = np.zeros(4, np.int64)
    power[0] = 1
    for d in range(1, nmax):
        # power = delta^(d-1)
        for e in range(8):
            n = hist[e, d]
            if n == 0:
                continue
            for k in range(4):
                j = k + e
                sign = 1
                while j >= 4:
                    j -= 4
                    sign = -sign
                acc[j] += sign * n * power[k]
        power = _cyc_mul(power, delta)
    return acc


@njit(cache=True)
def monocyclic_counts(nbr, order, c):
    """Count single-circle states by ``(#A - #B) mod 8`` with early pruning.

    Crossings are smoothed in ``order``; a branch dies as soon as a circle
    closes before the very last join.
    """
    counts = np.zeros(8, np.int64)
    mate = nbr.copy()
    undo_idx = np.empty(8 * c + 8, np.int64)
    undo_val = np.empty(8 * c + 8, np.int64)
    level_top = np.zeros(c + 1, np.int64)
    choice = np.zeros(c, np.int64)
    top = 0
    k = 0
    na = 0
    while k >= 0:
        if choice[k] == 2:
            choice[k] = 0
            k -= 1
            if k >= 0:
                choice[k] += 1
            continue
        # restore mate entries changed at this level by a previous choice
        while top > level_top[k]:
            top -= 1
            mate[undo_idx[top]] = undo_val[top]
        x = order[k]
        base = 4 * x
        ok = True
        for pair in range(2):
            if choice[k] == 0:
                a = 0 if pair == 0 else 2
                b = 1 if pair == 0 else 3
            else:
                a = 0 if pair == 0 else 1
                b = 3 if pair == 0 else 2
            u = base + a
            v = base + b
            mu = mate[u]
            mv = mate[v]
            if mu == v:
                if not (k == c - 1 and pair == 1):
                    ok = False
                    break
            else:
                undo_idx[top] = mu
                undo_val[top] = mate[mu]
                top += 1
                undo_idx[top] = mv
                undo_val[top] = mate[mv]
                top += 1
                mate[mu] = mv
                mate[mv] = mu
        if not ok:
            choice[k] += 1
            continue
        if k == c - 1:
            na = 0
            for t in range(c):
                if choice[t] == 0:
                    na += 1
            counts[(2 * na - c) % 8] += 1
            choice[k] += 1
            continue
        level_top[k + 1] = top
        k += 1
        choice[k] = 0
    return counts
