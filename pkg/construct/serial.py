"""Hamilton cycles as numpy arrays of serial ids.

Same cycles as the path-level constructions in even.py and odd.py, built
straight from the index formulas. Each path contributes every vertex but its
last, which is the first vertex of the next path. Nothing here checks
adjacency; that is left to the verifier.
"""
import numpy as np

from core import ConstructionIntegrityError, DpGraph, ParityError

from .odd import ASequence

# Serial blocks: layer * n + index.
X, U, V, Y = 0, 1, 2, 3

_LADDER_LAYERS = np.array([U, X, X, U, V, Y, Y, V], dtype=np.int64)


def _runs(n: int, base, step, length, first_layer, second_layer) -> np.ndarray:
    """Concatenate runs; run k visits base[k] + j*step[k] for j < length[k],
    alternating first_layer[k] and second_layer[k]."""
    length = np.asarray(length, dtype=np.int64)
    starts = np.cumsum(length) - length
    run = np.repeat(np.arange(len(length)), length)
    j = np.arange(int(length.sum()), dtype=np.int64) - starts[run]
    index = (np.asarray(base)[run] + j * np.asarray(step)[run]) % n
    layer = np.where(j % 2 == 0, np.asarray(first_layer)[run], np.asarray(second_layer)[run])
    return layer * n + index


def canonical_ids(ids: np.ndarray) -> np.ndarray:
    """Rotate to start at X_0, then orient toward the smaller-serial neighbour."""
    ids = np.asarray(ids, dtype=np.int64)
    hits = np.flatnonzero(ids == 0)
    if not len(hits):
        raise ConstructionIntegrityError("cycle does not contain x0")
    ids = np.roll(ids, -int(hits[0]))
    if len(ids) > 2 and ids[-1] < ids[1]:
        ids = np.concatenate((ids[:1], ids[:0:-1]))
    return ids


def _check_permutation(g: DpGraph, ids: np.ndarray) -> np.ndarray:
    if len(ids) != g.order or not np.array_equal(np.bincount(ids, minlength=g.order), np.ones(g.order, dtype=np.int64)):
        raise ConstructionIntegrityError(f"{g}: construction does not visit each of the {g.order} vertices once")
    return canonical_ids(ids)


def even_cycle_ids(g: DpGraph) -> np.ndarray:
    """Ladder i contributes U_{2i} X_{2i} X_{2i+1} U_{2i+1} V_{2i+1-t} Y_{2i+1-t} Y_{2i+2-t} V_{2i+2-t}."""
    n, t = g.n, g.t
    if n % 2:
        raise ParityError(f"{g}: ladder paths need even n")
    offsets = np.array([0, 0, 1, 1, 1 - t, 1 - t, 2 - t, 2 - t], dtype=np.int64)
    index = (2 * np.arange(n // 2, dtype=np.int64)[:, None] + offsets[None, :]) % n
    return _check_permutation(g, (_LADDER_LAYERS[None, :] * n + index).ravel())


def _odd_steps(d: np.ndarray, n: int, m: int, p: int, inverse: int) -> np.ndarray:
    """Smallest odd j with j*t = d (mod n); d is a multiple of gcd(n, t) = m."""
    j = (((d % n) // m) * inverse) % p
    return np.where(j % 2 == 0, j + p, j)


def odd_cycle_ids(g: DpGraph, a: ASequence) -> np.ndarray:
    """Blocks (S_0 P_0)(R_1 Q_1)(S_2 P_2) ... over 2(2k+1) slots, as in joining_order."""
    params = g.params
    if not params.is_odd:
        raise ParityError(f"{g}: the P/Q/R/S construction needs odd n")
    n, t, m, p = g.n, g.t, a.modulus, params.p
    inverse = pow(t // m, -1, p)

    ai = np.array(a.entries, dtype=np.int64)
    a1 = np.roll(ai, -1)
    a2 = np.roll(ai, -2)
    rim = (a2 - ai) % n
    rim[rim == 0] = n
    r_steps = _odd_steps(ai - (a1 + t - 1), n, m, p, inverse)
    s_steps = _odd_steps((a1 - 1) - ai - t, n, m, p, inverse)

    slot = np.arange(2 * m)
    i = slot % m
    even = slot % 2 == 0
    # Per slot: inner walk (S_i or R_i), spoke (U or V), rim run (X or Y).
    walk_base = np.where(even, a1[i] - 1, a1[i] + t - 1)
    walk_step = np.where(even, -t, t)
    walk_len = np.where(even, s_steps[i], r_steps[i])
    walk_first = np.where(even, V, U)
    walk_second = np.where(even, U, V)
    rim_base = np.where(even, ai[i] + t, ai[i])
    spoke = np.where(even, U, V)
    rim_layer = np.where(even, X, Y)
    ones = np.ones(2 * m, dtype=np.int64)

    ids = _runs(
        n,
        base=np.stack([walk_base, rim_base, rim_base], axis=1).ravel(),
        step=np.stack([walk_step, 0 * ones, ones], axis=1).ravel(),
        length=np.stack([walk_len, ones, rim[i]], axis=1).ravel(),
        first_layer=np.stack([walk_first, spoke, rim_layer], axis=1).ravel(),
        second_layer=np.stack([walk_second, spoke, rim_layer], axis=1).ravel(),
    )
    return _check_permutation(g, ids)
