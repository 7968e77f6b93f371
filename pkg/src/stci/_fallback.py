"""numpy implementations of the hot kernels, used when the Cython module is unavailable."""
import numpy as np

INF = np.int64(1) << 62
_CHUNK = 1 << 20


def min_coin_tables(coins, limit):
    """Row ``i`` holds the fewest coins from ``coins[:i+1]`` summing to each value 0..limit.

    Unreachable values hold ``INF``. Along each residue class mod ``g`` the
    unbounded recurrence ``t[v] = min(prev[v], t[v-g] + 1)`` is a running
    minimum of ``prev[r + j*g] - j`` shifted back by ``k``.
    """
    coins = [int(c) for c in coins]
    size = limit + 1
    tables = np.empty((len(coins), size), dtype=np.int64)
    prev = np.full(size, INF, dtype=np.int64)
    prev[0] = 0
    for i, g in enumerate(coins):
        rows = -(-size // g)
        buf = np.full(rows * g, INF, dtype=np.int64)
        buf[:size] = prev
        mat = buf.reshape(rows, g)
        k = np.arange(rows, dtype=np.int64)[:, None]
        cur = (np.minimum.accumulate(mat - k, axis=0) + k).ravel()[:size]
        np.minimum(cur, INF, out=cur)
        tables[i] = cur
        prev = cur
    return tables


def _free_coordinates(q, width, start, stop):
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for col in range(width - 1, -1, -1):
        out[:, col] = idx % q
        idx //= q
    return out


def common_zeros(q, nvars, coeffs, exps, offsets):
    """Normalized points of P^(nvars-1)(F_q) where every listed polynomial vanishes.

    Polynomial ``k`` owns terms ``offsets[k]:offsets[k+1]``; ``coeffs`` are
    already reduced mod ``q``. Points come out ordered by the position of the
    leading 1, then lexicographically in the remaining coordinates.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    exps = np.asarray(exps, dtype=np.int64).reshape(-1, nvars)
    offsets = np.asarray(offsets, dtype=np.int64)
    max_e = int(exps.max()) if exps.size else 0
    powtab = np.ones((q, max_e + 1), dtype=np.int64)
    for e in range(1, max_e + 1):
        powtab[:, e] = powtab[:, e - 1] * np.arange(q) % q
    found = []
    for lead in range(nvars):
        width = nvars - 1 - lead
        total = q ** width
        for start in range(0, total, _CHUNK):
            stop = min(total, start + _CHUNK)
            pts = np.zeros((stop - start, nvars), dtype=np.int64)
            pts[:, lead] = 1
            pts[:, lead + 1:] = _free_coordinates(q, width, start, stop)
            keep = np.ones(len(pts), dtype=bool)
            for k in range(len(offsets) - 1):
                val = np.zeros(len(pts), dtype=np.int64)
                for t in range(offsets[k], offsets[k + 1]):
                    term = np.full(len(pts), coeffs[t], dtype=np.int64)
                    for j in range(nvars):
                        if exps[t, j]:
                            term = term * powtab[pts[:, j], exps[t, j]] % q
                    val = (val + term) % q
                keep &= val == 0
            found.append(pts[keep])
    if not found:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.concatenate(found)
