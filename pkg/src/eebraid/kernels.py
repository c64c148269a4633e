"""Batch kernels over integer-coded braid words.

Letters are coded ``0: s1, 1: s2, 2: s1^-1, 3: s2^-1`` (int8); ``-1`` pads
ragged batches.  Every public function dispatches to a numba loop kernel or a
vectorized numpy equivalent according to :mod:`eebraid._accel`.  Both paths
compute identical integers; the tests compare them directly.

Polynomials are dense int64 coefficient rows with a fixed offset: entry
``k`` holds the coefficient of ``t^(k - offset)``.  Integer overflow wraps,
so results are exact modulo 2^64; for the word lengths used here the
coefficients stay far below that bound.
"""

from __future__ import annotations

import numpy as np

from . import _accel
from ._accel import njit

MERSENNE = (1 << 31) - 1


def as_code_array(words, width: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Pack sequences of letter codes into a padded (N, width) int8 array plus lengths."""
    words = [np.asarray(w, dtype=np.int8) for w in words]
    lengths = np.array([len(w) for w in words], dtype=np.int64)
    if width is None:
        width = int(lengths.max()) if len(words) else 0
    out = np.full((len(words), width), -1, dtype=np.int8)
    for n, w in enumerate(words):
        out[n, :len(w)] = w
    return out, lengths


# -- canonical forms ---------------------------------------------------------


@njit
def _orbit_min_nb(words):
    n_words, length = words.shape
    out = np.zeros(n_words, dtype=np.int64)
    if length == 0:
        return out
    for n in range(n_words):
        best = np.int64(-1)
        for rev in range(2):
            for m in range(4):
                for k in range(length):
                    v = np.int64(0)
                    for j in range(length):
                        p = (k + j) % length
                        if rev == 1:
                            p = length - 1 - p
                        v = v * 4 + (words[n, p] ^ m)
                    if best < 0 or v < best:
                        best = v
        out[n] = best
    return out


def _orbit_min_np(words):
    n_words, length = words.shape
    if length == 0:
        return np.zeros(n_words, dtype=np.int64)
    j = np.arange(length)
    rot = (j[None, :] + j[:, None]) % length  # (k, j)
    idx = np.concatenate([rot, length - 1 - rot])  # (2L, L)
    weights = 4 ** np.arange(length - 1, -1, -1, dtype=np.int64)
    best = np.full(n_words, np.iinfo(np.int64).max, dtype=np.int64)
    gathered = words[:, idx].astype(np.int64)  # (N, 2L, L)
    for m in range(4):
        vals = (gathered ^ m) @ weights
        best = np.minimum(best, vals.min(axis=1))
    return best


def orbit_min(words: np.ndarray) -> np.ndarray:
    """Least base-4 code over the symmetry orbit of each (equal-length) word."""
    words = np.ascontiguousarray(words, dtype=np.int8)
    if _accel.backend() == "numba":
        return _orbit_min_nb(words)
    return _orbit_min_np(words)


def codes_to_words(codes: np.ndarray, length: int) -> np.ndarray:
    shifts = 2 * np.arange(length - 1, -1, -1, dtype=np.int64)
    return ((np.asarray(codes, dtype=np.int64)[:, None] >> shifts) & 3).astype(np.int8)


def words_to_codes(words: np.ndarray) -> np.ndarray:
    length = words.shape[1]
    weights = 4 ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return words.astype(np.int64) @ weights


def canonical_words(length: int, chunk: int = 1 << 16):
    """Yield (n, length) arrays of all orbit-minimal words, ascending."""
    if length == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    total = 4 ** length
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        words = codes_to_words(codes, length)
        keep = orbit_min(words) == codes
        if keep.any():
            yield words[keep]


# -- Burau matrices ----------------------------------------------------------


@njit
def _rmul_row(m0, m1, g, tmp):
    size = m0.shape[0]
    if g == 0:  # (m0, m1) -> (-t m0, m0 + m1)
        for e in range(size):
            m1[e] += m0[e]
        for e in range(size - 1, 0, -1):
            m0[e] = -m0[e - 1]
        m0[0] = 0
    elif g == 2:  # (m0, m1) -> (-m0/t, m0/t + m1)
        for e in range(size - 1):
            m1[e] += m0[e + 1]
        for e in range(size - 1):
            m0[e] = -m0[e + 1]
        m0[size - 1] = 0
    elif g == 1:  # (m0, m1) -> (m0 + t m1, -t m1)
        for e in range(1, size):
            m0[e] += m1[e - 1]
        for e in range(size - 1, 0, -1):
            m1[e] = -m1[e - 1]
        m1[0] = 0
    elif g == 3:  # (m0, m1) -> (m0 + m1, -m1/t)
        for e in range(size):
            m0[e] += m1[e]
        for e in range(size - 1):
            m1[e] = -m1[e + 1]
        m1[size - 1] = 0


@njit
def _burau_nb(words, lengths, width):
    n_words = words.shape[0]
    size = 2 * width + 1
    out = np.zeros((n_words, 4, size), dtype=np.int64)
    tmp = np.zeros(size, dtype=np.int64)
    for n in range(n_words):
        a = out[n, 0]
        b = out[n, 1]
        c = out[n, 2]
        d = out[n, 3]
        a[width] = 1
        d[width] = 1
        for j in range(lengths[n]):
            g = words[n, j]
            _rmul_row(a, b, g, tmp)
            _rmul_row(c, d, g, tmp)
    return out


def _shift_up(x):
    y = np.zeros_like(x)
    y[:, 1:] = x[:, :-1]
    return y


def _shift_down(x):
    y = np.zeros_like(x)
    y[:, :-1] = x[:, 1:]
    return y


def _rmul_rows_np(m0, m1, g):
    if g == 0:
        return -_shift_up(m0), m0 + m1
    if g == 2:
        s = _shift_down(m0)
        return -s, s + m1
    if g == 1:
        return m0 + _shift_up(m1), -_shift_up(m1)
    return m0 + m1, -_shift_down(m1)


def _burau_np(words, lengths, width):
    n_words = words.shape[0]
    size = 2 * width + 1
    out = np.zeros((n_words, 4, size), dtype=np.int64)
    out[:, 0, width] = 1
    out[:, 3, width] = 1
    for j in range(words.shape[1]):
        col = np.where(j < lengths, words[:, j], -1)
        for g in range(4):
            sel = np.nonzero(col == g)[0]
            if sel.size == 0:
                continue
            blk = out[sel]
            a, b = _rmul_rows_np(blk[:, 0], blk[:, 1], g)
            c, d = _rmul_rows_np(blk[:, 2], blk[:, 3], g)
            out[sel] = np.stack([a, b, c, d], axis=1)
    return out


def burau_batch(words: np.ndarray, lengths: np.ndarray | None = None, width: int | None = None) -> np.ndarray:
    """psi of each word as (N, 4, 2*width+1) int64 rows (a, b, c, d), offset ``width``."""
    words = np.ascontiguousarray(words, dtype=np.int8)
    if lengths is None:
        lengths = np.full(words.shape[0], words.shape[1], dtype=np.int64)
    lengths = np.ascontiguousarray(lengths, dtype=np.int64)
    if width is None:
        width = words.shape[1]
    if _accel.backend() == "numba":
        return _burau_nb(words, lengths, width)
    return _burau_np(words, lengths, width)


def trace_batch(words: np.ndarray, lengths: np.ndarray | None = None, width: int | None = None) -> np.ndarray:
    m = burau_batch(words, lengths, width)
    return m[:, 0] + m[:, 3]


def switched_words(words: np.ndarray) -> np.ndarray:
    """(N, L) -> (N, L, L): entry [n, i] is word n with letter i inverted."""
    n_words, length = words.shape
    rep = np.repeat(words[:, None, :], length, axis=1)
    diag = np.arange(length)
    rep[:, diag, diag] ^= 2
    return rep


def switched_traces(words: np.ndarray) -> np.ndarray:
    """(N, L) -> (N, L, 2L+1) traces of all crossing-switched words."""
    n_words, length = words.shape
    sw = switched_words(words).reshape(n_words * length, length)
    return trace_batch(sw).reshape(n_words, length, 2 * length + 1)


def exponent_sums(words: np.ndarray, lengths: np.ndarray | None = None) -> np.ndarray:
    signs = np.where(words < 0, 0, np.where(words >= 2, -1, 1))
    if lengths is not None:
        pos = np.arange(words.shape[1])[None, :]
        signs = np.where(pos < lengths[:, None], signs, 0)
    return signs.sum(axis=-1)


def jones_from_traces(traces: np.ndarray, esums: np.ndarray) -> np.ndarray:
    """Jones coefficients in q from traces in t (offset W) and exponent sums.

    V = (-q)^(e-2) (q^2 tr(q^2) + 1 + q^4).  Output rows have length 6W+9 with
    offset 3W+4 (q-exponent range [-3W-4, 3W+4]).
    """
    traces = np.asarray(traces, dtype=np.int64)
    esums = np.asarray(esums, dtype=np.int64)
    lead = traces.shape[:-1]
    tw = (traces.shape[-1] - 1) // 2
    flat_t = traces.reshape(-1, traces.shape[-1])
    flat_e = esums.reshape(-1)
    k = flat_t.shape[0]
    width = 3 * tw + 4
    size = 2 * width + 1
    out = np.zeros((k, size), dtype=np.int64)
    # exponent of q^2 * t^j * q^(e-2) is 2j + e
    base = width + flat_e  # index of q^e
    cols = base[:, None] + 2 * np.arange(-tw, tw + 1)[None, :]
    np.put_along_axis(out, cols, flat_t, axis=1)
    rows = np.arange(k)
    out[rows, base - 2] += 1
    out[rows, base + 2] += 1
    sign = np.where((flat_e - 2) % 2 == 0, 1, -1)
    out *= sign[:, None]
    return out.reshape(*lead, size)


# -- Kauffman bracket state sums -----------------------------------------------


@njit
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit
def _bracket_hist_nb(words):
    n_words, length = words.shape
    n_states = 1 << length
    n_nodes = 3 * length
    max_loops = n_nodes + 1
    hist = np.zeros((n_words, 2 * length + 1, max_loops + 1), dtype=np.int64)
    parent = np.empty(n_nodes, dtype=np.int64)
    for n in range(n_words):
        for s in range(n_states):
            for x in range(n_nodes):
                parent[x] = x
            loops = n_nodes
            n_b = 0
            for j in range(length):
                g = words[n, j]
                i = g & 1
                o = 2 if i == 0 else 0
                bit = (s >> j) & 1
                n_b += bit
                cup = bit ^ (1 if g >= 2 else 0)
                nj = (j + 1) % length
                # pairs of nodes to join
                for q in range(3):
                    if q == 0:
                        x = 3 * j + o
                        y = 3 * nj + o
                    elif cup == 0:
                        x = 3 * j + i + (q - 1)
                        y = 3 * nj + i + (q - 1)
                    elif q == 1:
                        x = 3 * j + i
                        y = 3 * j + i + 1
                    else:
                        x = 3 * nj + i
                        y = 3 * nj + i + 1
                    rx = _find(parent, x)
                    ry = _find(parent, y)
                    if rx != ry:
                        parent[rx] = ry
                        loops -= 1
            hist[n, length - 2 * n_b + length, loops] += 1
    return hist


def _bracket_hist_np(words, chunk_states: int = 1 << 16):
    n_words, length = words.shape
    n_states = 1 << length
    n_nodes = 3 * length
    hist = np.zeros((n_words, 2 * length + 1, n_nodes + 2), dtype=np.int64)
    states = np.arange(n_states, dtype=np.int64)
    bits = ((states[:, None] >> np.arange(length)[None, :]) & 1).astype(np.int8)  # (S, L)
    aidx = length - 2 * bits.sum(axis=1) + length  # (S,)
    neg = (words >= 2).astype(np.int8)  # (W, L)
    i_str = (words & 1).astype(np.int64)  # (W, L)
    o_str = np.where(i_str == 0, 2, 0)
    jj = np.arange(length)
    prev = (jj - 1) % length
    nxt = (jj + 1) % length
    sidx = np.arange(3)
    for w in range(n_words):
        cup = (bits ^ neg[w][None, :]).astype(bool)  # (S, L)
        iw, ow = i_str[w], o_str[w]
        # node (j, s): neighbour through crossing j ("down") and crossing j-1 ("up")
        s_grid = np.broadcast_to(sidx[None, :], (length, 3))
        is_o_down = s_grid == ow[:, None]
        partner_down = np.where(s_grid == iw[:, None], iw[:, None] + 1, iw[:, None])
        is_o_up = s_grid == ow[prev][:, None]
        partner_up = np.where(s_grid == iw[prev][:, None], iw[prev][:, None] + 1, iw[prev][:, None])
        straight_down = 3 * nxt[:, None] + s_grid
        turn_down = 3 * jj[:, None] + partner_down
        straight_up = 3 * prev[:, None] + s_grid
        turn_up = 3 * jj[:, None] + partner_up
        cup_down = cup[:, :, None] & ~is_o_down[None]  # (S, L, 3)
        cup_up = cup[:, prev][:, :, None] & ~is_o_up[None]
        down = np.where(cup_down, turn_down[None], straight_down[None]).reshape(n_states, n_nodes)
        up = np.where(cup_up, turn_up[None], straight_up[None]).reshape(n_states, n_nodes)
        lab = np.broadcast_to(np.arange(n_nodes), (n_states, n_nodes)).copy()
        rows = np.arange(n_states)[:, None]
        while True:
            new = np.minimum(lab, np.minimum(lab[rows, down], lab[rows, up]))
            new = new[rows, new]  # pointer jump
            if np.array_equal(new, lab):
                break
            lab = new
        loops = (lab == np.arange(n_nodes)[None, :]).sum(axis=1)
        np.add.at(hist[w], (aidx, loops), 1)
    return hist


def bracket_hist(words: np.ndarray) -> np.ndarray:
    """Histogram hist[n, (#A - #B) + L, loops] over all 2^L Kauffman states.

    Splice convention: positive letter A = identity, B = cup-cap; swapped for
    negative letters.  Requires L >= 1.
    """
    words = np.ascontiguousarray(words, dtype=np.int8)
    if words.shape[1] == 0:
        raise ValueError("bracket_hist needs at least one crossing")
    if _accel.backend() == "numba":
        return _bracket_hist_nb(words)
    return _bracket_hist_np(words)


def bracket_from_hist(hist: np.ndarray, length: int) -> tuple[np.ndarray, int]:
    """Collapse a state histogram into bracket coefficients in A.

    Returns (coeffs, offset) with coeffs[k] the coefficient of A^(k - offset).
    """
    max_loops = hist.shape[-1] - 1
    offset = length + 2 * max_loops
    size = 2 * offset + 1
    lead = hist.shape[:-2]
    out = np.zeros(lead + (size,), dtype=np.int64)
    from math import comb

    for m in range(1, max_loops + 1):
        col = hist[..., :, m]  # (..., 2L+1) indexed by a-exponent + L
        if not col.any():
            continue
        p = m - 1  # delta^(m-1) = sum_j (-1)^p C(p, j) A^(2p - 4j)
        for j in range(p + 1):
            c = (-1) ** p * comb(p, j)
            shift = 2 * p - 4 * j
            lo = offset - length + shift
            out[..., lo:lo + 2 * length + 1] += c * col
    return out, offset


# -- preimage search modulo a prime -----------------------------------------------


def generator_mats_mod(t: int, p: int = MERSENNE) -> np.ndarray:
    """psi of the four letters at the integer point t, reduced mod p, as (4, 4) rows (a, b, c, d)."""
    ti = pow(t, -1, p)
    mats = [
        (-t, 1, 0, 1),
        (1, 0, t, -t),
        (-ti, ti, 0, 1),
        (1, 0, 1, -ti),
    ]
    return np.array([[x % p for x in m] for m in mats], dtype=np.int64)


@njit
def _preimage_dfs_nb(gens, target, length, esum, p, max_hits):
    hits = np.full((max_hits, max(length, 1)), -1, dtype=np.int8)
    n_hits = 0
    if length == 0:
        if target[0] == 1 and target[1] == 0 and target[2] == 0 and target[3] == 1 and esum == 0:
            n_hits = 1
        return hits, n_hits
    mats = np.zeros((length + 1, 4), dtype=np.int64)
    mats[0, 0] = 1
    mats[0, 3] = 1
    sums = np.zeros(length + 1, dtype=np.int64)
    choice = np.full(length, -1, dtype=np.int64)
    depth = 0
    while depth >= 0:
        choice[depth] += 1
        if choice[depth] > 3:
            choice[depth] = -1
            depth -= 1
            continue
        g = choice[depth]
        if depth > 0 and choice[depth - 1] == (g ^ 2):
            continue
        s = sums[depth] + (1 if g < 2 else -1)
        remaining = length - depth - 1
        if abs(esum - s) > remaining:
            continue
        m = mats[depth]
        h = gens[g]
        nm = mats[depth + 1]
        nm[0] = (m[0] * h[0] + m[1] * h[2]) % p
        nm[1] = (m[0] * h[1] + m[1] * h[3]) % p
        nm[2] = (m[2] * h[0] + m[3] * h[2]) % p
        nm[3] = (m[2] * h[1] + m[3] * h[3]) % p
        sums[depth + 1] = s
        if remaining == 0:
            if nm[0] == target[0] and nm[1] == target[1] and nm[2] == target[2] and nm[3] == target[3]:
                for j in range(length):
                    hits[n_hits, j] = choice[j]
                n_hits += 1
                if n_hits == max_hits:
                    return hits, n_hits
            continue
        depth += 1
    return hits, n_hits


def _preimage_np(gens, target, length, esum, p, max_hits):
    if length == 0:
        ok = tuple(target) == (1, 0, 0, 1) and esum == 0
        return np.zeros((max_hits, 1), dtype=np.int8) - 1, int(ok)
    mats = np.array([[1, 0, 0, 1]], dtype=np.int64)
    words = np.zeros((1, 0), dtype=np.int8)
    sums = np.zeros(1, dtype=np.int64)
    for depth in range(length):
        f = mats.shape[0]
        g = np.tile(np.arange(4, dtype=np.int8), f)
        parent = np.repeat(np.arange(f), 4)
        s = sums[parent] + np.where(g < 2, 1, -1)
        ok = np.abs(esum - s) <= length - depth - 1
        if depth > 0:
            ok &= words[parent, -1] != (g ^ 2)
        parent, g, s = parent[ok], g[ok], s[ok]
        m, h = mats[parent], gens[g]
        mats = np.stack([
            (m[:, 0] * h[:, 0] + m[:, 1] * h[:, 2]) % p,
            (m[:, 0] * h[:, 1] + m[:, 1] * h[:, 3]) % p,
            (m[:, 2] * h[:, 0] + m[:, 3] * h[:, 2]) % p,
            (m[:, 2] * h[:, 1] + m[:, 3] * h[:, 3]) % p,
        ], axis=1)
        words = np.concatenate([words[parent], g[:, None]], axis=1)
        sums = s
    match = np.all(mats == np.asarray(target)[None, :], axis=1)
    found = words[match][:max_hits]
    hits = np.full((max_hits, length), -1, dtype=np.int8)
    hits[:found.shape[0]] = found
    return hits, int(found.shape[0])


def preimage_candidates(target_mod: np.ndarray, length: int, esum: int, t: int,
                        p: int = MERSENNE, max_hits: int = 64) -> np.ndarray:
    """Reduced words of the given length and exponent sum whose psi at t matches mod p.

    Candidates come out in lexicographic code order; callers verify exactly.
    """
    gens = generator_mats_mod(t, p)
    target = np.asarray(target_mod, dtype=np.int64) % p
    if _accel.backend() == "numba":
        hits, n = _preimage_dfs_nb(gens, target, length, esum, p, max_hits)
    else:
        hits, n = _preimage_np(gens, target, length, esum, p, max_hits)
    return hits[:n, :length]
