from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eebraid import _accel, kernels
from eebraid.bracket import kauffman_bracket_reference, jones_bracket_arrays
from eebraid.braidword import BraidWord, canonicalize
from eebraid.burau import burau_lettered, array_to_poly
from eebraid.jones import jones_array_to_poly, jones_burau_arrays, jones_via_burau

RNG = np.random.default_rng(7)


def random_codes(count: int, length: int) -> np.ndarray:
    return RNG.integers(0, 4, size=(count, length), dtype=np.int8)


def both(fn):
    outs = {}
    for name in BACKENDS:
        with _accel.use_backend(name):
            outs[name] = fn()
    return outs


BACKENDS = ["numpy"] + (["numba"] if _accel.HAVE_NUMBA else [])


def agree(outs) -> bool:
    vals = list(outs.values())
    return all(np.array_equal(vals[0], v) for v in vals[1:])


# -- backends agree with each other ------------------------------------------------------


@pytest.mark.parametrize("length", [1, 4, 7])
def test_orbit_min_backends_agree(length):
    words = random_codes(500, length)
    assert agree(both(lambda: kernels.orbit_min(words)))


@pytest.mark.parametrize("length", [1, 5, 9])
def test_burau_backends_agree(length):
    words = random_codes(300, length)
    assert agree(both(lambda: kernels.burau_batch(words)))


def test_bracket_hist_backends_agree():
    words = random_codes(40, 8)
    assert agree(both(lambda: kernels.bracket_hist(words)))


def test_preimage_backends_agree():
    gens = kernels.generator_mats_mod(2)
    m = np.array([1, 0, 0, 1], dtype=np.int64)
    for c in (0, 1, 2, 3, 0, 1):
        a, b, cc, d = m
        ga, gb, gc, gd = gens[c]
        m = np.array([a * ga + b * gc, a * gb + b * gd, cc * ga + d * gc, cc * gb + d * gd]) % kernels.MERSENNE
    outs = both(lambda: kernels.preimage_candidates(m, 6, 2, 2))
    assert agree(outs)
    assert any(tuple(r) == (0, 1, 2, 3, 0, 1) for r in outs["numpy"])


# -- kernels against the exact scalar routes ---------------------------------------------------


def test_orbit_min_matches_canonicalize(backend):
    words = random_codes(200, 6)
    mins = kernels.codes_to_words(kernels.orbit_min(words), 6)
    for w, m in zip(words, mins):
        assert BraidWord.from_codes(m) == canonicalize(BraidWord.from_codes(w))


def test_burau_batch_matches_scalar(backend):
    words = random_codes(100, 7)
    out = kernels.burau_batch(words)
    for w, rows in zip(words, out):
        ref = burau_lettered(BraidWord.from_codes(w))
        assert [array_to_poly(r, 7) for r in rows] == list(ref.entries())


def test_padded_words(backend):
    arr, lengths = kernels.as_code_array([[0, 1], [2, 3, 0, 1], []])
    out = kernels.burau_batch(arr, lengths)
    assert [array_to_poly(r, 4) for r in out[0]] == list(burau_lettered(BraidWord((1, 2))).entries())
    assert [array_to_poly(r, 4) for r in out[2]] == list(burau_lettered(BraidWord()).entries())


def test_both_jones_routes_match_scalar(backend):
    words = random_codes(60, 6)
    a = jones_bracket_arrays(words)
    b = jones_burau_arrays(words)
    for w, ra, rb in zip(words, a, b):
        v = jones_via_burau(BraidWord.from_codes(w))
        assert jones_array_to_poly(ra) == v and jones_array_to_poly(rb) == v


def test_bracket_hist_matches_reference(backend):
    words = random_codes(30, 6)
    coeffs, offset = kernels.bracket_from_hist(kernels.bracket_hist(words), 6)
    for w, row in zip(words, coeffs):
        ref = kauffman_bracket_reference(BraidWord.from_codes(w))
        nz = {k - offset: int(c) for k, c in enumerate(row) if c}
        assert nz == {e: int(c) for e, c in ref.terms()}


@given(st.integers(0, 4 ** 6 - 1))
def test_code_conversion_round_trip(code):
    words = kernels.codes_to_words(np.array([code]), 6)
    assert kernels.words_to_codes(words)[0] == code


def test_canonical_words_are_orbit_minima():
    got = np.concatenate(list(kernels.canonical_words(4)))
    expect = sorted({canonicalize(BraidWord.from_codes(w)) for w in kernels.codes_to_words(np.arange(256), 4)})
    assert [BraidWord.from_codes(w) for w in got] == expect


def test_bracket_hist_rejects_empty():
    with pytest.raises(ValueError):
        kernels.bracket_hist(np.zeros((1, 0), dtype=np.int8))


# -- backend selection -----------------------------------------------------------------------


def test_env_flag_forces_numpy():
    env = dict(os.environ, EEBRAID_PURE_NUMPY="1")
    out = subprocess.run([sys.executable, "-c", "from eebraid import _accel; print(_accel.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _accel.set_backend("fortran")
