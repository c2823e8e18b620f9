# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled Monte Carlo kernel.

Bit-identical twin of petersburg._mc_pure: the same counter-derived
splitmix64 streams, the same toss-to-bit mapping, the same histogram
contract. Unsigned 64-bit wraparound here matches the masked big-int
arithmetic there.
"""

from cpython cimport array
from libc.stdint cimport uint64_t

import array

cdef uint64_t GOLDEN = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t MIX_A = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t MIX_B = <uint64_t>0x94D049BB133111EB


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * MIX_A
    z = (z ^ (z >> 27)) * MIX_B
    return z ^ (z >> 31)


def stop_histogram(seed, trials, max_tosses, first_trial=0):
    """Histogram of stopping positions; see petersburg._mc_pure.stop_histogram."""
    cdef uint64_t s = seed
    cdef uint64_t t0 = first_trial
    cdef Py_ssize_t n = trials
    cdef Py_ssize_t m = max_tosses
    cdef array.array counts = array.array('Q', bytes(8 * (m + 1)))
    cdef uint64_t[::1] c = counts
    cdef uint64_t state, word
    cdef uint64_t draw
    cdef Py_ssize_t i, k, stopped_at
    cdef int bits

    with nogil:
        for i in range(n):
            state = mix64(s + (t0 + <uint64_t>i + 1) * GOLDEN)
            word = mix64(state + GOLDEN)
            draw = 0
            bits = 64
            stopped_at = 0
            for k in range(1, m + 1):
                if word & 1:
                    stopped_at = k
                    break
                word >>= 1
                bits -= 1
                if bits == 0:
                    draw += 1
                    word = mix64(state + (draw + 1) * GOLDEN)
                    bits = 64
            c[stopped_at] += 1

    return counts.tolist()
