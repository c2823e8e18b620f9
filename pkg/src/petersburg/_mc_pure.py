"""Interpreted Monte Carlo kernel.

Mirrors the compiled kernel bit for bit. Randomness comes from splitmix64
finalizer streams that are fully counter-derived: trial t of seed s draws its
words as

    state(s, t) = mix64(s + (t + 1) * GOLDEN)
    word(s, t, j) = mix64(state(s, t) + (j + 1) * GOLDEN)

so any trial (and any word within a trial) is reachable without sequencing.
Toss i of a trial consumes bit (i - 1) mod 64 of word (i - 1) // 64, least
significant bit first; a set bit is heads. All arithmetic wraps modulo 2**64
exactly as the C version's unsigned types do.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX_A = 0xBF58476D1CE4E5B9
MIX_B = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * MIX_B) & MASK64
    return z ^ (z >> 31)


def trial_state(seed: int, trial: int) -> int:
    return mix64(seed + (trial + 1) * GOLDEN)


def stream_word(state: int, draw: int) -> int:
    return mix64(state + (draw + 1) * GOLDEN)


def stop_histogram(seed: int, trials: int, max_tosses: int, first_trial: int = 0) -> list[int]:
    """Histogram of stopping positions over `trials` games.

    Index k counts games whose first heads landed on toss k; index 0 counts
    games with no heads within max_tosses. The reduction is a plain count so
    any partition of the trial range merges to the same histogram.
    """
    counts = [0] * (max_tosses + 1)
    for t in range(first_trial, first_trial + trials):
        state = trial_state(seed, t)
        word = stream_word(state, 0)
        draw = 0
        bits = 64
        stopped_at = 0
        for k in range(1, max_tosses + 1):
            if word & 1:
                stopped_at = k
                break
            word >>= 1
            bits -= 1
            if bits == 0:
                draw += 1
                word = stream_word(state, draw)
                bits = 64
        counts[stopped_at] += 1
    return counts


def stop_histogram_from_coin(coin, trials: int, max_tosses: int, first_trial: int = 0) -> list[int]:
    """Same contract as stop_histogram but driven by an injected coin source.

    The coin must expose flips(trial) yielding one boolean per toss (True is
    heads). Streams shorter than max_tosses are rejected.
    """
    counts = [0] * (max_tosses + 1)
    for t in range(first_trial, first_trial + trials):
        stopped_at = 0
        flips = iter(coin.flips(t))
        for k in range(1, max_tosses + 1):
            try:
                heads = next(flips)
            except StopIteration:
                raise ValueError(f"coin stream for trial {t} ended before toss {k}") from None
            if heads:
                stopped_at = k
                break
        counts[stopped_at] += 1
    return counts
