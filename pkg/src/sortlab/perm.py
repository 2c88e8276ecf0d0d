"""Permutations of 1..n: seeded uniform generation and order statistics.

Everything here is a pure function of its inputs.  Randomness comes from
explicit streams derived from a master seed, so any statistic computed
downstream is reproducible across runs and across parallel schedules.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: a fixed bijective 64-bit avalanche mix."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Stream:
    """SplitMix64 sequence: state walks by the golden-ratio gamma, outputs are
    the mixed states.  Cheap, stable across platforms, and fully determined by
    the initial state."""

    __slots__ = ("_state",)

    def __init__(self, state: int):
        self._state = state & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), drawn by rejection so there is no
        modulo bias."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        span = _MASK64 + 1
        limit = span - span % n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n


@dataclass(frozen=True)
class Seed:
    """Master seed plus the documented stream derivation rule.

    Trial ``trial`` of experiment ``experiment`` uses the stream whose initial
    state is ``mix(mix(mix(master) + experiment) + trial)`` where ``mix`` is
    the SplitMix64 finalizer.  The chained bijective mixes decouple the three
    indices: identical (master, experiment, trial) gives an identical stream
    no matter in which order or on how many workers trials run.
    """

    master: int

    def stream(self, experiment: int = 0, trial: int = 0) -> Stream:
        s = _mix64(self.master)
        s = _mix64((s + experiment) & _MASK64)
        s = _mix64((s + trial) & _MASK64)
        return Stream(s)


def as_permutation(values: Sequence[int] | np.ndarray) -> np.ndarray:
    """Validate that values is a permutation of 1..n; return it as int64."""
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("a permutation is a nonempty one-dimensional sequence")
    n = arr.size
    if int(arr.min()) < 1 or int(arr.max()) > n:
        raise ValueError(f"values must be a permutation of 1..{n}")
    counts = np.bincount(arr, minlength=n + 1)
    if not bool((counts[1:] == 1).all()):
        raise ValueError(f"values must contain each of 1..{n} exactly once")
    return arr


def random_permutation(n: int, stream: Stream) -> np.ndarray:
    """Uniform random permutation of 1..n.

    Fisher-Yates with unbiased range draws: each of the n! orderings is
    equally likely given uniform 64-bit outputs, and the result is a pure
    function of the stream.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    values = list(range(1, n + 1))
    for j in range(n - 1, 0, -1):
        k = stream.below(j + 1)
        values[j], values[k] = values[k], values[j]
    return np.asarray(values, dtype=np.int64)


_BRUTE_LEAF = 64


def left_larger_counts(values: np.ndarray) -> np.ndarray:
    """For every position t, count positions s < t with values[s] > values[t].

    Divide-and-conquer merge counting with vectorized cross-half lookups.
    Values must be distinct.  The total of the result is the inversion count.
    """
    arr = np.asarray(values, dtype=np.int64)
    counts = np.zeros(arr.size, dtype=np.int64)
    if arr.size > 1:
        _count_rec(arr, np.arange(arr.size), counts)
    return counts


def _count_rec(vals: np.ndarray, pos: np.ndarray, counts: np.ndarray):
    n = vals.size
    if n <= _BRUTE_LEAF:
        if n > 1:
            before = np.tri(n, k=-1, dtype=bool).T  # [s, t] true iff s < t
            counts[pos] += ((vals[:, None] > vals[None, :]) & before).sum(axis=0)
        order = np.argsort(vals, kind="stable")
        return vals[order], pos[order]
    mid = n // 2
    lv, lp = _count_rec(vals[:mid], pos[:mid], counts)
    rv, rp = _count_rec(vals[mid:], pos[mid:], counts)
    # every left-half element exceeding a right-half element is an inversion
    counts[rp] += lv.size - np.searchsorted(lv, rv)
    merged = np.concatenate((lv, rv))
    order = np.argsort(merged, kind="stable")
    return merged[order], np.concatenate((lp, rp))[order]


def count_inversions(values: Sequence[int] | np.ndarray) -> int:
    """Number of pairs of positions (a, b) with a < b and values[a] > values[b]."""
    arr = as_permutation(values)
    return int(left_larger_counts(arr).sum())


def count_inversions_pairwise(values: Sequence[int] | np.ndarray) -> int:
    """Quadratic pairwise inversion count, kept as an independent oracle."""
    arr = as_permutation(values)
    total = 0
    for t in range(1, arr.size):
        total += int(np.count_nonzero(arr[:t] > arr[t]))
    return total


def lis_length(values: Sequence[int] | np.ndarray) -> int:
    """Length of the longest strictly increasing subsequence.

    Patience placement: each value lands on the leftmost pile whose top is
    larger, and the pile count at the end is the answer.
    """
    arr = as_permutation(values)
    piles: list[int] = []
    for v in arr.tolist():
        j = bisect_left(piles, v)
        if j == len(piles):
            piles.append(v)
        else:
            piles[j] = v
    return len(piles)


def lds_length(values: Sequence[int] | np.ndarray) -> int:
    """Length of the longest strictly decreasing subsequence."""
    arr = as_permutation(values)
    piles: list[int] = []
    for v in arr.tolist():
        j = bisect_left(piles, -v)
        if j == len(piles):
            piles.append(-v)
        else:
            piles[j] = -v
    return len(piles)


def lis_length_dp(values: Sequence[int] | np.ndarray) -> int:
    """Quadratic dynamic program for the LIS length; testing oracle."""
    arr = as_permutation(values).tolist()
    best = [1] * len(arr)
    for t in range(len(arr)):
        for s in range(t):
            if arr[s] < arr[t] and best[s] + 1 > best[t]:
                best[t] = best[s] + 1
    return max(best)


def lds_length_dp(values: Sequence[int] | np.ndarray) -> int:
    """Quadratic dynamic program for the LDS length; testing oracle."""
    arr = as_permutation(values).tolist()
    best = [1] * len(arr)
    for t in range(len(arr)):
        for s in range(t):
            if arr[s] > arr[t] and best[s] + 1 > best[t]:
                best[t] = best[s] + 1
    return max(best)


def format_permutation(values: Sequence[int] | np.ndarray) -> str:
    """One line of space-separated 1-based values."""
    arr = as_permutation(values)
    return " ".join(str(int(v)) for v in arr)


def parse_permutation(text: str) -> np.ndarray:
    """Inverse of format_permutation."""
    parts = text.split()
    if not parts:
        raise ValueError("empty permutation text")
    return as_permutation([int(tok) for tok in parts])
