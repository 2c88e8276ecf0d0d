"""Instrumented Bubble Sort with exact exchange accounting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perm import as_permutation


@dataclass(frozen=True)
class BubbleStats:
    """exchanges counts adjacent swaps; each one removes exactly one inversion,
    so exchanges always equals the input's inversion count.  passes_executed
    includes the final swap-free pass that detects sortedness."""

    exchanges: int
    passes_executed: int
    comparisons: int


def bubble_sort(values: Sequence[int] | np.ndarray) -> tuple[np.ndarray, BubbleStats]:
    """Left-to-right passes of adjacent swaps, carrying the running maximum.

    Each pass shrinks by one (the carried maximum is final) and the sort stops
    early after a swap-free pass.  A pass is applied in closed form: position
    i receives min(prefix running max at i, old value at i + 1), and the last
    scanned position receives the prefix maximum.
    """
    arr = as_permutation(values).copy()
    n = arr.size
    exchanges = 0
    comparisons = 0
    passes = 0
    bound = n - 1
    while bound > 0:
        passes += 1
        comparisons += bound
        running = np.maximum.accumulate(arr[: bound + 1])
        swaps = int(np.count_nonzero(running[:-1] > arr[1 : bound + 1]))
        exchanges += swaps
        if swaps == 0:
            break
        new_prefix = np.minimum(running[:-1], arr[1 : bound + 1])
        arr[:bound] = new_prefix
        arr[bound] = running[-1]
        bound -= 1
    return arr, BubbleStats(exchanges=exchanges, passes_executed=passes,
                            comparisons=comparisons)
