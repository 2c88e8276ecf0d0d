"""Instrumented gap-sequence insertion sort with a reconstructible move trace.

Pass k of a run with gaps (h_1, ..., h_p) insertion-sorts each chain of
positions that agree modulo h_k (1-based positions, so chain j holds positions
j, j + h_k, j + 2 h_k, ...).  For every element value v the trace records how
many members of v's chain stood left of v and above v when the pass began;
that count is exactly the number of positions the insertion shifts v, so the
trace both prices the run and pins down the input permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import CorruptTraceError
from .increments import IncrementSequence, validate_sequence
from .perm import as_permutation, left_larger_counts


@dataclass
class PassTrace:
    """Per-element, per-pass shift counts for one run.

    move_counts[i - 1, k - 1] is the shift count of element value i in pass k.
    Row index is the element value, not its position; the matrix together with
    the gaps determines the input permutation (decode_trace inverts it).
    """

    move_counts: np.ndarray
    n: int
    p: int
    gaps: IncrementSequence

    def __eq__(self, other):
        if not isinstance(other, PassTrace):
            return NotImplemented
        return (self.n == other.n and self.p == other.p
                and self.gaps == other.gaps
                and np.array_equal(self.move_counts, other.move_counts))


@dataclass(frozen=True)
class SortStats:
    """Exact operation counters for one run.

    moves               total shift count, summed over all elements and passes
    paper_comparisons   moves + n * p: prices every insertion at shifts + 1
    raw_comparisons     comparator invocations of the plain insertion loop,
                        which saves the +1 whenever an element runs all the
                        way to the front of its chain
    per_pass_moves      moves split by pass
    """

    moves: int
    paper_comparisons: int
    raw_comparisons: int
    per_pass_moves: tuple[int, ...]


class ShellsortRun(NamedTuple):
    output: np.ndarray
    trace: PassTrace
    stats: SortStats


def _run_pass(arr: np.ndarray, h: int):
    """One gap-h pass over arr.

    Returns (per-position shift counts, raw comparison count, next array).
    Counting is done per chain by merge counting instead of stepwise shifting;
    the counters are identical to the plain insertion loop's because each
    insertion shifts an element past exactly the chain members that were left
    of it and larger.
    """
    n = arr.size
    if h == 1:
        counts = left_larger_counts(arr)
        idx = np.arange(n, dtype=np.int64)
        moves = int(counts.sum())
        raw = moves + int(np.count_nonzero(counts < idx))
        return counts, raw, np.sort(arr)

    chain_len = -(-n // h)
    padded = chain_len * h
    if padded > n:
        # pad values sit past the end of the last chains and exceed every
        # real value, so they contribute nothing to any count
        tail = np.arange(n + 1, padded + 1, dtype=np.int64)
        vals = np.concatenate((arr, tail))
    else:
        vals = arr
    grid = vals.reshape(chain_len, h)  # column j = chain j, top to bottom

    # lay the chains out contiguously and shift each into its own value band:
    # cross-chain comparisons then never register as "larger to the left"
    flat = grid.T.reshape(-1)
    stride = np.int64(padded + 1)
    keys = flat + stride * np.repeat(np.arange(h, dtype=np.int64), chain_len)
    counts_grid = left_larger_counts(keys).reshape(h, chain_len).T

    rows = np.arange(chain_len, dtype=np.int64)[:, None]
    real = (rows * h + np.arange(h, dtype=np.int64)[None, :]) < n
    moves = int(counts_grid.sum())
    raw = moves + int(np.count_nonzero((counts_grid < rows) & real))

    counts_pos = counts_grid.reshape(-1)[:n]
    nxt = np.sort(grid, axis=0).reshape(-1)[:n]
    return counts_pos, raw, nxt


def shellsort(values: Sequence[int] | np.ndarray,
              gaps: IncrementSequence | Sequence[int]) -> ShellsortRun:
    """Sort a permutation of 1..n with the given gap sequence.

    Returns the sorted output, the full per-element per-pass trace, and exact
    counters.  The input is left untouched.
    """
    arr = as_permutation(values)
    n = arr.size
    seq = validate_sequence(tuple(gaps), n)
    p = seq.p

    move_counts = np.zeros((n, p), dtype=np.int64)
    work = arr.copy()
    per_pass = []
    raw_total = 0
    for k, h in enumerate(seq.gaps):
        counts_pos, raw, nxt = _run_pass(work, h)
        move_counts[work - 1, k] = counts_pos
        per_pass.append(int(counts_pos.sum()))
        raw_total += raw
        work = nxt

    moves = sum(per_pass)
    stats = SortStats(
        moves=moves,
        paper_comparisons=moves + n * p,
        raw_comparisons=raw_total,
        per_pass_moves=tuple(per_pass),
    )
    trace = PassTrace(move_counts=move_counts, n=n, p=p, gaps=seq)
    return ShellsortRun(output=work, trace=trace, stats=stats)


def insertion_sort(values: Sequence[int] | np.ndarray) -> ShellsortRun:
    """Single-pass run with gap 1; moves equals the inversion count."""
    return shellsort(values, (1,))


def decode_trace(trace: PassTrace) -> np.ndarray:
    """Reconstruct the input permutation from its trace.

    Works backward from the sorted output: the state after the final pass is
    1..n, and knowing the shift counts of pass k turns the state after pass k
    into the state before it, one chain at a time.  Within a chain the shift
    counts are an inversion table (count of larger elements to the left), so
    placing values from largest to smallest at their recorded offsets rebuilds
    the chain's original order.
    """
    n, p = trace.n, trace.p
    m = trace.move_counts
    if m.shape != (n, p):
        raise CorruptTraceError(f"move_counts shape {m.shape} does not match (n={n}, p={p})")
    state = list(range(1, n + 1))
    for k in range(p - 1, -1, -1):
        h = trace.gaps.gaps[k]
        for j in range(min(h, n)):
            positions = range(j, n, h)
            chain_vals = sorted(state[pos] for pos in positions)
            rebuilt: list[int] = []
            for v in reversed(chain_vals):
                mv = int(m[v - 1, k])
                if mv < 0 or mv > len(rebuilt):
                    raise CorruptTraceError(
                        f"element {v}, pass {k + 1}: shift count {mv} exceeds "
                        f"feasible insertion distance {len(rebuilt)}")
                rebuilt.insert(mv, v)
            for pos, v in zip(positions, rebuilt):
                state[pos] = v
    return np.asarray(state, dtype=np.int64)


def trace_csv(trace: PassTrace) -> str:
    """CSV dump of a trace: one row per (element, pass) cell."""
    lines = ["element,pass,m"]
    for i in range(trace.n):
        for k in range(trace.p):
            lines.append(f"{i + 1},{k + 1},{int(trace.move_counts[i, k])}")
    return "\n".join(lines) + "\n"
