"""Sorting with stacks and queues, sequential and parallel.

Parallel devices sit side by side: every element enters exactly one device
and leaves it once.  Sequential stacks sit in series: input elements enter
the rightmost stack S_{k-1}, a pop of S_j for j > 0 drops the element onto
S_{j-1}, and a pop of S_0 emits it, so every element passes through every
stack exactly once.

Traces record primitive device events: ('push', j) and ('pop', j).  A pop of
a sequential stack S_j with j > 0 therefore appears as the pair
('pop', j), ('push', j-1).
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import IllegalMoveError, SearchLimitError
from .perm import as_permutation

KIND_SEQUENTIAL = "sequential-stacks"
KIND_PARALLEL_STACKS = "parallel-stacks"
KIND_PARALLEL_QUEUES = "parallel-queues"


@dataclass(frozen=True)
class NetworkTrace:
    """Time-ordered device events for one run.

    For parallel kinds there are exactly n pushes and n pops in total; for
    sequential stacks every device sees exactly n pushes and n pops.
    """

    ops: tuple[tuple[str, int], ...]
    device_count: int
    kind: str


class ParallelSortRun(NamedTuple):
    devices_used: int
    trace: NetworkTrace
    output: np.ndarray


def parallel_stack_sort(values: Sequence[int] | np.ndarray) -> ParallelSortRun:
    """Greedy parallel stack sort.

    Phase 1 pushes each input element on the leftmost stack whose top is
    larger, opening a new stack at the right end when none qualifies.  Phase 2
    repeatedly pops the stack with the smallest top.  The placement rule is
    patience placement, so the number of stacks used equals the length of the
    longest increasing subsequence of the input.
    """
    arr = as_permutation(values).tolist()
    stacks: list[list[int]] = []
    tops: list[int] = []  # tops[j] == stacks[j][-1]; stays ascending
    ops: list[tuple[str, int]] = []
    for x in arr:
        j = bisect_left(tops, x)
        if j == len(stacks):
            stacks.append([x])
            tops.append(x)
        else:
            stacks[j].append(x)
            tops[j] = x
        ops.append(("push", j))
    used = len(stacks)

    heap = [(s[-1], j) for j, s in enumerate(stacks)]
    heapify(heap)
    out: list[int] = []
    while heap:
        _, j = heappop(heap)
        out.append(stacks[j].pop())
        ops.append(("pop", j))
        if stacks[j]:
            heappush(heap, (stacks[j][-1], j))
    trace = NetworkTrace(tuple(ops), used, KIND_PARALLEL_STACKS)
    return ParallelSortRun(used, trace, np.asarray(out, dtype=np.int64))


def parallel_queue_sort(values: Sequence[int] | np.ndarray) -> ParallelSortRun:
    """Greedy parallel queue sort.

    Phase 1 appends each input element to the leftmost queue whose rear is
    smaller, opening a new queue when none qualifies; rears stay descending
    left to right.  Phase 2 repeatedly dequeues the queue with the smallest
    front.  Queues used equals the longest decreasing subsequence length.
    """
    arr = as_permutation(values).tolist()
    queues: list[list[int]] = []
    neg_rears: list[int] = []  # negated rears, kept ascending
    ops: list[tuple[str, int]] = []
    for x in arr:
        j = bisect_left(neg_rears, -x)
        if j == len(queues):
            queues.append([x])
            neg_rears.append(-x)
        else:
            queues[j].append(x)
            neg_rears[j] = -x
        ops.append(("push", j))
    used = len(queues)

    heads = [0] * used
    heap = [(q[0], j) for j, q in enumerate(queues)]
    heapify(heap)
    out: list[int] = []
    while heap:
        _, j = heappop(heap)
        out.append(queues[j][heads[j]])
        ops.append(("pop", j))
        heads[j] += 1
        if heads[j] < len(queues[j]):
            heappush(heap, (queues[j][heads[j]], j))
    trace = NetworkTrace(tuple(ops), used, KIND_PARALLEL_QUEUES)
    return ParallelSortRun(used, trace, np.asarray(out, dtype=np.int64))


def replay_trace(values: Sequence[int] | np.ndarray, trace: NetworkTrace) -> np.ndarray:
    """Re-run a trace against an input sequence and return what it emits.

    Raises IllegalMoveError if the trace is not executable on this input.
    """
    arr = as_permutation(values).tolist()
    out: list[int] = []
    cursor = 0
    if trace.kind in (KIND_PARALLEL_STACKS, KIND_PARALLEL_QUEUES):
        fifo = trace.kind == KIND_PARALLEL_QUEUES
        devices: list[deque] = [deque() for _ in range(trace.device_count)]
        for step, (tag, j) in enumerate(trace.ops, 1):
            if not 0 <= j < trace.device_count:
                raise IllegalMoveError(step, f"device {j} out of range")
            if tag == "push":
                if cursor >= len(arr):
                    raise IllegalMoveError(step, "push with exhausted input")
                devices[j].append(arr[cursor])
                cursor += 1
            elif tag == "pop":
                if not devices[j]:
                    raise IllegalMoveError(step, f"pop of empty device {j}")
                out.append(devices[j].popleft() if fifo else devices[j].pop())
            else:
                raise IllegalMoveError(step, f"unknown op {tag!r}")
        return np.asarray(out, dtype=np.int64)

    if trace.kind != KIND_SEQUENTIAL:
        raise ValueError(f"unknown trace kind {trace.kind!r}")
    k = trace.device_count
    stacks: list[list[int]] = [[] for _ in range(k)]
    held: int | None = None  # element in flight from a pop of device j > 0
    held_target = -1
    for step, (tag, j) in enumerate(trace.ops, 1):
        if not 0 <= j < k:
            raise IllegalMoveError(step, f"device {j} out of range")
        if tag == "push":
            if held is not None:
                if j != held_target:
                    raise IllegalMoveError(step, f"in-flight element must land on device {held_target}")
                stacks[j].append(held)
                held = None
            elif j == k - 1:
                if cursor >= len(arr):
                    raise IllegalMoveError(step, "push with exhausted input")
                stacks[j].append(arr[cursor])
                cursor += 1
            else:
                raise IllegalMoveError(step, f"device {j} can only receive pops of device {j + 1}")
        elif tag == "pop":
            if held is not None:
                raise IllegalMoveError(step, "pop while an element is in flight")
            if not stacks[j]:
                raise IllegalMoveError(step, f"pop of empty device {j}")
            v = stacks[j].pop()
            if j == 0:
                out.append(v)
            else:
                held = v
                held_target = j - 1
        else:
            raise IllegalMoveError(step, f"unknown op {tag!r}")
    if held is not None:
        raise IllegalMoveError(len(trace.ops), "trace ends with an element in flight")
    return np.asarray(out, dtype=np.int64)


@dataclass(frozen=True)
class SequentialState:
    """Snapshot handed to a sequential-stack strategy.

    stacks lists each stack bottom to top; next_input is the element about to
    enter (None once input is exhausted); next_needed is the value the output
    is waiting for.
    """

    stacks: tuple[tuple[int, ...], ...]
    next_input: int | None
    next_needed: int


Strategy = Callable[[SequentialState], object]


def greedy_sequential_strategy(state: SequentialState):
    """Default decision rule: move the needed element toward the output when
    it is on top of any stack, otherwise feed input, otherwise drain the
    leftmost nonempty stack."""
    for j, s in enumerate(state.stacks):
        if s and s[-1] == state.next_needed:
            return ("pop", j)
    if state.next_input is not None:
        return "push"
    for j, s in enumerate(state.stacks):
        if s:
            return ("pop", j)
    raise RuntimeError("strategy called on a finished machine")


def scripted_strategy(moves: Sequence) -> Strategy:
    """Replay a fixed move list (as produced by sequential_sort_search)."""
    it = iter(list(moves))

    def strategy(_state: SequentialState):
        return next(it)

    return strategy


def simulate_sequential_stacks(values: Sequence[int] | np.ndarray, k: int,
                               strategy: Strategy = greedy_sequential_strategy,
                               ) -> tuple[bool, NetworkTrace]:
    """Drive k stacks in series with a decision procedure.

    The strategy sees the machine state and answers either "push" (feed the
    next input element onto stack k-1) or ("pop", j).  The run ends when all
    elements have been emitted; success means the emitted sequence is 1..n.
    Illegal proposals raise IllegalMoveError with the step number.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    arr = as_permutation(values).tolist()
    n = len(arr)
    stacks: list[list[int]] = [[] for _ in range(k)]
    ops: list[tuple[str, int]] = []
    out: list[int] = []
    cursor = 0
    step = 0
    while len(out) < n:
        state = SequentialState(
            stacks=tuple(tuple(s) for s in stacks),
            next_input=arr[cursor] if cursor < n else None,
            next_needed=len(out) + 1,
        )
        move = strategy(state)
        step += 1
        if move == "push":
            if cursor >= n:
                raise IllegalMoveError(step, "push with exhausted input")
            stacks[k - 1].append(arr[cursor])
            cursor += 1
            ops.append(("push", k - 1))
            continue
        try:
            tag, j = move
        except (TypeError, ValueError):
            raise IllegalMoveError(step, f"unintelligible move {move!r}") from None
        if tag != "pop" or not isinstance(j, int) or not 0 <= j < k:
            raise IllegalMoveError(step, f"unintelligible move {move!r}")
        if not stacks[j]:
            raise IllegalMoveError(step, f"pop of empty stack {j}")
        v = stacks[j].pop()
        ops.append(("pop", j))
        if j == 0:
            out.append(v)
        else:
            stacks[j - 1].append(v)
            ops.append(("push", j - 1))
    success = out == list(range(1, n + 1))
    return success, NetworkTrace(tuple(ops), k, KIND_SEQUENTIAL)


def sequential_sort_search(values: Sequence[int] | np.ndarray, k: int) -> list | None:
    """Exhaustive search for a move list that sorts with k serial stacks.

    Explores every reachable machine state once (memoized on stack contents
    and input cursor).  Emitting the needed value the moment it tops stack 0
    is forced: once covered it could never reach the output first, so the
    pruning loses no solutions.  Returns a winning global move list
    ("push" or ("pop", j) entries) or None.
    """
    arr = as_permutation(values).tolist()
    n = len(arr)
    seen: set = set()

    def dfs(cursor: int, stacks: tuple[tuple[int, ...], ...]) -> list | None:
        emitted = cursor - sum(len(s) for s in stacks)
        nxt = emitted + 1
        prefix: list = []
        s0 = stacks[0]
        while s0 and s0[-1] == nxt:
            prefix.append(("pop", 0))
            s0 = s0[:-1]
            nxt += 1
        if s0 is not stacks[0]:
            stacks = (s0,) + stacks[1:]
        if nxt == n + 1 and cursor == n:
            return prefix
        key = (cursor, stacks)
        if key in seen:
            return None
        seen.add(key)

        candidates: list = []
        for j in range(1, k):
            if stacks[j] and stacks[j][-1] == nxt:
                candidates.append(j)
        if cursor < n:
            candidates.append("push")
        for j in range(1, k):
            if stacks[j] and stacks[j][-1] != nxt:
                candidates.append(j)

        for cand in candidates:
            if cand == "push":
                ns = stacks[:-1] + (stacks[-1] + (arr[cursor],),)
                tail = dfs(cursor + 1, ns)
                if tail is not None:
                    return prefix + ["push"] + tail
            else:
                j = cand
                v = stacks[j][-1]
                ns = list(stacks)
                ns[j] = ns[j][:-1]
                ns[j - 1] = ns[j - 1] + (v,)
                tail = dfs(cursor, tuple(ns))
                if tail is not None:
                    return prefix + [("pop", j)] + tail
        return None

    return dfs(0, tuple(() for _ in range(k)))


def min_sequential_stacks(values: Sequence[int] | np.ndarray, k_max: int,
                          max_n: int = 10) -> int | None:
    """Smallest k <= k_max for which some move sequence sorts the input.

    Returns None when even k_max stacks do not suffice.  The state space is
    exponential, so inputs longer than max_n are refused; raise the cap
    explicitly if you accept the cost.
    """
    arr = as_permutation(values)
    if arr.size > max_n:
        raise SearchLimitError(
            f"n={arr.size} exceeds the search cap {max_n}; pass max_n explicitly to override")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        if sequential_sort_search(arr, k) is not None:
            return k
    return None


def contains_231(values: Sequence[int] | np.ndarray) -> bool:
    """True iff some i < j < k has values[k] < values[i] < values[j].

    One serial stack sorts a permutation exactly when this pattern is absent.
    """
    arr = as_permutation(values).tolist()
    n = len(arr)
    for i in range(n):
        seen_larger = False
        for t in range(i + 1, n):
            if arr[t] > arr[i]:
                seen_larger = True
            elif arr[t] < arr[i] and seen_larger:
                return True
    return False


def encode_pushpop(trace: NetworkTrace) -> str:
    """Bit encoding of a sequential-stacks trace: k blocks of 2n bits.

    Block j lists device j's events in time order, '0' for a push and '1' for
    a pop.  A complete run pushes and pops every element once per device, so
    each block has exactly 2n bits and the whole string has 2kn.
    """
    if trace.kind != KIND_SEQUENTIAL:
        raise ValueError("encode_pushpop needs a sequential-stacks trace")
    blocks: list[list[str]] = [[] for _ in range(trace.device_count)]
    for tag, j in trace.ops:
        blocks[j].append("0" if tag == "push" else "1")
    if len(set(len(b) for b in blocks)) != 1 or len(blocks[0]) % 2:
        raise ValueError("trace is not a complete run: device blocks are uneven")
    return "".join("".join(b) for b in blocks)


def decode_pushpop(bits: str, n: int, k: int) -> np.ndarray:
    """Recover the input permutation from encode_pushpop output.

    Assumes the encoded run emitted 1..n in order (a sorting run).  Device 0's
    block maps its input stream to the sorted output; inverting it, then the
    next device's block against that stream, and so on, walks back to the
    original input of device k-1.
    """
    if len(bits) != 2 * n * k:
        raise ValueError(f"expected {2 * n * k} bits, got {len(bits)}")
    seq = list(range(1, n + 1))
    for j in range(k):
        block = bits[2 * n * j: 2 * n * (j + 1)]
        seq = _stack_inputs(block, seq)
    return as_permutation(seq)


def _stack_inputs(block: str, out_values: list[int]) -> list[int]:
    """Given one stack's push/pop string and what it emitted, in order,
    reconstruct what it consumed, in order."""
    n = len(out_values)
    stack: list[int] = []
    assign: list[int | None] = [None] * n
    arrived = 0
    emitted = 0
    for b in block:
        if b == "0":
            if arrived >= n:
                raise ValueError("more pushes than elements in block")
            stack.append(arrived)
            arrived += 1
        elif b == "1":
            if not stack:
                raise ValueError("pop of empty stack in block")
            assign[stack.pop()] = out_values[emitted]
            emitted += 1
        else:
            raise ValueError(f"bit string may contain only 0 and 1, got {b!r}")
    if arrived != n or emitted != n:
        raise ValueError("block is not a complete push/pop history")
    return [v for v in assign if v is not None]


def trace_csv(trace: NetworkTrace) -> str:
    """CSV dump of a device trace: step, op, device."""
    lines = ["step,op,device"]
    for step, (tag, j) in enumerate(trace.ops, 1):
        lines.append(f"{step},{tag},{j}")
    return "\n".join(lines) + "\n"
