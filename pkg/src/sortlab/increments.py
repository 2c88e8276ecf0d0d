"""Gap sequences for multi-pass insertion sorting, plus validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ValidationError


@dataclass(frozen=True)
class IncrementSequence:
    """Strictly decreasing positive gaps ending in 1; gaps[k-1] drives pass k."""

    gaps: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.gaps)

    def __iter__(self) -> Iterator[int]:
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)


def validate_sequence(gaps: Iterable[int], n: int) -> IncrementSequence:
    """Check a gap sequence against a run on n elements.

    Accepted iff strictly decreasing, ending in 1, with every gap in
    [1, n-1].  For n = 1 the single sequence [1] is allowed so that a
    one-element sort stays expressible.
    """
    seq = tuple(int(g) for g in gaps)
    if not seq:
        raise ValidationError("empty gap sequence")
    if seq[-1] != 1:
        raise ValidationError("gap sequence must end in 1")
    for a, b in zip(seq, seq[1:]):
        if a <= b:
            raise ValidationError(f"not strictly decreasing: {a} followed by {b}")
    hi = max(1, n - 1)
    if seq[0] > hi:
        raise ValidationError(f"gap {seq[0]} out of range [1, {hi}] for n={n}")
    return IncrementSequence(seq)


def shell_sequence(n: int) -> IncrementSequence:
    """Halving gaps: n//2, n//4, ..., 1."""
    if n < 2:
        raise ValidationError("shell_sequence needs n >= 2")
    gaps = []
    g = n // 2
    while g >= 1:
        gaps.append(g)
        g //= 2
    return IncrementSequence(tuple(gaps))


def pratt_sequence(n: int) -> IncrementSequence:
    """All products 2^i * 3^j strictly below n//2, descending.

    The sequence always contains 1 and has Theta(log^2 n) entries.
    """
    if n < 4:
        raise ValidationError("pratt_sequence needs n >= 4")
    limit = n // 2
    vals = set()
    x = 1
    while x < limit:
        y = x
        while y < limit:
            vals.add(y)
            y *= 3
        x *= 2
    return IncrementSequence(tuple(sorted(vals, reverse=True)))


def chazelle_sequence(n: int, a: int) -> IncrementSequence:
    """All products a^i * (a+1)^j strictly below n//2, descending.

    Generalizes pratt_sequence, which is the a = 2 case.
    """
    if n < 4:
        raise ValidationError("chazelle_sequence needs n >= 4")
    if a < 2:
        raise ValidationError("chazelle_sequence needs a >= 2")
    limit = n // 2
    vals = set()
    x = 1
    while x < limit:
        y = x
        while y < limit:
            vals.add(y)
            y *= a + 1
        x *= a
    return IncrementSequence(tuple(sorted(vals, reverse=True)))


def two_pass_sequence(n: int, c: float = 1.72) -> IncrementSequence:
    """Two passes [h, 1] with h = round(c * n^(1/3)).

    The default constant 1.72 is close to (16/pi)^(1/3), the choice that
    balances the two passes for uniform random input.
    """
    if n < 8:
        raise ValidationError("two_pass_sequence needs n >= 8")
    if c <= 0:
        raise ValidationError("c must be positive")
    h = max(2, round(c * n ** (1.0 / 3.0)))
    return validate_sequence((h, 1), n)


def geometric_sequence(n: int, p: int) -> IncrementSequence:
    """p roughly geometric gaps: pass k uses about n^((p-k)/p).

    Collisions from rounding are nudged apart so the result is strictly
    decreasing; the last gap is always 1.
    """
    if p < 1:
        raise ValidationError("p must be >= 1")
    if n < 2 ** p:
        raise ValidationError(f"geometric_sequence needs n >= 2^p = {2 ** p}")
    rev = [1]
    for k in range(p - 1, 0, -1):
        g = round(n ** ((p - k) / p))
        rev.append(max(g, rev[-1] + 1))
    return validate_sequence(tuple(reversed(rev)), n)
