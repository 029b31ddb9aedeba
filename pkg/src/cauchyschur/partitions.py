"""Partitions, compositions and the staircase normalization.

Partitions and compositions are plain tuples whose length is the ambient
number of variables ``n``; ``(2, 1)`` and ``(2, 1, 0)`` are different values.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence


def staircase(n: int) -> tuple[int, ...]:
    """The tuple ``(n-1, n-2, ..., 1, 0)``."""
    if n < 1:
        raise ValueError("staircase needs n >= 1")
    return tuple(range(n - 1, -1, -1))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


def pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """Pad with zeros (or strip trailing zeros) to ambient length ``n``."""
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"{lam} has more than {n} nonzero parts")
        return lam[:n]
    return lam + (0,) * (n - len(lam))


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for p in lam if p)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Transpose of the Young diagram.

    The result has ambient length ``lam[0]`` unless ``n`` is given, in which
    case it is padded to ``n``.
    """
    lam = check_partition(lam)
    width = lam[0] if lam else 0
    conj = tuple(sum(1 for part in lam if part >= j) for j in range(1, width + 1))
    return conj if n is None else pad(conj, n)


def leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Componentwise order ``lam_i <= mu_i``."""
    if len(lam) != len(mu):
        raise ValueError(f"length mismatch: {lam} vs {mu}")
    return all(a <= b for a, b in zip(lam, mu))


def enum_bounded(n: int, bound: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Partitions of ambient length ``n`` with ``lam_i <= bound_i``.

    The bound must itself be weakly decreasing.  Output is in descending
    lexicographic order.
    """
    bound = tuple(bound)
    if len(bound) != n:
        raise ValueError(f"bound {bound} does not have length {n}")
    if not is_partition(bound):
        raise ValueError(f"bound {bound} must be weakly decreasing and nonnegative")

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        for part in range(min(cap, bound[i]), -1, -1):
            for tail in rec(i + 1, part):
                yield (part,) + tail

    yield from rec(0, bound[0] if n else 0)


def enum_by_weight(n: int, D: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ambient length ``n`` with weight at most ``D``."""

    def rec(i: int, cap: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        for part in range(min(cap, budget), -1, -1):
            for tail in rec(i + 1, part, budget - part):
                yield (part,) + tail

    yield from rec(0, D, D)


def normalize(mu: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Map a composition to ``(partition, sign)`` or ``None`` if degenerate.

    ``mu + delta`` is insertion-sorted into descending order; the number of
    swaps gives the sign of the sorting permutation.  A repeated entry in
    ``mu + delta`` means the composition is equivalent to no partition.
    """
    mu = tuple(mu)
    if any(e < 0 for e in mu):
        raise ValueError(f"composition {mu} has a negative entry")
    n = len(mu)
    shifted = [e + d for e, d in zip(mu, staircase(n))]
    if len(set(shifted)) != n:
        return None
    swaps = 0
    for i in range(1, n):
        j = i
        while j > 0 and shifted[j - 1] < shifted[j]:
            shifted[j - 1], shifted[j] = shifted[j], shifted[j - 1]
            swaps += 1
            j -= 1
    lam = tuple(v - d for v, d in zip(shifted, staircase(n)))
    return lam, -1 if swaps % 2 else 1


def perm_sign(perm: Sequence[int]) -> int:
    n = len(perm)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def cycle_notation(perm: Sequence[int]) -> str:
    """One-based cycle notation, ``e`` for the identity: ``(0, 2, 1) -> "(23)"``."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cycle.append(k)
            seen.add(k)
            k = perm[k]
        cycles.append("(" + "".join(str(c + 1) for c in cycle) + ")")
    return "".join(cycles) or "e"


def sign_table(n: int) -> list[tuple[str, tuple[tuple[int, int], ...], int]]:
    """Symbolic rows of the signed sum over the staircase orbit of a partition.

    For each permutation ``pi`` of ``{1..n}`` returns ``(cycles, entries, sign)``
    where ``entries[j] = (k, offset)`` encodes ``mu_j = lam_k + offset`` with
    ``k = pi(j)`` and ``offset = j - pi(j)`` (one-based ``k``).
    """
    rows = []
    for perm in permutations(range(n)):
        entries = tuple((perm[j] + 1, j - perm[j]) for j in range(n))
        rows.append((cycle_notation(perm), entries, perm_sign(perm)))
    return rows


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse ``"2,1,0"`` into ``(2, 1, 0)``."""
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return check_partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)
