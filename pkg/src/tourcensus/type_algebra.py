"""Arithmetic on the signed block tuples that classify oriented paths and cycles.

An oriented path or cycle in a tournament decomposes into maximal directed
runs (blocks).  Its type is the tuple of block lengths, signed by direction
relative to the traversal: ``(2, -1)`` means two forward arcs then one
backward arc.  Standard tuples contain no zeros and strictly alternate in
sign; standard cycle tuples additionally have a single block or an even
number of blocks, so the alternation closes up around the wrap.

Zeros appear transiently in calculations (an empty block); the normalize
functions remove them by merging the flanking blocks, which always point the
same way in any reachable input.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import EmptyTypeError, IllFormedError, ParseError

SignedTuple = tuple[int, ...]

__all__ = [
    "SignedTuple",
    "PeriodInfo",
    "GeneratedCycles",
    "arc_sum",
    "negate",
    "neg_reverse",
    "is_standard_path",
    "is_standard_cycle",
    "check_standard_path",
    "check_standard_cycle",
    "normalize_path",
    "normalize_cycle",
    "is_symmetric",
    "path_canonical",
    "cycle_orbit",
    "cycle_canonical",
    "cycle_type_symmetric",
    "period_info",
    "delta",
    "star_one",
    "generated_cycle_types",
    "standard_tuples",
    "symmetric_tuples",
    "parse_type",
    "format_type",
]


def arc_sum(tup: Iterable[int]) -> int:
    """Total number of arcs described by a block tuple."""
    return sum(abs(x) for x in tup)


def negate(tup: Iterable[int]) -> SignedTuple:
    return tuple(-x for x in tup)


def neg_reverse(tup: Iterable[int]) -> SignedTuple:
    """Reverse the tuple and flip every sign: the same object walked backwards."""
    return tuple(-x for x in reversed(tuple(tup)))


def _alternates(tup: SignedTuple) -> bool:
    return all(a * b < 0 for a, b in zip(tup, tup[1:]))


def is_standard_path(tup: Iterable[int]) -> bool:
    t = tuple(tup)
    return bool(t) and all(x != 0 for x in t) and _alternates(t)


def is_standard_cycle(tup: Iterable[int]) -> bool:
    t = tuple(tup)
    if not t or any(x == 0 for x in t):
        return False
    if len(t) == 1:
        return True
    # wrap sign condition closes the alternation, forcing an even length
    return len(t) % 2 == 0 and _alternates(t) and t[-1] * t[0] < 0


def check_standard_path(tup: Iterable[int]) -> SignedTuple:
    t = tuple(tup)
    if not t:
        raise EmptyTypeError("path type has no blocks")
    if not is_standard_path(t):
        raise IllFormedError(f"not a standard path tuple: {t}")
    return t


def check_standard_cycle(tup: Iterable[int]) -> SignedTuple:
    t = tuple(tup)
    if not t:
        raise EmptyTypeError("cycle type has no blocks")
    if not is_standard_cycle(t):
        raise IllFormedError(f"not a standard cycle tuple: {t}")
    return t


def normalize_path(raw: Iterable[int]) -> SignedTuple:
    """Remove zero entries from a path tuple by merging across them.

    Interior zeros merge their neighbors (which must share a sign); leading
    and trailing zeros drop.  Adjacent same-sign nonzero entries are rejected
    rather than merged: only an explicit zero licenses a merge.
    """
    seq = list(raw)
    if not seq:
        raise EmptyTypeError("empty path tuple")
    for a, b in zip(seq, seq[1:]):
        if a != 0 and b != 0 and (a > 0) == (b > 0):
            raise IllFormedError(f"adjacent same-sign entries {a}, {b}")
    out: list[int] = []
    pending = False  # a zero was seen since the last entry kept
    for x in seq:
        if x == 0:
            pending = bool(out)
            continue
        if pending:
            if (x > 0) != (out[-1] > 0):
                raise IllFormedError(
                    f"zero elimination would merge opposite signs {out[-1]}, {x}"
                )
            out[-1] += x
            pending = False
        else:
            out.append(x)
    if not out:
        raise EmptyTypeError("all entries vanished")
    return check_standard_path(out)


def normalize_cycle(raw: Iterable[int]) -> SignedTuple:
    """Remove zero entries from a cycle tuple, wrap-aware.

    A leading zero merges the second and last blocks, a trailing zero merges
    the next-to-last block into the first; one-block leftovers close into a
    circuit.  Merging opposite-sign nonzero blocks is an error.
    """
    seq = list(raw)
    if not seq:
        raise EmptyTypeError("empty cycle tuple")

    def merge(a: int, b: int) -> int:
        if a != 0 and b != 0 and (a > 0) != (b > 0):
            raise IllFormedError(f"zero elimination would merge opposite signs {a}, {b}")
        return a + b

    while 0 in seq:
        if len(seq) == 1:
            raise EmptyTypeError("all entries vanished")
        if len(seq) == 2:
            other = seq[0] if seq[1] == 0 else seq[1]
            if other == 0:
                raise EmptyTypeError("all entries vanished")
            seq = [other]  # lone surviving block closes into a circuit
            continue
        i = seq.index(0)
        if i == 0:
            seq = [merge(seq[1], seq[-1])] + seq[2:-1]
        elif i == len(seq) - 1:
            seq = [merge(seq[0], seq[-2])] + seq[1:-2]
        else:
            seq = seq[: i - 1] + [merge(seq[i - 1], seq[i + 1])] + seq[i + 2 :]
    return check_standard_cycle(seq)


def is_symmetric(tup: Iterable[int]) -> bool:
    """True when the tuple equals its own negated reversal."""
    t = tuple(tup)
    return t == neg_reverse(t)


# Canonical representatives are lexicographic minima under an entry order that
# puts positive blocks before negative ones and smaller magnitudes first, so
# e.g. (1, -2) beats (2, -1) and both beat (-1, 2).
def _entry_key(x: int) -> tuple[int, int]:
    return (0, x) if x > 0 else (1, -x)


def _tuple_key(tup: SignedTuple) -> tuple[tuple[int, int], ...]:
    return tuple(_entry_key(x) for x in tup)


def path_canonical(alpha: Iterable[int]) -> SignedTuple:
    """Canonical representative of the path-type pair {alpha, neg_reverse(alpha)}."""
    a = check_standard_path(alpha)
    return min(a, neg_reverse(a), key=_tuple_key)


def cycle_orbit(beta: Iterable[int]) -> list[SignedTuple]:
    """All tuples describing the same cycle type: rotations of beta and of its
    negated reversal (at most 2s of them, deduplicated, deterministic order)."""
    b = check_standard_cycle(beta)
    s = len(b)
    seen: dict[SignedTuple, None] = {}
    for base in (b, neg_reverse(b)):
        for i in range(s):
            seen.setdefault(base[i:] + base[:i], None)
    return sorted(seen, key=_tuple_key)


def cycle_canonical(beta: Iterable[int]) -> SignedTuple:
    return cycle_orbit(beta)[0]


def cycle_type_symmetric(beta: Iterable[int]) -> bool:
    """True when the cycle type admits a representative equal to its own
    negated reversal, i.e. the cycle reads the same in both directions."""
    return any(is_symmetric(g) for g in cycle_orbit(beta))


class PeriodInfo(NamedTuple):
    r: int  # smallest cyclic rotation fixing the tuple
    t: int  # number of similar-block groups, len(tuple) // r


def period_info(tup: Iterable[int]) -> PeriodInfo:
    """Least cyclic period of the block tuple and the derived repetition count.

    The minimum always divides the length, but every offset is scanned so the
    definition is applied literally.
    """
    t = tuple(tup)
    if not t:
        raise EmptyTypeError("empty tuple has no period")
    s = len(t)
    for r in range(1, s + 1):
        if all(t[i] == t[(i + r) % s] for i in range(s)):
            return PeriodInfo(r, s // r)
    raise AssertionError("unreachable: s is always a period")


def delta(gamma: Iterable[int]) -> int:
    """Class-size multiplier for a cycle type: the cycle's arc count for a
    circuit, 2 for a direction-symmetric type, 1 otherwise."""
    g = check_standard_cycle(gamma)
    if len(g) == 1:
        return abs(g[0])  # arc count divided by t, and t = 1 for circuits
    if cycle_type_symmetric(g):
        return 2
    return 1


def star_one(beta: Iterable[int], pos: int) -> int:
    """Shift the entry at 1-based ``pos`` one step against the leading block's
    direction: minus one when the first entry is positive, plus one otherwise."""
    b = check_standard_cycle(beta)
    if not 1 <= pos <= len(b):
        raise IndexError(f"position {pos} out of range for {b}")
    return b[pos - 1] - 1 if b[0] > 0 else b[pos - 1] + 1


class GeneratedCycles(NamedTuple):
    first: SignedTuple  # closing arc grows the leading block / prepends a unit block
    second: SignedTuple  # closing arc grows the trailing block / fuses the end blocks
    coincide: bool


def generated_cycle_types(alpha: Iterable[int]) -> GeneratedCycles:
    """The two canonical cycle types a Hamiltonian path of type ``alpha`` can
    close into, depending on the orientation of the arc between its endpoints.

    With an even number of blocks the closing arc extends either the first or
    the last block by one arc.  With an odd count it either becomes a new
    length-one block in front or fuses the two end blocks together (for a
    single forward/backward run, that fusion is the full circuit).
    """
    a = check_standard_path(alpha)
    s = len(a)
    if s % 2 == 0:
        step = 1 if a[0] > 0 else -1
        first = (a[0] + step,) + a[1:]
        second = a[:-1] + (a[-1] - step,)
    else:
        step = 1 if a[0] > 0 else -1
        first = (-step,) + a
        if s == 1:
            second = (a[0] + step,)
        else:
            second = (a[-1] + a[0] + step,) + a[1:-1]
    c1 = cycle_canonical(normalize_cycle(first))
    c2 = cycle_canonical(normalize_cycle(second))
    return GeneratedCycles(c1, c2, c1 == c2)


def _compositions(total: int) -> list[tuple[int, ...]]:
    # split points encoded in a bitmask, so the order is deterministic
    out = []
    for bits in range(1 << (total - 1)):
        parts = []
        run = 1
        for i in range(total - 1):
            if bits >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


@lru_cache(maxsize=None)
def standard_tuples(total: int, kind: str) -> tuple[SignedTuple, ...]:
    """Every standard tuple with the given arc sum, both sign phases.

    ``kind`` is ``"path"`` (any block count) or ``"cycle"`` (one block or an
    even number of blocks).
    """
    if total < 1:
        raise ValueError("arc sum must be at least 1")
    if kind not in ("path", "cycle"):
        raise ValueError(f"unknown kind {kind!r}")
    out = []
    for comp in _compositions(total):
        if kind == "cycle" and len(comp) != 1 and len(comp) % 2:
            continue
        for lead in (1, -1):
            out.append(tuple(m * (lead if i % 2 == 0 else -lead) for i, m in enumerate(comp)))
    return tuple(sorted(out, key=_tuple_key))


@lru_cache(maxsize=None)
def symmetric_tuples(max_total: int) -> tuple[SignedTuple, ...]:
    """Every symmetric standard tuple with arc sum at most ``max_total``.

    A symmetric tuple is a standard half followed by that half's negated
    reversal, so the arc sum is always even.
    """
    out = []
    for half_sum in range(1, max_total // 2 + 1):
        for half in standard_tuples(half_sum, "path"):
            out.append(half + neg_reverse(half))
    return tuple(sorted(out, key=lambda t: (arc_sum(t), _tuple_key(t))))


def format_type(tup: Iterable[int]) -> str:
    return "(" + ",".join(str(x) for x in tup) + ")"


def parse_type(text: str) -> SignedTuple:
    """Parse ``"(2,-1, 1)"`` into ``(2, -1, 1)``; whitespace is tolerated."""
    stripped = text.strip()
    base = text.index(stripped[0]) if stripped else 0
    if not stripped.startswith("("):
        raise ParseError("expected '('", base)
    if not stripped.endswith(")"):
        raise ParseError("expected ')'", base + len(stripped))
    body = stripped[1:-1]
    if not body.strip():
        raise ParseError("empty tuple", base + 1)
    entries = []
    offset = base + 1
    for piece in body.split(","):
        token = piece.strip()
        try:
            entries.append(int(token))
        except ValueError:
            raise ParseError(f"bad integer {token!r}", offset) from None
        offset += len(piece) + 1
    return tuple(entries)
