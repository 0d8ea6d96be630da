"""Exact counting of oriented paths, cycles and their enumerations.

Two engines live here.  The subset DP counts vertex sequences matching a
fixed arc-sign word over states (used-vertex mask, last vertex); cycle counts
divide the closed-sequence tally by delta * t, the number of closed readings
every cycle of that type contributes.  The brute-force oracle classifies raw
permutations and is kept deliberately naive so the two paths can check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadSubsetError,
    DivisibilityViolationError,
    ParityViolationError,
    ScopeTooLargeError,
    TooShortError,
    TypeTooLongError,
)
from .tournaments import Tournament
from .type_algebra import (
    SignedTuple,
    arc_sum,
    check_standard_cycle,
    check_standard_path,
    cycle_canonical,
    delta,
    is_symmetric,
    path_canonical,
    period_info,
    standard_tuples,
)

ORACLE_MAX_ORDER = 8
CENSUS_MAX_ORDER = 10

Arc = tuple[int, int]

__all__ = [
    "ORACLE_MAX_ORDER",
    "CENSUS_MAX_ORDER",
    "CensusReport",
    "PathClass",
    "ClassPartition",
    "classify_enumeration",
    "classify_cycle",
    "count_enumerations",
    "enumeration_word_counts",
    "count_paths",
    "count_cycles",
    "census",
    "oracle_census",
    "oracle_cycle_sets",
    "clones",
    "path_classes",
    "path_type_classes",
    "cycle_type_classes",
    "expand_signs",
    "word_int",
]


# ---------------------------------------------------------------------------
# sign words


def expand_signs(tup: Sequence[int]) -> tuple[int, ...]:
    """Block tuple to per-arc sign word: (2, -1) -> (1, 1, -1)."""
    out: list[int] = []
    for x in tup:
        out.extend([1 if x > 0 else -1] * abs(x))
    return tuple(out)


def word_int(tup: Sequence[int]) -> int:
    """Sign word packed into an int, bit k set when arc k runs forward."""
    w = 0
    pos = 0
    for x in tup:
        if x > 0:
            w |= ((1 << x) - 1) << pos
        pos += abs(x)
    return w


def _runs_from_word(w: int, length: int) -> SignedTuple:
    runs: list[int] = []
    for i in range(length):
        s = 1 if w >> i & 1 else -1
        if runs and (runs[-1] > 0) == (s > 0):
            runs[-1] += s
        else:
            runs.append(s)
    return tuple(runs)


def _cyclic_runs_from_word(w: int, length: int) -> SignedTuple:
    runs = list(_runs_from_word(w, length))
    if len(runs) > 1 and (runs[0] > 0) == (runs[-1] > 0):
        runs = [runs[-1] + runs[0]] + runs[1:-1]
    return tuple(runs)


@lru_cache(maxsize=None)
def _path_word_classes(n: int) -> tuple[SignedTuple, ...]:
    """Canonical path type for every (n-1)-arc sign word, indexed by word."""
    return tuple(path_canonical(_runs_from_word(w, n - 1)) for w in range(1 << (n - 1)))


@lru_cache(maxsize=None)
def _cycle_word_classes(n: int) -> tuple[SignedTuple, ...]:
    """Canonical cycle type for every n-arc cyclic sign word."""
    return tuple(cycle_canonical(_cyclic_runs_from_word(w, n)) for w in range(1 << n))


@lru_cache(maxsize=None)
def path_type_classes(total: int) -> tuple[SignedTuple, ...]:
    """Canonical representatives of all path types with the given arc sum."""
    return tuple(sorted({path_canonical(t) for t in standard_tuples(total, "path")}))


@lru_cache(maxsize=None)
def cycle_type_classes(total: int) -> tuple[SignedTuple, ...]:
    """Canonical representatives of all cycle types with the given arc sum."""
    return tuple(sorted({cycle_canonical(t) for t in standard_tuples(total, "cycle")}))


# ---------------------------------------------------------------------------
# classification


def _checked_sequence(T: Tournament, seq: Sequence[int], minimum: int) -> tuple[int, ...]:
    vs = tuple(seq)
    if len(vs) < minimum:
        raise TooShortError(f"need at least {minimum} vertices, got {len(vs)}")
    if len(set(vs)) != len(vs) or not all(0 <= v < T.n for v in vs):
        raise BadSubsetError(f"sequence {vs} is not a set of distinct vertices of T")
    return vs


def _word_of(T: Tournament, vs: Sequence[int]) -> int:
    w = 0
    for i in range(len(vs) - 1):
        if T.has_arc(vs[i], vs[i + 1]):
            w |= 1 << i
    return w


def classify_enumeration(T: Tournament, seq: Sequence[int]) -> SignedTuple:
    """Block tuple read off a vertex sequence, as-is (not canonicalized)."""
    vs = _checked_sequence(T, seq, 2)
    return _runs_from_word(_word_of(T, vs), len(vs) - 1)


def classify_cycle(T: Tournament, seq: Sequence[int]) -> SignedTuple:
    """Canonical cycle type of a closed vertex sequence."""
    vs = _checked_sequence(T, seq, 3)
    w = _word_of(T, vs)
    if T.has_arc(vs[-1], vs[0]):
        w |= 1 << (len(vs) - 1)
    return cycle_canonical(_cyclic_runs_from_word(w, len(vs)))


# ---------------------------------------------------------------------------
# subset DP

# DP state key: (used-vertex mask << 4) | last vertex.  Orders cap at 16, so
# the last vertex always fits in the low nibble.


def _advance(states: dict[int, int], masks: Sequence[int]) -> dict[int, int]:
    nxt: dict[int, int] = {}
    get = nxt.get
    for key, c in states.items():
        mask = key >> 4
        cand = masks[key & 15] & ~mask
        while cand:
            b = cand & -cand
            cand ^= b
            k2 = ((mask | b) << 4) | (b.bit_length() - 1)
            nxt[k2] = get(k2, 0) + c
    return nxt


def _initial_states(n: int) -> dict[int, int]:
    return {((1 << v) << 4) | v: 1 for v in range(n)}


def count_enumerations(T: Tournament, alpha: Iterable[int]) -> int:
    """Number of vertex sequences (over all subsets of the right size) whose
    arc-sign word spells out ``alpha`` exactly."""
    a = check_standard_path(alpha)
    if arc_sum(a) + 1 > T.n:
        raise TypeTooLongError(f"type {a} needs {arc_sum(a) + 1} vertices, host has {T.n}")
    states = _initial_states(T.n)
    for sign in expand_signs(a):
        states = _advance(states, T.out_masks if sign > 0 else T.in_masks)
        if not states:
            return 0
    return sum(states.values())


def enumeration_word_counts(T: Tournament, m: int) -> dict[int, int]:
    """Enumeration counts for every sign word of length m-1 in one sweep.

    Returns a dict from packed word to count; absent words have count 0.
    The prefix tree is walked once, so shared word prefixes share DP work.
    """
    if not 2 <= m <= T.n:
        raise TypeTooLongError(f"word sweep needs 2 <= m <= {T.n}, got {m}")
    out_masks, in_masks = T.out_masks, T.in_masks
    counts: dict[int, int] = {}
    steps = m - 1

    def rec(depth: int, word: int, states: dict[int, int]) -> None:
        if depth == steps:
            counts[word] = sum(states.values())
            return
        nxt = _advance(states, out_masks)
        if nxt:
            rec(depth + 1, word | (1 << depth), nxt)
        nxt = _advance(states, in_masks)
        if nxt:
            rec(depth + 1, word, nxt)

    rec(0, 0, _initial_states(T.n))
    return counts


def count_paths(T: Tournament, alpha: Iterable[int]) -> int:
    """Number of oriented paths (arc sets) of the given type, spanning or not.

    A path read backwards spells the negated reversal of its forward word, so
    each path has exactly one enumeration per orientation of the type;
    symmetric types therefore count every path twice.
    """
    a = check_standard_path(alpha)
    e = count_enumerations(T, a)
    if is_symmetric(a):
        if e % 2:
            raise ParityViolationError(f"odd enumeration count {e} for symmetric {a}")
        return e // 2
    return e


def _closed_word_count(T: Tournament, signs: Sequence[int]) -> int:
    """Closed sequences v_1..v_m (distinct vertices, all starts) whose m arc
    signs, including the closing step back to v_1, match ``signs`` exactly."""
    out_masks, in_masks = T.out_masks, T.in_masks
    closing = signs[-1]
    total = 0
    for start in range(T.n):
        states = {((1 << start) << 4) | start: 1}
        for sign in signs[:-1]:
            states = _advance(states, out_masks if sign > 0 else in_masks)
            if not states:
                break
        if not states:
            continue
        if closing > 0:
            mask = in_masks[start]
        else:
            mask = out_masks[start]
        for key, c in states.items():
            if mask >> (key & 15) & 1:
                total += c
    return total


def count_cycles(T: Tournament, beta: Iterable[int]) -> int:
    """Number of oriented cycles (arc sets) of the given type, spanning or not.

    Every cycle of the type yields delta * t closed readings of the canonical
    sign word (t rotations per readable direction, both directions for a
    symmetric type, all starts for a circuit), so the reading tally divides
    exactly.
    """
    b = check_standard_cycle(beta)
    m = arc_sum(b)
    if m > T.n:
        raise TypeTooLongError(f"type {b} needs {m} vertices, host has {T.n}")
    if m < 3:
        return 0  # tournaments are loopless and have no 2-cycles
    canon = cycle_canonical(b)
    readings = _closed_word_count(T, expand_signs(canon))
    divisor = delta(canon) * period_info(canon).t
    if readings % divisor:
        raise DivisibilityViolationError(
            f"{readings} closed readings of {canon} not divisible by {divisor}"
        )
    return readings // divisor


# ---------------------------------------------------------------------------
# census reports


@dataclass
class CensusReport:
    """Full type-to-count maps for one tournament, explicit zeros included."""

    order: int
    path_counts: dict[SignedTuple, int]
    cycle_counts: dict[SignedTuple, int]

    def to_json_dict(self) -> dict:
        from .type_algebra import format_type

        return {
            "n": self.order,
            "paths": {format_type(k): v for k, v in sorted(self.path_counts.items())},
            "cycles": {format_type(k): v for k, v in sorted(self.cycle_counts.items())},
        }


def census(T: Tournament) -> CensusReport:
    """DP census of all Hamiltonian path and cycle types of T."""
    n = T.n
    if n > CENSUS_MAX_ORDER:
        raise ScopeTooLargeError(
            f"full census capped at order {CENSUS_MAX_ORDER}; "
            "use count_paths/count_cycles for single types"
        )
    path_counts: dict[SignedTuple, int] = {}
    if n >= 2:
        words = enumeration_word_counts(T, n)
        for cls in path_type_classes(n - 1):
            e = words.get(word_int(cls), 0)
            if is_symmetric(cls):
                if e % 2:
                    raise ParityViolationError(f"odd count {e} for symmetric {cls}")
                path_counts[cls] = e // 2
            else:
                path_counts[cls] = e
    cycle_counts: dict[SignedTuple, int] = {}
    if n >= 3:
        for cls in cycle_type_classes(n):
            cycle_counts[cls] = count_cycles(T, cls)
    return CensusReport(n, path_counts, cycle_counts)


def _oracle_guard(T: Tournament) -> None:
    if T.n > ORACLE_MAX_ORDER:
        raise ScopeTooLargeError(f"brute-force oracle capped at order {ORACLE_MAX_ORDER}")


def oracle_census(T: Tournament) -> CensusReport:
    """Brute-force census: classify every permutation, no DP involved.

    Paths are deduplicated by keeping the endpoint-ordered reading of each
    arc set; cycles fix vertex 0 first and keep one direction.
    """
    _oracle_guard(T)
    n = T.n
    path_counts: dict[SignedTuple, int] = {}
    if n >= 2:
        path_counts = {cls: 0 for cls in path_type_classes(n - 1)}
        classes = _path_word_classes(n)
        for perm in permutations(range(n)):
            if perm[0] > perm[-1]:
                continue
            path_counts[classes[_word_of(T, perm)]] += 1
    cycle_counts: dict[SignedTuple, int] = {}
    if n >= 3:
        cycle_counts = {cls: 0 for cls in cycle_type_classes(n)}
        classes = _cycle_word_classes(n)
        for rest in permutations(range(1, n)):
            if rest[0] > rest[-1]:
                continue
            vs = (0,) + rest
            w = _word_of(T, vs)
            if T.has_arc(vs[-1], 0):
                w |= 1 << (n - 1)
            cycle_counts[classes[w]] += 1
    return CensusReport(n, path_counts, cycle_counts)


def oracle_cycle_sets(T: Tournament) -> dict[SignedTuple, set[frozenset[Arc]]]:
    """Hamiltonian cycles of T grouped by canonical type, each cycle as its
    arc set.  Brute force; independent of the DP engine."""
    _oracle_guard(T)
    n = T.n
    out: dict[SignedTuple, set[frozenset[Arc]]] = {}
    if n < 3:
        return out
    classes = _cycle_word_classes(n)
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        vs = (0,) + rest
        w = _word_of(T, vs)
        if T.has_arc(vs[-1], 0):
            w |= 1 << (n - 1)
        arcs = frozenset(_closed_arcs(T, vs))
        out.setdefault(classes[w], set()).add(arcs)
    return out


def _closed_arcs(T: Tournament, vs: Sequence[int]) -> list[Arc]:
    arcs = []
    m = len(vs)
    for i in range(m):
        a, b = vs[i], vs[(i + 1) % m]
        arcs.append((a, b) if T.has_arc(a, b) else (b, a))
    return arcs


# ---------------------------------------------------------------------------
# clone structure and generating-path classes


def clones(T: Tournament, seq: Sequence[int]) -> list[list[int]]:
    """Clone classes of a closed cycle enumeration.

    Vertices are clones when they occupy the same offset in similar blocks;
    for a type with repetition count t over m arcs that means positions
    congruent mod m // t, giving m // t classes of t vertices each.
    """
    vs = _checked_sequence(T, seq, 3)
    m = len(vs)
    w = _word_of(T, vs)
    if T.has_arc(vs[-1], vs[0]):
        w |= 1 << (m - 1)
    t = period_info(_cyclic_runs_from_word(w, m)).t
    step = m // t
    return [[vs[j] for j in range(i, m, step)] for i in range(step)]


@dataclass(frozen=True)
class PathClass:
    """All paths of one type that close into the same cycle."""

    paths: frozenset[frozenset[Arc]]
    cycle_arcs: frozenset[Arc]
    cycle_type: SignedTuple


@dataclass
class ClassPartition:
    alpha: SignedTuple
    classes: tuple[PathClass, ...]


def _sequences_with_word(T: Tournament, signs: Sequence[int]) -> Iterator[tuple[int, ...]]:
    out_masks, in_masks = T.out_masks, T.in_masks
    L = len(signs)

    def rec(seq: list[int], mask: int) -> Iterator[tuple[int, ...]]:
        d = len(seq) - 1
        if d == L:
            yield tuple(seq)
            return
        cand = (out_masks if signs[d] > 0 else in_masks)[seq[-1]] & ~mask
        while cand:
            b = cand & -cand
            cand ^= b
            seq.append(b.bit_length() - 1)
            yield from rec(seq, mask | b)
            seq.pop()

    for start in range(T.n):
        yield from rec([start], 1 << start)


def path_classes(T: Tournament, alpha: Iterable[int]) -> ClassPartition:
    """Partition the spanning paths of type ``alpha`` by generated cycle.

    Each Hamiltonian path closes into one cycle via the arc between its
    endpoints; paths landing on the same cycle form a class.
    """
    a = check_standard_path(alpha)
    n = T.n
    if n < 3:
        raise TooShortError("generated cycles need at least 3 vertices")
    if arc_sum(a) + 1 != n:
        raise TypeTooLongError(f"type {a} is not spanning for order {n}")
    signs = expand_signs(a)
    groups: dict[frozenset[Arc], set[frozenset[Arc]]] = {}
    types: dict[frozenset[Arc], SignedTuple] = {}
    for vs in _sequences_with_word(T, signs):
        closed = _closed_arcs(T, vs)
        path_arcs = frozenset(closed[:-1])
        cycle_arcs = frozenset(closed)
        bucket = groups.setdefault(cycle_arcs, set())
        bucket.add(path_arcs)
        if cycle_arcs not in types:
            types[cycle_arcs] = classify_cycle(T, vs)
    classes = tuple(
        PathClass(frozenset(paths), cycle, types[cycle])
        for cycle, paths in sorted(groups.items(), key=lambda kv: sorted(kv[0]))
    )
    return ClassPartition(a, classes)
