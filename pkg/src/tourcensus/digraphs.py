"""Counting copies of small path/cycle/vertex unions inside a tournament.

A pattern is a disjoint union of oriented paths, oriented cycles and isolated
vertices, written ``P(2,-1);C(3);V``.  Copies are counted as subgraphs: arc
sets in the host, not embeddings, so automorphic placements of repeated
components collapse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .census import count_cycles, count_paths
from .errors import DivisibilityViolationError, IllFormedError, ParseError, TypeTooLongError
from .tournaments import Tournament, seed_stream
from .type_algebra import (
    SignedTuple,
    _tuple_key,
    arc_sum,
    check_standard_cycle,
    check_standard_path,
    cycle_canonical,
    format_type,
    parse_type,
    path_canonical,
    standard_tuples,
)

__all__ = [
    "Component",
    "Digraph2Spec",
    "CopyCounter",
    "count_copies",
    "check_complement_invariance",
    "star_counterexample",
    "all_digraph_specs",
    "random_digraph_spec",
]

# A component is ("V",), ("P", tuple) or ("C", tuple); tuples are canonical.
Component = tuple

_KIND_RANK = {"P": 0, "C": 1, "V": 2}


def _component_order(c: Component) -> int:
    if c[0] == "V":
        return 1
    if c[0] == "P":
        return arc_sum(c[1]) + 1
    return arc_sum(c[1])


def _component_key(c: Component):
    return (_KIND_RANK[c[0]],) + tuple(_tuple_key(c[1]) if len(c) > 1 else ())


def _canonical_component(kind: str, tup: SignedTuple | None) -> Component:
    if kind == "V":
        return ("V",)
    if kind not in ("P", "C") or tup is None:
        raise IllFormedError(f"bad component ({kind!r}, {tup!r})")
    if kind == "P":
        check_standard_path(tup)
        return ("P", path_canonical(tup))
    check_standard_cycle(tup)
    if arc_sum(tup) < 3:
        raise IllFormedError(f"cycle component needs at least 3 arcs, got {format_type(tup)}")
    return ("C", cycle_canonical(tup))


@dataclass(frozen=True)
class Digraph2Spec:
    """Disjoint union of oriented paths, cycles and isolated vertices."""

    components: tuple[Component, ...]

    def __post_init__(self):
        # canonicalize on entry so equal components compare equal no matter the
        # gauge they were written in; multiplicity grouping depends on this
        canon = tuple(
            _canonical_component(c[0], c[1] if len(c) > 1 else None)
            for c in self.components
        )
        object.__setattr__(self, "components", tuple(sorted(canon, key=_component_key)))

    @property
    def order(self) -> int:
        return sum(_component_order(c) for c in self.components)

    def core(self) -> tuple[Component, ...]:
        """Non-trivial components, vertex components stripped."""
        return tuple(c for c in self.components if c[0] != "V")

    @property
    def isolated(self) -> int:
        return sum(1 for c in self.components if c[0] == "V")

    def render(self) -> str:
        parts = []
        for c in self.components:
            if c[0] == "V":
                parts.append("V")
            else:
                parts.append(f"{c[0]}{format_type(c[1])}")
        return ";".join(parts)

    @staticmethod
    def parse(text: str) -> "Digraph2Spec":
        if not text:
            raise ParseError("empty pattern", 0)
        comps: list[Component] = []
        offset = 0
        for part in text.split(";"):
            if part == "V":
                comps.append(("V",))
            elif part[:1] in {"P", "C"} and len(part) > 1:
                try:
                    tup = parse_type(part[1:])
                except ParseError as exc:
                    raise ParseError(exc.args[0], offset + 1 + exc.offset) from None
                try:
                    comps.append(_canonical_component(part[0], tup))
                except IllFormedError as exc:
                    raise ParseError(str(exc), offset) from None
            else:
                raise ParseError(f"bad component {part!r}", offset)
            offset += len(part) + 1
        return Digraph2Spec(tuple(comps))


def _span_table(T: Tournament, comp: Component) -> dict[int, int]:
    """mask -> number of copies of comp using exactly that vertex set."""
    kind, tup = comp[0], comp[1]
    k = _component_order(comp)
    counter = count_paths if kind == "P" else count_cycles
    table: dict[int, int] = {}
    for subset in combinations(range(T.n), k):
        c = counter(T.induced(subset), tup)
        if c:
            mask = 0
            for v in subset:
                mask |= 1 << v
            table[mask] = c
    return table


class CopyCounter:
    """Copy counts of many patterns in one host, span tables cached."""

    def __init__(self, T: Tournament):
        self.T = T
        self._tables: dict[Component, dict[int, int]] = {}

    def _table(self, comp: Component) -> dict[int, int]:
        tbl = self._tables.get(comp)
        if tbl is None:
            tbl = self._tables[comp] = _span_table(self.T, comp)
        return tbl

    def count(self, H: Digraph2Spec) -> int:
        n = self.T.n
        if H.order > n:
            raise TypeTooLongError(f"pattern needs {H.order} vertices, host has {n}")
        core = H.core()
        tables = [self._table(c) for c in core]

        # ordered placements of the core components on disjoint vertex sets
        memo: dict[tuple[int, int], int] = {}

        def place(idx: int, used: int) -> int:
            if idx == len(tables):
                return 1
            key = (idx, used)
            val = memo.get(key)
            if val is None:
                val = 0
                for mask, c in tables[idx].items():
                    if not mask & used:
                        val += c * place(idx + 1, used | mask)
                memo[key] = val
            return val

        ordered = place(0, 0)
        rep = 1
        for comp, group in _group_equal(core):
            rep *= factorial(group)
        if ordered % rep:
            raise DivisibilityViolationError(
                f"{ordered} ordered placements not divisible by {rep}"
            )
        core_order = sum(_component_order(c) for c in core)
        return (ordered // rep) * comb(n - core_order, H.isolated)


def _group_equal(comps: tuple[Component, ...]) -> list[tuple[Component, int]]:
    out: list[tuple[Component, int]] = []
    for c in comps:
        if out and out[-1][0] == c:
            out[-1] = (c, out[-1][1] + 1)
        else:
            out.append((c, 1))
    return out


def count_copies(T: Tournament, H: Digraph2Spec) -> int:
    return CopyCounter(T).count(H)


def check_complement_invariance(T: Tournament, H: Digraph2Spec) -> tuple[int, int]:
    """Copy counts of H in T and in the arc-reversed tournament.

    Reversal maps a copy of a path or cycle to a copy of its negation, which
    has the same canonical type, so the two counts agree pattern by pattern.
    """
    return count_copies(T, H), count_copies(T.complement(), H)


def _out_star_count(T: Tournament, leaves: int) -> int:
    """Copies of the out-star with the given number of leaves (one center
    dominating an unordered leaf set)."""
    return sum(comb(T.out_degree(v), leaves) for v in range(T.n))


def star_counterexample(n: int) -> tuple[int, int]:
    """Out-star counts in a tournament pair showing stars are not reversal
    invariant: the n-leaf out-star appears once in the construction and never
    in its reversal.

    The host on n + 1 vertices carries a directed cycle through the first n
    vertices, all remaining low-to-high arcs among them, and a final vertex
    beating everyone.  Only that vertex reaches out-degree n, and after
    reversal no vertex keeps n out-neighbours.
    """
    from .tournaments import pair_index

    if n < 3:
        raise TypeTooLongError("star construction needs at least 3 leaves")
    order = n + 1
    bits = 0
    for i in range(n):
        for j in range(i + 1, n):
            bits |= 1 << pair_index(i, j, order)
    bits ^= 1 << pair_index(0, n - 1, order)  # wrap arc n-1 -> 0 closes the cycle
    T = Tournament(order, bits)  # pairs (v, n) stay 0: the last vertex beats all
    rev = T.complement()
    return _out_star_count(T, n), _out_star_count(rev, n)


def all_digraph_specs(max_order: int) -> list[Digraph2Spec]:
    """Every pattern whose total order is at most ``max_order``."""
    comps: list[Component] = [("V",)]
    for total in range(1, max_order):
        comps.extend(("P", t) for t in sorted({path_canonical(x) for x in standard_tuples(total, "path")}))
    for total in range(3, max_order + 1):
        comps.extend(("C", t) for t in sorted({cycle_canonical(x) for x in standard_tuples(total, "cycle")}))
    comps.sort(key=_component_key)

    out: list[Digraph2Spec] = []

    def rec(start: int, left: int, chosen: list[Component]) -> None:
        if chosen:
            out.append(Digraph2Spec(tuple(chosen)))
        for i in range(start, len(comps)):
            k = _component_order(comps[i])
            if k <= left:
                chosen.append(comps[i])
                rec(i, left - k, chosen)
                chosen.pop()

    rec(0, max_order, [])
    return out


def random_digraph_spec(order: int, seed: int) -> Digraph2Spec:
    """Deterministic pseudo-random pattern of exactly the given order."""
    stream = seed_stream(seed)
    comps: list[Component] = []
    left = order
    while left:
        w = next(stream)
        k = 1 + w % left
        if k == 1:
            comps.append(("V",))
        elif k == 2:
            comps.append(("P", (1,)))
        else:
            kind = "C" if next(stream) & 1 else "P"
            arcs = k if kind == "C" else k - 1
            word = next(stream)
            tup = _word_tuple(word, arcs)
            if kind == "C":
                comps.append(("C", cycle_canonical(_wrap_merge(tup))))
            else:
                comps.append(("P", path_canonical(tup)))
        left -= k
    return Digraph2Spec(tuple(comps))


def _word_tuple(word: int, arcs: int) -> SignedTuple:
    runs: list[int] = []
    for i in range(arcs):
        s = 1 if word >> i & 1 else -1
        if runs and (runs[-1] > 0) == (s > 0):
            runs[-1] += s
        else:
            runs.append(s)
    return tuple(runs)


def _wrap_merge(tup: SignedTuple) -> SignedTuple:
    if len(tup) > 1 and (tup[0] > 0) == (tup[-1] > 0):
        return (tup[-1] + tup[0],) + tup[1:-1]
    return tup
