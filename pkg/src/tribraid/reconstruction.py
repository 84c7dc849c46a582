"""Annular (cylindrical) braid shadow of a realisable word.

Fix an axis strand.  Each letter containing the axis whose central element
is not the axis swaps two rays from the axis that are adjacent in the
running cyclic order; letters with the axis in the centre are disregarded.
The resulting swap word yields a permutation of the non-axis strands and a
half-signed-count linking number per strand pair, which together act as a
computable isotopy shadow.  For closed motions around an axis no strand
winds about, the linking entries equal the planar winding numbers of the
motion exactly; the shadow is blind to full twists (rigid rotations cross
no rays).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    AdjacencyViolation,
    AmbiguousCentral,
    BadTriple,
    DimensionMismatch,
    NotRealisable,
)
from .group_core import GWord, generator_parity
from .index_state import classify_word, signed_index


def initial_cyclic_order(n: int, axis: int) -> tuple[int, ...]:
    """(axis+1, ..., n, 1, ..., axis-1): the order in which chords from the
    axis vertex of the regular configuration sweep the other strands."""
    if not 1 <= axis <= n:
        raise BadTriple(f"axis {axis} out of range 1..{n}")
    return tuple((axis - 1 + t) % n + 1 for t in range(1, n))


@dataclass(frozen=True)
class CylLetter:
    """One ray swap: `inner` is the central point, closer to the axis."""

    inner: int
    outer: int
    sign: int

    def __str__(self) -> str:
        return f"b({self.inner},{self.outer},{'+' if self.sign > 0 else '-'})"


@dataclass(frozen=True)
class CylWord:
    """A cylindrical braid word; every swap must be cyclically adjacent."""

    n: int
    axis: int
    letters: tuple[CylLetter, ...]
    final_order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        order = _replay_order(self.n, self.axis, self.letters)
        if order != tuple(self.final_order):
            raise AdjacencyViolation(
                f"declared final order {self.final_order} does not match the swap replay {order}"
            )

    @classmethod
    def from_letters(cls, n: int, axis: int, letters) -> "CylWord":
        letters = tuple(letters)
        return cls(n, axis, letters, _replay_order(n, axis, letters))

    def __str__(self) -> str:
        return " ".join(str(lt) for lt in self.letters)


def _swap_adjacent(order: list[int], a: int, b: int) -> None:
    pa, pb = order.index(a), order.index(b)
    last = len(order) - 1
    adjacent = abs(pa - pb) == 1 or (last > 1 and {pa, pb} == {0, last})
    if not adjacent:
        raise AdjacencyViolation(
            f"strands {a} and {b} are not adjacent in the cyclic order {tuple(order)}"
        )
    order[pa], order[pb] = order[pb], order[pa]


def _replay_order(n: int, axis: int, letters) -> tuple[int, ...]:
    order = list(initial_cyclic_order(n, axis))
    for lt in letters:
        if lt.inner == lt.outer or axis in (lt.inner, lt.outer):
            raise BadTriple(f"bad swap letter {lt} for axis {axis}")
        if lt.inner not in order or lt.outer not in order:
            raise BadTriple(f"swap letter {lt} names a missing strand")
        if lt.sign not in (-1, 1):
            raise BadTriple(f"swap sign must be ±1, got {lt.sign}")
        _swap_adjacent(order, lt.inner, lt.outer)
    return tuple(order)


def empty_cyl_word(n: int, axis: int) -> CylWord:
    return CylWord(n, axis, (), initial_cyclic_order(n, axis))


def reconstruct_axis(w: GWord, axis: int) -> CylWord:
    """Extract the swap word of a realisable word around one axis strand.

    The central element of each axis letter is read from its status (the
    outside-point sign patterns identify it uniquely); a letter with the
    axis in the centre crosses no ray and is disregarded.  The swap sign is
    the orientation of (axis, outer, inner) at the letter's prefix state,
    calibrated so a counterclockwise revolution of one strand about another
    contributes +1 to their linking number.
    """
    if not 1 <= axis <= w.n:
        raise BadTriple(f"axis {axis} out of range 1..{w.n}")
    cw = classify_word(w)
    if not cw.realisable:
        bad = [i for i, st in enumerate(cw.statuses) if not st.good]
        raise NotRealisable(f"letters at positions {bad} are not realisable")
    order = list(initial_cyclic_order(w.n, axis))
    letters: list[CylLetter] = []
    for g, st, s in zip(w.letters, cw.statuses, cw.prefix_states):
        if axis not in g.elems:
            continue
        if len(st.centrals) != 1:
            raise AmbiguousCentral(f"letter {g} admits centrals {sorted(st.centrals)}")
        (central,) = st.centrals
        if central == axis:
            continue
        inner = central
        (outer,) = (e for e in g.elems if e != axis and e != central)
        sign = signed_index(s, axis, outer, inner)
        _swap_adjacent(order, inner, outer)
        letters.append(CylLetter(inner, outer, sign))
    return CylWord(w.n, axis, tuple(letters), tuple(order))


@dataclass(frozen=True)
class AnnularInvariants:
    """Permutation plus pairwise half-signed swap counts.

    `perm` maps the strand that starts in each ray slot to the strand that
    ends there; `linking` holds, for every unordered non-axis pair, half
    the signed sum of its swaps.  For swap words of closed motions around
    an axis no strand winds about, every pair crosses an even number of
    times and the entries are integers.
    """

    axis: int
    strands: tuple[int, ...]
    perm: tuple[tuple[int, int], ...]
    linking: tuple[tuple[tuple[int, int], Fraction], ...]

    def linking_of(self, i: int, j: int) -> Fraction:
        key = (i, j) if i < j else (j, i)
        for pair, value in self.linking:
            if pair == key:
                return value
        raise BadTriple(f"pair {key} not covered by axis {self.axis}")

    @property
    def is_identity(self) -> bool:
        return all(src == dst for src, dst in self.perm)

    def to_text(self) -> str:
        lines = [f"axis {self.axis}, strands {' '.join(map(str, self.strands))}"]
        lines.append(f"permutation: {_cycle_notation(dict(self.perm))}")
        lines.append("linking:")
        header = "     " + "".join(f"{s:>6}" for s in self.strands)
        lines.append(header)
        for i in self.strands:
            row = [f"{i:>5}"]
            for j in self.strands:
                row.append("     ." if i == j else f"{str(self.linking_of(i, j)):>6}")
            lines.append("".join(row))
        return "\n".join(lines)


def _cycle_notation(mapping: dict[int, int]) -> str:
    seen: set[int] = set()
    cycles = []
    for start in sorted(mapping):
        if start in seen or mapping[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) if cycles else "()"


def annular_invariants(c: CylWord) -> AnnularInvariants:
    """Net permutation and per-pair half-signed swap sums of a swap word."""
    start = initial_cyclic_order(c.n, c.axis)
    perm = tuple(sorted(zip(start, c.final_order)))
    strands = tuple(sorted(start))
    sums: Counter[tuple[int, int]] = Counter()
    for lt in c.letters:
        key = (lt.inner, lt.outer) if lt.inner < lt.outer else (lt.outer, lt.inner)
        sums[key] += lt.sign
    linking = tuple(
        (pair, Fraction(sums.get(pair, 0), 2)) for pair in combinations(strands, 2)
    )
    return AnnularInvariants(c.axis, strands, perm, linking)


def invariants_equal_mod_full_twist(a: AnnularInvariants, b: AnnularInvariants):
    """The integer m with b = a + m full twists, or None.

    A full twist adds one to every pairwise linking number and fixes the
    permutation, so the test is: equal permutations and a common integer
    difference on every pair.
    """
    if a.axis != b.axis or a.strands != b.strands:
        raise DimensionMismatch("invariants cover different strand sets")
    if a.perm != b.perm:
        return None
    diffs = {b.linking_of(*pair) - a.linking_of(*pair) for pair, _ in a.linking}
    if len(diffs) != 1:
        return None
    (m,) = diffs
    if m.denominator != 1:
        return None
    return int(m)


NONTRIVIAL_BY_PARITY = "nontrivial-by-parity"
NONTRIVIAL_BY_LINKING = "nontrivial-by-linking"
TRIVIAL_CONSISTENT = "trivial-consistent"


@dataclass(frozen=True)
class KernelVerdict:
    kind: str
    axis: int | None = None
    pair: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.kind == NONTRIVIAL_BY_LINKING:
            return f"{self.kind} (axis {self.axis}, pair {self.pair})"
        return self.kind


def _deviating_pair(base: AnnularInvariants, inv: AnnularInvariants) -> tuple[int, int]:
    for src, dst in inv.perm:
        if src != dst:
            return tuple(sorted((src, dst)))  # type: ignore[return-value]
    diffs = {pair: inv.linking_of(*pair) - base.linking_of(*pair) for pair, _ in base.linking}
    counts = Counter(diffs.values())
    # the most frequent difference is the full-twist shift candidate
    mode = max(counts.items(), key=lambda kv: (kv[1], -abs(kv[0])))[0]
    for pair in sorted(diffs):
        if diffs[pair] != mode:
            return pair
    return min(diffs)


def kernel_witness(w: GWord) -> KernelVerdict:
    """Best-effort nontriviality check for a realisable word.

    Parity is checked first; otherwise the word is reconstructed around
    every axis (covering every strand pair) and compared with the empty
    word's invariants modulo full twists.  A consistent outcome makes no
    triviality claim: these invariants are blind beyond parity, winding
    and the ray permutation.
    """
    cw = classify_word(w)
    if not cw.realisable:
        raise NotRealisable("kernel witness requires a realisable word")
    if not generator_parity(w).is_zero:
        return KernelVerdict(NONTRIVIAL_BY_PARITY)
    for axis in range(1, w.n + 1):
        inv = annular_invariants(reconstruct_axis(w, axis))
        base = annular_invariants(empty_cyl_word(w.n, axis))
        if invariants_equal_mod_full_twist(base, inv) is None:
            return KernelVerdict(NONTRIVIAL_BY_LINKING, axis, _deviating_pair(base, inv))
    return KernelVerdict(TRIVIAL_CONSISTENT)
