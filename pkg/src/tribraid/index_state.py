"""Orientation states on strand triples and the realisability machinery.

A state assigns a sign to every sorted triple of strands; reading a word
left to right, each generator flips the sign of its own triple.  A letter
is *realisable* at a state when one of its three strands can serve as the
central element: with central c flanked by x and y, every outside strand p
must see the same sign on (x,c,p), (x,y,p) and (c,y,p).  Realisability
drives the good/bad split of letters, the bad-letter projection, and the
exhaustive census checks over all states.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import BadTriple, DimensionMismatch, InvalidN, UnsupportedN
from .group_core import GWord, GenTriple, all_generators, far_commutes

Triple = tuple[int, int, int]


def all_triples(n: int) -> list[Triple]:
    return list(combinations(range(1, n + 1), 3))


@dataclass(frozen=True)
class OrientationState:
    """Signs on sorted strand triples; `minus` holds the triples at -1."""

    n: int
    minus: frozenset[Triple]

    def value(self, triple: Triple) -> int:
        """Sign stored on a *sorted* triple."""
        return -1 if triple in self.minus else 1


def initial_state(n: int) -> OrientationState:
    """State of the uniform circular configuration.

    Around the circle, strand j sits in angular position j, so for any
    sorted triple i<j<k the arc from i to j is shorter than the arc from i
    to k and the stored sign is +1.
    """
    if n < 4:
        raise InvalidN(f"strand count must be >= 4, got {n}")
    return OrientationState(n, frozenset())


def signed_index(s: OrientationState, i: int, j: int, k: int) -> int:
    """Sign of the ordered triple (i,j,k): antisymmetric in its arguments."""
    if i == j or i == k or j == k:
        raise BadTriple(f"triple ({i},{j},{k}) has repeated indices")
    for idx in (i, j, k):
        if not 1 <= idx <= s.n:
            raise BadTriple(f"index {idx} out of range 1..{s.n}")
    inversions = (i > j) + (i > k) + (j > k)
    v = s.value(tuple(sorted((i, j, k))))
    return -v if inversions & 1 else v


def flip(s: OrientationState, g: GenTriple) -> OrientationState:
    """Negate exactly the entry of g's triple; an involution."""
    if g.n != s.n:
        raise DimensionMismatch(f"generator n={g.n}, state n={s.n}")
    return OrientationState(s.n, s.minus ^ {g.elems})


def run_word(s: OrientationState, w: GWord) -> OrientationState:
    """Left-to-right composition of flips."""
    if w.n != s.n:
        raise DimensionMismatch(f"word n={w.n}, state n={s.n}")
    cur = s.minus
    for g in w.letters:
        cur = cur ^ {g.elems}
    return OrientationState(s.n, cur)


@dataclass(frozen=True)
class LetterStatus:
    """The set of admissible central elements; good means nonempty.

    Membership is unchanged by reversing the flanking order, so the set is
    well defined.  For any single outside strand the three central
    conditions are mutually exclusive, hence the set holds at most one
    element in practice.
    """

    centrals: frozenset[int]

    @property
    def good(self) -> bool:
        return bool(self.centrals)


def letter_status(s: OrientationState, g: GenTriple) -> LetterStatus:
    """Classify one letter at a state."""
    if g.n != s.n:
        raise DimensionMismatch(f"generator n={g.n}, state n={s.n}")
    i, j, k = g.elems
    outside = [p for p in range(1, s.n + 1) if p != i and p != j and p != k]
    centrals = set()
    for c in (i, j, k):
        x, y = (e for e in (i, j, k) if e != c)
        if all(
            signed_index(s, x, c, p) == signed_index(s, x, y, p) == signed_index(s, c, y, p)
            for p in outside
        ):
            centrals.add(c)
    return LetterStatus(frozenset(centrals))


@dataclass(frozen=True)
class ClassifiedWord:
    """A word with per-letter statuses and the state before each letter.

    Every letter acts on the running state, good or bad; the action is
    defined for all words, and the stable projection only converges under
    this reading.
    """

    word: GWord
    statuses: tuple[LetterStatus, ...]
    prefix_states: tuple[OrientationState, ...]
    final_state: OrientationState

    @property
    def realisable(self) -> bool:
        return all(st.good for st in self.statuses)


def classify_word(w: GWord, start: OrientationState | None = None) -> ClassifiedWord:
    """Statuses of every letter at its prefix state.

    `start` defaults to the initial state; censuses pass arbitrary states to
    evaluate relation windows in isolation.
    """
    s = initial_state(w.n) if start is None else start
    if s.n != w.n:
        raise DimensionMismatch(f"word n={w.n}, state n={s.n}")
    prefixes: list[OrientationState] = []
    statuses: list[LetterStatus] = []
    for g in w.letters:
        prefixes.append(s)
        statuses.append(letter_status(s, g))
        s = flip(s, g)
    return ClassifiedWord(w, tuple(statuses), tuple(prefixes), s)


def is_realisable(w: GWord) -> bool:
    return classify_word(w).realisable


def project_once(w: GWord) -> GWord:
    """Delete exactly the bad letters, preserving the order of the rest."""
    cw = classify_word(w)
    return GWord(w.n, tuple(g for g, st in zip(w.letters, cw.statuses) if st.good))


def stable_projection(w: GWord) -> tuple[GWord, int]:
    """Iterate the projection to its fixed point.

    Returns the fixed point and the number of passes, including the final
    confirming pass.  Each non-final pass deletes at least one letter, so
    the count is at most len(w)+1; the result has no bad letters.
    """
    passes = 0
    cur = w
    while True:
        passes += 1
        nxt = project_once(cur)
        if nxt == cur:
            return cur, passes
        cur = nxt


# ---------------------------------------------------------------------------
# State enumeration and lemma censuses


def enumerate_states(n: int):
    """All 2^C(n,3) orientation states, ordered by bitmask over sorted
    triples (bit b set means triple b carries -1)."""
    ts = all_triples(n)
    for mask in range(1 << len(ts)):
        yield OrientationState(
            n, frozenset(t for b, t in enumerate(ts) if mask >> b & 1)
        )


def state_id(s: OrientationState) -> int:
    ts = all_triples(s.n)
    return sum(1 << b for b, t in enumerate(ts) if t in s.minus)


def state_from_id(n: int, mask: int) -> OrientationState:
    ts = all_triples(n)
    if not 0 <= mask < 1 << len(ts):
        raise BadTriple(f"state id {mask} out of range for n={n}")
    return OrientationState(n, frozenset(t for b, t in enumerate(ts) if mask >> b & 1))


@dataclass(frozen=True)
class CensusRow:
    state: int
    case: str
    statuses: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CensusReport:
    n: int
    lemma: str
    cases: int
    rows: tuple[CensusRow, ...]

    @property
    def violations(self) -> tuple[CensusRow, ...]:
        return tuple(r for r in self.rows if not r.ok)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_table(self, full: bool = False) -> str:
        lines = [
            f"census lemma={self.lemma} n={self.n} cases={self.cases} "
            f"violations={len(self.violations)}"
        ]
        rows = self.rows if full else self.violations
        for r in rows:
            flag = "ok" if r.ok else "VIOLATION"
            line = f"state={r.state} case={r.case} statuses={r.statuses} {flag}"
            if r.detail:
                line += f" ({r.detail})"
            lines.append(line)
        return "\n".join(lines)


def _render_statuses(cw: ClassifiedWord) -> str:
    parts = []
    for g, st in zip(cw.word.letters, cw.statuses):
        tag = "g" + "".join(str(c) for c in sorted(st.centrals)) if st.good else "bad"
        parts.append(f"{g}:{tag}")
    return ",".join(parts)


def tetra_letters(n: int, tup: tuple[int, int, int, int]) -> tuple[GenTriple, ...]:
    """The four letters of the tetrahedron word for an ordered 4-tuple:
    letter j omits the j-th tuple entry."""
    u = set(tup)
    return tuple(GenTriple(n, tuple(sorted(u - {x}))) for x in tup)


def _middle_under_order(g: GenTriple, order: tuple[int, ...]) -> int:
    rank = {v: i for i, v in enumerate(order)}
    return sorted(g.elems, key=rank.__getitem__)[1]


def _tetra_case(s: OrientationState, tup) -> tuple[bool, str, str]:
    lhs = GWord(4, tetra_letters(4, tup))
    rhs = GWord(4, tuple(reversed(lhs.letters)))
    cl = classify_word(lhs, start=s)
    cr = classify_word(rhs, start=s)
    rendered = _render_statuses(cl) + "|" + _render_statuses(cr)
    n_l = sum(st.good for st in cl.statuses)
    n_r = sum(st.good for st in cr.statuses)
    if n_l not in (0, 1, 4):
        return False, rendered, f"good count {n_l} not in {{0,1,4}}"
    if n_l != n_r:
        return False, rendered, f"good counts differ: {n_l} vs {n_r}"
    if n_l == 1:
        g_l = next(g for g, st in zip(cl.word.letters, cl.statuses) if st.good)
        g_r = next(g for g, st in zip(cr.word.letters, cr.statuses) if st.good)
        if g_l != g_r:
            return False, rendered, f"lone good letters differ: {g_l} vs {g_r}"
    if n_l == 4:
        found = False
        for order in permutations(sorted(set(tup))):
            if all(
                _middle_under_order(g, order) in st.centrals
                for cw in (cl, cr)
                for g, st in zip(cw.word.letters, cw.statuses)
            ):
                found = True
                break
        if not found:
            return False, rendered, "no total order realises all eight letters"
    return True, rendered, ""


def _tetra_census() -> CensusReport:
    rows = []
    for s in enumerate_states(4):
        sid = state_id(s)
        for tup in permutations((1, 2, 3, 4)):
            ok, rendered, detail = _tetra_case(s, tup)
            rows.append(CensusRow(sid, "".join(map(str, tup)), rendered, ok, detail))
    return CensusReport(4, "tetra", len(rows), tuple(rows))


def _square_census() -> CensusReport:
    rows = []
    gens = all_generators(4)
    for s in enumerate_states(4):
        sid = state_id(s)
        for g in gens:
            cw = classify_word(GWord(4, (g, g)), start=s)
            ok = cw.statuses[0] == cw.statuses[1]
            rows.append(
                CensusRow(
                    sid,
                    str(g),
                    _render_statuses(cw),
                    ok,
                    "" if ok else "square copies disagree",
                )
            )
    return CensusReport(4, "square", len(rows), tuple(rows))


def _commute_census(n: int, samples: int, seed: int) -> CensusReport:
    gens = all_generators(n)
    pairs = [(a, b) for a, b in combinations(gens, 2) if far_commutes(a, b)]
    if n == 5:
        states = list(enumerate_states(5))
    else:
        # the full state space is 2^C(n,3); sample it with a fixed seed
        rng = random.Random(seed)
        width = len(all_triples(n))
        states = [state_from_id(n, rng.randrange(1 << width)) for _ in range(samples)]
    rows = []
    for s in states:
        sid = state_id(s)
        for a, b in pairs:
            fwd = classify_word(GWord(n, (a, b)), start=s)
            rev = classify_word(GWord(n, (b, a)), start=s)
            ok = fwd.statuses[0] == rev.statuses[1] and fwd.statuses[1] == rev.statuses[0]
            rows.append(
                CensusRow(
                    sid,
                    f"{a}|{b}",
                    _render_statuses(fwd) + "|" + _render_statuses(rev),
                    ok,
                    "" if ok else "statuses change under swap",
                )
            )
    return CensusReport(n, "commute", len(rows), tuple(rows))


def relation_census(n: int, lemma: str, *, samples: int = 512, seed: int = 0) -> CensusReport:
    """Exhaustively check one relation family's status behaviour.

    ``tetra``: over all 16 states of n=4 and all 24 tuple orderings, good
    counts lie in {0,1,4}, match on both sides, lone survivors coincide,
    and count-4 cases admit one total order realising every letter.
    ``square``: both copies of a doubled letter share status.
    ``commute``: far-commuting letters keep their statuses under the swap
    (exhaustive at n=5, seeded state samples for n >= 6).
    """
    if lemma == "tetra":
        if n != 4:
            raise UnsupportedN("tetra census is exhaustive for n=4 only")
        return _tetra_census()
    if lemma == "square":
        if n != 4:
            raise UnsupportedN("square census is exhaustive for n=4 only")
        return _square_census()
    if lemma == "commute":
        if n < 5:
            raise UnsupportedN("no far-commuting pairs below n=5")
        return _commute_census(n, samples, seed)
    raise ValueError(f"unknown lemma census {lemma!r}")
