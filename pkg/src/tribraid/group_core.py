"""Words over involutive generators indexed by 3-subsets of {1..n}.

The group carries three relation families: every generator squares to the
identity, two generators whose index sets share at most one strand commute
(far commutativity), and the four generators drawn from any 4 strands
satisfy the tetrahedron relation, i.e. their product may be reversed.
Words are immutable; relation moves produce rewritten copies.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import (
    BadTriple,
    DimensionMismatch,
    InvalidMove,
    InvalidN,
    WordParseError,
)


@dataclass(frozen=True, order=True)
class GenTriple:
    """One generator: an unordered 3-subset of {1..n}, stored sorted.

    Any ordering of the three indices constructs the same value.
    """

    n: int
    elems: tuple[int, int, int]

    def __post_init__(self):
        if self.n < 4:
            raise InvalidN(f"strand count must be >= 4, got {self.n}")
        elems = tuple(sorted(self.elems))
        if len(elems) != 3 or len(set(elems)) != 3:
            raise BadTriple(f"need three distinct indices, got {tuple(self.elems)}")
        if elems[0] < 1 or elems[2] > self.n:
            raise BadTriple(f"indices {elems} out of range 1..{self.n}")
        object.__setattr__(self, "elems", elems)

    def __contains__(self, strand: int) -> bool:
        return strand in self.elems

    def __str__(self) -> str:
        if self.n <= 9:
            return "a" + "".join(str(i) for i in self.elems)
        return "a(" + ",".join(str(i) for i in self.elems) + ")"


def all_generators(n: int) -> list[GenTriple]:
    """All C(n,3) generators, in lexicographic index order."""
    return [GenTriple(n, c) for c in combinations(range(1, n + 1), 3)]


def far_commutes(a: GenTriple, b: GenTriple) -> bool:
    """True when the index sets share at most one strand."""
    return len(set(a.elems) & set(b.elems)) <= 1


@dataclass(frozen=True)
class GWord:
    """A word in the generators; the empty word is the identity element."""

    n: int
    letters: tuple[GenTriple, ...] = ()

    def __post_init__(self):
        if self.n < 4:
            raise InvalidN(f"strand count must be >= 4, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g.n != self.n:
                raise DimensionMismatch(f"letter {g} has n={g.n}, word has n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)


_GENERAL_TOKEN = re.compile(r"^a\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)$")
_COMPACT_TOKEN = re.compile(r"^a(\d+)$")


def parse_indices(token: str, n: int) -> tuple[int, ...]:
    """Index tuple of one generator token, of any cardinality.

    Compact tokens like ``a123`` use one digit per index and are only
    unambiguous when n <= 9; parenthesised tokens ``a(1,2,3)`` work for
    any n.
    """
    m = _GENERAL_TOKEN.match(token)
    if m:
        return tuple(int(part) for part in m.group(1).split(","))
    if n <= 9:
        m = _COMPACT_TOKEN.match(token)
        if m:
            return tuple(int(ch) for ch in m.group(1))
    raise WordParseError(f"cannot parse generator token {token!r} (n={n})")


def parse_word(text: str, n: int) -> GWord:
    """Parse whitespace-separated generator tokens into a word.

    Indices may appear in any order; non 3-index generators are accepted by
    :func:`parse_indices` as raw data but rejected here, because words carry
    rank-3 semantics only.
    """
    letters = []
    for token in text.split():
        idx = parse_indices(token, n)
        if len(idx) != 3:
            raise WordParseError(
                f"{token!r} has {len(idx)} indices; words use 3-index generators"
            )
        try:
            letters.append(GenTriple(n, idx))
        except (BadTriple, InvalidN) as exc:
            raise WordParseError(str(exc)) from exc
    return GWord(n, tuple(letters))


def format_word(w: GWord) -> str:
    return " ".join(str(g) for g in w.letters)


class MoveKind(Enum):
    SQUARE_DELETE = "del"
    SQUARE_INSERT = "ins"
    FAR_COMMUTE = "swap"
    TETRA_REVERSE = "tetra"


@dataclass(frozen=True, order=True)
class RelationMove:
    """A single relation applied at a position in a word."""

    kind: MoveKind
    position: int
    letter: GenTriple | None = None

    def __str__(self) -> str:
        if self.kind is MoveKind.SQUARE_INSERT:
            return f"ins@{self.position}:{self.letter}"
        return f"{self.kind.value}@{self.position}"


def free_reduce(w: GWord) -> GWord:
    """Delete adjacent equal pairs until none remain (a_m a_m = 1)."""
    stack: list[GenTriple] = []
    for g in w.letters:
        if stack and stack[-1] == g:
            stack.pop()
        else:
            stack.append(g)
    return GWord(w.n, tuple(stack))


def _tetra_window(letters: tuple[GenTriple, ...], p: int) -> bool:
    # 4 pairwise distinct consecutive letters whose union has 4 strands:
    # then they are exactly the four 3-subsets of that 4-set.
    window = letters[p : p + 4]
    if len(set(window)) != 4:
        return False
    union: set[int] = set()
    for g in window:
        union.update(g.elems)
    return len(union) == 4


def applicable_moves(w: GWord, allow_insert: bool = False, max_len: int = 0) -> list[RelationMove]:
    """Every relation move applicable to w, in a fixed deterministic order.

    Square insertions are only listed when `allow_insert` is set and the
    resulting length stays within `max_len`; unrestricted insertion would
    make move enumeration infinite.
    """
    letters = w.letters
    length = len(letters)
    moves: list[RelationMove] = []
    for p in range(length - 1):
        if letters[p] == letters[p + 1]:
            moves.append(RelationMove(MoveKind.SQUARE_DELETE, p))
    for p in range(length - 1):
        if far_commutes(letters[p], letters[p + 1]):
            moves.append(RelationMove(MoveKind.FAR_COMMUTE, p))
    for p in range(length - 3):
        if _tetra_window(letters, p):
            moves.append(RelationMove(MoveKind.TETRA_REVERSE, p))
    if allow_insert and length + 2 <= max_len:
        for p in range(length + 1):
            for g in all_generators(w.n):
                moves.append(RelationMove(MoveKind.SQUARE_INSERT, p, g))
    return moves


def apply_move(w: GWord, m: RelationMove) -> GWord:
    """Rewrite w by one relation move; raises InvalidMove when the pattern
    does not match at the position."""
    letters = w.letters
    p = m.position
    if m.kind is MoveKind.SQUARE_DELETE:
        if not (0 <= p <= len(letters) - 2 and letters[p] == letters[p + 1]):
            raise InvalidMove(f"no equal adjacent pair at position {p}")
        return GWord(w.n, letters[:p] + letters[p + 2 :])
    if m.kind is MoveKind.SQUARE_INSERT:
        if m.letter is None:
            raise InvalidMove("square insertion needs a generator")
        if m.letter.n != w.n:
            raise InvalidMove(f"generator {m.letter} has n={m.letter.n}, word has n={w.n}")
        if not 0 <= p <= len(letters):
            raise InvalidMove(f"insertion position {p} out of range")
        return GWord(w.n, letters[:p] + (m.letter, m.letter) + letters[p:])
    if m.kind is MoveKind.FAR_COMMUTE:
        if not (0 <= p <= len(letters) - 2 and far_commutes(letters[p], letters[p + 1])):
            raise InvalidMove(f"letters at position {p} do not far-commute")
        return GWord(w.n, letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2 :])
    if m.kind is MoveKind.TETRA_REVERSE:
        if not (0 <= p <= len(letters) - 4 and _tetra_window(letters, p)):
            raise InvalidMove(f"no tetrahedron window at position {p}")
        return GWord(w.n, letters[:p] + tuple(reversed(letters[p : p + 4])) + letters[p + 4 :])
    raise InvalidMove(f"unknown move kind {m.kind!r}")


@dataclass(frozen=True)
class ParityVector:
    """Per-generator occurrence counts mod 2.

    Every relation preserves each generator count mod 2 (squares remove a
    pair of equal letters; the other relations permute letters), so this is
    an invariant of the group element.
    """

    n: int
    odd: frozenset[tuple[int, int, int]]

    def bit(self, triple) -> int:
        return 1 if tuple(sorted(triple)) in self.odd else 0

    @property
    def is_zero(self) -> bool:
        return not self.odd


def generator_parity(w: GWord) -> ParityVector:
    counts = Counter(g.elems for g in w.letters)
    return ParityVector(w.n, frozenset(t for t, c in counts.items() if c % 2))


@dataclass(frozen=True)
class EqualityVerdict:
    """Three-valued outcome of a bounded equality search.

    ``equal`` carries a replayable move path from the first word to the
    second; ``distinct`` carries an invariant witness; ``unknown`` means
    the search limits were reached without a decision.
    """

    status: str
    path: tuple[RelationMove, ...] | None = None
    witness: str | None = None

    @classmethod
    def equal(cls, path: tuple[RelationMove, ...]) -> "EqualityVerdict":
        return cls("equal", path=path)

    @classmethod
    def distinct(cls, witness: str) -> "EqualityVerdict":
        return cls("distinct", witness=witness)

    @classmethod
    def unknown(cls) -> "EqualityVerdict":
        return cls("unknown")

    @property
    def is_equal(self) -> bool:
        return self.status == "equal"

    @property
    def is_distinct(self) -> bool:
        return self.status == "distinct"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"


def bounded_equal(w1: GWord, w2: GWord, depth: int, max_len: int) -> EqualityVerdict:
    """Breadth-first search for a move path from w1 to w2.

    Insertions are allowed up to word length `max_len`; at most `depth`
    words are expanded.  The verdict never claims inequality without a
    parity witness, because no complete decision procedure is known.
    Deterministic for fixed inputs and limits.
    """
    if w1.n != w2.n:
        raise DimensionMismatch(f"cannot compare words with n={w1.n} and n={w2.n}")
    if generator_parity(w1) != generator_parity(w2):
        return EqualityVerdict.distinct("parity mismatch")
    if w1 == w2:
        return EqualityVerdict.equal(())
    parents: dict[GWord, tuple[GWord, RelationMove] | None] = {w1: None}
    queue: deque[GWord] = deque([w1])
    expanded = 0
    while queue and expanded < depth:
        w = queue.popleft()
        expanded += 1
        for m in applicable_moves(w, allow_insert=True, max_len=max_len):
            nxt = apply_move(w, m)
            if nxt in parents:
                continue
            parents[nxt] = (w, m)
            if nxt == w2:
                path: list[RelationMove] = []
                cur = nxt
                while parents[cur] is not None:
                    prev, mv = parents[cur]  # type: ignore[misc]
                    path.append(mv)
                    cur = prev
                return EqualityVerdict.equal(tuple(reversed(path)))
            queue.append(nxt)
    return EqualityVerdict.unknown()
