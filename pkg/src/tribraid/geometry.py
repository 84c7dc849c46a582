"""Exact rational plane geometry for one-strand-at-a-time motions.

All coordinates are `fractions.Fraction`; predicates never touch floating
point.  Because only one strand moves per segment, each triple's
collinearity condition is linear in the time parameter, so event times are
exact rationals with an exact total order.  Orientation is +1 for
positively oriented (counterclockwise) triangles, calibrated so that the
rational regular configuration carries the all-plus initial orientation
state on sorted triples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .errors import (
    BadTriple,
    ConstructionFailure,
    DegeneratePath,
    DimensionMismatch,
    GenericityError,
    InvalidMove,
    InvalidN,
    NotClosed,
    ProgramParseError,
)
from .group_core import GWord, GenTriple
from .index_state import OrientationState, all_triples


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    # floats are banned: one rounding error would corrupt event order
    raise TypeError(f"exact rational required, got {type(value).__name__}")


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    def __add__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "RationalPoint") -> "RationalPoint":
        return RationalPoint(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar) -> "RationalPoint":
        f = _frac(scalar)
        return RationalPoint(self.x * f, self.y * f)

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        return self.x * self.x + self.y * self.y

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def perp(v: RationalPoint) -> RationalPoint:
    """v rotated a quarter turn counterclockwise."""
    return RationalPoint(-v.y, v.x)


def cross(u: RationalPoint, v: RationalPoint) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot(u: RationalPoint, v: RationalPoint) -> Fraction:
    return u.x * v.x + u.y * v.y


def orientation(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> int:
    """Sign of det(q-p, r-p): +1 counterclockwise, -1 clockwise, 0 collinear.

    Antisymmetric under swapping any two arguments.
    """
    d = cross(q - p, r - p)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class Configuration:
    """n labelled points with no three collinear (hence pairwise distinct)."""

    n: int
    points: tuple[RationalPoint, ...]

    def __post_init__(self):
        if self.n < 4:
            raise InvalidN(f"strand count must be >= 4, got {self.n}")
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) != self.n:
            raise DimensionMismatch(f"{len(self.points)} points for n={self.n}")
        for a, b in combinations(range(self.n), 2):
            if self.points[a] == self.points[b]:
                raise GenericityError(f"strands {a + 1} and {b + 1} coincide")
        for a, b, c in combinations(range(self.n), 3):
            if orientation(self.points[a], self.points[b], self.points[c]) == 0:
                raise GenericityError(f"strands {a + 1},{b + 1},{c + 1} are collinear")

    def point(self, strand: int) -> RationalPoint:
        if not 1 <= strand <= self.n:
            raise BadTriple(f"strand {strand} out of range 1..{self.n}")
        return self.points[strand - 1]

    def moved(self, strand: int, target: RationalPoint) -> "Configuration":
        self.point(strand)
        pts = list(self.points)
        pts[strand - 1] = target
        return Configuration(self.n, tuple(pts))


@dataclass(frozen=True)
class LinearMove:
    """One strand travels in a straight line to `target`; the others stay put."""

    strand: int
    target: RationalPoint


@dataclass(frozen=True)
class FullTwistMove:
    """All strands rotate rigidly about the origin by `turns` full turns.

    Requires every point on a common circle centred at the origin; three
    concyclic points are never collinear, so the move emits no events and
    is handled symbolically.
    """

    turns: int

    def __post_init__(self):
        if not isinstance(self.turns, int) or self.turns == 0:
            raise InvalidMove(f"full twist needs a nonzero integer turn count, got {self.turns!r}")


Move = Union[LinearMove, FullTwistMove]


@dataclass(frozen=True)
class MoveProgram:
    """A pure braid as an initial configuration plus a move sequence."""

    initial: Configuration
    moves: tuple[Move, ...] = ()
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    @property
    def n(self) -> int:
        return self.initial.n


@dataclass(frozen=True)
class CollinearityEvent:
    move_index: int
    t: Fraction
    triple: GenTriple
    central: int


@dataclass(frozen=True)
class CompileOutput:
    """The word read off a motion: one letter per event, in time order."""

    word: GWord
    events: tuple[CollinearityEvent, ...]
    twist_turns: int


def _circle_point(t: Fraction) -> RationalPoint:
    """Rational point on the unit circle at angle 2*atan(t)."""
    den = 1 + t * t
    return RationalPoint((1 - t * t) / den, 2 * t / den)


def regular_rational_configuration(n: int) -> Configuration:
    """Rational stand-in for the regular n-gon on the unit circle.

    Strand j sits in the angular sector of the true vertex at turn fraction
    j/n, placed via the tangent-half-angle map with a parameter that is
    strictly monotone in the angle.  Cyclic order (and therefore every
    triple's orientation) matches the true n-gon; points on a circle are
    never three-collinear.
    """
    if n < 4:
        raise InvalidN(f"strand count must be >= 4, got {n}")
    pts = []
    for j in range(1, n + 1):
        beta = Fraction(j, n)
        if beta > Fraction(1, 2):
            beta -= 1
        if beta == Fraction(1, 2):
            pts.append(RationalPoint(-1, 0))
        else:
            # monotone on (-1/2, 1/2), exact at the rational vertices 0, ±1/4
            t = 3 * beta / (1 - 4 * beta * beta)
            pts.append(_circle_point(t))
    return Configuration(n, tuple(pts))


def _central_of_collinear(ids_points) -> int:
    """Strand id of the middle point among three distinct collinear ones."""
    for mid_id, mid, o1, o2 in (
        (ids_points[0][0], ids_points[0][1], ids_points[1][1], ids_points[2][1]),
        (ids_points[1][0], ids_points[1][1], ids_points[0][1], ids_points[2][1]),
        (ids_points[2][0], ids_points[2][1], ids_points[0][1], ids_points[1][1]),
    ):
        d = dot(o1 - mid, o2 - mid)
        if d == 0:
            raise GenericityError("moving strand meets another strand")
        if d < 0:
            return mid_id
    raise GenericityError("no central strand among collinear points")


def segment_events(
    c: Configuration, s: int, target: RationalPoint, move_index: int = 0
) -> list[CollinearityEvent]:
    """Collinearity events while strand s moves linearly to `target`.

    For each static pair {a,b} the condition det(z_b - z_a, p(t) - z_a) = 0
    is linear in t, giving at most one exact rational root; roots strictly
    inside (0,1) become events, sorted by time.  The start and end
    configurations must be generic, event times must be pairwise distinct,
    and the mover must not meet a static point.
    """
    p0 = c.point(s)
    d = target - p0
    c.moved(s, target)  # validates the end configuration
    events: list[CollinearityEvent] = []
    others = [i for i in range(1, c.n + 1) if i != s]
    for a, b in combinations(others, 2):
        za, zb = c.point(a), c.point(b)
        v = zb - za
        num = cross(v, p0 - za)  # nonzero: the start configuration is generic
        den = cross(v, d)
        if den == 0:
            continue
        t = -num / den
        if not 0 < t < 1:
            continue
        pos = p0 + d * t
        central = _central_of_collinear(((s, pos), (a, za), (b, zb)))
        events.append(
            CollinearityEvent(move_index, t, GenTriple(c.n, (s, a, b)), central)
        )
    events.sort(key=lambda e: (e.t, e.triple))
    for e1, e2 in zip(events, events[1:]):
        if e1.t == e2.t:
            raise GenericityError(
                f"events {e1.triple} and {e2.triple} coincide at t={e1.t}"
            )
    return events


def configuration_state(c: Configuration) -> OrientationState:
    """The orientation state a configuration realises.

    A compiled word is realisable when classified from the state of its
    program's initial configuration; programs starting at the regular
    configuration realise the all-plus initial state.
    """
    minus = frozenset(
        t
        for t in all_triples(c.n)
        if orientation(c.point(t[0]), c.point(t[1]), c.point(t[2])) < 0
    )
    return OrientationState(c.n, minus)


def boundary_configurations(p: MoveProgram) -> list[Configuration]:
    """Configurations before each move and after the last one."""
    configs = [p.initial]
    cur = p.initial
    for mv in p.moves:
        if isinstance(mv, LinearMove):
            cur = cur.moved(mv.strand, mv.target)
        configs.append(cur)
    return configs


def compile_program(p: MoveProgram) -> CompileOutput:
    """Read the word of a program: concatenated segment events in move order.

    Full twists contribute no letters (concyclic points are never three
    collinear) but add to the twist count; their common-circle precondition
    is checked.  A program marked closed must end exactly where it started.
    """
    cur = p.initial
    events: list[CollinearityEvent] = []
    twist = 0
    for idx, mv in enumerate(p.moves):
        if isinstance(mv, FullTwistMove):
            radii = {pt.norm2() for pt in cur.points}
            if len(radii) != 1:
                raise GenericityError(
                    "full twist requires all strands on a common circle about the origin"
                )
            twist += mv.turns
        elif isinstance(mv, LinearMove):
            events.extend(segment_events(cur, mv.strand, mv.target, move_index=idx))
            cur = cur.moved(mv.strand, mv.target)
        else:
            raise InvalidMove(f"unknown move {mv!r}")
    if p.closed and cur != p.initial:
        raise NotClosed("program marked closed but the final configuration differs")
    word = GWord(p.n, tuple(e.triple for e in events))
    return CompileOutput(word, tuple(events), twist)


def _ray_crossing(u: RationalPoint, v: RationalPoint) -> int:
    """Signed crossing of the directed segment u->v over the ray x>0, y=0."""
    if (u.x == 0 and u.y == 0) or (v.x == 0 and v.y == 0):
        raise DegeneratePath("difference path hits the origin")
    c = cross(u, v)
    if c == 0 and dot(u, v) < 0:
        raise DegeneratePath("difference path passes through the origin")
    if u.y <= 0 < v.y and c > 0:
        return 1
    if v.y <= 0 < u.y and c < 0:
        return -1
    return 0


def geometric_linking(p: MoveProgram, i: int, j: int) -> Fraction:
    """Winding number of the difference z_i - z_j about the origin.

    Computed as signed crossings of the positive x-ray over the piecewise
    linear difference path, plus one turn per full twist (a rigid rotation
    winds every nonzero difference exactly once per turn).  Integer-valued
    for closed programs; counterclockwise is positive.
    """
    if i == j:
        raise BadTriple("linking needs two distinct strands")
    cur = p.initial
    d_prev = cur.point(i) - cur.point(j)
    wn = 0
    for mv in p.moves:
        if isinstance(mv, FullTwistMove):
            wn += mv.turns
            continue
        cur = cur.moved(mv.strand, mv.target)
        d_next = cur.point(i) - cur.point(j)
        wn += _ray_crossing(d_prev, d_next)
        d_prev = d_next
    return Fraction(wn)


_SHRINK_LADDER = tuple(Fraction(1, 4 * 2**k) for k in range(10))
_SHEAR_LADDER = (Fraction(0), Fraction(1, 3), Fraction(-1, 3), Fraction(1, 5), Fraction(-1, 5))


def pure_braid_generator_program(n: int, i: int, j: int) -> MoveProgram:
    """Closed motion linking strands i and j once and nothing else.

    Strand i approaches j along their chord, traverses a small
    counterclockwise parallelogram around j, and retraces its way home; the
    two chord legs cancel, leaving winding +1 about j and 0 about every
    other strand.  The parallelogram walks a fixed (scale, shear) ladder
    until every genericity check passes, so the output is deterministic;
    the shear escapes corner collinearities that hold at every scale.
    """
    if n < 4:
        raise InvalidN(f"strand count must be >= 4, got {n}")
    if i == j:
        raise BadTriple("generator needs two distinct strands")
    cfg = regular_rational_configuration(n)
    pi, pj = cfg.point(i), cfg.point(j)
    last_error: Exception | None = None
    for r in _SHRINK_LADDER:
        for shear in _SHEAR_LADDER:
            u = (pi - pj) * r
            v = perp(u) + u * shear
            entry = pj + u
            waypoints = (entry, pj + v, pj - u, pj - v, entry, pi)
            prog = MoveProgram(cfg, tuple(LinearMove(i, w) for w in waypoints), closed=True)
            try:
                compile_program(prog)
                if all(
                    geometric_linking(prog, i, k) == (1 if k == j else 0)
                    for k in range(1, n + 1)
                    if k != i
                ):
                    return prog
                last_error = GenericityError("loop captured an extra strand")
            except (GenericityError, DegeneratePath) as exc:
                last_error = exc
    raise ConstructionFailure(
        f"no loop shape in the (scale, shear) ladder works: {last_error}"
    )


def full_twist_program(n: int, m: int) -> MoveProgram:
    """All strands of the regular configuration rotate rigidly m full turns."""
    return MoveProgram(
        regular_rational_configuration(n), (FullTwistMove(m),), closed=True
    )


_FAR_LADDER = tuple(2**k for k in range(3, 14))
_FAR_OFFSETS = (1, -1, 2, -3, 5)


def embed_at_infinity(p: MoveProgram) -> MoveProgram:
    """Add a stationary strand n+1 at a far point (R, d) near the x-axis.

    (R, d) walks a fixed ladder of doubling distances and small vertical
    offsets until the augmented program passes every genericity check; the
    offset is needed because a point exactly on the x-axis is collinear
    with any strand pair resting there (the n=4 regular configuration has
    one).  Letters not containing n+1 are exactly the original program's
    letters, in the original order.  Full twists are rejected: the far
    strand leaves the common circle.
    """
    if any(isinstance(mv, FullTwistMove) for mv in p.moves):
        raise InvalidMove("cannot embed a program containing full twists")
    last_error: Exception | None = None
    for R in _FAR_LADDER:
        for d in _FAR_OFFSETS:
            far = RationalPoint(R, d)
            try:
                cfg = Configuration(p.n + 1, p.initial.points + (far,))
                prog = MoveProgram(cfg, p.moves, closed=p.closed)
                compile_program(prog)
                return prog
            except GenericityError as exc:
                last_error = exc
    raise GenericityError(
        f"no far point up to distance {_FAR_LADDER[-1]} gives a generic embedding: {last_error}"
    )


def inverse_program(p: MoveProgram) -> MoveProgram:
    """The same motion traversed backwards."""
    configs = boundary_configurations(p)
    rev: list[Move] = []
    for idx in range(len(p.moves) - 1, -1, -1):
        mv = p.moves[idx]
        if isinstance(mv, FullTwistMove):
            rev.append(FullTwistMove(-mv.turns))
        else:
            rev.append(LinearMove(mv.strand, configs[idx].point(mv.strand)))
    return MoveProgram(configs[-1], tuple(rev), closed=p.closed)


def concat_programs(a: MoveProgram, b: MoveProgram) -> MoveProgram:
    """Run a, then b; b must start where a ends."""
    end = boundary_configurations(a)[-1]
    if end != b.initial:
        raise DimensionMismatch("second program does not start at the first one's end")
    final = boundary_configurations(b)[-1]
    return MoveProgram(a.initial, a.moves + b.moves, closed=final == a.initial)


def program_power(p: MoveProgram, k: int) -> MoveProgram:
    """k-fold repetition of a closed program (inverse for negative k)."""
    if not p.closed:
        raise NotClosed("powers are defined for closed programs")
    if k == 0:
        return MoveProgram(p.initial, (), closed=True)
    base = p if k > 0 else inverse_program(p)
    result = base
    for _ in range(abs(k) - 1):
        result = concat_programs(result, base)
    return result


def random_closed_program(
    n: int, seed: int = 0, wander_moves: int = 3, max_attempts: int = 200
) -> MoveProgram:
    """Seeded random closed program: a few random strand displacements from
    the regular configuration, then return moves back home.

    Targets are drawn from a fine rational grid; candidates violating
    genericity are redrawn, and a blocked return move detours through one
    random waypoint.  Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    cfg = regular_rational_configuration(n)

    def draw_point() -> RationalPoint:
        return RationalPoint(
            Fraction(rng.randint(-2400, 2400), 1200),
            Fraction(rng.randint(-2400, 2400), 1200),
        )

    cur = cfg
    moves: list[Move] = []
    displaced: dict[int, RationalPoint] = {}
    for _ in range(rng.randint(1, wander_moves)):
        for _ in range(max_attempts):
            s = rng.randint(1, n)
            target = draw_point()
            try:
                segment_events(cur, s, target)
            except GenericityError:
                continue
            moves.append(LinearMove(s, target))
            displaced.setdefault(s, cfg.point(s))
            cur = cur.moved(s, target)
            break
        else:
            raise ConstructionFailure("could not draw a generic wander move")
    for s in reversed(list(displaced)):
        home = displaced[s]
        if cur.point(s) == home:
            continue
        try:
            segment_events(cur, s, home)
            moves.append(LinearMove(s, home))
            cur = cur.moved(s, home)
            continue
        except GenericityError:
            pass
        for _ in range(max_attempts):
            via = draw_point()
            try:
                mid = cur.moved(s, via)
                segment_events(cur, s, via)
                segment_events(mid, s, home)
            except GenericityError:
                continue
            moves.extend((LinearMove(s, via), LinearMove(s, home)))
            cur = mid.moved(s, home)
            break
        else:
            raise ConstructionFailure("could not route a strand back home")
    return MoveProgram(cfg, tuple(moves), closed=True)


# ---------------------------------------------------------------------------
# Program JSON format


def _frac_to_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _point_to_json(p: RationalPoint) -> list[str]:
    return [_frac_to_str(p.x), _frac_to_str(p.y)]


def _point_from_json(obj) -> RationalPoint:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ProgramParseError(f"point must be a 2-element list, got {obj!r}")
    try:
        return RationalPoint(Fraction(str(obj[0])), Fraction(str(obj[1])))
    except (ValueError, ZeroDivisionError) as exc:
        raise ProgramParseError(f"bad rational in point {obj!r}: {exc}") from exc


def program_to_json(p: MoveProgram) -> dict:
    moves = []
    for mv in p.moves:
        if isinstance(mv, FullTwistMove):
            moves.append({"type": "twist", "turns": mv.turns})
        else:
            moves.append(
                {"type": "line", "strand": mv.strand, "to": _point_to_json(mv.target)}
            )
    return {
        "n": p.n,
        "initial": [_point_to_json(pt) for pt in p.initial.points],
        "moves": moves,
        "closed": p.closed,
    }


def program_from_json(obj) -> MoveProgram:
    if not isinstance(obj, dict):
        raise ProgramParseError("program JSON must be an object")
    try:
        n = int(obj["n"])
        initial_raw = obj["initial"]
        moves_raw = obj.get("moves", [])
        closed = bool(obj.get("closed", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise ProgramParseError(f"missing or malformed program field: {exc}") from exc
    if not isinstance(initial_raw, list):
        raise ProgramParseError("'initial' must be a list of points")
    points = tuple(_point_from_json(pt) for pt in initial_raw)
    try:
        cfg = Configuration(n, points)
    except (InvalidN, DimensionMismatch, GenericityError) as exc:
        raise ProgramParseError(f"bad initial configuration: {exc}") from exc
    moves: list[Move] = []
    for mv in moves_raw:
        if not isinstance(mv, dict) or "type" not in mv:
            raise ProgramParseError(f"move must be an object with a type, got {mv!r}")
        if mv["type"] == "line":
            try:
                strand = int(mv["strand"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ProgramParseError(f"bad line move {mv!r}") from exc
            if not 1 <= strand <= n:
                raise ProgramParseError(f"strand {strand} out of range 1..{n}")
            moves.append(LinearMove(strand, _point_from_json(mv.get("to"))))
        elif mv["type"] == "twist":
            try:
                moves.append(FullTwistMove(int(mv["turns"])))
            except (KeyError, TypeError, ValueError, InvalidMove) as exc:
                raise ProgramParseError(f"bad twist move {mv!r}") from exc
        else:
            raise ProgramParseError(f"unknown move type {mv['type']!r}")
    return MoveProgram(cfg, tuple(moves), closed=closed)
