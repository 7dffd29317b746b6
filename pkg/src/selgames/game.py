"""Round-based selection games: specs, targets, strategy classes, play.

One offers a move set each round (by index into that round's family);
Two selects one item (single kind) or a nonempty finite subset (finite
kind).  Two wins a play when the target predicate accepts the final
selection sequence.  Strategy classes: full-information One, script-only
(predetermined) One, full-information Two, and Markov Two (latest move
plus round number only).
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from ._bits import is_subset
from .errors import EmptyMove, IllegalMove, UnsoundHint


class Kind(enum.Enum):
    SINGLE = "single"
    FINITE = "finite"


class Player(enum.Enum):
    ONE = "one"
    TWO = "two"


# -- targets -----------------------------------------------------------
#
# A target evaluates an item sequence.  Items are plain ints; cover-style
# targets read them as subset bitmasks.  ``order_insensitive`` promises
# invariance under permutation of the selection; ``set_determined``
# additionally promises duplicate-insensitivity (evaluation depends on
# the selected set only).  Hints must be sound: make_game spot-checks
# them by sampling.


@dataclass(frozen=True)
class CoversFamily:
    """True when the full set is absent and every member has a listed superset."""

    full: int
    members: tuple[int, ...]

    order_insensitive = True
    set_determined = True
    monotone_up = False

    def evaluate(self, selection: Sequence[int]) -> bool:
        if self.full in selection:
            return False
        return all(
            any(is_subset(a, u) for u in selection) for a in self.members
        )


@dataclass(frozen=True)
class MultiCover:
    """Cover with multiplicity: every member inside >= m distinct listed sets."""

    full: int
    members: tuple[int, ...]
    m: int

    order_insensitive = True
    set_determined = True
    monotone_up = False

    def evaluate(self, selection: Sequence[int]) -> bool:
        if self.full in selection:
            return False
        if not all(any(is_subset(a, u) for u in selection) for a in self.members):
            return False
        if not self.members:
            return self.m <= 0
        distinct = set(selection)
        return all(
            sum(1 for u in distinct if is_subset(a, u)) >= self.m
            for a in self.members
        )


@dataclass(frozen=True)
class WindowCover:
    """Cover whose every w-long run of consecutive sets already covers.

    Genuinely order-sensitive; the finite stand-in for cofinite
    ("tail") containment.
    """

    full: int
    members: tuple[int, ...]
    w: int

    order_insensitive = False
    set_determined = False
    monotone_up = False

    def evaluate(self, selection: Sequence[int]) -> bool:
        if self.full in selection:
            return False
        if not all(any(is_subset(a, u) for u in selection) for a in self.members):
            return False
        if not self.members:
            return 0 <= self.w
        n = len(selection)
        for w in range(1, n + 1):
            if w > self.w:
                return False
            if all(
                any(is_subset(a, u) for u in selection[i : i + w])
                for i in range(n - w + 1)
                for a in self.members
            ):
                return True
        return False


@dataclass(frozen=True)
class ExplicitSet:
    """True when the selected set is one of an explicit list of winning sets."""

    winning: tuple[frozenset[int], ...]

    order_insensitive = True
    set_determined = True
    monotone_up = False

    def evaluate(self, selection: Sequence[int]) -> bool:
        return frozenset(selection) in self.winning


@dataclass(frozen=True)
class EverySubsequence:
    """True when every subsequence of length >= m satisfies the inner target."""

    inner: "Target"
    m: int

    monotone_up = False

    @property
    def order_insensitive(self) -> bool:
        return self.inner.order_insensitive

    # Duplicate counts matter (they change which subsequences exist), so
    # never set-determined even over a set-determined inner target.
    set_determined = False

    def evaluate(self, selection: Sequence[int]) -> bool:
        n = len(selection)
        for r in range(self.m, n + 1):
            for idxs in itertools.combinations(range(n), r):
                if not self.inner.evaluate([selection[i] for i in idxs]):
                    return False
        return True


@dataclass(frozen=True)
class Not:
    inner: "Target"

    monotone_up = False

    @property
    def order_insensitive(self) -> bool:
        return self.inner.order_insensitive

    @property
    def set_determined(self) -> bool:
        return self.inner.set_determined

    def evaluate(self, selection: Sequence[int]) -> bool:
        return not self.inner.evaluate(selection)


Target = Union[CoversFamily, MultiCover, WindowCover, ExplicitSet, EverySubsequence, Not]


def evaluate_target(target: Target, selection: Sequence[int]) -> bool:
    return target.evaluate(selection)


# -- game specs --------------------------------------------------------

MoveSet = frozenset  # of items (ints)

HORIZON_CAP = 8


@dataclass(frozen=True)
class GameSpec:
    """A validated finite-horizon selection game.

    ``moves[r]`` is round r's family of move sets; One's move is an index
    into it (histories stay finite and hashable even when families repeat
    sets).  ``target`` is Two's winning predicate on the final selection
    sequence.
    """

    moves: tuple[tuple[MoveSet, ...], ...]
    horizon: int
    kind: Kind
    target: Target
    universe: frozenset[int]

    def family(self, r: int) -> tuple[MoveSet, ...]:
        return self.moves[r]

    def move_set(self, r: int, index: int) -> MoveSet:
        return self.moves[r][index]

    def truncated(self, h: int) -> "GameSpec":
        """The same game stopped after ``h`` rounds."""
        if not 0 <= h <= self.horizon:
            raise ValueError("bad truncation horizon")
        return GameSpec(
            moves=self.moves[:h],
            horizon=h,
            kind=self.kind,
            target=self.target,
            universe=self.universe,
        )


def _sample_selection(game: GameSpec, rng: random.Random) -> list:
    sel = []
    for r in range(game.horizon):
        ms = rng.choice(game.moves[r])
        if game.kind is Kind.SINGLE:
            sel.append(rng.choice(sorted(ms)))
        else:
            k = rng.randint(1, len(ms))
            sel.append(frozenset(rng.sample(sorted(ms), k)))
    return sel


def flatten_selections(kind: Kind, selections: Sequence) -> tuple[int, ...]:
    """Item sequence a target sees: finite-kind subsets flatten in item order."""
    if kind is Kind.SINGLE:
        return tuple(selections)
    out: list[int] = []
    for s in selections:
        out.extend(sorted(s))
    return tuple(out)


def make_game(
    moves: Sequence[Sequence[MoveSet]],
    horizon: int,
    kind: Kind,
    target: Target,
    hint_samples: int = 64,
) -> GameSpec:
    """Validate structure and spot-check the target's declared hints."""
    if not 0 <= horizon <= HORIZON_CAP:
        raise ValueError(f"horizon outside 0..{HORIZON_CAP}")
    if len(moves) != horizon:
        raise ValueError("moves must list one family per round")
    packed = []
    universe: set[int] = set()
    for r, family in enumerate(moves):
        if not family:
            raise EmptyMove(f"round {r} has no move sets")
        fam = []
        for ms in family:
            fs = frozenset(ms)
            if not fs:
                raise EmptyMove(f"round {r} contains an empty move set")
            fam.append(fs)
            universe.update(fs)
        packed.append(tuple(fam))
    game = GameSpec(
        moves=tuple(packed),
        horizon=horizon,
        kind=kind,
        target=target,
        universe=frozenset(universe),
    )
    rng = random.Random(0)
    for _ in range(min(hint_samples, 64)):
        if game.horizon == 0:
            break
        sel = _sample_selection(game, rng)
        flat = flatten_selections(kind, sel)
        base = target.evaluate(flat)
        if target.order_insensitive:
            perm = list(flat)
            rng.shuffle(perm)
            if target.evaluate(perm) != base:
                raise UnsoundHint("order_insensitive falsified by permutation")
        if target.set_determined:
            if flat and target.evaluate(list(flat) + [flat[0]]) != base:
                raise UnsoundHint("set_determined falsified by duplication")
        if target.monotone_up and base:
            extra = rng.choice(sorted(game.universe)) if game.universe else None
            if extra is not None and not target.evaluate(list(flat) + [extra]):
                raise UnsoundHint("monotone_up falsified by extension")
    return game


# -- strategies --------------------------------------------------------


@dataclass(frozen=True)
class PreOne:
    """One's script: a move index per round, blind to Two's replies."""

    indices: tuple[int, ...]


@dataclass(frozen=True)
class FullOne:
    """One's full-information strategy: history of Two's selections -> index."""

    table: Mapping[tuple, int]


@dataclass(frozen=True)
class FullTwo:
    """Two's full-information strategy: One's index history (incl. current) -> item."""

    table: Mapping[tuple, object]


@dataclass(frozen=True)
class MarkovTwo:
    """Two's Markov strategy: (One's current move index, round) -> item."""

    table: Mapping[tuple, object]


StrategyOne = Union[PreOne, FullOne]
StrategyTwo = Union[FullTwo, MarkovTwo]


def one_move_index(one: Union[StrategyOne, Sequence[int]], history: tuple, r: int) -> int:
    if isinstance(one, PreOne):
        if r >= len(one.indices):
            raise IllegalMove(r, "predetermined script too short")
        return one.indices[r]
    if isinstance(one, FullOne):
        if history not in one.table:
            raise IllegalMove(r, "strategy table missing a reachable history")
        return one.table[history]
    return one[r]


def two_selection(
    two: Union[StrategyTwo, Sequence],
    idx_history: tuple[int, ...],
    r: int,
):
    if isinstance(two, FullTwo):
        if idx_history not in two.table:
            raise IllegalMove(r, "strategy table missing a reachable history")
        return two.table[idx_history]
    if isinstance(two, MarkovTwo):
        key = (idx_history[-1], r)
        if key not in two.table:
            raise IllegalMove(r, "Markov table missing a cell")
        return two.table[key]
    return two[r]


@dataclass(frozen=True)
class PlayRecord:
    one_moves: tuple[int, ...]
    two_selections: tuple
    winner: Player


def play(
    game: GameSpec,
    one: Union[StrategyOne, Sequence[int]],
    two: Union[StrategyTwo, Sequence],
) -> PlayRecord:
    """Run both strategies to completion; deterministic transcript."""
    idx_hist: tuple[int, ...] = ()
    sel_hist: tuple = ()
    for r in range(game.horizon):
        i = one_move_index(one, sel_hist, r)
        if not 0 <= i < len(game.moves[r]):
            raise IllegalMove(r, f"move index {i} out of range")
        ms = game.moves[r][i]
        idx_hist = idx_hist + (i,)
        x = two_selection(two, idx_hist, r)
        if game.kind is Kind.SINGLE:
            if x not in ms:
                raise IllegalMove(r, f"selection {x!r} outside the offered move set")
        else:
            x = frozenset(x)
            if not x or not x <= ms:
                raise IllegalMove(r, "selection not a nonempty subset of the move set")
        sel_hist = sel_hist + (x,)
    flat = flatten_selections(game.kind, sel_hist)
    winner = Player.TWO if game.target.evaluate(flat) else Player.ONE
    return PlayRecord(one_moves=idx_hist, two_selections=sel_hist, winner=winner)


def is_one_play(game: GameSpec, one: Union[StrategyOne, Sequence[int]], selections: Sequence) -> bool:
    """Whether a selection sequence can arise against this One strategy."""
    hist: tuple = ()
    for r, x in enumerate(selections):
        try:
            i = one_move_index(one, hist, r)
        except IllegalMove:
            return False
        if not 0 <= i < len(game.moves[r]):
            return False
        ms = game.moves[r][i]
        if game.kind is Kind.SINGLE:
            if x not in ms:
                return False
        else:
            if not x or not frozenset(x) <= ms:
                return False
        hist = hist + (x,)
    return True


def embed_two_into_finite(strategy: Union[FullTwo, MarkovTwo]):
    """Selection-singleton embedding of a single-kind Two strategy."""
    wrapped = {k: frozenset([v]) for k, v in strategy.table.items()}
    return type(strategy)(table=wrapped)


def pre_as_full_one(game: GameSpec, pre: PreOne) -> FullOne:
    """Constant-in-history embedding of a script into the full class."""
    table: dict = {}

    def walk(hist: tuple, r: int) -> None:
        if r == game.horizon:
            return
        table[hist] = pre.indices[r]
        ms = game.moves[r][pre.indices[r]]
        if game.kind is Kind.SINGLE:
            nexts = sorted(ms)
        else:
            nexts = [
                frozenset(c)
                for k in range(1, len(ms) + 1)
                for c in itertools.combinations(sorted(ms), k)
            ]
        for x in nexts:
            walk(hist + (x,), r + 1)

    walk((), 0)
    return FullOne(table=table)


def markov_as_full_two(game: GameSpec, markov: MarkovTwo) -> FullTwo:
    """History-blind embedding of a Markov table into the full class."""
    table: dict = {}

    def walk(idx_hist: tuple, r: int) -> None:
        if r == game.horizon:
            return
        for j in range(len(game.moves[r])):
            table[idx_hist + (j,)] = markov.table[(j, r)]
            walk(idx_hist + (j,), r + 1)

    walk((), 0)
    return FullTwo(table=table)
