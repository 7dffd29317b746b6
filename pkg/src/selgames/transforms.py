"""Executable strategy combinators between single-selection games.

A TranslationPack carries, per round, a map pulling the target game's
moves back to source moves and a map pushing source selections forward
to target selections.  Two axioms make the pack usable: legality
(pushed selections belong to the move they answer) and preservation
(pushed selection sequences land in the target game's winning predicate
whenever the originals land in the source's).  Under those axioms four transfers exist: Markov Two and full
Two push forward, full One and predetermined One pull back.  Each
transfer here is built exactly as in its existence proof, then
re-verified exhaustively before being returned.

The module also hosts the two strengthening constructions for One over
filter-base move families: the full-information one (winning uniformly
over a horizon interval upgrades to winning the every-subsequence
target) and the predetermined one (running intersections via an ideal
base upgrade a cover script to a window-cover script).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from ._bits import is_subset
from .errors import (
    AxiomsFail,
    ImageNotMove,
    InputNotWinning,
    NotFilterBase,
    NotIdealBase,
    NotUniformlyWinning,
    TranslationFailed,
    WitnessMissing,
)
from .game import (
    FullOne,
    FullTwo,
    GameSpec,
    Kind,
    MarkovTwo,
    PreOne,
    is_one_play,
    one_move_index,
)
from .ground import SetFamily
from .solver import is_winning, one_side_plays


@dataclass(frozen=True)
class TranslationPack:
    """Round-indexed move pullbacks and selection pushforwards.

    t_one[r] maps target move indices to source move indices; t_two[r]
    maps (source item, target move index) to a target item.
    """

    t_one: tuple[Mapping[int, int], ...]
    t_two: tuple[Mapping[tuple[int, int], int], ...]


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    failure: Optional[tuple] = None  # ("legality"|"preservation", witness)

    def __bool__(self) -> bool:
        return self.ok


def _require_single(*games: GameSpec) -> None:
    for g in games:
        if g.kind is not Kind.SINGLE:
            raise ValueError("translation machinery covers single-selection games")


def check_translation_axioms(
    pack: TranslationPack, src: GameSpec, dst: GameSpec
) -> AxiomCheck:
    """Exhaustively check legality and preservation for the pack."""
    _require_single(src, dst)
    if src.horizon != dst.horizon:
        raise ValueError("games must share a horizon")
    h = src.horizon
    if len(pack.t_one) != h or len(pack.t_two) != h:
        raise ValueError("pack must carry one map pair per round")
    for r in range(h):
        for j in range(len(dst.moves[r])):
            if j not in pack.t_one[r]:
                return AxiomCheck(False, ("legality", (r, j, None)))
            i = pack.t_one[r][j]
            if not 0 <= i < len(src.moves[r]):
                return AxiomCheck(False, ("legality", (r, j, None)))
            for x in sorted(src.moves[r][i]):
                y = pack.t_two[r].get((x, j))
                if y is None or y not in dst.moves[r][j]:
                    return AxiomCheck(False, ("legality", (r, j, x)))
    index_tuples = itertools.product(*(range(len(dst.moves[r])) for r in range(h)))
    for js in index_tuples:
        pulled = [src.moves[r][pack.t_one[r][js[r]]] for r in range(h)]
        for xs in itertools.product(*(sorted(ms) for ms in pulled)):
            if src.target.evaluate(xs):
                ys = tuple(pack.t_two[r][(xs[r], js[r])] for r in range(h))
                if not dst.target.evaluate(ys):
                    return AxiomCheck(False, ("preservation", (js, xs)))
    return AxiomCheck(True)


class Direction(enum.Enum):
    MARKOV_TWO = "markov-two"
    FULL_TWO = "full-two"
    FULL_ONE_PULLBACK = "full-one-pullback"
    PRE_ONE_PULLBACK = "pre-one-pullback"


def apply_translation(
    pack: TranslationPack,
    src: GameSpec,
    dst: GameSpec,
    direction: Direction,
    strategy: Union[MarkovTwo, FullTwo, FullOne, PreOne],
):
    """Transfer a verified winning strategy along the pack.

    Markov/full Two strategies for the source game become strategies of
    the same class for the target game; full/predetermined One
    strategies for the target game pull back to the source game.  The
    output is rebuilt exactly per the corresponding existence proof and
    re-verified before being returned.
    """
    check = check_translation_axioms(pack, src, dst)
    if not check:
        raise AxiomsFail(f"pack violates {check.failure[0]} at {check.failure[1]}")
    h = src.horizon

    if direction is Direction.MARKOV_TWO:
        if not isinstance(strategy, MarkovTwo):
            raise TypeError("expected a MarkovTwo for the source game")
        if not is_winning(src, strategy):
            raise InputNotWinning("input Markov strategy loses the source game")
        table = {}
        for r in range(h):
            for j in range(len(dst.moves[r])):
                i = pack.t_one[r][j]
                x = strategy.table[(i, r)]
                table[(j, r)] = pack.t_two[r][(x, j)]
        out: object = MarkovTwo(table=table)
        target_game = dst

    elif direction is Direction.FULL_TWO:
        if not isinstance(strategy, FullTwo):
            raise TypeError("expected a FullTwo for the source game")
        if not is_winning(src, strategy):
            raise InputNotWinning("input strategy loses the source game")
        table = {}
        for r in range(h):
            for js in itertools.product(
                *(range(len(dst.moves[q])) for q in range(r + 1))
            ):
                pulled = tuple(pack.t_one[q][js[q]] for q in range(r + 1))
                x = strategy.table[pulled]
                table[js] = pack.t_two[r][(x, js[r])]
        out = FullTwo(table=table)
        target_game = dst

    elif direction is Direction.FULL_ONE_PULLBACK:
        if not isinstance(strategy, FullOne):
            raise TypeError("expected a FullOne for the target game")
        if not is_winning(dst, strategy):
            raise InputNotWinning("input strategy loses the target game")
        table = {}

        def walk(r: int, src_hist: tuple, dst_hist: tuple) -> None:
            if r == h:
                return
            b = one_move_index(strategy, dst_hist, r)
            a = pack.t_one[r][b]
            table[src_hist] = a
            for x in sorted(src.moves[r][a]):
                y = pack.t_two[r][(x, b)]
                walk(r + 1, src_hist + (x,), dst_hist + (y,))

        walk(0, (), ())
        out = FullOne(table=table)
        target_game = src

    elif direction is Direction.PRE_ONE_PULLBACK:
        if not isinstance(strategy, PreOne):
            raise TypeError("expected a PreOne for the target game")
        if not is_winning(dst, strategy):
            raise InputNotWinning("input script loses the target game")
        out = PreOne(
            indices=tuple(pack.t_one[r][strategy.indices[r]] for r in range(h))
        )
        target_game = src

    else:
        raise ValueError(f"unknown direction {direction!r}")

    if not is_winning(target_game, out):
        raise TranslationFailed(f"transferred strategy loses ({direction.value})")
    return out


def lift_item_map(
    phi: Callable[[int, int], int], src: GameSpec, dst: GameSpec
) -> TranslationPack:
    """Build a pack from a pointwise item map (target item, round) -> source item.

    The image of each target move set must equal some source move set of
    the same round (least matching index is used); the selection
    pushforward takes the least preimage in item order.
    """
    _require_single(src, dst)
    if src.horizon != dst.horizon:
        raise ValueError("games must share a horizon")
    t_one = []
    t_two = []
    for r in range(dst.horizon):
        one_map: dict[int, int] = {}
        two_map: dict[tuple[int, int], int] = {}
        for j, move in enumerate(dst.moves[r]):
            image = frozenset(phi(y, r) for y in move)
            found = None
            for i, candidate in enumerate(src.moves[r]):
                if candidate == image:
                    found = i
                    break
            if found is None:
                raise ImageNotMove(
                    f"round {r}: image of target move {j} is not a source move set"
                )
            one_map[j] = found
            for x in sorted(image):
                two_map[(x, j)] = min(y for y in move if phi(y, r) == x)
            filler = min(move)
            for x in sorted(src.universe - image):
                two_map[(x, j)] = filler
        t_one.append(one_map)
        t_two.append(two_map)
    return TranslationPack(t_one=tuple(t_one), t_two=tuple(t_two))


# -- strengthening over filter bases ------------------------------------


def is_filter_base(family: Sequence[frozenset]) -> bool:
    """Every two move sets contain a member move set inside their intersection."""
    return all(
        any(member <= a & b for member in family)
        for a, b in itertools.combinations_with_replacement(family, 2)
    )


def _round_constant_family(game: GameSpec) -> tuple[frozenset, ...]:
    if game.horizon == 0:
        raise ValueError("game has no rounds")
    family = game.moves[0]
    if any(game.moves[r] != family for r in range(game.horizon)):
        raise ValueError("strengthening needs a round-constant move family")
    return family


def strengthen_one_for_subsequences(
    s: FullOne, game: GameSpec, low: int
) -> FullOne:
    """Upgrade a uniformly winning One strategy to a subsequence-proof one.

    ``s`` must win the game at every horizon in [low, game.horizon] (the
    same table, truncated).  The returned strategy answers each history
    with the least move set contained in the intersection of every move
    ``s`` would have offered along every subsequence of that history; a
    filter-base move family guarantees such a move exists.  Consequently
    every subsequence of every play of the result is itself a play of
    ``s``, so every subsequence of length >= low of the final selection
    satisfies whatever the uniform wins force on full selections.
    """
    _require_single(game)
    family = _round_constant_family(game)
    if not is_filter_base(family):
        raise NotFilterBase("move family is not a filter base")
    if not 0 <= low <= game.horizon:
        raise ValueError("low outside 0..horizon")
    for h in range(low, game.horizon + 1):
        if not is_winning(game.truncated(h), s):
            raise NotUniformlyWinning(h)

    table: dict = {}

    def sigma_index(hist: tuple) -> int:
        if not hist:
            return one_move_index(s, (), 0)
        needed = None
        for k in range(len(hist) + 1):
            for sub in itertools.combinations(hist, k):
                ms = family[one_move_index(s, sub, len(sub))]
                needed = ms if needed is None else needed & ms
        for idx, member in enumerate(family):
            if member <= needed:
                return idx
        raise NotFilterBase("no move set inside the required intersection")

    def walk(hist: tuple) -> None:
        if len(hist) == game.horizon:
            return
        idx = sigma_index(hist)
        table[hist] = idx
        for x in sorted(family[idx]):
            walk(hist + (x,))

    walk(())
    return FullOne(table=table)


def subsequences_are_plays(game: GameSpec, s: FullOne, sigma: FullOne) -> bool:
    """Structural guarantee behind the strengthening, checked literally.

    For every play of ``sigma`` and every index subsequence of its
    selection sequence, the induced sequence is a play of ``s``.
    """
    for rec in one_side_plays(game, sigma):
        sel = rec.two_selections
        n = len(sel)
        for k in range(n + 1):
            for idxs in itertools.combinations(range(n), k):
                if not is_one_play(game, s, tuple(sel[i] for i in idxs)):
                    return False
    return True


def intersect_predetermined(
    s: PreOne, fam: SetFamily, require_ideal_base: bool = False
) -> PreOne:
    """Running-union upgrade of a predetermined script over an ideal base.

    Round k of the result names the least family member containing the
    union of the script's first k+1 picks.  If the script wins the plain
    cover target at every horizon in [m, n], the result wins the window
    cover target with width m at horizon n: any m consecutive replies to
    the result, re-indexed, form a legal counter-play against the script
    at horizon m.

    An ideal base always supplies the running-union witnesses; failures
    surface lazily as WitnessMissing at the first round that needs a
    witness the family lacks.  Pass ``require_ideal_base`` to reject
    deficient families up front instead.
    """
    if require_ideal_base and not fam.ideal_base:
        raise NotIdealBase(f"family {fam.name!r} is not an ideal base")
    out = []
    union = 0
    for k, i in enumerate(s.indices):
        if not 0 <= i < len(fam.members):
            raise ValueError(f"script index {i} outside the family")
        union |= fam.members[i]
        witness = None
        for j, member in enumerate(fam.members):
            if is_subset(union, member):
                witness = j
                break
        if witness is None:
            raise WitnessMissing(f"no member contains the union at round {k}")
        out.append(witness)
    return PreOne(indices=tuple(out))


def blocks_are_counter_plays(
    sigma_game: GameSpec,
    sigma: PreOne,
    s: PreOne,
    fam: SetFamily,
    width: int,
) -> bool:
    """Block decomposition behind the window upgrade, checked on transcripts.

    Every contiguous width-long block of every counter-play against the
    upgraded script, re-indexed from zero, must be a legal counter-play
    against the original script: reply i of the block contains the
    script's round-i pick.
    """
    if width < 1:
        return True
    for rec in one_side_plays(sigma_game, sigma):
        sel = rec.two_selections
        for start in range(len(sel) - width + 1):
            for i in range(width):
                if not is_subset(fam.members[s.indices[i]], sel[start + i]):
                    return False
    return True
