"""Reflections, selection bases, transversal enumeration, duality checks.

A family R of nonempty sets is a reflection of a family F when the
ranges of choice functions on R all belong to F and form a selection
basis for it (every member of F contains such a range).  Reflection is
the bridge between a game played over F and the game played over R with
the negated target: the module verifies concrete instances of that
duality with the exact solver, at both full and limited information.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ChoiceSpaceTooLarge
from .game import GameSpec, Not, Player
from .solver import find_markov_two, find_predetermined_one, solve

Family = Sequence[frozenset]

CHOICE_CAP = 10**6


def is_selection_basis(candidate: Family, fam: Family) -> bool:
    """candidate sits inside fam and undercuts every member of fam."""
    fam_set = set(map(frozenset, fam))
    cand = [frozenset(c) for c in candidate]
    if any(c not in fam_set for c in cand):
        return False
    return all(any(c <= a for c in cand) for a in fam_set)


def _choice_space_size(refl: Family) -> int:
    size = 1
    for r in refl:
        size *= len(r)
        if size > CHOICE_CAP:
            raise ChoiceSpaceTooLarge(
                f"transversal space exceeds {CHOICE_CAP}"
            )
    return size


def transversals(refl: Family):
    """All choice tuples on the family, lazily, in sorted item order."""
    yield from itertools.product(*(sorted(r) for r in refl))


def range_inside_exists(refl: Family, target: frozenset) -> bool:
    """Some transversal range inside ``target`` (criterion: every member meets it)."""
    return all(r & target for r in refl)


def range_inside_exists_by_enumeration(refl: Family, target: frozenset) -> bool:
    """Same question answered by literal transversal enumeration."""
    _choice_space_size(refl)
    return any(frozenset(t) <= target for t in transversals(refl))


@dataclass(frozen=True)
class ReflectionReport:
    is_reflection: bool
    bad_transversal: Optional[tuple] = None
    uncovered: Optional[frozenset] = None


def is_reflection(refl: Family, fam: Family) -> ReflectionReport:
    """Check both reflection conditions, with early-exit witnesses.

    bad_transversal: the first choice tuple (in enumeration order) whose
    range is not a member of fam.  uncovered: the first member of fam
    containing no transversal range.
    """
    refl = [frozenset(r) for r in refl]
    if any(not r for r in refl):
        raise ValueError("reflection members must be nonempty")
    _choice_space_size(refl)
    fam_sets = [frozenset(a) for a in fam]
    fam_lookup = set(fam_sets)
    bad = None
    for t in transversals(refl):
        if frozenset(t) not in fam_lookup:
            bad = t
            break
    uncovered = None
    for a in fam_sets:
        if not range_inside_exists(refl, a):
            uncovered = a
            break
    return ReflectionReport(
        is_reflection=bad is None and uncovered is None,
        bad_transversal=bad,
        uncovered=uncovered,
    )


@dataclass(frozen=True)
class DualityReport:
    """Empirical duality verdict between a game and its mirrored game.

    The first game runs over the plain family with target T; the second
    over the reflecting family with target Not(T).  Strategic clauses
    compare full-information winners; the limited clause compares One's
    predetermined scripts against Two's Markov tables crosswise.
    """

    one_fam_iff_two_refl: bool
    one_refl_iff_two_fam: bool
    pre_fam_iff_markov_refl: bool
    pre_refl_iff_markov_fam: bool
    all_hold: bool
    facts: dict


def check_duality(game_over_fam: GameSpec, game_over_refl: GameSpec) -> DualityReport:
    """Solve and synthesize on both sides; compare per the duality clauses.

    Requires equal horizons and the mirrored target.  Markov synthesis
    may raise BudgetExceeded; callers report that separately from a
    negative answer.
    """
    if game_over_fam.horizon != game_over_refl.horizon:
        raise ValueError("games must share a horizon")
    if game_over_refl.target != Not(game_over_fam.target):
        raise ValueError("mirror game must carry the negated target")
    one_fam = solve(game_over_fam).winner is Player.ONE
    one_refl = solve(game_over_refl).winner is Player.ONE
    pre_fam = find_predetermined_one(game_over_fam) is not None
    pre_refl = find_predetermined_one(game_over_refl) is not None
    markov_fam = find_markov_two(game_over_fam) is not None
    markov_refl = find_markov_two(game_over_refl) is not None
    c1 = one_fam == (not one_refl)
    c2 = one_refl == (not one_fam)
    c3 = pre_fam == markov_refl
    c4 = pre_refl == markov_fam
    return DualityReport(
        one_fam_iff_two_refl=c1,
        one_refl_iff_two_fam=c2,
        pre_fam_iff_markov_refl=c3,
        pre_refl_iff_markov_fam=c4,
        all_hold=c1 and c2 and c3 and c4,
        facts={
            "one_wins_family_game": one_fam,
            "one_wins_reflection_game": one_refl,
            "predetermined_family_game": pre_fam,
            "predetermined_reflection_game": pre_refl,
            "markov_family_game": markov_fam,
            "markov_reflection_game": markov_refl,
        },
    )
