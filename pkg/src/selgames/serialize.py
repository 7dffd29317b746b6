"""JSON codecs for games, targets, strategies, packs, and order pairs.

All emitters produce canonical form: sorted object keys, items sorted
inside subsets, two-space indent, trailing newline.  Reports built from
these codecs are byte-stable across runs.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import ScenarioFormatError
from .game import (
    CoversFamily,
    EverySubsequence,
    ExplicitSet,
    FullOne,
    FullTwo,
    GameSpec,
    Kind,
    MarkovTwo,
    MultiCover,
    Not,
    PreOne,
    Target,
    WindowCover,
    make_game,
)
from .orders import RelPair, inclusion_pair, make_rel_pair
from .transforms import TranslationPack


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- targets -------------------------------------------------------------


def target_to_json(target: Target) -> dict:
    if isinstance(target, CoversFamily):
        return {
            "type": "covers-family",
            "full": target.full,
            "members": sorted(target.members),
        }
    if isinstance(target, MultiCover):
        return {
            "type": "multi-cover",
            "full": target.full,
            "members": sorted(target.members),
            "m": target.m,
        }
    if isinstance(target, WindowCover):
        return {
            "type": "window-cover",
            "full": target.full,
            "members": sorted(target.members),
            "w": target.w,
        }
    if isinstance(target, ExplicitSet):
        return {
            "type": "explicit-set",
            "winning": sorted(sorted(w) for w in target.winning),
        }
    if isinstance(target, EverySubsequence):
        return {
            "type": "every-subsequence",
            "inner": target_to_json(target.inner),
            "m": target.m,
        }
    if isinstance(target, Not):
        return {"type": "not", "inner": target_to_json(target.inner)}
    raise ScenarioFormatError(f"unknown target {target!r}")


def target_from_json(data: Mapping) -> Target:
    try:
        kind = data["type"]
        if kind == "covers-family":
            return CoversFamily(full=data["full"], members=tuple(data["members"]))
        if kind == "multi-cover":
            return MultiCover(
                full=data["full"], members=tuple(data["members"]), m=data["m"]
            )
        if kind == "window-cover":
            return WindowCover(
                full=data["full"], members=tuple(data["members"]), w=data["w"]
            )
        if kind == "explicit-set":
            return ExplicitSet(
                winning=tuple(frozenset(w) for w in data["winning"])
            )
        if kind == "every-subsequence":
            return EverySubsequence(
                inner=target_from_json(data["inner"]), m=data["m"]
            )
        if kind == "not":
            return Not(inner=target_from_json(data["inner"]))
    except (KeyError, TypeError) as exc:
        raise ScenarioFormatError(f"bad target record: {exc}") from exc
    raise ScenarioFormatError(f"unknown target type {data.get('type')!r}")


# -- games ---------------------------------------------------------------


def game_to_json(game: GameSpec) -> dict:
    return {
        "horizon": game.horizon,
        "kind": game.kind.value,
        "moves": [
            [sorted(ms) for ms in family] for family in game.moves
        ],
        "target": target_to_json(game.target),
    }


def game_from_json(data: Mapping) -> GameSpec:
    try:
        return make_game(
            moves=[
                [frozenset(ms) for ms in family] for family in data["moves"]
            ],
            horizon=data["horizon"],
            kind=Kind(data["kind"]),
            target=target_from_json(data["target"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"bad game record: {exc}") from exc


# -- strategies ----------------------------------------------------------


def _item_to_json(item) -> Any:
    if isinstance(item, frozenset):
        return sorted(item)
    return item


def _item_from_json(value, kind: Kind):
    if kind is Kind.FINITE:
        return frozenset(value)
    return value


def strategy_to_json(strategy, kind: Kind = Kind.SINGLE) -> dict:
    if isinstance(strategy, PreOne):
        return {"class": "pre-one", "kind": kind.value, "indices": list(strategy.indices)}
    if isinstance(strategy, FullOne):
        rows = sorted(
            ({"history": [_item_to_json(x) for x in hist], "move": move}
             for hist, move in strategy.table.items()),
            key=lambda r: json.dumps(r, sort_keys=True),
        )
        return {"class": "full-one", "kind": kind.value, "table": rows}
    if isinstance(strategy, FullTwo):
        rows = sorted(
            ({"history": list(hist), "item": _item_to_json(item)}
             for hist, item in strategy.table.items()),
            key=lambda r: json.dumps(r, sort_keys=True),
        )
        return {"class": "full-two", "kind": kind.value, "table": rows}
    if isinstance(strategy, MarkovTwo):
        rows = sorted(
            ({"move": j, "round": r, "item": _item_to_json(item)}
             for (j, r), item in strategy.table.items()),
            key=lambda r: (r["round"], r["move"]),
        )
        return {"class": "markov-two", "kind": kind.value, "table": rows}
    raise ScenarioFormatError(f"unknown strategy {strategy!r}")


def strategy_from_json(data: Mapping):
    try:
        cls = data["class"]
        kind = Kind(data.get("kind", "single"))
        if cls == "pre-one":
            return PreOne(indices=tuple(data["indices"]))
        if cls == "full-one":
            return FullOne(
                table={
                    tuple(_item_from_json(x, kind) for x in row["history"]): row["move"]
                    for row in data["table"]
                }
            )
        if cls == "full-two":
            return FullTwo(
                table={
                    tuple(row["history"]): _item_from_json(row["item"], kind)
                    for row in data["table"]
                }
            )
        if cls == "markov-two":
            return MarkovTwo(
                table={
                    (row["move"], row["round"]): _item_from_json(row["item"], kind)
                    for row in data["table"]
                }
            )
    except (KeyError, TypeError) as exc:
        raise ScenarioFormatError(f"bad strategy record: {exc}") from exc
    raise ScenarioFormatError(f"unknown strategy class {data.get('class')!r}")


# -- translation packs ----------------------------------------------------


def pack_to_json(pack: TranslationPack) -> dict:
    return {
        "t_one": [sorted([j, i] for j, i in m.items()) for m in pack.t_one],
        "t_two": [
            sorted([x, j, y] for (x, j), y in m.items()) for m in pack.t_two
        ],
    }


def pack_from_json(data: Mapping) -> TranslationPack:
    try:
        t_one = tuple({j: i for j, i in rows} for rows in data["t_one"])
        t_two = tuple({(x, j): y for x, j, y in rows} for rows in data["t_two"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"bad pack record: {exc}") from exc
    return TranslationPack(t_one=t_one, t_two=t_two)


# -- order pairs ----------------------------------------------------------


def rel_pair_to_json(pair: RelPair) -> dict:
    """Emit in the explicit index form (carrier labels do not survive)."""
    n = len(pair.carrier)
    return {
        "type": "explicit",
        "size": n,
        "leq_pairs": sorted(
            [i, j] for i in range(n) for j in range(n) if pair.leq(i, j)
        ),
        "a": list(pair.sub_a),
        "b": list(pair.sub_b),
    }


def rel_pair_from_json(data: Mapping) -> RelPair:
    try:
        if data["type"] == "inclusion":
            from ._bits import mask_of

            return inclusion_pair(
                [mask_of(s) for s in data["a"]],
                [mask_of(s) for s in data["b"]],
            )
        if data["type"] == "explicit":
            carrier = list(range(data["size"]))
            pairs = {(i, j) for i, j in data["leq_pairs"]}
            return make_rel_pair(
                carrier,
                lambda x, y: (x, y) in pairs,
                sub_a=data["a"],
                sub_b=data["b"],
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"bad order-pair record: {exc}") from exc
    raise ScenarioFormatError(f"unknown pair type {data.get('type')!r}")
