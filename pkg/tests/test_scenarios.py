import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from selgames import (
    Kind,
    Player,
    build_game,
    build_point_open,
    build_rothberger,
    discrete_space,
    emit_scenario,
    find_markov_two,
    find_predetermined_one,
    indiscrete_space,
    parse_scenario,
    singleton_family,
    solve,
    verify,
)
from selgames.errors import (
    NoCovers,
    NoNeighborhood,
    ScenarioFormatError,
)
from selgames.game import CoversFamily, Not
from selgames.ground import SetFamily, family_of
from selgames.scenarios import (
    CORPUS_EXPECTATIONS,
    Scenario,
    abstract_scenario,
    corpus,
    scenario_from_json,
    scenario_to_json,
)
from selgames.serialize import (
    game_from_json,
    game_to_json,
    pack_from_json,
    pack_to_json,
    strategy_from_json,
    strategy_to_json,
)


class TestBuilders:
    def test_point_open_move_sets_exclude_universe(self, d2, singles2):
        g = build_point_open(d2, singles2, singles2, 1)
        assert all(d2.full not in ms for ms in g.moves[0])
        assert g.target == Not(CoversFamily(full=d2.full, members=(1, 2)))

    def test_no_neighborhood_on_indiscrete(self):
        space = indiscrete_space(2)
        fam = SetFamily.build(space, [1])
        with pytest.raises(NoNeighborhood):
            build_point_open(space, fam, fam, 1)

    def test_empty_second_family_never_lets_two_win(self, d2, singles2):
        empty = SetFamily.build(d2, [])
        for h in (0, 1, 2):
            g = build_point_open(d2, singles2, empty, h)
            assert solve(g).winner is Player.ONE

    def test_rothberger_no_covers(self, d2):
        fam = family_of(d2, [{0}, {1}, {0, 1}])
        with pytest.raises(NoCovers):
            build_rothberger(d2, fam, fam, 2)

    def test_rothberger_values(self, d2, singles2):
        assert solve(build_rothberger(d2, singles2, singles2, 2)).winner is Player.TWO
        assert solve(build_rothberger(d2, singles2, singles2, 1)).winner is Player.ONE

    def test_point_open_targets_cross_check_classify(self, d3, singles3):
        # the target's own evaluation must agree with the space-aware
        # cover classifier on every legal selection
        from itertools import product

        from selgames import classify_cover

        g = build_point_open(d3, singles3, singles3, 2)
        for moves in product(range(len(g.moves[0])), repeat=2):
            for sel in product(*(sorted(g.moves[r][moves[r]]) for r in range(2))):
                target_val = g.target.inner.evaluate(sel)
                verdict = classify_cover(d3, singles3, list(sel))
                assert target_val == verdict.covers_all


class TestScenarioFiles:
    def test_round_trip_corpus(self):
        for sc in corpus():
            text = emit_scenario(sc)
            assert parse_scenario(text) == sc
            assert emit_scenario(parse_scenario(text)) == text

    def test_round_trip_random(self):
        rng = random.Random(9)
        for k in range(30):
            size = rng.randint(2, 4)
            full = (1 << size) - 1
            sc = Scenario(
                name=f"rand-{k}",
                space_size=size,
                subbasis=tuple(sorted(rng.sample(range(full + 1), rng.randint(0, 3)))),
                fam_a=tuple(rng.sample(range(1, full + 1), rng.randint(1, 3))),
                fam_b=tuple(rng.sample(range(1, full + 1), rng.randint(1, 3))),
                horizon=rng.randint(0, 4),
                flavor="abstract-game",
                params={"game": {"horizon": 0, "kind": "single", "moves": [],
                                  "target": {"type": "explicit-set", "winning": []}}},
            )
            assert parse_scenario(emit_scenario(sc)) == sc

    def test_unknown_flavor_rejected(self):
        data = scenario_to_json(corpus()[0])
        data["flavor"] = "mystery"
        with pytest.raises(ScenarioFormatError):
            scenario_from_json(data)

    def test_point_open_needs_closed_points(self):
        space_json = {
            "name": "sierpinski",
            "space": {"size": 2, "subbasis": [[0]]},
            "families": {"a": [[0]], "b": [[0]]},
            "horizon": 1,
            "flavor": "point-open-o",
            "params": {},
        }
        with pytest.raises(ScenarioFormatError):
            scenario_from_json(space_json)

    def test_window_flavor_needs_width(self):
        data = scenario_to_json(corpus()[0])
        data["flavor"] = "point-open-window"
        with pytest.raises(ScenarioFormatError):
            scenario_from_json(data)

    def test_member_outside_universe_rejected(self):
        data = {
            "name": "bad",
            "space": {"size": 2, "subbasis": []},
            "families": {"a": [[3]], "b": [[0]]},
            "horizon": 1,
            "flavor": "rothberger",
            "params": {},
        }
        with pytest.raises(ScenarioFormatError):
            scenario_from_json(data)

    def test_abstract_game_round_trips_through_build(self, d2, singles2):
        g = build_point_open(d2, singles2, singles2, 2)
        sc = abstract_scenario("wrapped", g)
        rebuilt = build_game(parse_scenario(emit_scenario(sc)))
        assert rebuilt == g


class TestSerializeCodecs:
    def test_game_codec_round_trip(self, d3, singles3):
        for g in [
            build_point_open(d3, singles3, singles3, 2),
            build_rothberger(discrete_space(2), singleton_family(discrete_space(2)),
                             singleton_family(discrete_space(2)), 2),
        ]:
            assert game_from_json(game_to_json(g)) == g

    def test_strategy_codec_round_trip(self, d2, singles2):
        g = build_point_open(d2, singles2, singles2, 2)
        det = solve(g)
        pre = find_predetermined_one(g)
        for strat in [det.witness, pre]:
            data = strategy_to_json(strat, g.kind)
            assert strategy_from_json(data) == strat

    def test_markov_codec_round_trip(self, d2, singles2):
        g = build_rothberger(d2, singles2, singles2, 2)
        markov = find_markov_two(g)
        assert strategy_from_json(strategy_to_json(markov, g.kind)) == markov

    def test_finite_kind_strategy_codec(self):
        from selgames import FullTwo, make_game
        from selgames.game import ExplicitSet

        g = make_game(
            [[frozenset({0, 1})]], 1, Kind.FINITE,
            ExplicitSet(winning=(frozenset({0, 1}),)),
        )
        strat = FullTwo(table={(0,): frozenset({0, 1})})
        data = strategy_to_json(strat, g.kind)
        assert strategy_from_json(data) == strat
        assert verify(g, strategy_from_json(data)).valid

    def test_pack_codec_round_trip(self):
        from selgames import TranslationPack

        pack = TranslationPack(
            t_one=({0: 0, 1: 0},), t_two=({(0, 0): 1, (2, 1): 0},)
        )
        assert pack_from_json(pack_to_json(pack)) == pack

    def test_order_pair_codec(self):
        from selgames import inclusion_pair
        from selgames.serialize import rel_pair_from_json, rel_pair_to_json

        pair = inclusion_pair([0b011, 0b101], [1, 2, 4])
        back = rel_pair_from_json(rel_pair_to_json(pair))
        n = len(pair.carrier)
        assert len(back.carrier) == n
        assert back.sub_a == pair.sub_a and back.sub_b == pair.sub_b
        assert all(
            back.leq(i, j) == pair.leq(i, j)
            for i in range(n)
            for j in range(n)
        )

    def test_inclusion_pair_file_form(self):
        from selgames.serialize import rel_pair_from_json

        pair = rel_pair_from_json(
            {"type": "inclusion", "a": [[0, 1], [1, 2]], "b": [[0], [1]]}
        )
        assert len(pair.sub_a) == 2 and len(pair.sub_b) == 2


def _target_trees():
    from selgames.game import (
        CoversFamily,
        EverySubsequence,
        ExplicitSet,
        MultiCover,
        Not,
        WindowCover,
    )

    members = st.lists(
        st.integers(min_value=0, max_value=7), max_size=3, unique=True
    ).map(lambda ms: tuple(sorted(ms)))
    leaves = st.one_of(
        st.builds(CoversFamily, full=st.just(7), members=members),
        st.builds(
            MultiCover, full=st.just(7), members=members,
            m=st.integers(min_value=0, max_value=3),
        ),
        st.builds(
            WindowCover, full=st.just(7), members=members,
            w=st.integers(min_value=0, max_value=4),
        ),
        st.builds(
            ExplicitSet,
            winning=st.lists(
                st.frozensets(st.integers(min_value=0, max_value=5), max_size=3),
                max_size=4,
                unique=True,
            ).map(tuple),
        ),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(Not, inner=inner),
            st.builds(
                EverySubsequence, inner=inner,
                m=st.integers(min_value=0, max_value=4),
            ),
        ),
        max_leaves=3,
    )


@settings(max_examples=80, deadline=None)
@given(target=_target_trees())
def test_target_codec_round_trips(target):
    import itertools

    from selgames.serialize import target_from_json, target_to_json

    back = target_from_json(target_to_json(target))
    # member order canonicalizes on emit, so compare by behavior
    for n in range(0, 3):
        for sel in itertools.product(range(8), repeat=n):
            assert back.evaluate(sel) == target.evaluate(sel)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_scenario_codec_round_trips_random_families(data):
    size = data.draw(st.integers(min_value=2, max_value=4))
    full = (1 << size) - 1
    fam = data.draw(
        st.lists(
            st.integers(min_value=1, max_value=full),
            min_size=1, max_size=3, unique=True,
        )
    )
    sc = Scenario(
        name="prop",
        space_size=size,
        subbasis=tuple(1 << i for i in range(size)),
        fam_a=tuple(fam),
        fam_b=tuple(fam),
        horizon=data.draw(st.integers(min_value=0, max_value=4)),
        flavor="rothberger",
    )
    assert parse_scenario(emit_scenario(sc)) == sc


class TestCorpus:
    def test_expectations_hold(self):
        for sc in corpus():
            game = build_game(sc)
            det = solve(game)
            pre = find_predetermined_one(game)
            markov = find_markov_two(game)
            expected = CORPUS_EXPECTATIONS[sc.name]
            assert (det.winner.value, pre is not None, markov is not None) == expected, sc.name
            assert verify(game, det.witness).valid
