# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import os
import sys
import random

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from actions import (AbsoluteMetric, BoundedMetric, DyadicIntervalAction, DyadicLineAction, FiniteSubsets, SelfAction,
                     SupMetric, TuplePower, build_action, equivariance_check_kappa, orbit_bfs, orbit_gap, orbit_rows,
                     strong_transitivity_probe)
from config import _C
from exact import Dyadic
from groups import CyclicGroup, FreeGroup, LatticeGroup, ThompsonGroup, Word
from util.errors import DomainError


def test_self_action():
    G = LatticeGroup(1)
    X = SelfAction(G)
    assert X.act((2,), (3,)) == (5,)
    assert X.parse_point('-4') == (-4,)
    F = FreeGroup(2)
    Y = SelfAction(F)
    assert F.format_element(Y.act(F.parse_element('a'), F.parse_element('Ab'))) == 'b'


def test_dyadic_actions_agree_through_kappa():
    line, unit = ThompsonGroup('line'), ThompsonGroup('unit')
    L, D = DyadicLineAction(line), DyadicIntervalAction(unit)
    sigma, tau = line.base_generators()
    assert L.act(sigma, Dyadic(3)) == 2
    assert L.act(tau, Dyadic(1)) == Dyadic(1, 1)
    # unit elements act on the line through kappa
    L_unit = DyadicLineAction(unit)
    usigma, _ = unit.base_generators()
    assert L_unit.act(usigma, Dyadic(3)) == 2
    assert D.act(usigma, Dyadic(3, 2)) == Dyadic(1, 1)
    try:
        D.parse_point('1')
    except DomainError:
        pass
    else:
        raise AssertionError('1 accepted as a point of (0, 1)')


def test_kappa_equivariance_random_words():
    rng = random.Random(1107)
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    for _ in range(100):
        word = Word([rng.choice(letters) for _ in range(rng.randint(0, 6))])
        k = rng.randint(1, 12)
        x = Dyadic(rng.randrange(1, 1 << k), k)
        assert equivariance_check_kappa(word, x)
    assert equivariance_check_kappa('sigma*tau^-1', '3/8')


def _random_element(G, rng, max_len=5):
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    return G.word_eval(Word([rng.choice(letters) for _ in range(rng.randint(0, max_len))]))


def test_action_axioms_on_random_points():
    rng = random.Random(808)
    line, unit = ThompsonGroup('line'), ThompsonGroup('unit')

    def line_point():
        return Dyadic(rng.randint(-200, 200), rng.randint(0, 5))

    def unit_point():
        k = rng.randint(1, 8)
        return Dyadic(rng.randrange(1, 1 << k), k)

    base = DyadicLineAction(line)
    pairs = FiniteSubsets(base, 2)

    def distinct_pair():
        x, y = line_point(), line_point()
        while y == x:
            y = line_point()
        return pairs.check_point([x, y])

    cases = [
        (base, line_point),
        (DyadicLineAction(unit), line_point),
        (DyadicIntervalAction(unit), unit_point),
        (DyadicIntervalAction(line), unit_point),
        (TuplePower(base, 2), lambda: (line_point(), line_point())),
        (pairs, distinct_pair),
    ]

    for space, draw in cases:
        G = space.group
        for _ in range(30):
            g, h, x = _random_element(G, rng), _random_element(G, rng), draw()
            assert space.act(G.identity(), x) == x
            assert space.act(G.mul(g, h), x) == space.act(g, space.act(h, x))
            assert space.act(G.inv(g), space.act(g, x)) == x


def test_f_is_not_an_isometry():
    line = ThompsonGroup('line')
    L = DyadicLineAction(line)
    d = AbsoluteMetric()
    sigma, tau = line.base_generators()
    x, y = Dyadic(0), Dyadic(2)
    assert d(x, y) == 2
    assert d(L.act(tau, x), L.act(tau, y)) == 1
    assert d(L.act(sigma, x), L.act(sigma, y)) == 2
    rng = random.Random(909)
    moved = 0
    for _ in range(30):
        g = _random_element(line, rng)
        a, b = Dyadic(rng.randint(-16, 16), 1), Dyadic(rng.randint(-16, 16), 1)
        if d(L.act(g, a), L.act(g, b)) != d(a, b):
            moved += 1
    assert moved > 0


def test_induced_spaces():
    line = ThompsonGroup('line')
    base = DyadicLineAction(line)
    _, tau = line.base_generators()
    X2 = TuplePower(base, 2)
    P2 = FiniteSubsets(base, 2)
    assert X2.act(tau, X2.parse_point('(0;1)')) == (Dyadic(0), Dyadic(1, 1))
    assert P2.parse_point('{1;0}') == (Dyadic(0), Dyadic(1))
    assert P2.format_point(P2.parse_point('{3;1/2}')) == '{1/2^1;3}'
    try:
        P2.check_point([Dyadic(1), Dyadic(1)])
    except DomainError:
        pass
    else:
        raise AssertionError('repeated subset element accepted')
    try:
        X2.check_point((Dyadic(1),))
    except DomainError:
        pass
    else:
        raise AssertionError('short tuple accepted')


def test_build_action_and_metrics():
    cfg = _C.ACTION.clone()
    cfg.defrost()
    cfg.kind, cfg.induced, cfg.power, cfg.metric = 'dyadic-line', 'subsets', 2, 'bounded'
    space, metric = build_action(cfg, ThompsonGroup('line'))
    assert isinstance(space, FiniteSubsets)
    assert isinstance(metric, SupMetric)
    x, y = space.parse_point('{0;1}'), space.parse_point('{0;5}')
    assert metric(x, y) == 1
    assert AbsoluteMetric()((1, 2), (0, 5)) == 4
    assert BoundedMetric()(Dyadic(0), Dyadic(1, 2)) == Dyadic(1, 2).to_fraction()


def test_orbit_bfs_truncation():
    X = SelfAction(LatticeGroup(1))
    orbit = orbit_bfs(X, (0,), cap=5)
    assert orbit.points == [(0,), (1,), (-1,), (2,), (-2,)]
    assert orbit.truncated
    assert orbit_rows(X, orbit)[3] == [2, '2']
    full = orbit_bfs(SelfAction(CyclicGroup(6)), 0, cap=100)
    assert len(full.points) == 6 and not full.truncated


def test_transitivity_probe_on_pairs():
    line = ThompsonGroup('line')
    P2 = FiniteSubsets(DyadicLineAction(line), 2)
    source, target = P2.parse_point('{0;1}'), P2.parse_point('{1/2;2}')
    probe = strong_transitivity_probe(P2, source, target, depth=4, cap=10000)
    assert probe.found and not probe.truncated
    assert len(probe.word) <= 3
    assert P2.act(line.word_eval(probe.word), source) == target
    same = strong_transitivity_probe(P2, source, source)
    assert same.found and len(same.word) == 0
    # orientation is preserved on ordered pairs, so (1, 0) is never reached from (0, 1)
    X2 = TuplePower(DyadicLineAction(line), 2)
    miss = strong_transitivity_probe(X2, X2.parse_point('(0;1)'), X2.parse_point('(1;0)'), depth=2, cap=10000)
    assert not miss.found


def test_orbit_gap():
    L = DyadicLineAction(ThompsonGroup('line'))
    gap = orbit_gap(L, AbsoluteMetric(), Dyadic(0), Dyadic(2), cap=1000)
    assert gap.upper_bound == 0
    assert gap.witness == 0


if __name__ == "__main__":
    test_self_action()
    test_dyadic_actions_agree_through_kappa()
    test_kappa_equivariance_random_words()
    test_action_axioms_on_random_points()
    test_f_is_not_an_isometry()
    test_induced_spaces()
    test_build_action_and_metrics()
    test_orbit_bfs_truncation()
    test_transitivity_probe_on_pairs()
    test_orbit_gap()
    print("OK\n")
