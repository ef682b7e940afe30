# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import os
import sys
import random
import tempfile
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exact import weight_mode
from groups import FreeGroup, LatticeGroup, ThompsonGroup, Word, ball
from measures import (FinMeasure, atoms_measure, cesaro_average, convolution_power, convolve, dirac,
                      iter_convolution_powers, lazy_walk, mixture, nondegeneracy_probe, read_measure, simple_walk,
                      translate, tv_distance, uniform, write_measure)
from util.errors import CapExceededError, DomainError


def test_fin_measure_basics():
    mu = FinMeasure([((0,), '1/4'), ((1,), '1/4'), ((0,), '1/4')])
    assert mu.weight((0,)) == Fraction(1, 2)
    assert mu.mass == Fraction(3, 4)
    assert mu.deficiency == Fraction(1, 4)
    assert mu.normalized().mass == 1
    try:
        FinMeasure([((0,), '3/4'), ((1,), '1/2')])
    except DomainError:
        pass
    else:
        raise AssertionError('mass above 1 accepted')
    try:
        FinMeasure([((0,), '-1/4')])
    except DomainError:
        pass
    else:
        raise AssertionError('negative weight accepted')
    assert tv_distance(dirac(0), dirac(1)) == 1
    assert tv_distance(uniform([0, 1]), dirac(0)) == Fraction(1, 2)


def test_lazy_walk_on_z():
    G = LatticeGroup(1)
    mu = lazy_walk(G)
    assert mu.weight((0,)) == Fraction(1, 2)
    assert mu.weight((-1,)) == Fraction(1, 4)
    mu2 = convolve(mu, mu, G)
    assert mu2.weight((0,)) == Fraction(3, 8)
    assert mu2.weight((1,)) == Fraction(1, 4)
    assert mu2.weight((-2,)) == Fraction(1, 16)
    assert mu2.mass == 1
    assert convolution_power(mu, 2, G) == mu2
    try:
        lazy_walk(G, '1')
    except DomainError:
        pass
    else:
        raise AssertionError('laziness 1 accepted')


def test_free_group_powers():
    F = FreeGroup(2)
    mu = simple_walk(F)
    assert len(mu) == 4
    mu2 = convolution_power(mu, 2, F)
    assert len(mu2) == 13
    assert mu2.weight(F.identity()) == Fraction(1, 4)
    assert mu2.weight(F.parse_element('ab')) == Fraction(1, 16)


def test_pruning_accounts_for_removed_mass():
    G = LatticeGroup(1)
    steps = list(iter_convolution_powers(lazy_walk(G), G, 2, threshold=Fraction(1, 10)))
    assert [s.n for s in steps] == [1, 2]
    assert steps[0].pruned == 0
    last = steps[1]
    assert last.pruned == Fraction(1, 8)
    assert last.support_size == 3
    assert last.measure.deficiency == Fraction(1, 8)


def _random_measure(rng, points, size=3):
    chosen = rng.sample(points, min(size, len(points)))
    raw = [rng.randint(1, 5) for _ in chosen]
    return FinMeasure([(x, Fraction(k, sum(raw))) for x, k in zip(chosen, raw)])


def _thompson_points(G, count, rng):
    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    return [G.word_eval(Word([rng.choice(letters) for _ in range(rng.randint(0, 4))])) for _ in range(count)]


def test_convolution_is_associative():
    rng = random.Random(404)
    F, T = FreeGroup(2), ThompsonGroup('line')
    cases = [(F, ball(F, 2)), (LatticeGroup(2), ball(LatticeGroup(2), 2)), (T, _thompson_points(T, 16, rng))]
    for G, points in cases:
        points = list(dict.fromkeys(points))
        for _ in range(5):
            a, b, c = (_random_measure(rng, points) for _ in range(3))
            left = convolve(convolve(a, b, G), c, G)
            assert left == convolve(a, convolve(b, c, G), G)
            assert left.mass == 1


def test_translate_is_a_homomorphism():
    rng = random.Random(505)
    F, T = FreeGroup(2), ThompsonGroup('line')
    for G, points in ((F, ball(F, 2)), (T, list(dict.fromkeys(_thompson_points(T, 16, rng))))):
        for _ in range(10):
            g, h = rng.choice(points), rng.choice(points)
            mu = _random_measure(rng, points)
            assert translate(g, translate(h, mu, G), G) == translate(G.mul(g, h), mu, G)
            assert translate(G.identity(), mu, G) == mu


def test_pruning_bound_for_random_functions():
    rng = random.Random(606)
    F = FreeGroup(2)
    mu = lazy_walk(F)
    exact = convolution_power(mu, 4, F)
    pruned = list(iter_convolution_powers(mu, F, 4, threshold=Fraction(1, 40)))[-1].measure
    assert pruned.deficiency > 0
    for x, w in pruned.items():
        assert w <= exact.weight(x)
    for _ in range(20):
        values = {x: Fraction(rng.randint(-8, 8), 8) for x in exact.support}
        gap = abs(exact.integrate(values.get) - pruned.integrate(values.get))
        assert gap <= pruned.deficiency


def test_emit_filter():
    G = LatticeGroup(1)
    steps = list(iter_convolution_powers(lazy_walk(G), G, 6, emit=lambda n: n % 3 == 0))
    assert [s.n for s in steps] == [3, 6]
    assert steps[1].support_size == 13


def test_support_cap():
    G = LatticeGroup(1)
    try:
        list(iter_convolution_powers(lazy_walk(G), G, 4, support_cap=3))
    except CapExceededError as err:
        assert err.level == 2
        assert err.exit_code == 3
    else:
        raise AssertionError('support cap ignored')


def test_worker_count_does_not_change_powers():
    F = FreeGroup(2)
    mu = lazy_walk(F)
    one = convolution_power(mu, 4, F, num_workers=1)
    four = convolution_power(mu, 4, F, num_workers=4)
    assert one == four
    assert list(one.atoms) == list(four.atoms)


def test_float_mode_matches_exact():
    F = FreeGroup(2)
    exact = convolution_power(simple_walk(F), 3, F)
    with weight_mode('float'):
        approx = convolution_power(simple_walk(F), 3, F)
        assert isinstance(approx.mass, float)
    assert set(exact.atoms) == set(approx.atoms)
    for x, w in exact.items():
        assert abs(float(w) - approx.weight(x)) < 1e-12


def test_cesaro_and_mixture():
    G = LatticeGroup(1)
    mu = lazy_walk(G)
    avg = cesaro_average([mu, convolve(mu, mu, G)])
    assert avg.mass == 1
    assert avg.weight((0,)) == (Fraction(1, 2) + Fraction(3, 8)) / 2
    half = mixture(['1/2'], [mu])
    assert half.deficiency == Fraction(1, 2)
    assert translate((3,), dirac((0,)), G) == dirac((3,))


def test_atoms_and_nondegeneracy():
    F = FreeGroup(2)
    mu = atoms_measure(F, ['a 1/2', 'b 1/2'])
    probe = nondegeneracy_probe(mu, F, 3, targets=[F.parse_element('ab'), F.parse_element('A')])
    assert probe['targets'][0]['reached'] and probe['targets'][0]['length'] == 2
    assert not probe['targets'][1]['reached']
    assert probe['truncated']
    probe = nondegeneracy_probe(lazy_walk(LatticeGroup(1)), LatticeGroup(1), 2)
    assert probe['reached'] == 5


def test_measure_file_round_trip():
    F = FreeGroup(2)
    mu = convolution_power(lazy_walk(F), 2, F)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'mu.txt')
        write_measure(path, mu, F.format_element, F.name, extra={'n': 2})
        with open(path) as f:
            lines = f.read().splitlines()
        assert lines[0] == '# walkbench measure'
        atom_lines = [line for line in lines if not line.startswith('#')]
        assert atom_lines == sorted(atom_lines)
        back, header = read_measure(path, F.parse_element)
    assert back == mu
    assert header['deficiency'] == '0'
    assert header['n'] == '2'
    assert header['mode'] == 'exact'


if __name__ == "__main__":
    test_fin_measure_basics()
    test_lazy_walk_on_z()
    test_free_group_powers()
    test_pruning_accounts_for_removed_mass()
    test_convolution_is_associative()
    test_translate_is_a_homomorphism()
    test_pruning_bound_for_random_functions()
    test_emit_filter()
    test_support_cap()
    test_worker_count_does_not_change_powers()
    test_float_mode_matches_exact()
    test_cesaro_and_mixture()
    test_atoms_and_nondegeneracy()
    test_measure_file_round_trip()
    print("OK\n")
