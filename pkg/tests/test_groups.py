# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import os
import sys
import random

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exact import Dyadic
from groups import (CyclicGroup, FreeGroup, LatticeGroup, PLElement, ThompsonGroup, Word, ball, check_relations,
                    gamma, kappa, kappa_inv)
from groups.thompson import t_point
from util.errors import DomainError, ParseError


def test_lattice():
    G = LatticeGroup(2)
    g, h = G.parse_element('(1,-2)'), G.element(3, 4)
    assert G.mul(g, h) == (4, 2)
    assert G.mul(g, G.inv(g)) == G.identity()
    assert G.word_length((3, -2)) == 5
    assert G.format_element(g) == '(1,-2)'
    assert len(G.generators()) == 4
    assert LatticeGroup(1).parse_element('-7') == (-7,)
    try:
        G.parse_element('(1,2,3)')
    except ParseError:
        pass
    else:
        raise AssertionError('wrong dimension accepted')


def test_free_group_reduction():
    F = FreeGroup(2)
    a, b = F.base_generators()
    assert F.parse_element('aA') == F.identity()
    assert F.parse_element('abBa') == F.mul(a, a)
    assert F.format_element(F.mul(a, F.inv(b))) == 'aB'
    assert F.word_length(F.parse_element('abAB')) == 4
    g = F.parse_element('abA')
    assert F.first_letter(g) == F.letter_code('a')
    assert F.last_letter(g) == F.letter_code('A')
    assert len(F.generators()) == 4


def test_cyclic():
    C = CyclicGroup(6)
    assert C.mul(4, 5) == 3
    assert C.inv(2) == 4
    assert C.word_length(4) == 2
    assert len(C.elements()) == 6


def test_balls():
    assert len(ball(LatticeGroup(1), 2)) == 5
    assert len(ball(LatticeGroup(2), 2)) == 13
    # 1 + 4 + 4*3
    assert len(ball(FreeGroup(2), 2)) == 17
    assert ball(FreeGroup(2), 0) == [()]


def test_word_parse_format():
    names = ['sigma', 'tau']
    w = Word.parse('sigma*tau^-1 sigma^2', names)
    assert w.letters == ((0, 1), (1, -1), (0, 1), (0, 1))
    assert Word.parse(w.format(names), names) == w
    assert len(Word.parse('tau*tau^-1', names)) == 0
    assert Word.parse('e', names).format(names) == 'e'
    assert (w * w.inverse()).letters == ()
    try:
        Word.parse('sigma*rho', names)
    except ParseError:
        pass
    else:
        raise AssertionError('unknown generator accepted')


def test_thompson_generators():
    line = ThompsonGroup('line')
    sigma, tau = line.base_generators()
    assert sigma(Dyadic(5, 1)) == Dyadic(3, 1)
    assert tau(1) == Dyadic(1, 1)
    assert tau(3) == 2
    assert tau(-5) == -5
    unit = ThompsonGroup('unit')
    usigma, utau = unit.base_generators()
    assert usigma(Dyadic(1, 1)) == Dyadic(1, 2)
    assert usigma(Dyadic(3, 2)) == Dyadic(1, 1)
    assert usigma(Dyadic(7, 3)) == Dyadic(3, 2)
    assert utau(Dyadic(1, 2)) == Dyadic(1, 2)
    assert utau(Dyadic(3, 2)) == Dyadic(5, 3)


def test_group_law_is_composition():
    for variant, xs in (('line', ['-3', '0', '1/2', '5/2^3', '7']), ('unit', ['1/8', '1/2', '5/8', '15/16'])):
        G = ThompsonGroup(variant)
        sigma, tau = G.base_generators()
        g = G.mul(sigma, tau)
        for x in xs:
            assert g(x) == sigma(tau(x))
        assert G.mul(g, G.inv(g)).is_identity()
        assert G.parse_element('sigma*tau') == g
        h = G.parse_element('sigma^2*tau^-1*sigma^-1*tau')
        assert PLElement.from_text(h.to_text()) == h
        assert G.parse_element(h.to_text()) == h
        for x in xs:
            assert h.preimage(h(x)) == Dyadic.coerce(x)


def test_pl_validation():
    try:
        PLElement('unit', ['1/2'], [0, 1], [0, 0])
    except DomainError:
        pass
    else:
        raise AssertionError('discontinuous map accepted')
    try:
        PLElement('line', [], [1], [0])
    except DomainError:
        pass
    else:
        raise AssertionError('line map without translation ends accepted')
    # removable breakpoints merge
    assert PLElement('line', [0], [0, 0], [1, 1]) == PLElement('line', [], [0], [1])


def test_relations_both_realizations():
    reports = [check_relations(v) for v in ('unit', 'line')]
    for rep in reports:
        assert rep['ok'], rep
        assert all(c['identity'] for c in rep['commutators'])
        assert [(r['m'], r['n']) for r in rep['gamma_relations']] == [(0, 2), (0, 3), (1, 3)]
    # gamma_m^-1 gamma_n gamma_m = gamma_{n+1} for m < n, in both realizations
    for rep in reports:
        for r in rep['gamma_relations']:
            assert r['holds'] == 'gamma_n+1', r
            assert r['equals_gamma_n+1'] and not r['equals_gamma_n']
    unit_rel, line_rel = reports
    for a, b in zip(unit_rel['gamma_relations'], line_rel['gamma_relations']):
        assert a['holds'] == b['holds']


def _random_word(rng, n_gens, max_len=8):
    return Word([(rng.randrange(n_gens), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))])


def test_group_axioms_on_random_words():
    rng = random.Random(2718)
    groups = [LatticeGroup(2), FreeGroup(2), ThompsonGroup('unit'), ThompsonGroup('line')]
    for G in groups:
        n_gens = len(G.base_generators())
        e = G.identity()
        for _ in range(25):
            u, v, w = (_random_word(rng, n_gens) for _ in range(3))
            g, h, k = G.word_eval(u), G.word_eval(v), G.word_eval(w)
            assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)), G.name
            assert G.mul(g, e) == g and G.mul(e, g) == g
            assert G.mul(g, G.inv(g)) == e and G.mul(G.inv(g), g) == e
            # canonical forms: concatenation agrees with the product
            assert G.word_eval(u * v) == G.mul(g, h)
            assert G.word_eval(u.inverse()) == G.inv(g)


def test_pl_maps_increasing():
    rng = random.Random(314)
    for variant in ('unit', 'line'):
        G = ThompsonGroup(variant)
        for _ in range(20):
            g = G.word_eval(_random_word(rng, 2))
            if variant == 'line':
                p, q = g.tails
                assert isinstance(p, int) and isinstance(q, int)
            for _ in range(10):
                if variant == 'unit':
                    a, b = sorted(rng.sample(range(1 << 10), 2))
                    x, y = Dyadic(a, 10), Dyadic(b + 1, 10)
                else:
                    a, b = sorted(rng.sample(range(-4000, 4000), 2))
                    x, y = Dyadic(a, 6), Dyadic(b, 6)
                assert g(x) < g(y)
                assert g.preimage(g(x)) == x

def test_gamma():
    G = ThompsonGroup('line')
    sigma, tau = G.base_generators()
    assert gamma(0, 'line', G) == sigma
    assert gamma(1, 'line', G) == tau
    assert gamma(2, 'line', G) == G.mul(G.mul(G.inv(sigma), tau), sigma)
    try:
        gamma(-1, 'line')
    except DomainError:
        pass
    else:
        raise AssertionError('negative gamma index accepted')


def test_kappa_values():
    assert kappa(Dyadic(1, 1)) == 0
    assert kappa(Dyadic(3, 2)) == 1
    assert kappa(Dyadic(1, 2)) == -1
    for n in range(-6, 7):
        assert kappa(t_point(n)) == n
    try:
        kappa(Dyadic(1))
    except DomainError:
        pass
    else:
        raise AssertionError('kappa(1) accepted')


def test_kappa_inverse_on_random_points():
    rng = random.Random(1107)
    for _ in range(200):
        k = rng.randint(1, 30)
        x = Dyadic(rng.randrange(1, 1 << k), k)
        assert kappa_inv(kappa(x)) == x
        y = Dyadic(rng.randint(-4000, 4000), rng.randint(0, 12))
        assert kappa(kappa_inv(y)) == y


def test_describe_tables():
    desc = ThompsonGroup('line').describe()
    assert desc['kind'] == 'thompson-line'
    assert desc['generators']['sigma']['pieces'] == [['-inf', 'inf', '2^0', '-1']]
    assert desc['generators']['tau']['pieces'][1] == ['0', '2', '2^-1', '0']
    assert LatticeGroup(1).describe()['generators'] == [['one', '1']]


if __name__ == "__main__":
    test_lattice()
    test_free_group_reduction()
    test_cyclic()
    test_balls()
    test_word_parse_format()
    test_thompson_generators()
    test_group_law_is_composition()
    test_pl_validation()
    test_relations_both_realizations()
    test_group_axioms_on_random_words()
    test_pl_maps_increasing()
    test_gamma()
    test_kappa_values()
    test_kappa_inverse_on_random_points()
    test_describe_tables()
    print("OK\n")
