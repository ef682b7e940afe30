# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Thompson's group F in its two piecewise-affine realizations.

'unit': homeomorphisms of [0, 1].
'line': homeomorphisms of R that are integer translations near +-inf.

The group law is composition, g*h = g o h, so words act right to left on
points and word_eval(sigma*tau) is the map x -> sigma(tau(x)).
"""
from .base import Group, Word
from .pl import PLElement, pl_identity, VARIANTS, ZERO, ONE
from exact.dyadic import Dyadic
from util.errors import DomainError, ParseError

HALF = Dyadic(1, 1)


def f_generators(variant):
    """(sigma, tau) for the requested realization."""
    if variant == 'unit':
        sigma = PLElement('unit', ['1/2^1', '3/2^2'], [-1, 0, 1], [0, '-1/2^2', -1])
        tau = PLElement('unit', ['1/2^1', '3/2^2', '7/2^3'], [0, -1, 0, 1], [0, '1/2^2', '-1/2^3', -1])
    elif variant == 'line':
        sigma = PLElement('line', [], [0], [-1])
        # identity on (-inf, 0], x/2 on [0, 2], x - 1 on [2, inf)
        tau = PLElement('line', [0, 2], [0, -1, 0], [0, 0, -1])
    else:
        raise DomainError("unknown Thompson variant {!r}".format(variant))
    return sigma, tau


class ThompsonGroup(Group):
    gen_names = ('sigma', 'tau')

    def __init__(self, variant='line'):
        if variant not in VARIANTS:
            raise DomainError("unknown Thompson variant {!r}".format(variant))
        self.variant = variant
        self.kind = 'thompson-' + variant
        self._gens = f_generators(variant)

    def identity(self):
        return pl_identity(self.variant)

    def mul(self, g, h):
        return g.compose(h)

    def inv(self, g):
        return g.inverse()

    def base_generators(self):
        return list(self._gens)

    def format_element(self, g):
        return g.to_text()

    def parse_element(self, text):
        text = text.strip()
        if ':' in text:
            g = PLElement.from_text(text)
            if g.variant != self.variant:
                raise ParseError("{} element given for {}".format(g.variant, self.kind))
            return g
        return self.word_eval(self.parse_word(text))

    def describe(self):
        tables = {}
        for name, g in zip(self.gen_names, self._gens):
            tables[name] = {
                'text': g.to_text(),
                'pieces': [[_end(l, '-inf'), _end(r, 'inf'), '2^{}'.format(e), str(c)]
                           for l, r, e, c in g.pieces()],
            }
        return {'kind': self.kind, 'generators': tables,
                'law': 'g*h = g o h (h applied first)'}


def _end(x, infinite):
    return infinite if x is None else str(x)


def gamma(n, variant, group=None):
    """gamma_0 = sigma, gamma_n = sigma^(1-n) tau sigma^(n-1) for n >= 1."""
    if n < 0:
        raise DomainError("gamma index must be non-negative, got {}".format(n))
    group = group or ThompsonGroup(variant)
    sigma, tau = group.base_generators()
    if n == 0:
        return sigma
    return group.mul(group.mul(group.power(sigma, 1 - n), tau), group.power(sigma, n - 1))


def commutator(group, x, y):
    return group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y))


def check_relations(variant, pairs=((0, 2), (0, 3), (1, 3))):
    """Evaluate both defining commutators and the gamma conjugation relations.

    For each (m, n) with m < n the report records whether
    gamma_m^-1 gamma_n gamma_m equals gamma_n, gamma_{n+1}, or neither.
    """
    group = ThompsonGroup(variant)
    sigma, tau = group.base_generators()
    x = group.mul(sigma, group.inv(tau))
    commutators = []
    for label, k in (('[sigma*tau^-1, sigma^-1*tau*sigma]', 2), ('[sigma*tau^-1, sigma^-2*tau*sigma^2]', 3)):
        c = commutator(group, x, gamma(k, variant, group))
        commutators.append({'relation': label, 'identity': c.is_identity(), 'element': c.to_text()})
    relations = []
    for m, n in pairs:
        gm = gamma(m, variant, group)
        conj = group.mul(group.mul(group.inv(gm), gamma(n, variant, group)), gm)
        eq_n = conj == gamma(n, variant, group)
        eq_n1 = conj == gamma(n + 1, variant, group)
        holds = 'gamma_n' if eq_n else ('gamma_n+1' if eq_n1 else 'neither')
        relations.append({'m': m, 'n': n, 'equals_gamma_n': eq_n, 'equals_gamma_n+1': eq_n1,
                          'holds': holds, 'element': conj.to_text()})
    return {
        'variant': variant,
        'commutators': commutators,
        'gamma_relations': relations,
        'ok': all(c['identity'] for c in commutators),
    }


def t_point(n):
    """t_n = 1 - 2^-(n+1) for n >= 0 and 2^(n-1) for n < 0."""
    if n >= 0:
        return ONE - Dyadic(1, n + 1)
    return Dyadic(1, 1 - n)


def kappa(x):
    """Equivariant bijection (0, 1) -> R mapping [t_n, t_{n+1}] affinely onto [n, n+1]."""
    x = Dyadic.coerce(x)
    if not (ZERO < x < ONE):
        raise DomainError("kappa needs 0 < x < 1, got {}".format(x))
    if not x < HALF:
        n = -(ONE - x).ceil_log2() - 1
        return (x - t_point(n)).scale_pow2(n + 2) + n
    n = x.floor_log2() + 1
    return (x - t_point(n)).scale_pow2(1 - n) + n


def kappa_inv(y):
    y = Dyadic.coerce(y)
    n = y.floor()
    frac = y - n
    if n >= 0:
        return t_point(n) + frac.scale_pow2(-(n + 2))
    return t_point(n) + frac.scale_pow2(n - 1)


def word_eval(word, group):
    return group.word_eval(word)


__all__ = ['ThompsonGroup', 'f_generators', 'gamma', 'check_relations', 'kappa', 'kappa_inv',
           'commutator', 't_point', 'word_eval', 'Word']
