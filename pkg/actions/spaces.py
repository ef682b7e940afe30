# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Countable G-spaces: a group acting on itself, Thompson's F acting on the
dyadic rationals (line model) or on D = (0,1) in the dyadics (interval model),
and the induced actions on n-tuples and n-element subsets.
"""
from exact.dyadic import Dyadic, dyadic_parse, dyadic_format
from groups.pl import PLElement, ZERO, ONE
from groups.thompson import ThompsonGroup, kappa, kappa_inv
from groups.base import Word
from util.errors import DomainError, ParseError


class ActionSpace(object):
    kind = ''

    def __init__(self, group):
        self.group = group

    def act(self, g, x):
        raise NotImplementedError

    def format_point(self, x):
        raise NotImplementedError

    def parse_point(self, text):
        raise NotImplementedError

    def check_point(self, x):
        return x

    def sort_key(self, x):
        return x

    @property
    def name(self):
        return '{}[{}]'.format(self.kind, self.group.name)


class SelfAction(ActionSpace):
    """G acting on itself by left multiplication."""
    kind = 'self'

    def act(self, g, x):
        return self.group.mul(g, x)

    def format_point(self, x):
        return self.group.format_element(x)

    def parse_point(self, text):
        return self.group.parse_element(text)

    def sort_key(self, x):
        return self.group.sort_key(x)


class _DyadicAction(ActionSpace):

    def __init__(self, group):
        if not isinstance(group, ThompsonGroup):
            raise DomainError("{} needs a Thompson group, got {}".format(self.kind, group.name))
        super().__init__(group)

    def _element(self, g):
        if not isinstance(g, PLElement) or g.variant != self.group.variant:
            raise DomainError("{!r} is not an element of {}".format(g, self.group.name))
        return g

    def format_point(self, x):
        return dyadic_format(x)

    def parse_point(self, text):
        return self.check_point(dyadic_parse(text))

    def check_point(self, x):
        return Dyadic.coerce(x)


class DyadicLineAction(_DyadicAction):
    """F acting on Z[1/2]; the unit model is transported through kappa."""
    kind = 'dyadic-line'

    def act(self, g, x):
        g = self._element(g)
        if g.variant == 'line':
            return g(x)
        return kappa(g(kappa_inv(x)))


class DyadicIntervalAction(_DyadicAction):
    """F acting on D = (0,1) in Z[1/2]; the line model is transported through kappa."""
    kind = 'dyadic-interval'

    def check_point(self, x):
        x = Dyadic.coerce(x)
        if not (ZERO < x < ONE):
            raise DomainError("{} is not in (0, 1)".format(x))
        return x

    def act(self, g, x):
        g = self._element(g)
        x = self.check_point(x)
        if g.variant == 'unit':
            return g(x)
        return kappa_inv(g(kappa(x)))


class TuplePower(ActionSpace):
    """Diagonal action on X^n; points are n-tuples."""
    kind = 'tuple-power'
    brackets = '()'

    def __init__(self, base, n):
        if n < 1:
            raise DomainError("power must be >= 1, got {}".format(n))
        super().__init__(base.group)
        self.base = base
        self.n = n

    @property
    def name(self):
        return '{}({},{})'.format(self.kind, self.base.name, self.n)

    def check_point(self, x):
        x = tuple(x)
        if len(x) != self.n:
            raise DomainError("point {!r} must have {} coordinates".format(x, self.n))
        return x

    def act(self, g, x):
        return tuple(self.base.act(g, y) for y in self.check_point(x))

    def format_point(self, x):
        return self.brackets[0] + ';'.join(self.base.format_point(y) for y in x) + self.brackets[1]

    def parse_point(self, text):
        text = text.strip()
        if not (text.startswith(self.brackets[0]) and text.endswith(self.brackets[1])):
            raise ParseError("expected {}p1;...;pn{}, got {!r}".format(self.brackets[0], self.brackets[1], text))
        parts = [p for p in text[1:-1].split(';') if p.strip()]
        return self.check_point([self.base.parse_point(p) for p in parts])

    def sort_key(self, x):
        return tuple(self.base.sort_key(y) for y in x)


class FiniteSubsets(TuplePower):
    """Induced action on n-element subsets; points are sorted duplicate-free tuples."""
    kind = 'finite-subsets'
    brackets = '{}'

    def check_point(self, x):
        x = tuple(sorted(set(x), key=self.base.sort_key))
        if len(x) != self.n:
            raise DomainError("subset {!r} must have exactly {} distinct elements".format(x, self.n))
        return x

    def act(self, g, x):
        return tuple(sorted((self.base.act(g, y) for y in x), key=self.base.sort_key))


def act(g, x, space):
    return space.act(g, x)


def equivariance_check_kappa(word, x):
    """kappa(g_unit(x)) == g_line(kappa(x)) for a word in sigma, tau and x in D."""
    unit, line = ThompsonGroup('unit'), ThompsonGroup('line')
    if isinstance(word, str):
        word = Word.parse(word, list(unit.gen_names))
    x = Dyadic.coerce(x)
    if not (ZERO < x < ONE):
        raise DomainError("{} is not in (0, 1)".format(x))
    return kappa(unit.word_eval(word)(x)) == line.word_eval(word)(kappa(x))
