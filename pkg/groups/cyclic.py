# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .base import Group
from util.errors import ParseError, DomainError


class CyclicGroup(Group):
    """Z/nZ; elements are ints in [0, n)."""
    kind = 'cyclic'
    gen_names = ('one',)

    def __init__(self, order=6):
        if order < 1:
            raise DomainError("cyclic group order must be >= 1, got {}".format(order))
        self.order = order

    @property
    def name(self):
        return 'cyclic({})'.format(self.order)

    def identity(self):
        return 0

    def mul(self, g, h):
        return (g + h) % self.order

    def inv(self, g):
        return (-g) % self.order

    def base_generators(self):
        return [1 % self.order]

    def elements(self):
        return list(range(self.order))

    def word_length(self, g):
        return min(g, self.order - g)

    def format_element(self, g):
        return str(g)

    def parse_element(self, text):
        try:
            return int(text.strip()) % self.order
        except ValueError:
            raise ParseError("malformed cyclic element {!r}".format(text))

    def sort_key(self, g):
        return g
