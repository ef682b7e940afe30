# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .base import Group
from util.errors import ParseError, DomainError


class LatticeGroup(Group):
    """Z^d under addition; elements are d-tuples of ints."""
    kind = 'lattice'

    def __init__(self, dim=1):
        if dim < 1:
            raise DomainError("lattice dimension must be >= 1, got {}".format(dim))
        self.dim = dim
        self.gen_names = tuple('e{}'.format(i + 1) for i in range(dim)) if dim > 1 else ('one',)

    @property
    def name(self):
        return 'lattice({})'.format(self.dim)

    def identity(self):
        return (0,) * self.dim

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def base_generators(self):
        return [tuple(1 if j == i else 0 for j in range(self.dim)) for i in range(self.dim)]

    def word_length(self, g):
        return sum(abs(a) for a in g)

    def element(self, *coords):
        if len(coords) != self.dim:
            raise DomainError("expected {} coordinates, got {}".format(self.dim, len(coords)))
        return tuple(int(c) for c in coords)

    def format_element(self, g):
        if self.dim == 1:
            return str(g[0])
        return '(' + ','.join(str(a) for a in g) + ')'

    def parse_element(self, text):
        text = text.strip()
        try:
            if self.dim == 1 and not text.startswith('('):
                return (int(text),)
            coords = [int(c) for c in text.strip('()').split(',')]
        except ValueError:
            raise ParseError("malformed lattice element {!r}".format(text))
        if len(coords) != self.dim:
            raise ParseError("lattice element {!r} has {} coordinates, expected {}".format(text, len(coords), self.dim))
        return tuple(coords)

    def sort_key(self, g):
        return g
