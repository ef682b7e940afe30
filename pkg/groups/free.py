# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .base import Group
from util.errors import ParseError, DomainError

LETTERS = 'abcdefgh'


class FreeGroup(Group):
    """Free group on `rank` letters.

    Elements are reduced words stored as tuples of non-zero ints: +i is the
    i-th letter, -i its inverse. Text form is compact, capitals are inverses:
    'abA' is a*b*a^-1, 'e' is the identity.
    """
    kind = 'free'

    def __init__(self, rank=2):
        if not 1 <= rank <= len(LETTERS):
            raise DomainError("free group rank must be in [1, {}], got {}".format(len(LETTERS), rank))
        self.rank = rank
        self.gen_names = tuple(LETTERS[:rank])

    @property
    def name(self):
        return 'free({})'.format(self.rank)

    def identity(self):
        return ()

    def mul(self, g, h):
        k = 0
        n = min(len(g), len(h))
        while k < n and g[-1 - k] == -h[k]:
            k += 1
        return g[:len(g) - k] + h[k:]

    def inv(self, g):
        return tuple(-a for a in reversed(g))

    def base_generators(self):
        return [(i + 1,) for i in range(self.rank)]

    def word_length(self, g):
        return len(g)

    def first_letter(self, g):
        return g[0] if g else 0

    def last_letter(self, g):
        return g[-1] if g else 0

    def letter_code(self, letter):
        if letter in self.gen_names:
            return self.gen_names.index(letter) + 1
        if letter.lower() in self.gen_names:
            return -(self.gen_names.index(letter.lower()) + 1)
        raise ParseError("unknown letter {!r} for {}".format(letter, self.name))

    def format_element(self, g):
        if not g:
            return 'e'
        return ''.join(LETTERS[a - 1] if a > 0 else LETTERS[-a - 1].upper() for a in g)

    def parse_element(self, text):
        text = text.strip()
        if text in ('', 'e'):
            return ()
        out = ()
        for ch in text:
            out = self.mul(out, (self.letter_code(ch),))
        return out

    def sort_key(self, g):
        return (len(g), g)
