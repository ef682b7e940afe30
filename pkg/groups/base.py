# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import re
from collections import deque

from util.errors import ParseError, CapExceededError

_TOKEN_RE = re.compile(r'^([A-Za-z_]\w*)(?:\^([+-]?\d+))?$')


class Word(object):
    """A word in the base generators of a group.

    letters: tuple of (generator index, sign) with sign in {+1, -1}.
    """
    __slots__ = ('letters', 'reduced')

    def __init__(self, letters=(), reduce=True):
        letters = tuple((int(i), 1 if s > 0 else -1) for i, s in letters)
        if reduce:
            out = []
            for letter in letters:
                if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                    out.pop()
                else:
                    out.append(letter)
            letters = tuple(out)
        self.letters = letters
        self.reduced = reduce

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters, reduce=self.reduced and other.reduced)

    def inverse(self):
        return Word(tuple((i, -s) for i, s in reversed(self.letters)), reduce=self.reduced)

    @classmethod
    def parse(cls, text, names, reduce=True):
        """Parse 'sigma*tau^-1*sigma' (separators '*', '.', or blanks); 'e' is the empty word."""
        text = text.strip()
        if text in ('', 'e'):
            return cls((), reduce=reduce)
        letters = []
        for token in re.split(r'[\s*.]+', text):
            if not token:
                continue
            m = _TOKEN_RE.match(token)
            if m is None or m.group(1) not in names:
                raise ParseError("bad generator token {!r} in {!r} (names: {})".format(token, text, list(names)))
            idx = names.index(m.group(1))
            power = int(m.group(2)) if m.group(2) is not None else 1
            sign = 1 if power > 0 else -1
            letters.extend([(idx, sign)] * abs(power))
        return cls(letters, reduce=reduce)

    def format(self, names):
        if not self.letters:
            return 'e'
        parts = []
        for i, s in self.letters:
            parts.append(names[i] if s > 0 else "{}^-1".format(names[i]))
        return '*'.join(parts)

    def __repr__(self):
        return "Word({})".format(self.letters)


class Group(object):
    """Interface shared by every group family.

    Elements are canonical hashable values, so equality of elements is
    equality of their representations.
    """
    kind = ''
    gen_names = ()

    @property
    def name(self):
        return self.kind

    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def base_generators(self):
        raise NotImplementedError

    def generators(self):
        """Symmetric generating set as (name, element) pairs, duplicates removed."""
        out = []
        seen = set()
        for name, g in zip(self.gen_names, self.base_generators()):
            for label, x in ((name, g), (name + '^-1', self.inv(g))):
                if x not in seen and x != self.identity():
                    seen.add(x)
                    out.append((label, x))
        return out

    def power(self, g, k):
        base = g if k >= 0 else self.inv(g)
        out = self.identity()
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def word_eval(self, word):
        """Left-to-right product of the word's letters."""
        gens = self.base_generators()
        inverses = [self.inv(g) for g in gens]
        out = self.identity()
        for i, s in word.letters:
            out = self.mul(out, gens[i] if s > 0 else inverses[i])
        return out

    def parse_word(self, text):
        return Word.parse(text, list(self.gen_names))

    def word_length(self, g):
        """Word length for the symmetric generators, or None if not available."""
        return None

    def format_element(self, g):
        raise NotImplementedError

    def parse_element(self, text):
        raise NotImplementedError

    def sort_key(self, g):
        return self.format_element(g)

    def describe(self):
        return {
            'kind': self.kind,
            'generators': [[n, self.format_element(g)] for n, g in zip(self.gen_names, self.base_generators())],
        }

    def __repr__(self):
        return "{}()".format(type(self).__name__)


def ball(group, radius, cap=100000):
    """Elements of word length <= radius, in BFS order."""
    gens = [g for _, g in group.generators()]
    e = group.identity()
    layer_of = {e: 0}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        if layer_of[x] == radius:
            continue
        for s in gens:
            y = group.mul(x, s)
            if y not in layer_of:
                layer_of[y] = layer_of[x] + 1
                order.append(y)
                if len(order) > cap:
                    raise CapExceededError('word ball', len(order), cap)
                queue.append(y)
    return order
