# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Piecewise-affine homeomorphisms with dyadic breakpoints and slopes 2^e.

A PLElement stores breakpoints b_1 < ... < b_k and, for each of the k+1
pieces, a slope exponent e_i and an offset c_i, so that on piece i the map is
x -> 2^e_i * x + c_i. Piece 0 starts at 0 ('unit' variant, domain [0, 1]) or
at -inf ('line' variant, domain R). Construction always canonicalizes:
adjacent pieces with identical (e, c) are merged.
"""
import re
from bisect import bisect_right

from exact.dyadic import Dyadic, dyadic_parse, dyadic_format
from util.errors import DomainError, ParseError

VARIANTS = ('unit', 'line')
ONE = Dyadic(1)
ZERO = Dyadic(0)

_TRIPLE_RE = re.compile(r'\(([^()]*)\)')


class PLElement(object):
    __slots__ = ('variant', 'breaks', 'exps', 'offs', '_images', '_hash')

    def __init__(self, variant, breaks, exps, offs, check=True):
        if variant not in VARIANTS:
            raise DomainError("unknown PL variant {!r}".format(variant))
        breaks = [Dyadic.coerce(b) for b in breaks]
        exps = [int(e) for e in exps]
        offs = [Dyadic.coerce(c) for c in offs]
        if len(exps) != len(breaks) + 1 or len(offs) != len(breaks) + 1:
            raise DomainError("PL data needs k breakpoints and k+1 pieces")
        # merge removable breakpoints
        mb, me, mo = [], [exps[0]], [offs[0]]
        for b, e, c in zip(breaks, exps[1:], offs[1:]):
            if e == me[-1] and c == mo[-1]:
                continue
            mb.append(b)
            me.append(e)
            mo.append(c)
        self.variant = variant
        self.breaks = tuple(mb)
        self.exps = tuple(me)
        self.offs = tuple(mo)
        self._images = None
        self._hash = None
        if check:
            self._check()

    def _check(self):
        for a, b in zip(self.breaks, self.breaks[1:]):
            if not a < b:
                raise DomainError("breakpoints must be strictly increasing: {} >= {}".format(a, b))
        for i, b in enumerate(self.breaks):
            left = b.scale_pow2(self.exps[i]) + self.offs[i]
            right = b.scale_pow2(self.exps[i + 1]) + self.offs[i + 1]
            if left != right:
                raise DomainError("discontinuity at {}: {} != {}".format(b, left, right))
        if self.variant == 'unit':
            if self.breaks and not (ZERO < self.breaks[0] and self.breaks[-1] < ONE):
                raise DomainError("unit-interval breakpoints must lie in (0, 1)")
            if self.offs[0] != ZERO:
                raise DomainError("unit-interval map must fix 0")
            if ONE.scale_pow2(self.exps[-1]) + self.offs[-1] != ONE:
                raise DomainError("unit-interval map must fix 1")
        else:
            for end in (0, -1):
                if self.exps[end] != 0 or not self.offs[end].is_integer():
                    raise DomainError("real-line map must be an integer translation near +-inf")

    # -- identity / hashing ----------------------------------------------
    def key(self):
        return (self.variant, self.breaks, self.exps, self.offs)

    def __eq__(self, other):
        return isinstance(other, PLElement) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __reduce__(self):
        return (PLElement, (self.variant, self.breaks, self.exps, self.offs, False))

    def is_identity(self):
        return not self.breaks and self.exps == (0,) and self.offs == (ZERO,)

    @property
    def tails(self):
        """Integer translations (p, q) left of the first and right of the last breakpoint."""
        if self.variant != 'line':
            return None
        return (self.offs[0].num, self.offs[-1].num)

    # -- evaluation -------------------------------------------------------
    def _in_domain(self, x):
        if self.variant == 'unit' and (x < ZERO or ONE < x):
            raise DomainError("{} is outside [0, 1]".format(x))

    def piece_at(self, x):
        return bisect_right(self.breaks, x)

    def __call__(self, x):
        x = Dyadic.coerce(x)
        self._in_domain(x)
        i = bisect_right(self.breaks, x)
        return x.scale_pow2(self.exps[i]) + self.offs[i]

    def breakpoint_images(self):
        if self._images is None:
            self._images = tuple(b.scale_pow2(e) + c for b, e, c in zip(self.breaks, self.exps, self.offs))
        return self._images

    def preimage(self, y):
        y = Dyadic.coerce(y)
        self._in_domain(y)
        i = bisect_right(self.breakpoint_images(), y)
        return (y - self.offs[i]).scale_pow2(-self.exps[i])

    # -- group law --------------------------------------------------------
    def inverse(self):
        return PLElement(self.variant, self.breakpoint_images(), [-e for e in self.exps],
                         [-(c.scale_pow2(-e)) for e, c in zip(self.exps, self.offs)], check=False)

    def compose(self, inner):
        """self o inner (inner applied first)."""
        if inner.variant != self.variant:
            raise DomainError("cannot compose {} and {} PL maps".format(self.variant, inner.variant))
        cuts = set(inner.breaks)
        cuts.update(inner.preimage(b) for b in self.breaks)
        cuts = sorted(cuts)
        if self.variant == 'unit':
            ends = [ZERO] + cuts + [ONE]
            samples = [(a + b).scale_pow2(-1) for a, b in zip(ends, ends[1:])]
        elif cuts:
            samples = [cuts[0] - 1]
            samples += [(a + b).scale_pow2(-1) for a, b in zip(cuts, cuts[1:])]
            samples.append(cuts[-1] + 1)
        else:
            samples = [ZERO]
        exps, offs = [], []
        for x in samples:
            i = bisect_right(inner.breaks, x)
            y = x.scale_pow2(inner.exps[i]) + inner.offs[i]
            j = bisect_right(self.breaks, y)
            exps.append(inner.exps[i] + self.exps[j])
            offs.append(inner.offs[i].scale_pow2(self.exps[j]) + self.offs[j])
        return PLElement(self.variant, cuts, exps, offs, check=False)

    # -- text -------------------------------------------------------------
    def to_text(self):
        lefts = ['0' if self.variant == 'unit' else '-inf'] + [dyadic_format(b) for b in self.breaks]
        body = ''.join('({},{},{})'.format(l, e, dyadic_format(c))
                       for l, e, c in zip(lefts, self.exps, self.offs))
        if self.variant == 'unit':
            return 'unit:' + body
        p, q = self.tails
        return 'line[{},{}]:{}'.format(p, q, body)

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        head, sep, body = text.partition(':')
        if not sep:
            raise ParseError("PL text needs a 'variant:' prefix: {!r}".format(text))
        variant = head.split('[', 1)[0]
        if variant not in VARIANTS:
            raise ParseError("unknown PL variant in {!r}".format(text))
        triples = _TRIPLE_RE.findall(body)
        if not triples or ''.join('({})'.format(t) for t in triples).replace(' ', '') != body.replace(' ', ''):
            raise ParseError("malformed PL pieces in {!r}".format(text))
        breaks, exps, offs = [], [], []
        for k, triple in enumerate(triples):
            parts = [p.strip() for p in triple.split(',')]
            if len(parts) != 3:
                raise ParseError("PL piece needs (left,exponent,offset): {!r}".format(triple))
            if k > 0:
                breaks.append(dyadic_parse(parts[0]))
            try:
                exps.append(int(parts[1]))
            except ValueError:
                raise ParseError("bad slope exponent {!r}".format(parts[1]))
            offs.append(dyadic_parse(parts[2]))
        try:
            return cls(variant, breaks, exps, offs)
        except DomainError as e:
            raise ParseError(str(e))

    def pieces(self):
        """(left, right, slope exponent, offset) rows; None marks an infinite end."""
        lefts = [ZERO if self.variant == 'unit' else None] + list(self.breaks)
        rights = list(self.breaks) + [ONE if self.variant == 'unit' else None]
        return list(zip(lefts, rights, self.exps, self.offs))

    def __str__(self):
        return self.to_text()

    __repr__ = __str__


def pl_identity(variant):
    return PLElement(variant, [], [0], [ZERO])


def pl_eval(g, x):
    return g(x)
