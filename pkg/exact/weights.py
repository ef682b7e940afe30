# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Global weight mode for measures and LP values.

'exact' stores weights as fractions.Fraction, 'float' as Python floats. The
mode is process-wide for a run and is echoed into every artifact.
"""
from contextlib import contextmanager
from fractions import Fraction

from .dyadic import Dyadic
from util.errors import ConfigError, ParseError

WEIGHT_MODES = ('exact', 'float')
FLOAT_TOLERANCE = 1e-9

_state = {'mode': 'exact'}


def get_weight_mode():
    return _state['mode']


def set_weight_mode(mode):
    if mode not in WEIGHT_MODES:
        raise ConfigError('NUMERIC.weight_mode', "expected one of {}, got {!r}".format(WEIGHT_MODES, mode))
    _state['mode'] = mode


def is_exact():
    return _state['mode'] == 'exact'


@contextmanager
def weight_mode(mode):
    previous = _state['mode']
    set_weight_mode(mode)
    try:
        yield
    finally:
        _state['mode'] = previous


def weight_tolerance():
    return 0 if is_exact() else FLOAT_TOLERANCE


def parse_weight(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("malformed weight: {!r}".format(text))


def as_weight(value):
    """Convert a number or numeric text to the current mode's weight type."""
    if isinstance(value, str):
        value = parse_weight(value)
    elif isinstance(value, Dyadic):
        value = value.to_fraction()
    if is_exact():
        return Fraction(value)
    return float(value)


def format_weight(w):
    if isinstance(w, Fraction):
        if w.denominator == 1:
            return str(w.numerator)
        return "{}/{}".format(w.numerator, w.denominator)
    if isinstance(w, int):
        return str(w)
    return repr(float(w))
