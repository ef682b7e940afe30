# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exact import (Dyadic, as_weight, dyadic_format, dyadic_parse, format_weight, get_weight_mode, parse_weight,
                   pow2, set_weight_mode, weight_mode)
from util.errors import ConfigError, DomainError, ParseError


def test_canonical_form():
    assert Dyadic(4, 2) == Dyadic(1)
    assert Dyadic(6, 2) == Dyadic(3, 1)
    assert (Dyadic(6, 2).num, Dyadic(6, 2).exp) == (3, 1)
    assert Dyadic(0, 5).exp == 0
    assert Dyadic(3, -2) == 12
    assert hash(Dyadic(2)) == hash(2)
    assert len({Dyadic(2, 1), Dyadic(1), Dyadic(4, 2)}) == 1


def test_text_round_trip():
    assert dyadic_format(Dyadic(3, 2)) == '3/2^2'
    assert dyadic_format(Dyadic(-5)) == '-5'
    assert dyadic_parse('3/4') == Dyadic(3, 2)
    assert dyadic_parse(' -3/2^2 ') == Dyadic(-3, 2)
    assert dyadic_parse('12/8') == Dyadic(3, 1)
    for bad in ('1/3', '0.5', 'x', '1/0'):
        try:
            dyadic_parse(bad)
        except ParseError:
            continue
        raise AssertionError(bad)


def test_arithmetic():
    half, quarter = Dyadic(1, 1), Dyadic(1, 2)
    assert half + quarter == Dyadic(3, 2)
    assert half - quarter == quarter
    assert 1 - half == half
    assert half * quarter == Dyadic(1, 3)
    assert 3 * half == Dyadic(3, 1)
    assert -half == Dyadic(-1, 1)
    assert abs(Dyadic(-3, 2)) == Dyadic(3, 2)
    assert Dyadic(3, 2).scale_pow2(3) == 6
    assert Dyadic(3).scale_pow2(-2) == Dyadic(3, 2)
    assert pow2(-3) == Dyadic(1, 3)
    assert pow2(4) == 16
    # numerators are unbounded
    big = Dyadic(1, 200)
    assert (big * pow2(200)) == 1


def test_ordering_and_inspection():
    assert Dyadic(1, 1) < Dyadic(3, 2) < 1
    assert Dyadic(-1) < 0
    assert sorted([Dyadic(1), Dyadic(-1, 3), Dyadic(5, 3)]) == [Dyadic(-1, 3), Dyadic(5, 3), Dyadic(1)]
    assert Dyadic(-1, 1).floor() == -1
    assert Dyadic(7, 1).floor() == 3
    assert Dyadic(3, 2).floor_log2() == -1
    assert Dyadic(3, 2).ceil_log2() == 0
    assert Dyadic(1).floor_log2() == 0
    assert Dyadic(1).ceil_log2() == 0
    assert Dyadic(5).ceil_log2() == 3
    assert Dyadic(1, 3).is_power_of_two()
    assert Dyadic(8).is_power_of_two()
    assert not Dyadic(3).is_power_of_two()
    assert not Dyadic(-2).is_power_of_two()
    assert Dyadic(3, 3).to_fraction() == Fraction(3, 8)
    assert float(Dyadic(3, 3)) == 0.375
    try:
        Dyadic(0).floor_log2()
    except DomainError:
        pass
    else:
        raise AssertionError('floor_log2(0)')


def test_coerce():
    assert Dyadic.coerce(Fraction(3, 8)) == Dyadic(3, 3)
    assert Dyadic.coerce('5/2^1') == Dyadic(5, 1)
    assert Dyadic.coerce(7) == 7
    for bad in (Fraction(1, 3), True, 0.5):
        try:
            Dyadic.coerce(bad)
        except DomainError:
            continue
        raise AssertionError(bad)


def test_weight_modes():
    assert get_weight_mode() == 'exact'
    assert as_weight('1/2') == Fraction(1, 2)
    assert parse_weight('1e-6') == Fraction(1, 1000000)
    assert as_weight(Dyadic(3, 2)) == Fraction(3, 4)
    assert format_weight(Fraction(1, 2)) == '1/2'
    assert format_weight(Fraction(6, 2)) == '3'
    with weight_mode('float'):
        assert as_weight('1/2') == 0.5
        assert isinstance(as_weight(1), float)
        assert format_weight(0.25) == '0.25'
    assert get_weight_mode() == 'exact'
    try:
        set_weight_mode('decimal')
    except ConfigError as err:
        assert err.key == 'NUMERIC.weight_mode'
    else:
        raise AssertionError('decimal mode accepted')
    try:
        parse_weight('one half')
    except ParseError:
        pass
    else:
        raise AssertionError('malformed weight accepted')


if __name__ == "__main__":
    test_canonical_form()
    test_text_round_trip()
    test_arithmetic()
    test_ordering_and_inspection()
    test_coerce()
    test_weight_modes()
    print("OK\n")
