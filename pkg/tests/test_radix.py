"""Digit-level arithmetic in base p/q."""

from fractions import Fraction

import pytest

from stanleygrid.radix import (
    BASE_3,
    BASE_3_2,
    InvalidDigitError,
    RationalBase,
    add_two,
    canonicalize,
    evaluate,
    is_canonical,
    represent,
    scaled_value,
)

BASE32_PREFIX = ["0", "1", "2", "20", "21", "22", "210", "211", "212",
                 "2100", "2101", "2102", "2120"]


def test_base32_strings_for_small_integers():
    assert [represent(n) for n in range(13)] == BASE32_PREFIX


def test_represent_plain_bases():
    assert represent(5, BASE_3) == "12"
    assert represent(0, BASE_3) == "0"
    assert represent(42, RationalBase(10)) == "42"
    assert represent(7, RationalBase(2)) == "111"


def test_represent_rejects_negatives():
    with pytest.raises(ValueError):
        represent(-1)


def test_base_validation():
    with pytest.raises(ValueError):
        RationalBase(2, 2)
    with pytest.raises(ValueError):
        RationalBase(6, 4)  # not in lowest terms
    with pytest.raises(ValueError):
        RationalBase(3, 5)
    assert str(RationalBase.parse("3/2")) == "3/2"
    assert str(RationalBase.parse("7")) == "7"


def test_evaluate_is_exact():
    v = evaluate("212021")
    assert v == 31
    assert isinstance(v, Fraction)
    assert scaled_value("212021") == (992, 5)  # 992 / 2^5 = 31
    assert evaluate("11") == Fraction(5, 2)
    assert evaluate("0") == 0
    assert evaluate("212021", BASE_3) == 628


def test_evaluate_ignores_leading_zeros():
    for w in ("212", "10", "2"):
        assert evaluate("00" + w) == evaluate(w)


def test_round_trip_three_bases():
    for base in (BASE_3_2, BASE_3, RationalBase(5, 3)):
        for n in range(3000):
            w = represent(n, base)
            assert is_canonical(w)
            assert evaluate(w, base) == n


def test_add_two_examples():
    assert add_two("0") == "2"
    assert add_two("1") == "20"
    assert add_two("2") == "21"
    assert add_two("210") == "212"
    assert add_two("212021") == "212210"


def test_add_two_tracks_represent():
    w = "0"
    for n in range(0, 300):
        assert w == represent(2 * n)
        w = add_two(w)


def test_add_two_exhaustive_short():
    import itertools
    words = ["0"]
    for length in range(1, 8):
        for lead in "12":
            for rest in itertools.product("012", repeat=length - 1):
                words.append(lead + "".join(rest))
    for w in words:
        w2 = add_two(w)
        assert evaluate(w2) == evaluate(w) + 2
        assert is_canonical(w2)


def test_add_two_rejects_bad_input():
    with pytest.raises(InvalidDigitError):
        add_two("13")
    with pytest.raises(InvalidDigitError):
        add_two("012")
    with pytest.raises(InvalidDigitError):
        add_two("")


def test_evaluate_rejects_digits_at_or_above_p():
    with pytest.raises(InvalidDigitError):
        evaluate("3", BASE_3_2)
    with pytest.raises(InvalidDigitError):
        evaluate("19", RationalBase(9, 2))
    with pytest.raises(InvalidDigitError):
        evaluate("1x2")


def test_canonicalize():
    assert canonicalize("000") == "0"
    assert canonicalize("0012") == "12"
    assert canonicalize("12") == "12"
