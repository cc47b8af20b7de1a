from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import finite_signs, run_numbers
from oracles import dyadic_signs, sign_value
from surreal import ordinal as O
from surreal.errors import NotAChain, NotDyadic, NotFiniteLength, NotOrdinal
from surreal.surreal_core import (MINUS, PLUS, OmegaChain, Surreal, ZERO, canonical_options,
                                  check_chain, common_prefix, compare, concat, format_signs,
                                  from_dyadic, from_ordinal, from_sign_list, is_ordinal,
                                  is_simpler, length, parse_signs, prefix_options, restrict,
                                  sign_at, suffix, sup_chain, to_dyadic, to_ordinal)

S = parse_signs


@given(finite_signs)
def test_dyadic_value_matches_tree_decoding(signs):
    assert to_dyadic(from_sign_list(signs)) == sign_value(signs)


@given(finite_signs)
def test_from_dyadic_finds_the_tree_node(signs):
    q = sign_value(signs)
    assert from_dyadic(q) == from_sign_list(dyadic_signs(q))


@given(finite_signs, finite_signs)
def test_order_matches_values(a, b):
    x, y = from_sign_list(a), from_sign_list(b)
    assert (x < y) == (sign_value(a) < sign_value(b))
    assert (compare(x, y) == 0) == (a == b)


@given(finite_signs, finite_signs)
def test_simplicity_is_the_prefix_relation(a, b):
    assert is_simpler(from_sign_list(a), from_sign_list(b)) == (b[:len(a)] == a)


@given(run_numbers())
def test_sign_text_round_trip(x):
    assert parse_signs(format_signs(x)) == x


@given(run_numbers(), run_numbers())
def test_common_prefix_is_the_longest_shared_segment(x, y):
    p = common_prefix(x, y)
    assert is_simpler(p, x) and is_simpler(p, y)
    if p != x and p != y:
        n = length(p)
        assert sign_at(x, n) != sign_at(y, n)


@given(run_numbers(), run_numbers())
def test_restrict_and_suffix_split_a_concatenation(x, y):
    xy = concat(x, y)
    assert restrict(xy, length(x)) == x
    assert suffix(xy, x) == y
    assert length(xy) == O.cantor_add(length(x), length(y))


@given(run_numbers())
def test_negation_flips_every_sign(x):
    assert [(-s, n) for s, n in x.runs] == list((-x).runs)
    assert -(-x) == x


@given(run_numbers())
def test_canonical_options_bracket_the_number(x):
    left, right = canonical_options(x)
    for b in left:
        items = check_chain(b) if isinstance(b, OmegaChain) else [b]
        assert all(v < x and is_simpler(v, x) for v in items)
    for b in right:
        items = check_chain(b) if isinstance(b, OmegaChain) else [b]
        assert all(x < v and is_simpler(v, x) for v in items)


@given(finite_signs)
def test_prefix_options_are_all_initial_segments(signs):
    left, right = prefix_options(from_sign_list(signs))
    assert len(left) + len(right) == len(signs)
    assert sorted(int(length(p)) for p in left + right) == list(range(len(signs)))


def test_run_text():
    x = Surreal([(PLUS, O.OMEGA), (MINUS, O.from_int(3)), (PLUS, O.ONE)])
    assert format_signs(x) == "+^w -^3 +"
    assert format_signs(ZERO) == "0"
    assert S("+^(w+1) -") == Surreal([(PLUS, O.parse_ordinal("w+1")), (MINUS, O.ONE)])
    assert S("+ +") == S("+^2")


@pytest.mark.parametrize("text, value", [
    ("0", 0), ("+", 1), ("-", -1), ("+ -", Fraction(1, 2)), ("+^2 - +", Fraction(7, 4)),
    ("- + + -", Fraction(-3, 8)), ("+ - +^2", Fraction(7, 8)),
])
def test_known_values(text, value):
    assert to_dyadic(S(text)) == value
    assert from_dyadic(value) == S(text)


def test_ordinals_are_runs_of_plus():
    a = O.parse_ordinal("w^2+3")
    assert from_ordinal(a) == S("+^(w^2+3)")
    assert to_ordinal(from_ordinal(a)) == a
    assert is_ordinal(ZERO) and not is_ordinal(S("+ -"))
    with pytest.raises(NotOrdinal):
        to_ordinal(S("-"))


def test_transfinite_order():
    omega = S("+^w")
    assert S("+^100") < omega < S("+^w +")
    assert S("+^w -") < omega
    assert S("+^w -^w") < S("+^w - +") < omega
    assert S("+ -^w") < S("+ -^5")
    assert ZERO < S("+ -^w")


def test_conversion_errors():
    with pytest.raises(NotDyadic):
        from_dyadic(Fraction(1, 3))
    with pytest.raises(NotDyadic):
        to_dyadic(S("+^w"))
    with pytest.raises(NotFiniteLength):
        prefix_options(S("+^w"))
    with pytest.raises(ValueError):
        parse_signs("+^")


def test_chain_supremum_checks_its_hint():
    assert sup_chain(lambda n: S("+").extended(MINUS, n + 1), S("+ -^w")) == S("+ -^w")
    with pytest.raises(NotAChain):
        sup_chain(lambda n: S("+").extended(MINUS, n + 1), S("+^w"))
    with pytest.raises(NotAChain):
        check_chain(OmegaChain(lambda n: S("+"), True, S("+^w"), "constant"))


@given(st.integers(0, 30))
def test_sign_at_reads_runs(n):
    x = S("+^3 -^w +")
    assert sign_at(x, O.from_int(n)) == (PLUS if n < 3 else MINUS)
    assert sign_at(x, O.OMEGA) == PLUS
