from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import finite_numbers, finite_signs
from oracles import inc_signs, scale_signs, sign_value
from surreal import ordinal as O
from surreal import substructure as SS
from surreal.bracket_engine import nats
from surreal.errors import NotMember, NotPositive, Unsupported
from surreal.surreal_core import (ONE, ZERO, from_dyadic, from_ordinal, from_sign_list, is_simpler,
                                  length, parse_signs, to_dyadic)

S = parse_signs

STRUCTURES = {
    "No": SS.NO,
    "shift": SS.make_shift(S("+ -")),
    "shift-transfinite": SS.make_shift(S("+^w -")),
    "scale-half": SS.make_scale(from_dyadic(Fraction(1, 2))),
    "scale-omega": SS.make_scale(S("+^w")),
    "inc": SS.INC,
    "neg-inc": SS.make_negate(SS.INC),
    "unit-interval": SS.make_cut_interval(SS.NO, [ZERO], [ONE]),
    "above-integers": SS.make_cut_interval(SS.NO, [nats()], []),
    "infinitesimals": SS.INFINITESIMALS,
    "tail": SS.make_dyadic_tail(Fraction(1, 2)),
    "imbrication": SS.imbricate(SS.INFINITESIMALS, SS.INC),
    "omega-squared": SS.nosucc_pow(2),
}
structures = st.sampled_from(sorted(STRUCTURES))
short_numbers = st.lists(st.sampled_from([1, -1]), max_size=5).map(from_sign_list)


@given(structures, short_numbers, short_numbers)
def test_parameterization_preserves_order_and_simplicity(name, x, y):
    T = STRUCTURES[name]
    tx, ty = T.xi(x), T.xi(y)
    assert (x < y) == (tx < ty)
    assert is_simpler(x, y) == is_simpler(tx, ty)


@given(structures, short_numbers)
def test_images_are_members_and_invert(name, x):
    T = STRUCTURES[name]
    y = T.xi(x)
    assert T.member(y)
    assert T.xi_inv(y) == x


@given(structures, st.lists(st.sampled_from([1, -1]), max_size=4).map(from_sign_list))
def test_recursion_on_options_matches_closed_form(name, x):
    T = STRUCTURES[name]
    assert SS.xi_generic(T, x) == T.xi(x)


@given(finite_signs)
def test_inc_matches_its_tree_rule(signs):
    assert SS.INC.xi(from_sign_list(signs)) == from_sign_list(inc_signs(signs))


@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=4).filter(lambda a: a[0] == 1),
       st.lists(st.sampled_from([1, -1]), max_size=5))
def test_finite_scale_matches_sign_substitution(a, signs):
    T = SS.make_scale(from_sign_list(a))
    assert T.xi(from_sign_list(signs)) == from_sign_list(scale_signs(a, signs))


@given(finite_signs)
def test_unit_interval_prefixes_one_half(signs):
    T = STRUCTURES["unit-interval"]
    assert T.xi(from_sign_list(signs)) == from_sign_list([1, -1] + signs)


@given(finite_numbers)
def test_inc_lengthens(x):
    assert length(x) < length(SS.INC.xi(x))


@pytest.mark.parametrize("name, x, want", [
    ("shift", "-", "+ - -"),
    ("scale-half", "- +", "- + + -"),
    ("scale-omega", "+ -", "+^w -^w"),
    ("neg-inc", "+", "- + -"),
    ("unit-interval", "0", "+ -"),
    ("above-integers", "0", "+^w"),
    ("above-integers", "+ -", "+^(w+1) -"),
    ("infinitesimals", "+", "+ -^w"),
    ("infinitesimals", "- +", "- +^(w+1)"),
    ("tail", "+", "+ - + -^w"),
    ("imbrication", "-", "+ -^(w+1) +"),
    ("omega-squared", "+ -", "+^(w^2) -^(w^2)"),
])
def test_fixed_images(name, x, want):
    assert STRUCTURES[name].xi(S(x)) == S(want)


def test_inc_at_minus_two():
    assert to_dyadic(SS.INC.xi(from_dyadic(-2))) == Fraction(11, 16)
    assert sign_value(inc_signs([-1, -1])) == Fraction(11, 16)


def test_brackets_inside_structures():
    assert SS.INC.bracket([], []) == ONE
    assert SS.make_cut_interval(SS.INC, [ONE], []).xi(S("-")) == S("+^3 - +")
    assert STRUCTURES["unit-interval"].root() == S("+ -")


def test_membership():
    assert SS.INC.member(S("+ - +")) and not SS.INC.member(S("+ -"))
    assert STRUCTURES["shift"].member(S("+ - +^w")) and not STRUCTURES["shift"].member(S("+"))
    assert not SS.INFINITESIMALS.member(S("+^2 -^w"))
    with pytest.raises(NotMember):
        SS.INFINITESIMALS.xi_inv(S("+"))


def test_fixed_point_classes():
    assert SS.make_fix(SS.make_shift(S("+"))).name == "shift(+^w)"
    assert SS.make_fix(SS.make_shift(S("-^2"))).a == S("-^w")
    assert SS.make_fix(SS.make_scale(from_dyadic(2))).a == S("+^w")
    assert SS.make_fix(SS.make_scale(S("+^w"))).a == from_ordinal(O.parse_ordinal("w^w"))
    with pytest.raises(Unsupported):
        SS.make_fix(SS.make_scale(S("+ -")))


@given(short_numbers)
def test_fixed_points_are_fixed_and_in_every_image(x):
    T = SS.make_shift(S("+^2"))
    y = SS.make_fix(T).xi(x)
    assert SS.is_fixed(T, y)
    assert all(SS.in_iterated_image(T, n, y) for n in range(6))


@given(short_numbers)
def test_iterates_eventually_drop_out(x):
    T = SS.make_shift(S("+^2"))
    z = SS.xi_iter(T, 2, x)
    assert SS.in_iterated_image(T, 2, z)
    assert not SS.in_iterated_image(T, int(length(z)) + 1, z)


@given(st.integers(0, 4), st.integers(0, 4), short_numbers)
def test_imbrication_of_omega_powers(a, b, x):
    sa, sb = SS.nosucc_pow(a), SS.nosucc_pow(b)
    assert SS.imbricate(sa, sb).xi(x) == SS.nosucc_pow(O.cantor_add(a, b)).xi(x)
    assert SS.imbrication_power(sa, b).xi(x) == SS.nosucc_pow(O.cantor_mul(a, b)).xi(x)


def test_left_factors():
    assert SS.is_left_factor(SS.make_shift(S("+")), SS.make_shift(S("+ -")))
    assert not SS.is_left_factor(SS.make_shift(S("-")), SS.make_shift(S("+ -")))
    assert SS.is_left_factor(SS.make_scale(S("+^w")), SS.nosucc_pow(2))
    assert SS.imbrication_power(SS.INC, 0) is SS.NO


def test_scale_needs_a_positive_factor():
    with pytest.raises(NotPositive):
        SS.make_scale(S("-"))
