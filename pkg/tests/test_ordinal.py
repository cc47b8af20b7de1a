import pytest
from hypothesis import given, strategies as st

from conftest import ordinal_from_dict, ordinals, small_ordinal_dicts
from oracles import ord_add, ord_less, ord_mul, ord_natural_add, ord_natural_mul
from surreal import ordinal as O
from surreal.errors import NotAChain

P = O.parse_ordinal


# ---------------------------------------------------------------- against the oracle

@given(small_ordinal_dicts, small_ordinal_dicts)
def test_cantor_sum_matches_oracle(a, b):
    assert O.cantor_add(ordinal_from_dict(a), ordinal_from_dict(b)) == ordinal_from_dict(ord_add(a, b))


@given(small_ordinal_dicts, small_ordinal_dicts)
def test_cantor_product_matches_oracle(a, b):
    assert O.cantor_mul(ordinal_from_dict(a), ordinal_from_dict(b)) == ordinal_from_dict(ord_mul(a, b))


@given(small_ordinal_dicts, small_ordinal_dicts)
def test_natural_operations_match_oracle(a, b):
    x, y = ordinal_from_dict(a), ordinal_from_dict(b)
    assert O.hessenberg_add(x, y) == ordinal_from_dict(ord_natural_add(a, b))
    assert O.hessenberg_mul(x, y) == ordinal_from_dict(ord_natural_mul(a, b))


@given(small_ordinal_dicts, small_ordinal_dicts)
def test_order_matches_oracle(a, b):
    assert (ordinal_from_dict(a) < ordinal_from_dict(b)) == ord_less(a, b)


# ---------------------------------------------------------------- laws

@given(ordinals, ordinals, ordinals)
def test_cantor_sum_and_product_are_associative(a, b, c):
    assert O.cantor_add(O.cantor_add(a, b), c) == O.cantor_add(a, O.cantor_add(b, c))
    assert O.cantor_mul(O.cantor_mul(a, b), c) == O.cantor_mul(a, O.cantor_mul(b, c))


@given(ordinals, ordinals, ordinals)
def test_product_distributes_on_the_left(a, b, c):
    assert O.cantor_mul(a, O.cantor_add(b, c)) == O.cantor_add(O.cantor_mul(a, b), O.cantor_mul(a, c))


@given(ordinals, ordinals)
def test_natural_operations_commute(a, b):
    assert O.hessenberg_add(a, b) == O.hessenberg_add(b, a)
    assert O.hessenberg_mul(a, b) == O.hessenberg_mul(b, a)


@given(ordinals, ordinals)
def test_left_subtraction_inverts_sum(a, b):
    assert O.left_sub(a, O.cantor_add(a, b)) == b


@given(ordinals, ordinals.filter(bool))
def test_left_division(a, b):
    q, r = O.left_divmod(a, b)
    assert r < b
    assert O.cantor_add(O.cantor_mul(b, q), r) == a


@given(ordinals)
def test_text_round_trip(a):
    assert O.parse_ordinal(O.format_ordinal(a)) == a
    assert O.format_ordinal(O.parse_ordinal(O.format_ordinal(a))) == O.format_ordinal(a)


@given(ordinals.filter(O.is_limit), st.integers(0, 20))
def test_fundamental_sequence_is_below_and_increasing(a, n):
    assert O.fundamental(a, n) < O.fundamental(a, n + 1) < a


# ---------------------------------------------------------------- fixed values

@pytest.mark.parametrize("text", ["0", "5", "w", "w+1", "w*3", "w^2*3+w+1", "w^(w+1)", "w^(w^w)", "w^(w*2)+7"])
def test_canonical_text_is_stable(text):
    assert O.format_ordinal(P(text)) == text


@pytest.mark.parametrize("a, b, cantor, natural", [
    ("1", "w", "w", "w+1"),
    ("w", "1", "w+1", "w+1"),
    ("w*2+1", "w^2", "w^2", "w^2+w*2+1"),
    ("w+3", "w*2", "w*3", "w*3+3"),
])
def test_sums(a, b, cantor, natural):
    assert O.cantor_add(P(a), P(b)) == P(cantor)
    assert O.hessenberg_add(P(a), P(b)) == P(natural)


@pytest.mark.parametrize("a, b, cantor, natural", [
    ("2", "w", "w", "w*2"),
    ("w", "2", "w*2", "w*2"),
    ("w+1", "w+1", "w^2+w+1", "w^2+w*2+1"),
    ("w^2", "w^w", "w^w", "w^(w+2)"),
])
def test_products(a, b, cantor, natural):
    assert O.cantor_mul(P(a), P(b)) == P(cantor)
    assert O.hessenberg_mul(P(a), P(b)) == P(natural)


def test_omega_powers():
    assert O.cantor_omega_pow(O.ZERO) == O.ONE
    assert O.cantor_omega_pow(P("w+1")) == P("w^(w+1)")
    assert O.cantor_pow(P("w+1"), 2) == P("w^2+w+1")


def test_limits_and_successors():
    assert O.is_limit(P("w^2+w")) and not O.is_limit(P("w+1")) and not O.is_limit(O.ZERO)
    assert O.predecessor(P("w+1")) == O.OMEGA
    with pytest.raises(ValueError):
        O.predecessor(O.OMEGA)


def test_sup_of_a_chain_needs_a_correct_hint():
    assert O.ord_sup(lambda n: O.from_int(n), O.OMEGA) == O.OMEGA
    assert O.ord_sup(lambda n: O.cantor_add(O.OMEGA, O.from_int(n)), P("w*2")) == P("w*2")
    with pytest.raises(NotAChain):
        O.ord_sup(lambda n: O.from_int(n))
    with pytest.raises(NotAChain):
        O.ord_sup(lambda n: O.from_int(n), P("w*2"))
    with pytest.raises(NotAChain):
        O.ord_sup(lambda n: O.from_int(n), P("w+1"))
    assert O.ord_sup([P("w"), P("3"), P("w+2")]) == P("w+2")


def test_bad_text_is_rejected():
    for text in ["w^", "w+", "(w", "x", "w**2"]:
        with pytest.raises(ValueError):
            O.parse_ordinal(text)
