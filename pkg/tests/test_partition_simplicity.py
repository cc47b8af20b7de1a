import pytest
from hypothesis import given, strategies as st

from conftest import finite_signs, small_ordinal_dicts, ordinal_from_dict
from surreal import ordinal as O
from surreal import partition_simplicity as P
from surreal.concat_algebra import concat_add
from surreal.errors import DomainMismatch, Unknown
from surreal.surreal_core import (Surreal, ZERO, from_ordinal, from_sign_list, is_simpler,
                                  parse_signs)

S = parse_signs
Z, D, H = P.TRANSLATIONS_Z, P.TRANSLATIONS_D, P.HOMOTHETIES


def omega_times(signs):
    """omega times a finite number: every run becomes omega times as long."""
    runs = []
    for s in signs:
        if runs and runs[-1][0] == s:
            runs[-1][1] += 1
        else:
            runs.append([s, 1])
    return Surreal([(s, O.cantor_mul(O.OMEGA, n)) for s, n in runs])


heads = st.sampled_from(["0", "+^w", "-^w", "+^w -^w", "+^(w*2)", "-^w +^(w^2)"]).map(S)
tails = st.lists(st.sampled_from([1, -1]), max_size=4).map(from_sign_list)


@given(finite_signs.map(lambda a: a[:6]))
def test_integer_translations_give_omega_multiples(signs):
    assert P.smp_xi(Z, from_sign_list(signs)) == omega_times(signs)


@given(st.lists(st.sampled_from([1, -1]), max_size=5))
def test_dyadic_and_integer_translations_agree(signs):
    x = from_sign_list(signs)
    assert P.smp_xi(D, x) == P.smp_xi(Z, x)


@given(heads, tails)
def test_projection_strips_the_bounded_tail(p, t):
    x = concat_add(p, t)
    assert P.infinite_part(x) == (p, t)
    assert P.project_simple(Z, x) == p
    assert P.is_simple(Z, x) == (not t.runs)


@given(heads, tails, heads, tails)
def test_halo_comparisons_agree(p, t, q, u):
    a, b = concat_add(p, t), concat_add(q, u)
    pa, pb = P.project_simple(Z, a), P.project_simple(Z, b)
    if pa != pb:
        assert (pa < pb) == (a < b)


@given(heads, tails)
def test_simple_projection_is_simpler(p, t):
    x = concat_add(p, t)
    proj = P.project_simple(Z, x)
    assert is_simpler(proj, x) and P.is_simple(Z, proj)


@given(st.integers(0, 5))
def test_ordinals_map_to_ordinals(n):
    lam = from_ordinal(O.from_int(n))
    fine, coarse = P.smp_xi(P.trivial(), lam), P.smp_xi(Z, lam)
    assert fine == lam
    assert not coarse < fine
    assert P.smp_xi(H, lam) == from_ordinal(O.cantor_omega_pow(O.from_int(n)))


@pytest.mark.parametrize("alpha", ["0", "1", "2", "3", "w", "w+1", "w*2", "w^2"])
def test_homotheties_give_omega_powers(alpha):
    a = O.parse_ordinal(alpha)
    assert P.smp_xi(H, from_ordinal(a)) == from_ordinal(O.cantor_omega_pow(a))


def test_homotheties_beyond_ordinals():
    assert P.smp_xi(H, S("-")) == S("+ -^w")
    assert P.smp_xi(H, S("+ -")) == S("+^w -^(w^2)")
    # the image of -2 would need a halo around a non-ordinal point
    with pytest.raises(Unknown):
        P.smp_xi(H, S("- -"))


@given(small_ordinal_dicts.filter(bool), st.integers(0, 3))
def test_homothety_projection_keeps_the_leading_power(d, k):
    a = ordinal_from_dict(d)
    lead = O.cantor_omega_pow(a.terms[0][0])
    assert P.project_simple(H, from_ordinal(a)) == from_ordinal(lead)
    assert P.is_simple(H, from_ordinal(a)) == (a == lead)


def test_simple_number_structure():
    T = P.smp_structure(Z)
    assert T.member(S("+^w -^w")) and not T.member(S("+^w -"))
    assert T.xi_inv(S("+^w -^w")) == S("+ -")
    assert P.smp_xi(P.trivial(), S("+ - +")) == S("+ - +")


def test_sharpness_probe():
    for x in ("+^w", "+^w -^w", "+^(w*2)", "-^w +^w"):
        assert P.sharpness_probe(Z, S(x)) is True
    for a in ("1", "w", "w^2", "w^w"):
        assert P.sharpness_probe(H, from_ordinal(O.parse_ordinal(a))) is True
    assert P.sharpness_probe(Z, S("+^w +")) is None


def test_refinement_and_joins():
    samples = [concat_add(S(h), S(t)) for h in ("0", "+^w", "+^w -^w") for t in ("0", "+", "- +")]
    assert P.refines(P.trivial(), Z, samples)
    assert P.refines(Z, D, samples) and P.refines(D, Z, samples)
    assert P.refines(Z, P.trivial(), samples) is False
    assert P.join_actions([Z, D]).name == "join(translations(Z),translations(D))"
    assert P.join_actions([Z]) is Z
    with pytest.raises(DomainMismatch):
        P.join_actions([Z, H])


def test_split_tail():
    assert P.split_tail(S("+^w - +")) == (S("+^w"), S("- +"))
    assert P.split_tail(ZERO) == (ZERO, ZERO)
