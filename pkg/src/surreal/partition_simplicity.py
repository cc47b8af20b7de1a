"""Simplicity relative to a group of increasing maps.

The halo of ``v`` under a group ``G`` is the convex hull of its orbit.
A number is ``G``-simple when it is the simplest element of its halo;
the simple numbers form a substructure whose parameterization is
computed here by the option recursion, where each option is replaced
by (a cofinal family of) its halo.

Halos are given by omega-chains with explicit limits.  Only two
families of points are supported: numbers of the form "purely infinite
followed by a finite tail" for translations, and ordinals for
homotheties; anything else raises ``Unknown``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List

from . import ordinal as O
from .bracket_engine import Single, above, as_family, below, is_cofinal_wrt
from .concat_algebra import concat_add, concat_mul
from .conway_field import add
from .errors import DomainMismatch, NotSharp, Unknown
from .substructure import NO, CutInterval, Substructure, descend_inverse
from .surreal_core import (MINUS, PLUS, OmegaChain, Surreal, ZERO, canonical_options,
                           check_chain, from_dyadic, from_int, from_ordinal, is_ordinal, is_simpler,
                           restrict, suffix, to_ordinal)

OMEGA = from_ordinal(O.OMEGA)


@dataclass
class GroupAction:
    name: str
    generators: List[Callable[[Surreal, int], Surreal]]
    upper: Callable[[Surreal], list]
    lower: Callable[[Surreal], list]
    upper_of_chain: Callable[[OmegaChain], list]
    lower_of_chain: Callable[[OmegaChain], list]
    image_limit: Callable[[Surreal], Surreal]
    domain: Substructure = NO
    sharp: bool = False
    budget: O.Ordinal = None
    memo: dict = field(default_factory=dict, repr=False)

    def apply(self, x, n, which=0):
        return self.generators[which](x, n)

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------- translations

def _purely_infinite(p):
    return all(O.is_limit(n) for _, n in p.runs)


def infinite_part(y):
    """``(p, t)`` with ``p`` purely infinite, ``t`` bounded by an integer, ``y = p`` then ``t``.

    ``p`` keeps every whole run of limit length and the limit part of the
    first run that has a finite part; what is left starts with a finite run.
    """
    kept = []
    for sign, n in y.runs:
        if O.is_limit(n):
            kept.append((sign, n))
            continue
        body = O.Ordinal._make(n.terms[:-1])
        if body.terms:
            kept.append((sign, body))
        break
    p = Surreal(kept)
    return p, suffix(y, p)


def split_tail(y):
    """``infinite_part`` with the extra demand that the tail has finite length."""
    p, t = infinite_part(y)
    if not t.is_finite():
        raise Unknown(f"{y} is not purely infinite plus a finite tail")
    return p, t


def _translate(amount):
    step = from_dyadic(amount)

    def apply(y, n):
        p, t = split_tail(y)
        shift = ZERO
        for _ in range(abs(n)):
            shift = add(shift, step if n > 0 else -step)
        return concat_add(p, add(t, shift))

    return apply


def translations(amounts=(1,), name=None):
    amounts = [Fraction(a) for a in amounts]
    gens = [_translate(a) for a in amounts]

    # the halo of p then t is p plus the bounded numbers, cofinal with p + n
    def offsets(p, sign):
        return OmegaChain(lambda n: concat_add(p, from_int(sign * n)), sign == PLUS,
                          p.extended(sign, O.OMEGA), f"{p}{'+' if sign == PLUS else '-'}G")

    def upper(v):
        return [offsets(infinite_part(v)[0], PLUS)]

    def lower(v):
        return [offsets(infinite_part(v)[0], MINUS)]

    def of_chain(sign):
        def union(chain):
            h = chain.limit
            if _purely_infinite(h):
                return [OmegaChain(lambda n: concat_add(infinite_part(chain[n])[0],
                                                        from_int(sign * n)),
                                   sign == PLUS, h, f"halo of {chain.name}")]
            return [offsets(infinite_part(h)[0], sign)]
        return union

    label = name or ("translations(Z)" if amounts == [1] else
                     "translations(" + ",".join(str(a) for a in amounts) + ")")
    return GroupAction(label, gens, upper, lower, of_chain(PLUS), of_chain(MINUS),
                       image_limit=lambda h: concat_mul(OMEGA, h), sharp=True)


TRANSLATIONS_Z = translations((1,), "translations(Z)")
TRANSLATIONS_D = translations((Fraction(1, 2), Fraction(3, 4)), "translations(D)")


# ---------------------------------------------------------------- homotheties

POSITIVE = CutInterval(NO, [ZERO], [], name="positive")


def _ordinal_point(v):
    if not is_ordinal(v) or not v.runs:
        raise Unknown(f"homotheties act only on positive ordinals, not {v}")
    return to_ordinal(v)


def _double(v, n):
    a = _ordinal_point(v)
    if n >= 0:
        return from_ordinal(O.hessenberg_mul(a, 2 ** n))
    coefs = [c for _, c in a.terms]
    if any(c % (2 ** -n) for c in coefs):
        raise Unknown(f"{v} / 2^{-n} is not an ordinal")
    return from_ordinal(O.Ordinal._make((e, c // 2 ** -n) for e, c in a.terms))


def _lead_power(a):
    return O.cantor_omega_pow(a.terms[0][0])


def _homothety_upper(v):
    a = _ordinal_point(v)
    lim = from_ordinal(O.cantor_omega_pow(O.successor(a.terms[0][0])))
    return [OmegaChain(lambda n: _double(v, n), True, lim, f"{v}*2^n")]


def _homothety_lower(v):
    a = _ordinal_point(v)
    unit = from_ordinal(_lead_power(a))
    halves = Surreal([(PLUS, 1)])
    # unit * 2^-n as a concatenation product; the limit is unit * (1/omega)
    return [OmegaChain(lambda n: concat_mul(unit, halves.extended(MINUS, n)), False,
                       concat_mul(unit, halves.extended(MINUS, O.OMEGA)), f"{v}/2^n")]


def _homothety_chain(sign):
    def union(chain):
        h = chain.limit
        lam = _ordinal_point(h)
        if sign == MINUS:
            raise Unknown("lower halos of ordinal chains are not needed for ordinal inputs")
        if len(lam.terms) == 1 and lam.terms[0][1] == 1:
            lim = h
        else:
            lim = from_ordinal(O.cantor_omega_pow(O.successor(lam.terms[0][0])))
        return [OmegaChain(lambda n: _double(chain[n + 1], n), True, lim, f"halo of {chain.name}")]
    return union


def _homothety_image_limit(h):
    return from_ordinal(O.cantor_omega_pow(_ordinal_point(h)))


HOMOTHETIES = GroupAction("homotheties(ord)", [_double], _homothety_upper, _homothety_lower,
                          _homothety_chain(PLUS), _homothety_chain(MINUS),
                          image_limit=_homothety_image_limit, domain=POSITIVE, sharp=True,
                          budget=O.parse_ordinal("w^(w^w)"))


def trivial(domain=NO):
    """The one-element group: every point is its own halo."""
    return GroupAction(f"trivial({domain.name})", [lambda x, n: x],
                       lambda v: [Single(v)], lambda v: [Single(v)],
                       lambda c: [c], lambda c: [c], image_limit=lambda h: h,
                       domain=domain, sharp=True)


# ---------------------------------------------------------------- core operations

def _upper_families(G, fam):
    fam = as_family(fam)
    return G.upper(fam.value) if isinstance(fam, Single) else G.upper_of_chain(fam)


def _lower_families(G, fam):
    fam = as_family(fam)
    return G.lower(fam.value) if isinstance(fam, Single) else G.lower_of_chain(fam)


def _all_below(fams, x):
    for f in fams:
        f = as_family(f)
        if not below(f, x):
            return False
        if isinstance(f, OmegaChain) and not all(c < x for c in check_chain(f)):
            return False
    return True


def _all_above(fams, x):
    for f in fams:
        f = as_family(f)
        if not above(f, x):
            return False
        if isinstance(f, OmegaChain) and not all(x < c for c in check_chain(f)):
            return False
    return True


def is_simple(G, x):
    if G.domain.member(x) is False:
        raise DomainMismatch(f"{x} is outside the domain of {G.name}")
    xl, xr = canonical_options(x)
    ups = [f for o in xl for f in _option_halo(G, o, _upper_families)]
    downs = [f for o in xr for f in _option_halo(G, o, _lower_families)]
    return _all_below(ups, x) and _all_above(downs, x)


def _option_halo(G, o, families):
    # an option outside the domain is only a bound, it has no halo there
    if isinstance(o, Surreal) and G.domain.member(o) is False:
        return [Single(o)]
    return families(G, o)


def _candidate_lengths(x):
    """Prefix lengths worth testing, longest first."""
    out = []
    pos = O.ZERO
    for _, n in x.runs:
        head = O.ZERO
        for exp, coef in n.terms:
            for c in range(1, coef + 1):
                out.append(O.cantor_add(pos, O.cantor_add(head, O.Ordinal._make(((exp, c),)))))
            head = O.cantor_add(head, O.Ordinal._make(((exp, coef),)))
        pos = O.cantor_add(pos, n)
    out.append(O.ZERO)
    return sorted(set(out), reverse=True)


def project_simple(G, x):
    """The greatest simple initial segment of ``x``."""
    if not G.sharp:
        raise NotSharp(f"{G.name} is not certified sharp")
    for n in _candidate_lengths(x):
        p = restrict(x, n)
        if G.domain.member(p) is False:
            continue
        if is_simple(G, p):
            return p
    return ZERO


def _smp_image(G, fam):
    fam = as_family(fam)
    if isinstance(fam, Single):
        return Single(smp_xi(G, fam.value))
    lim = G.image_limit(fam.limit)
    return OmegaChain(lambda n: smp_xi(G, fam[n]), fam.increasing, lim,
                      f"image of {fam.name}")


def _domain_bracket(G, L, R):
    if G.budget is None:
        return G.domain.bracket(L, R)
    return G.domain.bracket(L, R, budget=G.budget)


def smp_xi(G, x):
    """Parameterization of the ``G``-simple numbers."""
    key = x
    if key in G.memo:
        return G.memo[key]
    xl, xr = canonical_options(x)
    L = [f for o in xl for f in _upper_families(G, _smp_image(G, o))]
    R = [f for o in xr for f in _lower_families(G, _smp_image(G, o))]
    value = _domain_bracket(G, L, R)
    G.memo[key] = value
    return value


class SimpleNumbers(Substructure):
    generic_recursion_ok = True

    def __init__(self, G):
        self.G = G
        self.name = f"smp({G.name})"

    def member(self, y):
        try:
            return is_simple(self.G, y)
        except (Unknown, DomainMismatch):
            return None

    def bracket(self, L, R):
        ups = [f for o in L for f in _upper_families(self.G, o)]
        downs = [f for o in R for f in _lower_families(self.G, o)]
        return _domain_bracket(self.G, ups, downs)

    def xi(self, x):
        return smp_xi(self.G, x)

    def xi_inv(self, y):
        return descend_inverse(self, y)


def smp_structure(G):
    return SimpleNumbers(G)


def join_actions(Gs):
    Gs = list(Gs)
    dom = Gs[0].domain
    if any(G.domain is not dom for G in Gs):
        raise DomainMismatch("actions act on different domains")
    if len(Gs) == 1:
        return Gs[0]

    def gather(attr):
        return lambda v: [f for G in Gs for f in getattr(G, attr)(v)]

    return GroupAction("join(" + ",".join(G.name for G in Gs) + ")",
                       [g for G in Gs for g in G.generators],
                       gather("upper"), gather("lower"),
                       gather("upper_of_chain"), gather("lower_of_chain"),
                       image_limit=Gs[0].image_limit, domain=dom,
                       sharp=all(G.sharp for G in Gs))


def refines(G1, G2, samples):
    """Every sampled ``G1``-halo lies inside the ``G2``-halo of the same point.

    Returns ``None`` when some sample falls outside the supported family.
    """
    try:
        for v in samples:
            if not is_cofinal_wrt((G2.upper(v), G2.lower(v)), (G1.upper(v), G1.lower(v))):
                return False
    except Unknown:
        return None
    return True


def _extreme_simple_option(G, x, sign):
    best = None
    for n in _candidate_lengths(x):
        p = restrict(x, n)
        if p == x or not is_simpler(p, x):
            continue
        side = PLUS if p < x else MINUS
        if side != sign:
            continue
        if G.domain.member(p) is False:
            continue
        if is_simple(G, p):
            best = p
            break
    return best


def sharpness_probe(G, x):
    """Options of a simple ``x`` are cofinal with the halos of its simple options."""
    try:
        if not is_simple(G, x):
            return None
        xl, xr = canonical_options(x)
        left = _extreme_simple_option(G, x, PLUS)
        right = _extreme_simple_option(G, x, MINUS)
        halo_l = G.upper(left) if left is not None else []
        halo_r = G.lower(right) if right is not None else []
        return is_cofinal_wrt((list(xl), list(xr)), (halo_l, halo_r))
    except Unknown:
        return None
