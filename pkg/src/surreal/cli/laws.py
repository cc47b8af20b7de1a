"""Executable law suites.

Each suite samples inputs (seeded), checks one identity or property and
reports how many cases it checked and how many failed.  Cases that the
kernel reports as outside its representable fragment are skipped and
not counted.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor

from .. import concat_algebra as CA
from .. import conway_field as F
from .. import ordinal as O
from .. import partition_simplicity as P
from .. import substructure as SS
from ..bracket_engine import (below, above, half_powers, nats, omega_minus_nats,
                              simplest_between, simplest_in_cut)
from ..errors import NotRepresentable
from ..surreal_core import (MINUS, PLUS, Surreal, ZERO, ONE, canonical_options,
                            from_dyadic, from_int, from_ordinal,
                            from_sign_list, is_ordinal, is_simpler, length, parse_signs,
                            prefix_options, restrict, to_dyadic)


@dataclass
class Report:
    name: str
    statement: str
    samples: int
    failures: int

    @property
    def passed(self):
        return self.failures == 0 and self.samples > 0

    def as_dict(self):
        return {"suite": self.name, "statement": self.statement, "samples": self.samples,
                "failures": self.failures, "verdict": "pass" if self.passed else "fail"}


SUITES = {}


def law(name, statement):
    def register(fn):
        SUITES[name] = (statement, fn)
        return fn
    return register


def run_suite(name, seed=0, size=100):
    statement, fn = SUITES[name]
    rng = random.Random(f"{name}:{seed}")
    samples = failures = 0
    for ok in fn(rng, size):
        if ok is None:
            continue
        samples += 1
        failures += not ok
    return Report(name, statement, samples, failures)


def run_all(seed=0, size=100):
    return [run_suite(name, seed, size) for name in SUITES]


# ---------------------------------------------------------------- samplers

def all_finite(max_len):
    yield ZERO
    for n in range(1, max_len + 1):
        for signs in product((PLUS, MINUS), repeat=n):
            yield from_sign_list(signs)


def random_finite(rng, max_len):
    n = rng.randint(0, max_len)
    return from_sign_list([rng.choice((PLUS, MINUS)) for _ in range(n)])


RUN_LENGTHS = [O.parse_ordinal(s) for s in ("1", "2", "3", "w", "w+1", "w*2", "w^2")]


def random_runs(rng, max_runs=3):
    sign = rng.choice((PLUS, MINUS))
    runs = []
    for _ in range(rng.randint(0, max_runs)):
        runs.append((sign, rng.choice(RUN_LENGTHS)))
        sign = -sign
    return Surreal(runs)


def random_positive_runs(rng, max_runs=3):
    x = random_runs(rng, max_runs)
    return x if ZERO < x else Surreal([(PLUS, rng.choice(RUN_LENGTHS))] + list(x.runs))


def simplest_dyadic(lo, hi):
    """Simplest dyadic strictly between ``lo`` and ``hi`` (``None`` = unbounded)."""
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if hi is not None and hi <= 0:
        flip = simplest_dyadic(None if hi is None else -hi, None if lo is None else -lo)
        return -flip
    n = floor(lo) + 1
    if hi is None or n < hi:
        return Fraction(n)
    den = 2
    while True:
        m = floor(lo * den) + 1
        if Fraction(m, den) < hi:
            return Fraction(m, den)
        den *= 2


def _attempt(fn):
    try:
        return fn()
    except NotRepresentable:
        return None


# ---------------------------------------------------------------- field

@law("field-matches-rationals", "sum, product and negation of finite numbers agree with dyadic arithmetic")
def _field(rng, size):
    for _ in range(size):
        x, y = random_finite(rng, 7), random_finite(rng, 7)
        a, b = to_dyadic(x), to_dyadic(y)
        yield (to_dyadic(F.add(x, y)) == a + b and to_dyadic(F.mul(x, y)) == a * b
               and to_dyadic(F.neg(x)) == -a)


@law("negation-by-cut", "negation equals the bracket of negated swapped options")
def _negation(rng, size):
    for _ in range(size):
        x = random_finite(rng, 8)
        yield F.neg_cut(x) == -x


@law("sum-any-representation", "the sum cut equation holds for arbitrary cut representations")
def _uniform_sum(rng, size):
    for _ in range(size):
        x, y = random_finite(rng, 5), random_finite(rng, 5)
        rep_x, rep_y = _random_representation(rng, x), _random_representation(rng, y)
        yield F.add_uniform(x, rep_x, y, rep_y) == F.add(x, y)


# ---------------------------------------------------------------- brackets

def _random_representation(rng, x):
    """Random subsets of the simpler numbers on each side, keeping the closest ones."""
    lx, rx = prefix_options(x)
    lo, hi = max(lx, default=None), min(rx, default=None)
    L = [v for v in lx if v == lo or rng.random() < 0.5]
    R = [v for v in rx if v == hi or rng.random() < 0.5]
    return L, R


@law("bracket-matches-dyadic-oracle", "the simplest number in a finite cut is the simplest dyadic in the interval")
def _bracket(rng, size):
    for _ in range(size):
        xs = sorted({to_dyadic(random_finite(rng, 6)) for _ in range(rng.randint(1, 4))})
        cut = rng.randint(0, len(xs))
        L, R = xs[:cut], xs[cut:]
        want = simplest_dyadic(L[-1] if L else None, R[0] if R else None)
        got = simplest_in_cut([from_dyadic(v) for v in L], [from_dyadic(v) for v in R])
        yield got == from_dyadic(want)


@law("bracket-transfinite-fixtures", "brackets over omega-chains give omega, omega minus omega and 1/omega")
def _bracket_fixtures(rng, size):
    yield simplest_in_cut([nats()], []) == parse_signs("+^w")
    yield simplest_in_cut([nats()], [omega_minus_nats()]) == parse_signs("+^w -^w")
    yield simplest_in_cut([ZERO], [half_powers()]) == parse_signs("+ -^w")
    yield simplest_in_cut([parse_signs("+^w -")], [parse_signs("+^w")]) == parse_signs("+^w - +")


@law("prefix-order-transfer", "if x is an initial segment of y but not of z, x and y compare alike with z")
def _prefix_transfer(rng, size):
    for _ in range(size):
        y, z = random_runs(rng), random_runs(rng)
        x = restrict(y, rng.choice([O.ZERO] + [n for n in _run_ends(y)]))
        if is_simpler(x, z):
            continue
        yield (x < z) == (y < z) and (z < x) == (z < y)


def _run_ends(y):
    pos = O.ZERO
    for _, n in y.runs:
        pos = O.cantor_add(pos, n)
        yield pos


@law("convex-classes-rooted", "every number strictly inside an interval extends its simplest element")
def _rooted(rng, size):
    for _ in range(size):
        a, b = to_dyadic(random_finite(rng, 5)), to_dyadic(random_finite(rng, 5))
        if not a < b:
            continue
        root = simplest_between([from_dyadic(a)], [from_dyadic(b)])
        inside = [x for x in all_finite(5) if from_dyadic(a) < x < from_dyadic(b)]
        yield all(is_simpler(root, x) for x in inside)


@law("final-segment-root-is-ordinal", "the simplest number above a bound is the least ordinal above it")
def _final_root(rng, size):
    for _ in range(size):
        a = random_finite(rng, 7)
        v = to_dyadic(a)
        least = 0 if v < 0 else floor(v) + 1
        root = simplest_in_cut([a], [])
        yield is_ordinal(root) and root == from_int(least)


# ---------------------------------------------------------------- concatenation

def _triples(rng, size, positive_first=False):
    for _ in range(size):
        x = random_positive_runs(rng) if positive_first else random_runs(rng)
        yield x, random_runs(rng), random_runs(rng)


@law("concat-product-associative", "concatenation product is associative")
def _cmul_assoc(rng, size):
    for x, y, z in _triples(rng, size):
        yield _attempt(lambda: CA.concat_mul(x, CA.concat_mul(y, z))
                       == CA.concat_mul(CA.concat_mul(x, y), z))


@law("concat-product-units", "x times 1 is x and x times -1 is -x")
def _cmul_units(rng, size):
    for x, _, _ in _triples(rng, size):
        yield CA.concat_mul(x, ONE) == x and CA.concat_mul(x, -ONE) == -x


@law("concat-product-distributes", "concatenation product distributes over concatenation sum on the right")
def _cmul_dist(rng, size):
    for x, y, z in _triples(rng, size):
        yield _attempt(lambda: CA.concat_mul(x, CA.concat_add(y, z))
                       == CA.concat_add(CA.concat_mul(x, y), CA.concat_mul(x, z)))


@law("concat-product-continuous", "for y of limit length, x times y extends x times each initial segment of y")
def _cmul_limit(rng, size):
    for x, y, _ in _triples(rng, size):
        n = length(y)
        if not O.is_limit(n):
            continue

        def check():
            xy = CA.concat_mul(x, y)
            cuts = [O.fundamental(n, k) for k in range(6)]
            return (all(is_simpler(CA.concat_mul(x, restrict(y, c)), xy) for c in cuts)
                    and length(xy) == O.cantor_mul(length(x), n))
        yield _attempt(check)


@law("concat-product-embeds", "multiplying by a fixed positive number preserves order and initial segments")
def _cmul_embed(rng, size):
    for x, y, z in _triples(rng, size, positive_first=True):
        def check():
            xy, xz = CA.concat_mul(x, y), CA.concat_mul(x, z)
            return (is_simpler(y, z) == is_simpler(xy, xz)) and ((y < z) == (xy < xz))
        yield _attempt(check)


@law("concat-cut-equations", "the cut equations for concatenation sum and product agree with the direct forms")
def _cut_equations(rng, size):
    for x in all_finite(3):
        for y in all_finite(3):
            yield CA.concat_add_cut_eq(x, y) == CA.concat_add(x, y)
            if ZERO < x:
                yield CA.concat_mul_cut_eq(x, y) == CA.concat_mul(x, y)


@law("non-uniform-cut-equation", "the cut equation {x, x_L | x_R} for x then + fails on the representation ({}, {1}) of 0")
def _non_uniform(rng, size):
    # canonical representations give x then +, the representation ({}, {1}) of 0 does not
    for x in all_finite(4):
        xl, xr = canonical_options(x)
        yield simplest_in_cut([x] + list(xl), list(xr)) == CA.concat_add(x, ONE)
    yield simplest_in_cut([ZERO], [ONE]) == from_dyadic(Fraction(1, 2))
    yield simplest_in_cut([ZERO], [ONE]) != CA.concat_add(ZERO, ONE)


@law("length-of-concatenation", "length turns concatenation sum and product into ordinal sum and product")
def _lengths(rng, size):
    for x, y, _ in _triples(rng, size):
        yield length(CA.concat_add(x, y)) == O.cantor_add(length(x), length(y))
        yield _attempt(lambda: length(CA.concat_mul(x, y)) == O.cantor_mul(length(x), length(y)))


# ---------------------------------------------------------------- substructures

STRUCTURES = [
    SS.make_shift(parse_signs("+ -")), SS.make_shift(parse_signs("+^w -")),
    SS.make_scale(from_dyadic(Fraction(1, 2))), SS.make_scale(from_int(2)),
    SS.make_scale(parse_signs("+^w")), SS.INC,
    SS.make_cut_interval(SS.NO, [ZERO], [ONE]), SS.make_cut_interval(SS.NO, [nats()], []),
    SS.make_negate(SS.INC), SS.make_dyadic_tail(Fraction(1, 2)),
]


@law("substructure-recursion", "each parameterization is the bracket of the images of the options")
def _recursion(rng, size):
    for S in STRUCTURES:
        memo = {}
        for x in all_finite(4):
            yield SS.xi_generic(S, x, memo) == S.xi(x)


@law("parameterization-round-trip", "the inverse parameterization undoes the parameterization")
def _round_trip(rng, size):
    for S in STRUCTURES:
        for x in all_finite(4):
            yield S.xi_inv(S.xi(x)) == x


@law("inc-lengthens", "the incremental structure makes every number strictly longer")
def _inc(rng, size):
    yield to_dyadic(SS.INC.xi(from_int(-2))) == Fraction(11, 16)
    for _ in range(size):
        x = random_finite(rng, 8)
        yield length(x) < length(SS.INC.xi(x))


@law("fixed-points-of-shift", "numbers starting with omega copies of a are fixed by the shift by a")
def _fix_shift(rng, size):
    # shifts by several runs have fixed points with infinitely many runs
    for a in (parse_signs("+"), parse_signs("-^2"), parse_signs("+^w")):
        S = SS.make_shift(a)
        fixed = SS.make_fix(S)
        for _ in range(size // 3):
            yield SS.is_fixed(S, fixed.xi(random_finite(rng, 5)))


@law("fixed-points-of-scale", "numbers in the limit of the powers of a are fixed by the scale by a")
def _fix_scale(rng, size):
    for a in (from_int(2), from_int(3), parse_signs("+^w")):
        S = SS.make_scale(a)
        fixed = SS.make_fix(S)
        for _ in range(size // 3):
            yield SS.is_fixed(S, fixed.xi(random_finite(rng, 4)))


@law("fixed-points-are-iterated-images", "fixed numbers lie in every iterated image, others drop out")
def _fix_iterated(rng, size):
    S = SS.make_shift(parse_signs("+^2"))
    fixed = SS.make_fix(S)
    for _ in range(size // 2):
        x = random_finite(rng, 4)
        y = fixed.xi(x)
        yield all(SS.in_iterated_image(S, n, y) for n in range(6))
        z = SS.xi_iter(S, 2, x)
        yield SS.in_iterated_image(S, 2, z) and not SS.in_iterated_image(S, int(length(z)) + 1, z)


@law("imbrication-of-powers", "powers of omega compose under imbrication like ordinal sum and product")
def _imbrication(rng, size):
    for a in range(5):
        for b in range(5):
            sa, sb = SS.nosucc_pow(a), SS.nosucc_pow(b)
            both = SS.imbricate(sa, sb)
            power = SS.imbrication_power(sa, b)
            for _ in range(2):
                x = random_finite(rng, 4)
                yield both.xi(x) == SS.nosucc_pow(O.cantor_add(a, b)).xi(x)
                yield power.xi(x) == SS.nosucc_pow(O.cantor_mul(a, b)).xi(x)


# ---------------------------------------------------------------- simplicity

Z, D, H = P.TRANSLATIONS_Z, P.TRANSLATIONS_D, P.HOMOTHETIES
OMEGA = from_ordinal(O.OMEGA)


@law("integer-translations-give-omega-multiples", "numbers simple for integer translations are omega times a number")
def _smp_z(rng, size):
    for _ in range(size):
        x = random_finite(rng, 6)
        yield P.smp_xi(Z, x) == CA.concat_mul(OMEGA, x)


@law("dyadic-and-integer-translations-agree", "dyadic and integer translations have the same simple numbers")
def _smp_d(rng, size):
    for _ in range(size):
        x = random_finite(rng, 6)
        yield P.smp_xi(D, x) == P.smp_xi(Z, x)


@law("simple-parameterization-preserves-ordinals", "the simple-number parameterization sends ordinals to ordinals")
def _smp_ordinals(rng, size):
    for G in (Z, H, P.trivial()):
        for n in range(6):
            yield is_ordinal(P.smp_xi(G, from_int(n)))


@law("coarser-partition-larger-ordinals", "a coarser partition sends each ordinal at least as high")
def _smp_monotone(rng, size):
    for n in range(6):
        lam = from_int(n)
        fine, coarse = P.smp_xi(P.trivial(), lam), P.smp_xi(Z, lam)
        yield not coarse < fine and not lam < fine


@law("omega-power-on-ordinals", "the simple numbers for homotheties are parameterized by omega powers")
def _omega_map(rng, size):
    for a in ("0", "1", "2", "3", "w", "w+1", "w*2"):
        alpha = O.parse_ordinal(a)
        yield P.smp_xi(H, from_ordinal(alpha)) == from_ordinal(O.cantor_omega_pow(alpha))
    yield P.smp_xi(H, from_int(-1)) == parse_signs("+ -^w")


@law("scaled-omega-powers-match-simple-numbers", "scaling by omega equals the integer-translation simple numbers")
def _nosucc_smp(rng, size):
    S = SS.nosucc_pow(1)
    for _ in range(size):
        x = random_finite(rng, 6)
        yield S.xi(x) == P.smp_xi(Z, x)


def _halo_samples(rng, size):
    heads = [ZERO, OMEGA, parse_signs("+^w -^w"), parse_signs("+^(w*2)"), parse_signs("-^w")]
    for _ in range(size):
        yield CA.concat_add(rng.choice(heads), random_finite(rng, 4))


@law("halo-comparisons-agree", "a below the halo of b, the halo of a below b, and halo below halo coincide")
def _halo_compare(rng, size):
    samples = list(_halo_samples(rng, size))
    for a, b in zip(samples, samples[1:]):
        first = all(above(f, a) for f in Z.lower(b)) and a < b
        second = all(below(f, b) for f in Z.upper(a)) and a < b
        third = P.project_simple(Z, a) < P.project_simple(Z, b)
        yield first == second == third


@law("simple-means-own-projection", "a number is simple exactly when it is its own simple projection")
def _simple_projection(rng, size):
    for x in _halo_samples(rng, size):
        p = P.project_simple(Z, x)
        yield P.is_simple(Z, x) == (p == x) and P.is_simple(Z, p) and is_simpler(p, x)


@law("simple-options-cofinal", "options of simple numbers are cofinal with the halos of their simple options")
def _sharp(rng, size):
    heads = [OMEGA, parse_signs("+^w -^w"), parse_signs("+^(w*2)"), parse_signs("-^w +^w")]
    for h in heads:
        yield P.sharpness_probe(Z, h)
    for a in ("1", "w", "w^2", "w^w"):
        yield P.sharpness_probe(H, from_ordinal(O.parse_ordinal(a)))


@law("refinement-of-actions", "the trivial action refines integer translations, which match dyadic ones")
def _refines(rng, size):
    samples = list(_halo_samples(rng, size // 4))
    yield P.refines(P.trivial(), Z, samples)
    yield P.refines(Z, D, samples) and P.refines(D, Z, samples)
    yield P.refines(Z, P.trivial(), samples) is False
