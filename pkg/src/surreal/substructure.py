"""Surreal substructures and their parameterizations.

A substructure is a subclass of No that is order- and simplicity-
isomorphic to No.  Each object here exposes that isomorphism (``xi``),
its inverse, a membership test and its induced bracket (the simplest
member strictly between two bound families).
"""
from dataclasses import dataclass
from typing import Callable, Optional

from . import ordinal as O
from .bracket_engine import above, as_family, below, simplest_in_cut, Single
from .concat_algebra import concat_add, concat_mul
from .errors import (BudgetExceeded, NotFiniteLength, NotMember, NotPositive,
                     NotRepresentable, Unsupported)
from .surreal_core import (MINUS, PLUS, OmegaChain, Surreal, ZERO, canonical_options,
                           from_dyadic, from_ordinal, is_ordinal, is_simpler,
                           suffix, to_ordinal)

MAX_DESCENT = 4096


def _mirror(b):
    b = as_family(b)
    if isinstance(b, Single):
        return Single(-b.value)
    lim = None if b.limit is None else -b.limit
    return OmegaChain(lambda n, g=b.generator: -g(n), not b.increasing, lim, f"-{b.name}")


def _inside(L, R, y):
    return all(below(as_family(b), y) for b in L) and all(above(as_family(b), y) for b in R)


class Substructure:
    name = "S"
    closed_form_xi = True
    decidable_member = True
    generic_recursion_ok = True

    def member(self, y) -> Optional[bool]:
        try:
            self.xi_inv(y)
        except NotMember:
            return False
        return True

    def bracket(self, L, R):
        raise NotImplementedError

    def xi(self, x):
        raise NotImplementedError

    def xi_inv(self, y):
        return descend_inverse(self, y)

    def __repr__(self):
        return self.name


def descend_inverse(S, y, max_steps=MAX_DESCENT):
    """Preimage of ``y`` rebuilt sign by sign by comparing ``y`` with images."""
    x = ZERO
    for _ in range(max_steps):
        v = S.xi(x)
        if v == y:
            return x
        if not is_simpler(v, y):
            raise NotMember(f"{y} is not in {S.name}")
        x = x.extended(PLUS if v < y else MINUS)
    raise BudgetExceeded(f"no preimage of {y} found in {max_steps} steps")


def tree_descent(root, left_succ, right_succ, L, R, max_steps=MAX_DESCENT):
    """Simplest node strictly between ``L`` and ``R`` in a binary tree of numbers."""
    m = root
    for _ in range(max_steps):
        low = not all(below(as_family(b), m) for b in L)
        high = not all(above(as_family(b), m) for b in R)
        if low and high:
            from .errors import EmptyCut
            raise EmptyCut(f"bounds cross at {m}")
        if not low and not high:
            return m
        m = right_succ(m) if low else left_succ(m)
    raise BudgetExceeded(f"tree descent did not settle in {max_steps} steps")


class Whole(Substructure):
    name = "No"

    def member(self, y):
        return True

    def bracket(self, L, R, budget=None):
        return simplest_in_cut(list(L), list(R), budget)

    def xi(self, x):
        return x

    def xi_inv(self, y):
        return y


NO = Whole()


class Shift(Substructure):
    """Numbers extending ``a``; parameterized by ``x -> a`` followed by ``x``."""

    def __init__(self, a):
        self.a = a
        self.name = f"shift({a})"

    def member(self, y):
        return is_simpler(self.a, y)

    def bracket(self, L, R):
        al, ar = canonical_options(self.a)
        return simplest_in_cut(list(L) + list(al), list(R) + list(ar))

    def xi(self, x):
        return concat_add(self.a, x)

    def xi_inv(self, y):
        if not is_simpler(self.a, y):
            raise NotMember(f"{y} does not extend {self.a}")
        return suffix(y, self.a)


class Scale(Substructure):
    """Image of ``x -> a * x`` for the concatenation product, ``a > 0``."""

    def __init__(self, a, name=None):
        if not ZERO < a:
            raise NotPositive(f"{a} is not positive")
        self.a = a
        self.name = name or f"scale({a})"

    def xi(self, x):
        return concat_mul(self.a, x)

    def xi_inv(self, y):
        a = self.a
        if len(a.runs) == 1:
            unit = a.runs[0][1]
            runs = []
            for sign, n in y.runs:
                q, r = O.left_divmod(n, unit)
                if r:
                    raise NotMember(f"{y} is not in {self.name}")
                runs.append((sign, q))
            return Surreal(runs)
        signs = []
        rest = y
        neg = -a
        while rest.runs:
            if is_simpler(a, rest):
                signs.append(PLUS)
                rest = suffix(rest, a)
            elif is_simpler(neg, rest):
                signs.append(MINUS)
                rest = suffix(rest, neg)
            else:
                raise NotMember(f"{y} is not in {self.name}")
        return Surreal([(s, 1) for s in signs])

    def bracket(self, L, R):
        a, neg = self.a, -self.a
        return tree_descent(ZERO, lambda m: concat_add(m, neg),
                            lambda m: concat_add(m, a), L, R)


class Negate(Substructure):
    def __init__(self, inner):
        self.inner = inner
        self.name = f"neg({inner.name})"

    def member(self, y):
        return self.inner.member(-y)

    def bracket(self, L, R):
        return -self.inner.bracket([_mirror(b) for b in R], [_mirror(b) for b in L])

    def xi(self, x):
        return -self.inner.xi(-x)

    def xi_inv(self, y):
        return -self.inner.xi_inv(-y)


class CutInterval(Substructure):
    """Members of ``S`` strictly between the bound families ``L`` and ``R``."""

    def __init__(self, inner, L, R, name=None):
        self.inner = inner
        self.L = [as_family(b) for b in L]
        self.R = [as_family(b) for b in R]
        self.name = name or f"interval({inner.name})"
        if any(isinstance(b, OmegaChain) for b in self.L + self.R) and not isinstance(inner, Whole):
            self.closed_form_xi = False

    def member(self, y):
        m = self.inner.member(y)
        if m is not True:
            return m
        return _inside(self.L, self.R, y)

    def bracket(self, L, R, budget=None):
        if budget is None:
            return self.inner.bracket(self.L + list(L), self.R + list(R))
        return self.inner.bracket(self.L + list(L), self.R + list(R), budget=budget)

    def root(self):
        return self.bracket([], [])

    def xi(self, x):
        if not isinstance(self.inner, Whole):
            if not self.closed_form_xi:
                raise Unsupported("chain bounds inside a proper substructure")
            inner = self.inner
            pulled = CutInterval(NO, [inner.xi_inv(b.value) for b in self.L],
                                 [inner.xi_inv(b.value) for b in self.R])
            return inner.xi(pulled.xi(x))
        # walk the tree of the interval: successors are brackets against
        # the current node and its options on the far side
        if not x.is_finite():
            raise NotFiniteLength(f"{x} has infinite length")
        m = self.root()
        for sign, n in x.runs:
            for _ in range(int(n)):
                ml, mr = canonical_options(m)
                if sign == PLUS:
                    m = simplest_in_cut(self.L + [m], self.R + list(mr))
                else:
                    m = simplest_in_cut(self.L + list(ml), self.R + [m])
        return m


@dataclass
class TreeRule:
    root: Surreal
    left_succ: Callable[[Surreal], Surreal]
    right_succ: Callable[[Surreal], Surreal]
    run_leap: Optional[Callable[[Surreal, int, O.Ordinal], Surreal]] = None


class TreeStructure(Substructure):
    """Substructure drawn as a binary tree by successor rules."""

    def __init__(self, rule, name="tree"):
        self.rule = rule
        self.name = name

    def xi(self, x):
        m = self.rule.root
        for sign, n in x.runs:
            if n.is_finite():
                step = self.rule.right_succ if sign == PLUS else self.rule.left_succ
                for _ in range(int(n)):
                    m = step(m)
            elif self.rule.run_leap is not None:
                m = self.rule.run_leap(m, sign, n)
            else:
                raise NotFiniteLength(f"{self.name} has no rule for a run of length {n}")
        return m

    def xi_inv(self, y):
        r = self.rule
        m, signs = r.root, []
        for _ in range(MAX_DESCENT):
            if m == y:
                return Surreal([(s, 1) for s in signs])
            if not is_simpler(m, y):
                raise NotMember(f"{y} is not in {self.name}")
            sign = PLUS if m < y else MINUS
            signs.append(sign)
            m = r.right_succ(m) if sign == PLUS else r.left_succ(m)
        raise BudgetExceeded(f"no preimage of {y} within {MAX_DESCENT} steps")

    def bracket(self, L, R):
        return tree_descent(self.rule.root, self.rule.left_succ, self.rule.right_succ, L, R)


def make_from_tree(rule, name="tree"):
    return TreeStructure(rule, name)


_PLUS2 = Surreal([(PLUS, 2)])
_MINUS_PLUS = Surreal([(MINUS, 1), (PLUS, 1)])


def _inc_leap(m, sign, n):
    if sign == MINUS:
        raise NotRepresentable("an infinite run of minus signs maps to infinitely many runs")
    limit_part, finite = O.ZERO, 0
    if n.terms and not n.terms[-1][0].terms:
        finite = n.terms[-1][1]
        limit_part = O.Ordinal._make(n.terms[:-1])
    else:
        limit_part = n
    out = O.from_int(2 * finite)
    if limit_part:
        out = O.cantor_add(O.successor(limit_part), out)
    return m.extended(PLUS, out)


INC_RULE = TreeRule(
    root=Surreal([(PLUS, 1)]),
    left_succ=lambda m: concat_add(m, _MINUS_PLUS),
    right_succ=lambda m: concat_add(m, _PLUS2),
    run_leap=_inc_leap,
)
INC = TreeStructure(INC_RULE, "inc")


class Imbrication(Substructure):
    def __init__(self, outer, inner):
        self.outer, self.inner = outer, inner
        self.name = f"imb({outer.name},{inner.name})"

    def member(self, y):
        m = self.outer.member(y)
        if m is not True:
            return m
        return self.inner.member(self.outer.xi_inv(y))

    def bracket(self, L, R):
        fams = [as_family(b) for b in list(L) + list(R)]
        if any(isinstance(b, OmegaChain) for b in fams):
            raise Unsupported("chain bounds through an imbrication")
        pull = self.outer.xi_inv
        inner = self.inner.bracket([pull(as_family(b).value) for b in L],
                                   [pull(as_family(b).value) for b in R])
        return self.outer.xi(inner)

    def xi(self, x):
        return self.outer.xi(self.inner.xi(x))

    def xi_inv(self, y):
        return self.inner.xi_inv(self.outer.xi_inv(y))


def imbricate(S, T):
    return Imbrication(S, T)


def make_shift(a):
    return Shift(a)


def make_scale(a):
    return Scale(a)


def make_negate(S):
    return Negate(S)


def make_cut_interval(S, L, R, name=None):
    return CutInterval(S, L, R, name)


def _infinitesimal_xi(x):
    if not x.runs:
        return ZERO
    sign = x.runs[0][0]
    head = Surreal([(sign, 1), (-sign, O.OMEGA)])
    return concat_add(head, suffix(x, Surreal([(sign, 1)])))


def _infinitesimal_inv(y):
    if not y.runs:
        return ZERO
    sign = y.runs[0][0]
    head = Surreal([(sign, 1), (-sign, O.OMEGA)])
    if y.runs[0][1] != O.ONE or not is_simpler(head, y):
        raise NotMember(f"{y} is not infinitesimal")
    return concat_add(Surreal([(sign, 1)]), suffix(y, head))


class Infinitesimals(Substructure):
    name = "infinitesimals"

    def bracket(self, L, R):
        from .bracket_engine import half_powers, neg_half_powers
        return simplest_in_cut([neg_half_powers()] + list(L), [half_powers()] + list(R))

    def xi(self, x):
        return _infinitesimal_xi(x)

    def xi_inv(self, y):
        return _infinitesimal_inv(y)


INFINITESIMALS = Infinitesimals()


class DyadicTail(Substructure):
    """``r`` plus an infinitesimal, with ``r`` a nonzero dyadic."""

    def __init__(self, r):
        from fractions import Fraction
        r = Fraction(r)
        if r == 0:
            raise ValueError("tail structure needs a nonzero dyadic")
        self.r = r
        self.head = from_dyadic(r)
        self.name = f"tail({r})"

    def member(self, y):
        if not is_simpler(self.head, y):
            return False
        try:
            _infinitesimal_inv(suffix(y, self.head))
        except NotMember:
            return False
        return True

    def bracket(self, L, R):
        return concat_add(self.head, INFINITESIMALS.bracket(
            [_drop_head(self.head, b) for b in L], [_drop_head(self.head, b) for b in R]))

    def xi(self, x):
        return concat_add(self.head, _infinitesimal_xi(x))

    def xi_inv(self, y):
        if not is_simpler(self.head, y):
            raise NotMember(f"{y} does not start with {self.head}")
        return _infinitesimal_inv(suffix(y, self.head))


def _drop_head(head, b):
    b = as_family(b)
    if not isinstance(b, Single) or not is_simpler(head, b.value):
        raise Unsupported("tail brackets take members of the structure as bounds")
    return suffix(b.value, head)


def make_dyadic_tail(r):
    return DyadicTail(r)


# ---------------------------------------------------------------- generic recursion

def xi_generic(S, x, memo=None):
    """Parameterization by recursion: image of ``x`` is the bracket of option images."""
    if not x.is_finite():
        raise NotFiniteLength(f"{x} has infinite length")
    if memo is None:
        memo = {}
    if x in memo:
        return memo[x]
    xl, xr = canonical_options(x)
    value = S.bracket([xi_generic(S, a, memo) for a in xl],
                      [xi_generic(S, b, memo) for b in xr])
    memo[x] = value
    return value


# ---------------------------------------------------------------- fixed points

def ordinal_self_power_limit(a):
    """Supremum of the finite concatenation powers of an ordinal ``a``."""
    a = O.Ordinal.coerce(a)
    if a <= O.ONE:
        return a
    lead = a.terms[0][0]
    hint = O.OMEGA if a.is_finite() else O.cantor_omega_pow(O.cantor_mul(lead, O.OMEGA))
    return O.ord_sup(lambda n: O.cantor_pow(a, n + 1), hint)


def make_fix(S):
    if isinstance(S, Whole):
        return NO
    if isinstance(S, Shift):
        return Shift(concat_mul(S.a, from_ordinal(O.OMEGA)))
    if isinstance(S, Scale):
        if not is_ordinal(S.a):
            raise Unsupported("the fixed class of scale(a) needs a with infinitely many runs "
                              "unless a is an ordinal")
        return Scale(from_ordinal(ordinal_self_power_limit(to_ordinal(S.a))))
    raise Unsupported(f"no closed form for the fixed points of {S.name}")


def is_fixed(S, x):
    return S.xi(x) == x


def xi_iter(S, n, x):
    for _ in range(n):
        x = S.xi(x)
    return x


def in_iterated_image(S, n, x):
    try:
        for _ in range(n):
            x = S.xi_inv(x)
    except NotMember:
        return False
    return True


def nosucc_pow(alpha):
    alpha = O.Ordinal.coerce(alpha)
    if not alpha:
        return NO
    return Scale(from_ordinal(O.cantor_omega_pow(alpha)), name=f"nosuccpow({alpha})")


def imbrication_power(S, n):
    """``S`` imbricated with itself ``n`` times (``No`` for ``n == 0``)."""
    out = NO
    for _ in range(n):
        out = S if out is NO else Imbrication(S, out)
    return out


def is_left_factor(T, S, samples=()):
    """Whether ``S`` is contained in ``T``; ``None`` when sampling cannot decide."""
    if isinstance(T, Whole):
        return True
    if isinstance(S, Whole):
        return False
    if isinstance(T, Shift) and isinstance(S, Shift):
        return is_simpler(T.a, S.a)
    if isinstance(T, Scale) and isinstance(S, Scale):
        return bool(T.member(S.a))
    for x in samples:
        if T.member(S.xi(x)) is False:
            return False
    return None
