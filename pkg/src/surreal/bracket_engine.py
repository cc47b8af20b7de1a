"""The simplest number strictly between two bound families.

Bounds are single numbers or ``OmegaChain`` families.  The search walks
down the binary tree from 0, but instead of one sign at a time it jumps
a whole run: for each violated bound the exact number of extra signs
needed to get past it is read off the bound's sign sequence (for a
chain, off its limit).

A chain whose limit is ``s`` behaves like this: an increasing family is
below ``x`` exactly when ``x >= s`` or ``s`` is an initial segment of
``x``; dually for decreasing families.
"""
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import ordinal as O
from .errors import BudgetExceeded, EmptyCut, Undecidable
from .surreal_core import (MINUS, PLUS, OmegaChain, Surreal, ZERO, check_chain,
                           common_prefix, is_simpler, length, suffix)

DEFAULT_BUDGET = O.parse_ordinal("w^2")
DEFAULT_K = 8
MAX_STEPS = 100_000


@dataclass(frozen=True)
class Single:
    value: Surreal

    def __str__(self):
        return str(self.value)


@dataclass
class Cut:
    L: list = field(default_factory=list)
    R: list = field(default_factory=list)
    budget: O.Ordinal = DEFAULT_BUDGET


def as_family(b):
    if isinstance(b, (Single, OmegaChain)):
        return b
    if isinstance(b, Surreal):
        return Single(b)
    raise TypeError(f"not a bound: {b!r}")


def _limit(chain):
    if chain.limit is None:
        raise Undecidable(f"{chain.name} has no limit hint")
    return chain.limit


def below(b, x):
    """Every element of the bound family ``b`` is ``< x``."""
    if isinstance(b, Single):
        return b.value < x
    s = _limit(b)
    if b.increasing:
        return not x < s or is_simpler(s, x)
    return b[0] < x


def above(b, x):
    """Every element of ``b`` is ``> x``."""
    if isinstance(b, Single):
        return x < b.value
    s = _limit(b)
    if not b.increasing:
        return not s < x or is_simpler(s, x)
    return x < b[0]


def _leap(x, target, sign, strict):
    """Run length of ``sign`` to append to ``x`` to get past ``target``.

    ``strict`` is True for a single bound (land strictly beyond it) and
    False for a chain limit (reaching or passing the limit is enough).
    Returns None when no extension of ``x`` gets past.
    """
    if x == target:
        return O.ONE if strict else None
    if not is_simpler(x, target):
        return None
    rest = suffix(target, x)
    s, n = rest.runs[0]
    if s != sign:
        return None
    if len(rest.runs) == 1 and strict:
        return O.successor(n)
    return n


def _bound_leap(b, x, sign):
    if isinstance(b, Single):
        return _leap(x, b.value, sign, True)
    return _leap(x, _limit(b), sign, False)


@contextmanager
def default_budget(budget):
    """Temporarily change the length budget used when none is passed."""
    global DEFAULT_BUDGET
    saved, DEFAULT_BUDGET = DEFAULT_BUDGET, O.Ordinal.coerce(budget)
    try:
        yield
    finally:
        DEFAULT_BUDGET = saved


def simplest_in_cut(L=(), R=(), budget=None, k=DEFAULT_K):
    if isinstance(L, Cut):
        L, R, budget = L.L, L.R, L.budget
    budget = DEFAULT_BUDGET if budget is None else O.Ordinal.coerce(budget)
    L = _reduce([_toward_cut(b, True) for b in L], max)
    R = _reduce([_toward_cut(b, False) for b in R], min)
    samples = {}
    for b in L + R:
        if isinstance(b, OmegaChain):
            _limit(b)
            samples[id(b)] = check_chain(b, k)
    x = ZERO
    for _ in range(MAX_STEPS):
        low = [b for b in L if not below(b, x)]
        high = [b for b in R if not above(b, x)]
        if low and high:
            raise EmptyCut(f"bounds cross at {x}")
        if not low and not high:
            _verify(L, R, x, samples)
            return x
        sign, binding = (PLUS, low) if low else (MINUS, high)
        best = None
        for b in binding:
            n = _bound_leap(b, x, sign)
            if n is None:
                raise EmptyCut(f"no extension of {x} passes {b}")
            best = n if best is None or best < n else best
        x = x.extended(sign, best)
        if not best.is_finite() and length(x) > budget:
            raise BudgetExceeded(f"result longer than {budget}")
    raise BudgetExceeded("too many descent steps")


def simplest_between(lows, highs):
    """``simplest_in_cut`` for finite lists of plain numbers.

    Same descent, specialised to one greatest lower and one least upper
    bound; used on the hot path of the field recursion.
    """
    lo = max(lows) if lows else None
    hi = min(highs) if highs else None
    # everything strictly between lo and hi extends their common prefix
    x = common_prefix(lo, hi) if lo is not None and hi is not None else ZERO
    while True:
        need_up = lo is not None and not lo < x
        need_down = hi is not None and not x < hi
        if need_up and need_down:
            raise EmptyCut(f"bounds cross at {x}")
        if not (need_up or need_down):
            return x
        sign, target = (PLUS, lo) if need_up else (MINUS, hi)
        n = _leap(x, target, sign, True)
        if n is None:
            raise EmptyCut(f"no extension of {x} passes {target}")
        x = x.extended(sign, n)


def _toward_cut(b, left):
    # a chain running away from the cut is bounded by its first element
    b = as_family(b)
    if isinstance(b, OmegaChain) and b.increasing != left:
        return Single(b[0])
    return b


def _reduce(fams, pick):
    # finitely many single bounds are cofinal with their extreme one
    singles = [b.value for b in fams if isinstance(b, Single)]
    chains = [b for b in fams if not isinstance(b, Single)]
    return ([Single(pick(singles))] if singles else []) + chains


def _verify(L, R, x, samples):
    for b in L:
        items = samples.get(id(b)) or [b.value]
        if not all(v < x for v in items):
            raise EmptyCut(f"left bound not below {x}")
    for b in R:
        items = samples.get(id(b)) or [b.value]
        if not all(x < v for v in items):
            raise EmptyCut(f"right bound not above {x}")


def bracket(L=(), R=(), budget=None):
    """Shorthand taking plain numbers or families."""
    return simplest_in_cut(list(L), list(R), budget)


# ---------------------------------------------------------------- cofinality

def _dominated_left(b, fams):
    """Some member of ``fams`` is ``>=`` each element of ``b``."""
    for f in fams:
        if isinstance(b, Single):
            if isinstance(f, Single):
                if not f.value < b.value:
                    return True
            elif not below(f, b.value):
                return True
        else:
            s2 = _limit(b)
            if isinstance(f, Single):
                if below(b, f.value):
                    return True
            else:
                s = _limit(f)
                if is_simpler(s2, s) or (not is_simpler(s, s2) and s2 < s):
                    return True
    return False


def _dominated_right(b, fams):
    return _dominated_left(_mirror(b), [_mirror(f) for f in fams])


def _mirror(b):
    if isinstance(b, Single):
        return Single(-b.value)
    s = None if b.limit is None else -b.limit
    return OmegaChain(lambda n, g=b.generator: -g(n), not b.increasing, s, name=f"-{b.name}")


def is_cofinal_wrt(a, b):
    """``a = (L, R)`` is cofinal with respect to ``b = (L', R')``."""
    (L, R), (L2, R2) = a, b
    L, R = [as_family(f) for f in L], [as_family(f) for f in R]
    return (all(_dominated_left(as_family(f), L) for f in L2)
            and all(_dominated_right(as_family(f), R) for f in R2))


def mutually_cofinal(a, b):
    return is_cofinal_wrt(a, b) and is_cofinal_wrt(b, a)


# ---------------------------------------------------------------- named chains

def _chain(gen, increasing, limit, name):
    return OmegaChain(gen, increasing, limit, name)


def nats():
    from .surreal_core import from_int, from_ordinal
    return _chain(from_int, True, from_ordinal(O.OMEGA), "nats")


def neg_nats():
    from .surreal_core import from_int, from_ordinal
    return _chain(lambda n: from_int(-n), False, -from_ordinal(O.OMEGA), "neg_nats")


def omega_minus_nats():
    omega = Surreal(((PLUS, O.OMEGA),))
    return _chain(lambda n: omega.extended(MINUS, n), False,
                  omega.extended(MINUS, O.OMEGA), "omega_minus_nats")


def half_powers():
    one = Surreal(((PLUS, 1),))
    return _chain(lambda n: one.extended(MINUS, n), False,
                  one.extended(MINUS, O.OMEGA), "half_powers")


def neg_half_powers():
    m = Surreal(((MINUS, 1),))
    return _chain(lambda n: m.extended(PLUS, n), True, m.extended(PLUS, O.OMEGA),
                  "neg_half_powers")


NAMED_CHAINS = {
    "nats": nats,
    "neg_nats": neg_nats,
    "omega_minus_nats": omega_minus_nats,
    "half_powers": half_powers,
    "neg_half_powers": neg_half_powers,
}
