"""Field operations on finite-length numbers by recursion over options.

Each operation evaluates its cut equation with the reduced canonical
options (greatest left and least right initial segment), so every
recursive call is on strictly shorter operands.  Results are memoized
in bounded LRU caches; ``clear_caches`` empties them.
"""
from functools import lru_cache

from .bracket_engine import simplest_between, simplest_in_cut
from .errors import NotFiniteLength
from .surreal_core import ZERO, canonical_options

MEMO_SIZE = 2 ** 20


def neg(x):
    return -x


def neg_cut(x):
    """Negation via ``{-x_R | -x_L}``; kept as a cross-check of ``neg``."""
    _check(x)
    xl, xr = canonical_options(x)
    return simplest_in_cut([neg_cut(v) for v in xr], [neg_cut(v) for v in xl])


def _check(*xs):
    for x in xs:
        if not x.is_finite():
            raise NotFiniteLength(f"{x} has infinite length")


def _add(x, y, add):
    if not x.runs:
        return y
    if not y.runs:
        return x
    xl, xr = canonical_options(x)
    yl, yr = canonical_options(y)
    L = [add(a, y) for a in xl] + [add(x, b) for b in yl]
    R = [add(a, y) for a in xr] + [add(x, b) for b in yr]
    return simplest_between(L, R)


def _mul(x, y, mul, add):
    if not x.runs or not y.runs:
        return ZERO
    xl, xr = canonical_options(x)
    yl, yr = canonical_options(y)

    def term(a, b):
        # a*y + x*b - a*b
        return add(add(mul(a, y), mul(x, b)), -mul(a, b))

    L = [term(a, b) for a in xl for b in yl] + [term(a, b) for a in xr for b in yr]
    R = [term(a, b) for a in xl for b in yr] + [term(a, b) for a in xr for b in yl]
    return simplest_between(L, R)


@lru_cache(maxsize=MEMO_SIZE)
def _add_memo(x, y):
    return _add(x, y, _add_memo)


@lru_cache(maxsize=MEMO_SIZE)
def _mul_memo(x, y):
    return _mul(x, y, _mul_memo, _add_memo)


def _add_plain(x, y):
    return _add(x, y, _add_plain)


def _mul_plain(x, y):
    return _mul(x, y, _mul_plain, _add_plain)


def add(x, y, memo=True):
    _check(x, y)
    return (_add_memo if memo else _add_plain)(x, y)


def sub(x, y, memo=True):
    return add(x, -y, memo)


def mul(x, y, memo=True):
    _check(x, y)
    return (_mul_memo if memo else _mul_plain)(x, y)


def clear_caches():
    _add_memo.cache_clear()
    _mul_memo.cache_clear()


def add_uniform(x, rep_x, y, rep_y):
    """``x + y`` evaluated from arbitrary cut representations of ``x`` and ``y``.

    ``rep_x`` and ``rep_y`` are ``(L, R)`` pairs of finite lists of numbers.
    """
    (lx, rx), (ly, ry) = rep_x, rep_y
    _check(x, y, *lx, *rx, *ly, *ry)
    L = [add(a, y) for a in lx] + [add(x, b) for b in ly]
    R = [add(x, b) for b in ry] + [add(a, y) for a in rx]
    return simplest_in_cut(L, R)
