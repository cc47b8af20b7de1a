"""Concatenation sum and product, acting directly on sign sequences."""
from . import ordinal as O
from .bracket_engine import simplest_in_cut
from .errors import NotFiniteLength, NotPositive, NotRepresentable
from .surreal_core import Surreal, ZERO, _append, prefix_options


def concat_add(x, y):
    """Signs of ``y`` appended after the signs of ``x``."""
    return Surreal._make(_append(x.runs, y.runs))


def _repeat(block, times):
    if not times or not block.runs:
        return ZERO
    if len(block.runs) == 1:
        sign, n = block.runs[0]
        return Surreal._make(((sign, O.cantor_mul(n, times)),))
    if not times.is_finite():
        raise NotRepresentable(f"({block})^{times} has infinitely many runs")
    runs = ()
    for _ in range(int(times)):
        runs = _append(runs, block.runs)
    return Surreal._make(runs)


def concat_mul(x, y):
    """Block ``a`` of the result is ``x`` or ``-x`` according to the sign ``y[a]``."""
    runs = ()
    neg = -x
    for sign, n in y.runs:
        runs = _append(runs, _repeat(x if sign > 0 else neg, n).runs)
    return Surreal._make(runs)


def concat_power(x, n):
    out = Surreal(((1, 1),))
    for _ in range(n):
        out = concat_mul(out, x)
    return out


def _finite(*xs):
    for x in xs:
        if not x.is_finite():
            raise NotFiniteLength(str(x))


def concat_add_cut_eq(x, y):
    """``{x_L, x+y_L | x+y_R, x_R}`` with full option sets."""
    _finite(x, y)
    xl, xr = prefix_options(x)
    yl, yr = prefix_options(y)
    return simplest_in_cut(xl + [concat_add(x, v) for v in yl],
                           [concat_add(x, v) for v in yr] + xr)


def concat_mul_cut_eq(x, y):
    """The cut equation of the product for ``x > 0``, options taken in full."""
    _finite(x, y)
    if not ZERO < x:
        raise NotPositive(str(x))
    xl, xr = prefix_options(x)
    yl, yr = prefix_options(y)
    L = [concat_add(concat_mul(x, v), a) for v in yl for a in xl]
    L += [concat_add(concat_mul(x, v), -a) for v in yr for a in xr]
    R = [concat_add(concat_mul(x, v), a) for v in yl for a in xr]
    R += [concat_add(concat_mul(x, v), -a) for v in yr for a in xl]
    return simplest_in_cut(L, R)
