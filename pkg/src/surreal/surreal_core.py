"""Surreal numbers as run-length-encoded sign sequences.

A number is a tuple of ``(sign, length)`` runs with alternating signs
and ordinal lengths.  Only sequences with finitely many runs are
representable; operations that would leave that family raise
``NotRepresentable``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Callable, Optional

from . import ordinal as O
from .errors import NotAChain, NotDyadic, NotFiniteLength, NotOrdinal
from .ordinal import LT, EQ, GT, Ordinal

PLUS, MINUS = 1, -1


@total_ordering
class Surreal:
    __slots__ = ("runs", "_hash")

    def __init__(self, runs=()):
        self.runs = _normalize(runs)
        self._hash = None

    @classmethod
    def _make(cls, runs):
        obj = cls.__new__(cls)
        obj.runs = tuple(runs)
        obj._hash = None
        return obj

    def __eq__(self, other):
        if not isinstance(other, Surreal):
            return NotImplemented
        return self.runs == other.runs

    def __lt__(self, other):
        if not isinstance(other, Surreal):
            return NotImplemented
        return compare(self, other) == LT

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.runs)
        return self._hash

    def __neg__(self):
        return Surreal._make((-s, n) for s, n in self.runs)

    def __bool__(self):
        return bool(self.runs)

    def __repr__(self):
        return f"Surreal({format_signs(self)!r})"

    def __str__(self):
        return format_signs(self)

    @property
    def length(self):
        return length(self)

    def is_finite(self):
        return all(n.is_finite() for _, n in self.runs)

    def extended(self, sign, n=1):
        """This number followed by ``n`` copies of ``sign``."""
        n = Ordinal.coerce(n)
        if not n:
            return self
        return Surreal._make(_append(self.runs, ((sign, n),)))


def _append(runs, more):
    runs = list(runs)
    for sign, n in more:
        if not n:
            continue
        if runs and runs[-1][0] == sign:
            runs[-1] = (sign, O.cantor_add(runs[-1][1], n))
        else:
            runs.append((sign, n))
    return tuple(runs)


def _normalize(runs):
    out = []
    for sign, n in runs:
        if sign not in (PLUS, MINUS):
            raise ValueError(f"bad sign {sign!r}")
        out.append((sign, Ordinal.coerce(n)))
    return _append((), out)


ZERO = Surreal._make(())
ONE = Surreal._make(((PLUS, O.ONE),))
MINUS_ONE = Surreal._make(((MINUS, O.ONE),))


def concat(x, y):
    return Surreal._make(_append(x.runs, y.runs))


def length(x):
    total = O.ZERO
    for _, n in x.runs:
        total = O.cantor_add(total, n)
    return total


def sign_at(x, alpha):
    alpha = Ordinal.coerce(alpha)
    pos = O.ZERO
    for sign, n in x.runs:
        end = O.cantor_add(pos, n)
        if alpha < end:
            return sign
        pos = end
    return 0


def compare(x, y):
    """Lexicographic order of the zero-padded sign sequences."""
    if x.runs is y.runs:
        return EQ
    for (sx, nx), (sy, ny) in zip(x.runs, y.runs):
        if sx != sy:
            return LT if sx < sy else GT
        if nx is not ny and nx != ny:
            # the shorter run is followed by the opposite sign or by 0
            shorter_is_x = nx < ny
            if sx == PLUS:
                return LT if shorter_is_x else GT
            return GT if shorter_is_x else LT
    if len(x.runs) == len(y.runs):
        return EQ
    if len(x.runs) < len(y.runs):
        return LT if y.runs[len(x.runs)][0] == PLUS else GT
    return GT if x.runs[len(y.runs)][0] == PLUS else LT


def is_simpler(x, y):
    """``x`` is an initial segment of ``y``."""
    k = len(x.runs)
    if k == 0:
        return True
    if k > len(y.runs) or x.runs[:-1] != y.runs[:k - 1]:
        return False
    sx, nx = x.runs[-1]
    sy, ny = y.runs[k - 1]
    return sx == sy and nx <= ny


def restrict(x, alpha):
    alpha = Ordinal.coerce(alpha)
    out = []
    pos = O.ZERO
    for sign, n in x.runs:
        if pos >= alpha:
            break
        end = O.cantor_add(pos, n)
        if end <= alpha:
            out.append((sign, n))
        else:
            out.append((sign, O.left_sub(pos, alpha)))
        pos = end
    return Surreal._make(out)


def suffix(x, p):
    """The ``s`` with ``p`` followed by ``s`` equal to ``x``; needs ``p`` to be a prefix."""
    if not is_simpler(p, x):
        raise ValueError(f"{p} is not a prefix of {x}")
    k = len(p.runs)
    if k == 0:
        return x
    sign, n = x.runs[k - 1]
    rest = O.left_sub(p.runs[-1][1], n)
    head = ((sign, rest),) if rest else ()
    return Surreal._make(head + x.runs[k:])


def common_prefix(x, y):
    out = []
    for (sx, nx), (sy, ny) in zip(x.runs, y.runs):
        if sx != sy:
            break
        if nx != ny:
            out.append((sx, min(nx, ny)))
            break
        out.append((sx, nx))
    return Surreal._make(out)


# ---------------------------------------------------------------- chains

@dataclass(frozen=True)
class OmegaChain:
    """An omega-indexed monotone family of numbers.

    ``limit`` is the simplicity-limit of a chain of initial segments that
    is mutually cofinal with this family.  For a family that is itself a
    chain of initial segments, it is just the supremum.
    """
    generator: Callable[[int], Surreal]
    increasing: bool
    limit: Optional[Surreal] = None
    name: str = "chain"

    def __getitem__(self, n):
        return self.generator(n)

    def sample(self, k):
        return [self.generator(i) for i in range(k)]

    def __repr__(self):
        return f"OmegaChain({self.name})"


def check_chain(chain, k=8):
    """Spot-check the first ``k`` elements against direction and limit."""
    items = chain.sample(k)
    for a, b in zip(items, items[1:]):
        if (a < b) != chain.increasing or a == b:
            raise NotAChain(f"{chain.name} is not strictly monotone at {a}, {b}")
    s = chain.limit
    if s is None:
        return items
    if not O.is_limit(length(s)):
        raise NotAChain(f"limit of {chain.name} has successor length")
    for c in items:
        beyond = (c < s) if chain.increasing else (s < c)
        if not beyond or is_simpler(s, c):
            raise NotAChain(f"{c} is not on the near side of the limit of {chain.name}")
    return items


def sup_chain(items, hint=None, k=8):
    """Supremum for initial-segment order.

    ``items`` is a finite iterable of numbers, or a callable ``n -> number``
    enumerating an omega-chain, in which case ``hint`` must be its limit.
    """
    if callable(items):
        if hint is None:
            raise NotAChain("an omega-chain needs a limit hint")
        sample = [items(i) for i in range(k)]
        for a, b in zip(sample, sample[1:]):
            if not is_simpler(a, b) or a == b:
                raise NotAChain(f"{a} is not a proper initial segment of {b}")
        if not all(is_simpler(a, hint) for a in sample):
            raise NotAChain("hint does not extend the chain")
        O.ord_sup(lambda i: length(sample[i]), length(hint), k)
        return hint
    items = sorted(items, key=lambda v: length(v))
    if not items:
        return ZERO
    for a, b in zip(items, items[1:]):
        if not is_simpler(a, b):
            raise NotAChain(f"{a} and {b} are not comparable")
    if hint is not None and hint != items[-1]:
        raise NotAChain("hint disagrees with the finite supremum")
    return items[-1]


def _run_chain(x, index, pos, n):
    """Initial segments of ``x`` ending inside run ``index`` (a limit run)."""
    sign = x.runs[index][0]
    head = x.runs[:index]

    def gen(i):
        return Surreal._make(_append(head, ((sign, O.fundamental(n, i)),)))

    return OmegaChain(gen, sign == PLUS, Surreal._make(_append(head, ((sign, n),))),
                      name=f"segments of {format_signs(x)}")


@lru_cache(maxsize=2 ** 16)
def canonical_options(x):
    """Reduced canonical options ``(left, right)``.

    Each side is a list of at most one item: the greatest left (least
    right) proper initial segment, or an ``OmegaChain`` of initial segments
    when the relevant run has limit length.
    """
    sides = {PLUS: [], MINUS: []}
    for index in range(len(x.runs) - 1, -1, -1):
        sign, n = x.runs[index]
        if sides[sign]:
            continue
        pos = length(Surreal._make(x.runs[:index]))
        if O.is_limit(n):
            sides[sign].append(_run_chain(x, index, pos, n))
        else:
            head = x.runs[:index]
            sides[sign].append(Surreal._make(_append(head, ((sign, O.predecessor(n)),))))
        if sides[-sign]:
            break
    return tuple(sides[PLUS]), tuple(sides[MINUS])


def prefix_options(x):
    """All proper initial segments of a finite-length ``x``, split by side."""
    if not x.is_finite():
        raise NotFiniteLength(str(x))
    signs = to_sign_list(x)
    left, right = [], []
    for i, s in enumerate(signs):
        p = from_sign_list(signs[:i])
        (left if s == PLUS else right).append(p)
    return left, right


# ---------------------------------------------------------------- conversions

def to_sign_list(x):
    if not x.is_finite():
        raise NotFiniteLength(str(x))
    out = []
    for s, n in x.runs:
        out.extend([s] * int(n))
    return out


def from_sign_list(signs):
    return Surreal._make(_append((), ((s, O.ONE) for s in signs)))


def _as_dyadic(d):
    d = Fraction(d)
    den = d.denominator
    if den & (den - 1):
        raise NotDyadic(f"{d} is not dyadic")
    return d


def from_dyadic(d):
    d = _as_dyadic(d)
    whole = int(d) if d.denominator == 1 else None
    if whole is not None:
        return from_int(whole)
    # integer part: run towards the value until we step over it
    lead = PLUS if d > 0 else MINUS
    k = int(abs(d)) + 1
    v = Fraction(lead * k)
    signs = [lead] * k
    step = Fraction(1, 2)
    while v != d:
        s = PLUS if d > v else MINUS
        v += s * step
        signs.append(s)
        step /= 2
    return from_sign_list(signs)


def to_dyadic(x):
    if not x.is_finite():
        raise NotDyadic(f"{x} has infinite length")
    if not x.runs:
        return Fraction(0)
    lead, n = x.runs[0]
    v = Fraction(lead * int(n))
    step = Fraction(1, 2)
    for s, m in x.runs[1:]:
        for _ in range(int(m)):
            v += s * step
            step /= 2
    return v


def from_int(n):
    if n == 0:
        return ZERO
    return Surreal._make((((PLUS if n > 0 else MINUS), O.from_int(abs(n))),))


def from_ordinal(a):
    a = Ordinal.coerce(a)
    return Surreal._make(((PLUS, a),)) if a else ZERO


def to_ordinal(x):
    if not x.runs:
        return O.ZERO
    if len(x.runs) == 1 and x.runs[0][0] == PLUS:
        return x.runs[0][1]
    raise NotOrdinal(f"{x} is not an ordinal")


def is_ordinal(x):
    return not x.runs or (len(x.runs) == 1 and x.runs[0][0] == PLUS)


# ---------------------------------------------------------------- sign strings

def format_signs(x):
    if not x.runs:
        return "0"
    out = []
    for s, n in x.runs:
        ch = "+" if s == PLUS else "-"
        if n == O.ONE:
            out.append(ch)
        else:
            text = O.format_ordinal(n)
            out.append(f"{ch}^{text}" if text.isdigit() or text == "w" else f"{ch}^({text})")
    return " ".join(out)


def parse_signs(text):
    text = text.strip()
    if text in ("", "0"):
        return ZERO
    runs = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in "+-":
            raise ValueError(f"bad sign string {text!r} at {i}")
        sign = PLUS if ch == "+" else MINUS
        i += 1
        n = O.ONE
        if i < len(text) and text[i] == "^":
            i += 1
            if i < len(text) and text[i] == "(":
                depth, j = 0, i
                while j < len(text):
                    depth += {"(": 1, ")": -1}.get(text[j], 0)
                    if depth == 0:
                        break
                    j += 1
                n = O.parse_ordinal(text[i + 1:j])
                i = j + 1
            else:
                j = i
                while j < len(text) and (text[j].isalnum()):
                    j += 1
                n = O.parse_ordinal(text[i:j])
                i = j
        runs.append((sign, n))
    return Surreal(runs)
