"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with strictly
decreasing exponents (themselves ordinals) and positive integer
coefficients.  The empty tuple is zero.
"""
import re
from functools import total_ordering

from .errors import BudgetExceeded, NotAChain

LT, EQ, GT = -1, 0, 1

DEFAULT_DEPTH = 8


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash", "_fin")

    def __init__(self, terms=()):
        # Fold the terms left to right with Cantor addition; this is the
        # normalization step, so any list of (exp, coef) pairs is accepted.
        acc = ZERO_TERMS
        for exp, coef in terms:
            exp = Ordinal.coerce(exp)
            if coef < 0:
                raise ValueError("negative coefficient")
            if coef:
                acc = _cantor_add_terms(acc, ((exp, int(coef)),))
        self.terms = acc
        self._hash = None
        self._fin = _finite_value(acc)

    @classmethod
    def _make(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms = tuple(terms)
        obj._hash = None
        obj._fin = _finite_value(terms)
        return obj

    @staticmethod
    def coerce(value):
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return from_int(value)
        if isinstance(value, str):
            return parse_ordinal(value)
        raise TypeError(f"cannot make an ordinal from {value!r}")

    def __eq__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            other = from_int(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if isinstance(other, Ordinal) and self._fin is not None and other._fin is not None:
            return self._fin < other._fin
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) == LT

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return cantor_add(self, other)

    def __radd__(self, other):
        return cantor_add(other, self)

    def __mul__(self, other):
        return cantor_mul(self, other)

    def __rmul__(self, other):
        return cantor_mul(other, self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"

    def __str__(self):
        return format_ordinal(self)

    def is_finite(self):
        return self._fin is not None

    def __int__(self):
        if self._fin is None:
            raise ValueError(f"{self} is infinite")
        return self._fin

    def depth(self):
        """Nesting depth of the exponent tower (0 for finite ordinals)."""
        if self.is_finite():
            return 0
        return 1 + max(exp.depth() for exp, _ in self.terms)


def _finite_value(terms):
    if not terms:
        return 0
    if len(terms) == 1 and not terms[0][0].terms:
        return terms[0][1]
    return None


ZERO_TERMS = ()
ZERO = Ordinal._make(())
ONE = Ordinal._make(((ZERO, 1),))
OMEGA = Ordinal._make(((ONE, 1),))
_SMALL = [ZERO] + [Ordinal._make(((ZERO, n),)) for n in range(1, 257)]


def from_int(n):
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n < len(_SMALL):
        return _SMALL[n]
    return Ordinal._make(((ZERO, n),))


def ord_compare(a, b):
    if not isinstance(a, Ordinal) or not isinstance(b, Ordinal):
        a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    if a is b:
        return EQ
    fa, fb = a._fin, b._fin
    if fa is not None and fb is not None:
        return LT if fa < fb else (GT if fa > fb else EQ)
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea is not eb and ea != eb:
            return ord_compare(ea, eb)
        if ca != cb:
            return LT if ca < cb else GT
    if len(a.terms) == len(b.terms):
        return EQ
    return LT if len(a.terms) < len(b.terms) else GT


def _cantor_add_terms(a, b):
    if not b:
        return a
    lead = b[0][0]
    kept = []
    for exp, coef in a:
        c = ord_compare(exp, lead)
        if c == GT:
            kept.append((exp, coef))
        elif c == EQ:
            return tuple(kept) + ((lead, coef + b[0][1]),) + tuple(b[1:])
        else:
            break
    return tuple(kept) + tuple(b)


def cantor_add(a, b):
    if not isinstance(a, Ordinal) or not isinstance(b, Ordinal):
        a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    if a._fin is not None and b._fin is not None:
        return from_int(a._fin + b._fin)
    return Ordinal._make(_cantor_add_terms(a.terms, b.terms))


def cantor_mul(a, b):
    a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    if not a.terms or not b.terms:
        return ZERO
    lead_exp, lead_coef = a.terms[0]
    out = ZERO_TERMS
    for exp, coef in b.terms:
        if exp.terms:
            piece = ((cantor_add(lead_exp, exp), coef),)
        else:
            piece = ((lead_exp, lead_coef * coef),) + a.terms[1:]
        out = _cantor_add_terms(out, piece)
    return Ordinal._make(out)


def cantor_omega_pow(b, depth=DEFAULT_DEPTH):
    b = Ordinal.coerce(b)
    result = Ordinal._make(((b, 1),))
    if result.depth() > depth:
        raise BudgetExceeded(f"omega^{b} nests deeper than {depth}")
    return result


def cantor_pow(a, n):
    """``a`` multiplied by itself ``n`` times (finite ``n``)."""
    out = ONE
    for _ in range(n):
        out = cantor_mul(out, a)
    return out


def hessenberg_add(a, b):
    a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    coefs = {}
    for exp, coef in a.terms + b.terms:
        coefs[exp] = coefs.get(exp, 0) + coef
    order = sorted(coefs, reverse=True)
    return Ordinal._make(tuple((e, coefs[e]) for e in order))


def hessenberg_mul(a, b):
    a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    out = ZERO
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            out = hessenberg_add(out, Ordinal._make(((hessenberg_add(ea, eb), ca * cb),)))
    return out


def is_limit(a):
    a = Ordinal.coerce(a)
    return bool(a.terms) and bool(a.terms[-1][0].terms)


def is_successor(a):
    a = Ordinal.coerce(a)
    return bool(a.terms) and not a.terms[-1][0].terms


def predecessor(a):
    a = Ordinal.coerce(a)
    if not is_successor(a):
        raise ValueError(f"{a} has no predecessor")
    exp, coef = a.terms[-1]
    return Ordinal._make(a.terms[:-1] + (((exp, coef - 1),) if coef > 1 else ()))


def successor(a):
    return cantor_add(a, ONE)


def left_sub(a, b):
    """The unique ``g`` with ``a + g == b`` (Cantor sum); needs ``a <= b``."""
    a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    for i, (ea, ca) in enumerate(a.terms):
        if i >= len(b.terms):
            raise ValueError(f"{a} > {b}")
        eb, cb = b.terms[i]
        if (ea, ca) == (eb, cb):
            continue
        c = ord_compare(eb, ea)
        if c == GT:
            return Ordinal._make(b.terms[i:])
        if c == EQ and cb > ca:
            return Ordinal._make(((eb, cb - ca),) + b.terms[i + 1:])
        raise ValueError(f"{a} > {b}")
    return Ordinal._make(b.terms[len(a.terms):])


def left_divmod(a, b):
    """Return ``(q, r)`` with ``a == b*q + r`` and ``r < b``."""
    a, b = Ordinal.coerce(a), Ordinal.coerce(b)
    if not b.terms:
        raise ZeroDivisionError("ordinal division by zero")
    q, r = ZERO, a
    lead_b, coef_b = b.terms[0]
    while r >= b:
        lead_r, coef_r = r.terms[0]
        if lead_r > lead_b:
            f = left_sub(lead_b, lead_r)
            step = Ordinal._make(((f, coef_r),))
        else:
            d = coef_r // coef_b
            if cantor_mul(b, d) > r:
                d -= 1
            step = from_int(d)
        r = left_sub(cantor_mul(b, step), r)
        q = cantor_add(q, step)
    return q, r


def fundamental(a, n):
    """``n``-th element of a strictly increasing sequence with supremum ``a``."""
    a = Ordinal.coerce(a)
    if not is_limit(a):
        raise ValueError(f"{a} is not a limit")
    exp, coef = a.terms[-1]
    base = Ordinal._make(a.terms[:-1] + (((exp, coef - 1),) if coef > 1 else ()))
    if is_limit(exp):
        step = Ordinal._make(((fundamental(exp, n), 1),))
    else:
        step = Ordinal._make(((predecessor(exp), n),)) if n else ZERO
    return cantor_add(base, step)


def ord_sup(values, hint=None, k=8):
    """Least upper bound of a finite collection, or of an omega-chain.

    An omega-chain is a callable ``n -> Ordinal`` and needs ``hint``, its
    closed-form limit.  The hint is checked against the first ``k``
    elements: it must be a limit, bound each of them, and be exceeded
    "from below" by the last one, i.e. the last element must be past the
    hint with its final term removed.
    """
    if hint is None:
        if callable(values):
            raise NotAChain("an omega-chain needs a limit hint")
        values = [Ordinal.coerce(v) for v in values]
        return max(values, default=ZERO)
    hint = Ordinal.coerce(hint)
    sample = [Ordinal.coerce(values(i)) for i in range(k)] if callable(values) \
        else [Ordinal.coerce(v) for v in values]
    if not is_limit(hint):
        raise NotAChain(f"limit hint {hint} is not a limit ordinal")
    for lo, hi in zip(sample, sample[1:]):
        if not lo < hi:
            raise NotAChain("chain is not strictly increasing")
    if any(v >= hint for v in sample):
        raise NotAChain(f"hint {hint} does not bound the chain")
    exp, coef = hint.terms[-1]
    floor = Ordinal._make(hint.terms[:-1] + (((exp, coef - 1),) if coef > 1 else ()))
    if sample and sample[-1] <= floor:
        raise NotAChain(f"chain stays below {floor}, so {hint} is not least")
    return hint


# ---------------------------------------------------------------- text syntax

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def format_ordinal(a):
    a = Ordinal.coerce(a)
    if not a.terms:
        return "0"
    parts = []
    for exp, coef in a.terms:
        if not exp.terms:
            parts.append(str(coef))
            continue
        if exp == ONE:
            head = "w"
        else:
            inner = format_ordinal(exp)
            head = "w^" + (inner if inner.isdigit() or inner == "w" else f"({inner})")
        parts.append(head if coef == 1 else f"{head}*{coef}")
    return "+".join(parts)


def parse_ordinal(text):
    tokens = [m.group(1) or m.group(2) for m in _TOKEN.finditer(text.strip())]
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"bad ordinal {text!r}: expected {expected or 'token'} at {tok!r}")
        pos += 1
        return tok

    def sum_():
        out = term()
        while peek() == "+":
            take("+")
            out = cantor_add(out, term())
        return out

    def term():
        tok = peek()
        if tok is not None and tok.isdigit():
            return from_int(int(take()))
        take("w")
        exp = ONE
        if peek() == "^":
            take("^")
            nxt = peek()
            if nxt == "(":
                take("(")
                exp = sum_()
                take(")")
            elif nxt == "w":
                take()
                exp = OMEGA
            elif nxt is not None and nxt.isdigit():
                exp = from_int(int(take()))
            else:
                raise ValueError(f"bad exponent in {text!r}")
        coef = 1
        if peek() == "*":
            take("*")
            tok = take()
            if not tok.isdigit():
                raise ValueError(f"bad coefficient in {text!r}")
            coef = int(tok)
        return Ordinal([(exp, coef)])

    result = sum_()
    if pos != len(tokens):
        raise ValueError(f"trailing input in ordinal {text!r}")
    return result
