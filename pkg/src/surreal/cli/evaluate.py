"""Evaluate parsed expressions over the number, structure and action registries."""
from .. import concat_algebra as CA
from .. import conway_field as F
from .. import partition_simplicity as P
from .. import substructure as SS
from ..bracket_engine import NAMED_CHAINS, default_budget, simplest_in_cut
from ..surreal_core import OmegaChain, Surreal, from_dyadic, from_ordinal, length, to_dyadic, to_ordinal
from .syntax import Bracket, BinOp, Blank, Call, Name, Negative, Num, Ord, Signs, parse


class EvalError(ValueError):
    """Well-formed text that names nothing or applies something to the wrong kind of value."""


STRUCTURE_NAMES = {"No": SS.NO, "inc": SS.INC, "infinitesimals": SS.INFINITESIMALS,
                   "positive": P.POSITIVE}
ACTIONS = {("translations", "Z"): P.TRANSLATIONS_Z, ("translations", "D"): P.TRANSLATIONS_D,
           ("homotheties", "ord"): P.HOMOTHETIES}


def evaluate(node, budget=None):
    if budget is None:
        return _eval(node)
    with default_budget(budget):
        return _eval(node)


def evaluate_text(text, budget=None):
    return evaluate(parse(text), budget)


def _number(node):
    v = _eval(node)
    if not isinstance(v, Surreal):
        raise EvalError(f"expected a number, got {_kind(v)}")
    return v


def _structure(node):
    v = _eval(node)
    if isinstance(v, P.GroupAction):
        raise EvalError(f"{v.name} is an action; use smp({v.name}) for its simple numbers")
    if not isinstance(v, SS.Substructure):
        raise EvalError(f"expected a structure, got {_kind(v)}")
    return v


def _action(node):
    v = _eval(node)
    if not isinstance(v, P.GroupAction):
        raise EvalError(f"expected an action, got {_kind(v)}")
    return v


def _bound(node):
    if isinstance(node, Blank):
        return None
    v = _eval(node)
    if not isinstance(v, (Surreal, OmegaChain)):
        raise EvalError(f"expected a number or chain as a bound, got {_kind(v)}")
    return v


def _kind(v):
    if isinstance(v, Surreal):
        return "a number"
    if isinstance(v, OmegaChain):
        return "a chain"
    if isinstance(v, SS.Substructure):
        return "a structure"
    if isinstance(v, P.GroupAction):
        return "an action"
    return type(v).__name__


def _arity(node, n):
    if len(node.args) != n:
        raise EvalError(f"{node.name} takes {n} argument{'s' if n != 1 else ''}")


def _eval(node):
    if isinstance(node, Num):
        return from_dyadic(node.value)
    if isinstance(node, Ord):
        return from_ordinal(node.value)
    if isinstance(node, Signs):
        return node.value
    if isinstance(node, Name):
        if node.name in STRUCTURE_NAMES:
            return STRUCTURE_NAMES[node.name]
        if node.name in NAMED_CHAINS:
            return NAMED_CHAINS[node.name]()
        raise EvalError(f"unknown name {node.name!r}")
    if isinstance(node, Blank):
        raise EvalError("'_' is only allowed as an interval bound")
    if isinstance(node, Negative):
        return -_number(node.operand)
    if isinstance(node, BinOp):
        x, y = _number(node.left), _number(node.right)
        return {"+": F.add, "-": F.sub, "*": F.mul}[node.op](x, y)
    if isinstance(node, Bracket):
        L = [b for b in map(_bound, node.left) if b is not None]
        R = [b for b in map(_bound, node.right) if b is not None]
        return simplest_in_cut(L, R)
    if isinstance(node, Call):
        if node.name not in CALLS:
            raise EvalError(f"unknown function {node.name!r}")
        return CALLS[node.name](node)
    raise EvalError(f"cannot evaluate {node!r}")


# ---------------------------------------------------------------- calls

def _binary(fn):
    def call(node):
        _arity(node, 2)
        return fn(_number(node.args[0]), _number(node.args[1]))
    return call


def _neg(node):
    _arity(node, 1)
    v = _eval(node.args[0])
    if isinstance(v, SS.Substructure):
        return SS.make_negate(v)
    if isinstance(v, Surreal):
        return F.neg(v)
    raise EvalError(f"cannot negate {_kind(v)}")


def _xi(node):
    _arity(node, 2)
    return _structure(node.args[0]).xi(_number(node.args[1]))


def _xi_inv(node):
    _arity(node, 2)
    return _structure(node.args[0]).xi_inv(_number(node.args[1]))


def _member(node):
    _arity(node, 2)
    return _structure(node.args[0]).member(_number(node.args[1]))


def _fixed(node):
    _arity(node, 2)
    return SS.is_fixed(_structure(node.args[0]), _number(node.args[1]))


def _simple(node):
    _arity(node, 2)
    return P.is_simple(_action(node.args[0]), _number(node.args[1]))


def _project(node):
    _arity(node, 2)
    return P.project_simple(_action(node.args[0]), _number(node.args[1]))


def _length(node):
    _arity(node, 1)
    return from_ordinal(length(_number(node.args[0])))


def _chain(node):
    _arity(node, 1)
    arg = node.args[0]
    if not isinstance(arg, Name) or arg.name not in NAMED_CHAINS:
        raise EvalError("chain(...) takes one of: " + ", ".join(sorted(NAMED_CHAINS)))
    return NAMED_CHAINS[arg.name]()


def _shift(node):
    _arity(node, 1)
    return SS.make_shift(_number(node.args[0]))


def _scale(node):
    _arity(node, 1)
    return SS.make_scale(_number(node.args[0]))


def _interval(node):
    _arity(node, 3)
    S = _structure(node.args[0])
    lo, hi = _bound(node.args[1]), _bound(node.args[2])
    return SS.make_cut_interval(S, [] if lo is None else [lo], [] if hi is None else [hi])


def _fix(node):
    _arity(node, 1)
    return SS.make_fix(_structure(node.args[0]))


def _nosuccpow(node):
    _arity(node, 1)
    return SS.nosucc_pow(to_ordinal(_number(node.args[0])))


def _tail(node):
    _arity(node, 1)
    return SS.make_dyadic_tail(to_dyadic(_number(node.args[0])))


def _imb(node):
    _arity(node, 2)
    return SS.imbricate(_structure(node.args[0]), _structure(node.args[1]))


def _smp(node):
    _arity(node, 1)
    return P.smp_structure(_action(node.args[0]))


def _group(kind):
    def call(node):
        _arity(node, 1)
        arg = node.args[0]
        key = (kind, arg.name if isinstance(arg, Name) else None)
        if key not in ACTIONS:
            options = [k[1] for k in ACTIONS if k[0] == kind]
            raise EvalError(f"{kind}(...) takes one of: {', '.join(options)}")
        return ACTIONS[key]
    return call


CALLS = {
    "cadd": _binary(CA.concat_add),
    "cmul": _binary(CA.concat_mul),
    "neg": _neg,
    "xi": _xi,
    "xi_inv": _xi_inv,
    "member?": _member,
    "fixed?": _fixed,
    "simple?": _simple,
    "project": _project,
    "length": _length,
    "chain": _chain,
    "shift": _shift,
    "final": _shift,
    "scale": _scale,
    "interval": _interval,
    "fix": _fix,
    "nosuccpow": _nosuccpow,
    "tail": _tail,
    "imb": _imb,
    "smp": _smp,
    "translations": _group("translations"),
    "homotheties": _group("homotheties"),
}

