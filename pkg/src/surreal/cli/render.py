"""Text forms of evaluation results."""
from .. import ordinal as O
from ..errors import SurrealError
from ..partition_simplicity import GroupAction
from ..substructure import Substructure
from ..surreal_core import OmegaChain, Surreal, format_signs, is_ordinal, to_dyadic, to_ordinal

MODES = ("auto", "signs", "value", "cnf")


class RenderError(SurrealError):
    """The result has no text form in the requested mode."""


def _value(x):
    if not x.is_finite():
        raise RenderError(f"value mode needs finite length, got {format_signs(x)}")
    v = to_dyadic(x)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _cnf(x):
    if not is_ordinal(x):
        raise RenderError(f"cnf mode needs an ordinal, got {format_signs(x)}")
    return O.format_ordinal(to_ordinal(x))


def render(result, mode="auto"):
    if mode not in MODES:
        raise ValueError(f"unknown render mode {mode!r}")
    if result is None:
        return "unknown"
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, (Substructure, GroupAction)):
        return result.name
    if isinstance(result, OmegaChain):
        return f"chain({result.name})"
    if not isinstance(result, Surreal):
        raise TypeError(f"cannot render {result!r}")
    if mode == "signs":
        return format_signs(result)
    if mode == "value":
        return _value(result)
    if mode == "cnf":
        return _cnf(result)
    return _value(result) if result.is_finite() else format_signs(result)
