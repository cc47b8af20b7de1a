"""Exact computation with surreal numbers given as sign sequences."""
from .ordinal import Ordinal
from .surreal_core import Surreal, from_dyadic, to_dyadic, from_ordinal, parse_signs, format_signs

__all__ = ["Ordinal", "Surreal", "from_dyadic", "to_dyadic", "from_ordinal",
           "parse_signs", "format_signs"]
