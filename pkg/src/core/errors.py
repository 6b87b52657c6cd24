"""
Exceptions raised by the sequence-design library.
"""


class CcseqError(Exception):
    """Base class for every error raised by ccseq."""


class RangeError(CcseqError, ValueError):
    """An index or shift lies outside its admissible range."""


class DomainError(CcseqError, ValueError):
    """Operands do not share a domain, modulus or shape."""


class ParameterError(CcseqError, ValueError):
    """Construction parameters violate a precondition (λ parity, t1 = t2, ...)."""


class CodesetFormatError(CcseqError):
    """A codeset document cannot be decoded."""
