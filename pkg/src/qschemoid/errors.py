"""Exception hierarchy.

Every validator raises a subclass of :class:`QSchemoidError` carrying the
offending indices as attributes, so callers (and the CLI) can report the
witness without re-parsing the message.
"""

from __future__ import annotations


class QSchemoidError(ValueError):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = witness
        for key, value in witness.items():
            setattr(self, key, value)


# -- categories, groups, groupoids -------------------------------------------

class CategoryError(QSchemoidError):
    pass


class DanglingIndex(CategoryError):
    pass


class SrcTgtViolation(CategoryError):
    pass


class IdentityViolation(CategoryError):
    pass


class MissingComposite(CategoryError):
    pass


class AssociativityViolation(CategoryError):
    pass


class InverseMissing(CategoryError):
    pass


class NotFunctor(CategoryError):
    pass


class SourceTargetMismatch(QSchemoidError):
    pass


# -- partitions, schemes, schemoid morphisms ---------------------------------

class PartitionError(QSchemoidError):
    pass


class RegularityViolation(QSchemoidError):
    pass


class SchemeError(QSchemoidError):
    pass


class DiagonalNotSingleRelation(SchemeError):
    pass


class TransposeMissing(SchemeError):
    pass


class NonConstantCount(SchemeError):
    pass


class BlockSplit(QSchemoidError):
    pass


# -- searches ---------------------------------------------------------------

class SearchCapExceeded(QSchemoidError):
    pass


class UniverseTooLarge(SearchCapExceeded):
    pass


class UniverseMismatch(QSchemoidError):
    pass


class NotThinSchemoid(QSchemoidError):
    pass


class EndpointMismatch(QSchemoidError):
    pass


class BoundaryMismatch(QSchemoidError):
    pass


class NotAutomorphism(QSchemoidError):
    pass


# -- association schemoids ---------------------------------------------------

class NotContravariant(QSchemoidError):
    pass


class NotInvolutive(QSchemoidError):
    pass


class BlockSplitUnderT(QSchemoidError):
    pass


class NotEquivariant(QSchemoidError):
    pass


# -- text formats ------------------------------------------------------------

class ParseError(QSchemoidError):
    def __init__(self, line: int, reason: str, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {reason}", line=line, column=column, reason=reason)
