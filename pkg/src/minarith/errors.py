"""Exception hierarchy shared by all modules.

Type mismatches at the term level raise the builtin ``TypeError``; everything
else gets a dedicated class so callers can distinguish failure modes.
"""


class KernelError(Exception):
    """Base class for all domain errors raised by this package."""


class LanguageError(KernelError):
    """A formula uses connectives outside the language of the given theory."""


class TheoryError(KernelError):
    """An axiom or proof is not available in the requested theory."""


class EigenvariableError(KernelError):
    """A quantifier side condition on free variables is violated."""


class ShapeError(KernelError):
    """A premise conclusion does not match the shape required by a rule."""


class ClassError(KernelError):
    """A formula does not belong to the required formula class."""


class CertificateError(KernelError):
    """A supplied certificate proof does not have the expected conclusion."""


class EmptyGoalError(KernelError):
    """Premise packing needs at least one goal formula."""


class ParseError(Exception):
    """Malformed S-expression input; deliberately outside KernelError."""
