"""Domain errors raised across the package.

The class name of each error is what the command line layer reports in its
JSON failure envelope, so these names are part of the public interface.
"""


class ArcZetaError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroPolynomial(ArcZetaError):
    """An operation that needs a nonzero polynomial received zero."""


class PoleAtZero(ArcZetaError):
    """Evaluation at 0 of a polynomial with negative exponents."""


class OrderMismatch(ArcZetaError):
    """Arithmetic between series with different truncation orders."""


class EmptyProjectiveQuadric(ArcZetaError):
    """A projective quadric with no real points (one sign class is empty)."""


class NotReducible(ArcZetaError):
    """The quadric atom is a base case, not subject to hyperbolic reduction."""


class MalformedExpression(ArcZetaError):
    """A set expression failed structural validation."""


class InvalidGerm(ArcZetaError):
    """Quadratic germ data violating 1 <= plus + minus <= dim."""


class GermSyntaxError(ArcZetaError):
    """Polynomial germ text that does not match the input grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class NotAGerm(ArcZetaError):
    """A polynomial with nonzero constant term, so it does not vanish at 0."""


class NotSingularAtOrigin(ArcZetaError):
    """A germ whose linear part does not vanish at the origin."""


class NotSignatureForm(ArcZetaError):
    """A coefficient that is not of the shape produced by a signature quadric."""


class DimensionMismatch(ArcZetaError):
    """Two germs that live in different ambient dimensions."""
