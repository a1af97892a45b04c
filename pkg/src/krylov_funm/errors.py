"""Exception types raised across the package.

Everything derives from :class:`KrylovError` so callers can catch the whole
family with one clause, yet each failure mode keeps its own class because
tests (and drivers) need to distinguish them.
"""


class KrylovError(Exception):
    """Base class for all errors raised by krylov_funm."""


class DimensionMismatch(KrylovError):
    """Operands have incompatible shapes."""


class SingularMatrix(KrylovError):
    """A dense factorization hit a pivot too small to trust."""


class SingularShift(SingularMatrix):
    """The shifted operator I - A/sigma is (numerically) singular."""


class ZeroShift(KrylovError):
    """sigma = 0 is not an admissible pole."""


class SingularK(SingularMatrix):
    """The accumulated coefficient matrix K is numerically singular."""


class NoConvergence(KrylovError):
    """An iterative kernel exhausted its sweep budget."""


class SpectrumOnSingularSet(KrylovError):
    """An eigenvalue lies on (or too near) the singular set of the function."""


class IllConditionedEigenvectors(KrylovError):
    """Eigenvector basis too ill-conditioned for a diagonalization-based
    function evaluation, or the imaginary residue it left behind is too
    large to discard."""


class SeriousBreakdown(KrylovError):
    """The biorthogonalization produced a (near-)singular coupling block.

    Carries ``steps``, the number of fully completed Lanczos steps.
    """

    def __init__(self, msg, steps=0):
        super().__init__(msg)
        self.steps = steps


class RankDeflation(KrylovError):
    """A QR factor in the recurrence lost full rank.

    Carries ``steps``, the number of fully completed Lanczos steps.
    """

    def __init__(self, msg, steps=0):
        super().__init__(msg)
        self.steps = steps


class PoleHit(KrylovError):
    """Evaluation point coincides with a pole of the nodal function."""


class DegenerateBracket(KrylovError):
    """All candidate intervals for the pole search have zero width."""


class ParseError(KrylovError):
    """Malformed Matrix Market input. Carries the 1-based ``line`` number."""

    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line %d: %s" % (line, msg)
        super().__init__(msg)
        self.line = line


class UnsupportedFormat(KrylovError):
    """Matrix Market variant (complex/pattern/...) we do not read."""


class InvalidSpec(KrylovError):
    """A problem or run configuration is inconsistent."""
