"""Exception hierarchy.

Every error raised by the package derives from :class:`PseudopairsError`.
The CLI maps the three families below onto exit codes.
"""


class PseudopairsError(Exception):
    """Base class for all package errors."""


class PreconditionError(PseudopairsError, ValueError):
    """Input violates a documented precondition (CLI exit 2)."""


class CertificationError(PseudopairsError, ArithmeticError):
    """An internal certificate or verification step failed (CLI exit 4)."""


# algebra kernel
class DivisorZero(PreconditionError, ZeroDivisionError):
    pass


class BothZero(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NonFinite(PreconditionError):
    pass


# nilpotent algebra
class TTooSmall(PreconditionError):
    pass


class NonNilpotentArgument(PreconditionError):
    pass


class JetLengthError(PreconditionError):
    pass


# lemma chain
class UZero(PreconditionError):
    pass


class ChainDegenerate(PseudopairsError):
    """A leading coefficient (A or E) vanished mid-chain; retry with another u."""

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"Euclidean chain degenerate: {which} = 0")


class H12Zero(PreconditionError):
    pass


# spectral numerics
class DimensionMismatch(PreconditionError):
    pass


class BoundViolated(CertificationError):
    def __init__(self, witness, lhs, rhs):
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"resolvent bound violated at z={witness!r}: {lhs!r} < {rhs!r}")


class PrecondSpectralRadius(PreconditionError):
    pass


# conditions
class IndexOutOfRange(PreconditionError, IndexError):
    pass


class IdentityFailed(CertificationError):
    def __init__(self, name, witness):
        self.name = name
        self.witness = witness
        super().__init__(f"identity {name} failed at {witness!r}")


# constructor
class SingularSystem(PseudopairsError, ArithmeticError):
    pass


class NoAdmissibleU(PseudopairsError):
    pass


class CertificationFailed(CertificationError):
    pass


class TSearchExhausted(CertificationError):
    pass


class StarConditionSuspected(PseudopairsError):
    """Jets appear to satisfy the cubic star condition: no admissible u (CLI exit 3)."""


class NmEqual(PreconditionError):
    pass


class ExponentTooSmall(PreconditionError):
    pass


class JetInvariantError(PreconditionError):
    pass
