"""Exception types shared across the package."""


class SpectraError(Exception):
    """Base class for every error raised by digraph_spectra."""


class InvalidDigraph(SpectraError, ValueError):
    pass


class LoopArc(InvalidDigraph):
    pass


class IndexOutOfRange(InvalidDigraph):
    pass


class DuplicateArc(InvalidDigraph):
    pass


class NotStronglyConnected(SpectraError, ValueError):
    pass


class HypothesisViolated(SpectraError, ValueError):
    """A closed-form result was requested for inputs outside its hypotheses.

    ``condition`` names the failed hypothesis so that reports can say which
    one did not hold.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


class NonSquare(SpectraError, ValueError):
    pass


class OrderMismatch(SpectraError, ValueError):
    pass


class CardinalityMismatch(SpectraError, ValueError):
    pass


class NoConvergence(SpectraError, ArithmeticError):
    def __init__(self, max_iterations):
        self.max_iterations = max_iterations
        super().__init__(f"QR iteration did not converge in {max_iterations} iterations")


class ExactModeUnavailable(SpectraError, ValueError):
    pass


class NotAnEigenvalue(SpectraError, ValueError):
    pass


class PerronNotSimple(SpectraError, ValueError):
    pass


class DenominatorVanishes(SpectraError, ZeroDivisionError):
    pass


class DegenerateDiscriminant(SpectraError, ValueError):
    pass


class ShapeViolated(SpectraError, ValueError):
    pass


class BadPrime(SpectraError, ValueError):
    pass


class InvalidParams(SpectraError, ValueError):
    pass


class NotTransmissionRegular(HypothesisViolated):
    def __init__(self, detail=""):
        super().__init__("transmission regular", detail)
