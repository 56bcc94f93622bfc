"""Exception hierarchy shared by all harmconv modules."""


class HarmconvError(Exception):
    pass


class DivisionBySingular(HarmconvError, ZeroDivisionError):
    """Series division by a series whose constant term is (numerically) zero."""


class EvalOutsideDisk(HarmconvError, ValueError):
    pass


class NoConvergence(HarmconvError, ArithmeticError):
    pass


class ShearSingular(HarmconvError, ArithmeticError):
    pass


class DenominatorVanishes(HarmconvError, ArithmeticError):
    pass


class UnsupportedVariant(HarmconvError, TypeError):
    pass


class UnsupportedTarget(HarmconvError, ValueError):
    pass


class BadAlpha(HarmconvError, ValueError):
    pass


class BadParameter(HarmconvError, ValueError):
    pass


class NotApplicable(HarmconvError, ValueError):
    """Cohn's rule needs |a_0| < |a_n|."""


class BoundaryAmbiguous(HarmconvError, ArithmeticError):
    pass


class IllConditioned(HarmconvError, ArithmeticError):
    pass


class NotLocallyUnivalent(HarmconvError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RegionViolation(HarmconvError, AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
