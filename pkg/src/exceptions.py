class SkewSpanError(Exception):
    pass


class DomainMismatch(SkewSpanError):
    pass


class InvalidFunction(SkewSpanError):
    pass


class CapExceeded(SkewSpanError):
    pass


class UnknownObject(SkewSpanError):
    pass


class UnknownArrow(SkewSpanError):
    pass


class InvalidCategory(SkewSpanError):
    pass


class BoundaryMismatch(SkewSpanError):
    pass


class NotATwoCell(SkewSpanError):
    pass


class ShapeError(SkewSpanError):
    pass


class NotStructurallyIsomorphic(SkewSpanError):
    pass


class NotWellFormed(SkewSpanError):
    pass


class DepthTooSmall(SkewSpanError):
    pass


class MonoidLawsFail(SkewSpanError):
    pass


class NotAMonoidMorphism(SkewSpanError):
    pass


class ParseError(SkewSpanError):
    pass


class ResolutionError(SkewSpanError):
    pass


class AxiomsFail(SkewSpanError):
    def __init__(self, report, message=None):
        self.report = report
        super().__init__(message or "Axioms do not hold: {}".format(report.summary()))


class ConditionsFail(SkewSpanError):
    def __init__(self, report, message=None):
        self.report = report
        super().__init__(message or "Conditions do not hold: {}".format(report.summary()))


class NotSimplicial(SkewSpanError):
    def __init__(self, report, message=None):
        self.report = report
        super().__init__(message or "Not a simplicial map: {}".format(report.summary()))
