from enum import Enum


class Condition(Enum):
    CATEGORY = "C is a category"
    FUNCTOR = "(a) functoriality"
    DEC_SQUARE = "(b) Dec square"
    RESTRICTED_VERTEX = "(c) restricted vertex"
    FACTOR = "(factor)"
    EE = "(ee)"
    IDEMPOTENT = "E idempotent"
    SPLITTING = "splitting"
    FACTOR_IMPLIES_EE = "(factor) implies (ee)"
