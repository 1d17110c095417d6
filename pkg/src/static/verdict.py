from enum import Enum


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"

    @classmethod
    def of(cls, ok):
        return cls.PASS if ok else cls.FAIL
