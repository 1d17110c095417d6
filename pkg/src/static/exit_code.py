from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    INPUT_ERROR = 2
