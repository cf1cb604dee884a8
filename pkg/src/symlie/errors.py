"""Exception classes shared across the package.

FormatError marks malformed user input (CLI exit code 2).
InvariantViolation marks an internal consistency failure (CLI exit code 1).
"""


class FormatError(Exception):
    pass


class InvariantViolation(Exception):
    pass
