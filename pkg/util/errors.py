# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Exception hierarchy. The CLI maps each family to a process exit code.
"""


class WalkbenchError(Exception):
    exit_code = 1


class ConfigError(WalkbenchError, ValueError):
    """Invalid or inconsistent experiment configuration."""
    exit_code = 2

    def __init__(self, key, message):
        self.key = key
        super().__init__("{}: {}".format(key, message))


class CapExceededError(WalkbenchError, RuntimeError):
    """A size cap (product set, support, search) was hit; the run aborts."""
    exit_code = 3

    def __init__(self, what, size, cap, level=None):
        self.what = what
        self.size = size
        self.cap = cap
        self.level = level
        where = "" if level is None else " at level {}".format(level)
        super().__init__("{} reached {} elements{} (cap {})".format(what, size, where, cap))


class VerificationError(WalkbenchError):
    """A checked bound was violated."""
    exit_code = 4


class DomainError(WalkbenchError, ValueError):
    """An argument outside the domain of an operation."""
    exit_code = 2


class ParseError(WalkbenchError, ValueError):
    exit_code = 2
