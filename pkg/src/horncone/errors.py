"""Exception hierarchy shared by all modules."""


class HornconeError(Exception):
    """Base class for every error raised by the package."""


class NotAPartition(HornconeError, ValueError):
    pass


class CommonLengthMismatch(HornconeError, ValueError):
    pass


class LengthMismatch(HornconeError, ValueError):
    pass


class InvalidTuple(HornconeError, ValueError):
    pass


class SaturationViolation(HornconeError):
    """Nonvanishing of f changed under scaling; carries the offending values."""

    def __init__(self, seqs, values):
        self.seqs = seqs
        self.values = values
        super().__init__(f"saturation violated for {seqs!r}: {values!r}")


class InvalidParameters(HornconeError, ValueError):
    pass


class DimensionMismatch(HornconeError, ValueError):
    pass


class CentralMismatch(HornconeError, ValueError):
    pass


class SystemMismatch(HornconeError, ValueError):
    pass


class EquivalenceViolation(HornconeError):
    """The three membership verdicts disagreed."""

    def __init__(self, seqs, verdicts, details=None):
        self.seqs = seqs
        self.verdicts = verdicts
        self.details = details or {}
        super().__init__(f"equivalence violated for {seqs!r}: {verdicts!r} {self.details!r}")


class SingularInput(HornconeError, ValueError):
    pass


class InstanceTooLarge(HornconeError, ValueError):
    pass


class SamplerUnavailable(HornconeError):
    pass
