"""Exception types shared across the package."""


class NotPermutationError(ValueError):
    """The polynomial does not permute Z/2^w, so the operation is undefined."""


class NotOneStrokeError(ValueError):
    """The polynomial does not drive a single full cycle on Z/2^w."""


class BudgetExceededError(ValueError):
    """An exhaustive operation would exceed its evaluation budget."""


class StreamFormatError(ValueError):
    """Serialized stream bytes are malformed or carry an unknown version."""
