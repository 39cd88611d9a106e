"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller violated a documented precondition (bad word, label, parameter)."""


class CapacityError(ValueError):
    """A diagram exceeds the size limit of an exact algorithm."""


class DegeneracyError(RuntimeError):
    """A numeric construction hit a non-generic configuration and ran out of retries."""
