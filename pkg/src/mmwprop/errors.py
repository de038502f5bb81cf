"""Exception types shared by the model modules."""


class InvalidQuantityError(ValueError):
    """A physical quantity is outside its physical domain (negative rate, etc.)."""


class OutOfModelRangeError(ValueError):
    """Input is physically valid but outside the validity range of a model."""

    def __init__(self, message, mechanism=None):
        super().__init__(message)
        self.mechanism = mechanism
