class ToposError(Exception):
    """Base class for every error raised by graphtopos."""


class GraphError(ToposError, ValueError):
    """A graph, subobject or labelling failed validation."""


class MorphismError(ToposError, ValueError):
    """A morphism is malformed, or morphisms cannot be combined."""


class SizeCapExceeded(ToposError):
    """An enumeration would exceed the configured candidate bound."""

    def __init__(self, what, bound, cap):
        self.what = what
        self.bound = bound
        self.cap = cap
        super().__init__(f"{what}: {bound} candidates exceeds cap {cap}")
