"""Exception types shared across the package."""


class EquicobarError(Exception):
    pass


class Inconclusive(EquicobarError):
    """A bounded search hit its cap; carries the cap that was hit."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class FieldMismatch(EquicobarError, ValueError):
    pass


class SimplicialError(EquicobarError, ValueError):
    """Violated simplicial identity or malformed simplicial data."""


class CapExceeded(EquicobarError, ValueError):
    """A computation needed a degree above the object's dimension bound."""


class InputError(EquicobarError, ValueError):
    pass
