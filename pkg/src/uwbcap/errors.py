"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An input lies outside the domain of a formula or type."""


class InfeasibleTargetError(DomainError):
    """Requested rate sits at or above the delay-spread asymptote."""


class UnknownEnvironmentError(KeyError):
    def __init__(self, name, known):
        self.name = name
        self.known = list(known)
        super().__init__(name)

    def __str__(self):
        return f"unknown environment {self.name!r}; known: {', '.join(self.known)}"


class CatalogError(ValueError):
    """Base class for catalog problems."""


class CatalogParseError(CatalogError):
    def __init__(self, line, field, message):
        self.line = line
        self.field = field
        super().__init__(f"line {line}, field {field!r}: {message}")


class CatalogValidationError(CatalogError):
    pass


class CatalogKindError(CatalogError):
    pass


class GridTooLargeError(DomainError):
    """Simulation grid exceeds the configured sample cap."""
