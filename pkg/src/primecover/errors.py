"""Exception types shared across the package."""


class InconsistentFunction(ValueError):
    """A minterm is claimed by both the on-set and the off-set."""


class EmptyOffset(ValueError):
    """The off-set is empty: the only prime implicant is the universal cube."""


class EmptyOnset(ValueError):
    """There is nothing to cover."""


class PlaParseError(ValueError):
    """Malformed PLA text."""
