"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input object fails the domain condition of a map.

    ``condition`` names the violated condition so the CLI can report it.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition or message


class ParseError(ValueError):
    """Text input could not be parsed into the requested object."""
