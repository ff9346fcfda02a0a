"""Exception types shared across the package."""


class ParseError(ValueError):
    """A file does not conform to its declared format.

    Carries enough context (path, line or byte position) in the message to
    locate the offending input.
    """

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)
        self.path = path
        self.line = line


class ResourceLimitError(RuntimeError):
    """A brute-force enumeration would exceed the configured guard."""
