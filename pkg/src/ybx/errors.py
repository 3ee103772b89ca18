"""Exception types shared by the engines and mapped to CLI exit codes."""


class SizeError(ValueError):
    """Input exceeds the size bound an operation is willing to handle."""


class IdentityFailure(AssertionError):
    """An identity expected to hold exactly came out false."""
