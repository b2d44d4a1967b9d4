class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""
