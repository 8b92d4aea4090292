"""Exception hierarchy shared by the library and the CLI."""


class CRLedgerError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(CRLedgerError, ValueError):
    """Unknown algorithm ids, malformed scenario/genesis/catalog files."""


class ValidationError(CRLedgerError, ValueError):
    """Malformed protocol objects or arguments outside a formula's domain."""


class UsageError(CRLedgerError):
    """Command-line arguments that cannot be parsed or are inconsistent."""


class SecurityRegressionError(CRLedgerError):
    """An adversarial scenario ended in an accepted transaction."""

    def __init__(self, message: str, verdicts=None):
        super().__init__(message)
        self.verdicts = verdicts or []
