"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
the most specific one that applies rather than bare ValueError.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigError(ValueError):
    """A configuration file, experiment description, or invocation is malformed."""


class GuardRefusal(RuntimeError):
    """A numerical guard declined to produce a statistically meaningless value."""


class InternalCheckError(RuntimeError):
    """A self-check that must hold by construction failed; indicates a bug."""
