class RotationToolkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidMapError(RotationToolkitError, ValueError):
    """A circle map is not an orientation-preserving homeomorphism."""


class ConfigurationError(RotationToolkitError, ValueError):
    """Inconsistent experiment, integrator or system settings."""


class UnsupportedModelError(RotationToolkitError):
    """The operation is not defined for the given random-system model."""


class FixtureError(RotationToolkitError):
    """A reference system failed its construction self-check."""


class HypothesisError(RotationToolkitError):
    """A theorem hypothesis required by the requested computation does not hold."""

    def __init__(self, hypothesis: str, detail: str) -> None:
        self.hypothesis = hypothesis
        self.detail = detail
        super().__init__(f"Hypothesis '{hypothesis}' violated: {detail}")
