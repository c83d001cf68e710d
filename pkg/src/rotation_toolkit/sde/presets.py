from rotation_toolkit.errors import ConfigurationError
from rotation_toolkit.sde.fields import ConstantField, TrigPolyField, TrigTerm, VectorFieldSet


def constant_field(a: float, b: float = 0.0) -> VectorFieldSet:
    """dx = a dt + b o dB; deterministic when b is zero."""
    diffusion = (ConstantField(value=b),) if b != 0.0 else ()
    return VectorFieldSet(drift=ConstantField(value=a), diffusion=diffusion)


def north_south_field() -> VectorFieldSet:
    return VectorFieldSet(drift=TrigPolyField(terms=(TrigTerm(frequency=1, sine=-1.0),)))


def tilted_field(a: float, eps: float) -> VectorFieldSet:
    """h(x) = a - eps sin(2 pi x); rotation number sqrt(a^2 - eps^2) when a > eps > 0."""
    return VectorFieldSet(drift=TrigPolyField(offset=a, terms=(TrigTerm(frequency=1, sine=-eps),)))


def noisy_sine_field(sigma: float = 1.0) -> VectorFieldSet:
    return VectorFieldSet(diffusion=(TrigPolyField(terms=(TrigTerm(frequency=1, sine=sigma),)),))


def _arguments(text: str) -> dict[str, float]:
    arguments = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise ConfigurationError(f"expected name=value, got '{item}'")
        try:
            arguments[name.strip()] = float(value)
        except ValueError as e:
            raise ConfigurationError(f"'{value}' is not a number") from e
    return arguments


def parse_vector_field(text: str) -> VectorFieldSet:
    """
    Parse the command-line shorthand for a vector field.

    Accepted forms: ``const:a=0.7,b=0.5``, ``north-south``,
    ``tilted:a=1,eps=0.5`` and ``noisy-sine:sigma=1``.

    Raises:
        ConfigurationError: On an unknown kind or malformed arguments.
    """
    kind, _, rest = text.strip().partition(":")
    arguments = _arguments(rest)
    try:
        match kind:
            case "const" | "constant":
                return constant_field(**arguments)
            case "north-south":
                return north_south_field(**arguments)
            case "tilted":
                return tilted_field(**arguments)
            case "noisy-sine":
                return noisy_sine_field(**arguments)
    except TypeError as e:
        raise ConfigurationError(f"bad arguments for vector field '{kind}': {e}") from e
    raise ConfigurationError(f"unknown vector field '{kind}'")
