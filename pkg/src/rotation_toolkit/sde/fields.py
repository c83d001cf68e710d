import math
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt

TWO_PI = 2.0 * math.pi


class ConstantField(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind : Literal["constant"] = "constant"
    value : float = Field(default=0.0, allow_inf_nan=False)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.full_like(np.asarray(x, dtype=float), self.value)

    def derivative(self, x: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    def scalar(self, x: float) -> float:
        return self.value

    @property
    def is_zero(self) -> bool:
        return self.value == 0.0


class TrigTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    frequency : PositiveInt
    sine : float = Field(default=0.0, allow_inf_nan=False)
    cosine : float = Field(default=0.0, allow_inf_nan=False)


class TrigPolyField(BaseModel):
    """h(x) = offset + sum of sine*sin(2 pi k x) + cosine*cos(2 pi k x); period 1."""
    model_config = ConfigDict(frozen=True)

    kind : Literal["trigpoly"] = "trigpoly"
    offset : float = Field(default=0.0, allow_inf_nan=False)
    terms : tuple[TrigTerm, ...] = ()

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        total = np.full_like(x, self.offset)
        for term in self.terms:
            phase = TWO_PI * term.frequency * x
            total += term.sine * np.sin(phase) + term.cosine * np.cos(phase)
        return total

    def derivative(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        total = np.zeros_like(x)
        for term in self.terms:
            omega = TWO_PI * term.frequency
            phase = omega * x
            total += omega * (term.sine * np.cos(phase) - term.cosine * np.sin(phase))
        return total

    def scalar(self, x: float) -> float:
        total = self.offset
        for term in self.terms:
            phase = TWO_PI * term.frequency * x
            total += term.sine * math.sin(phase) + term.cosine * math.cos(phase)
        return total

    @property
    def is_zero(self) -> bool:
        return self.offset == 0.0 and all(t.sine == 0.0 and t.cosine == 0.0 for t in self.terms)


VectorField = Annotated[ConstantField | TrigPolyField, Field(discriminator="kind")]


class VectorFieldSet(BaseModel):
    """Drift h0 and diffusion fields h1..hm of a lifted Stratonovich equation on R."""
    model_config = ConfigDict(frozen=True)

    drift : VectorField = Field(default_factory=ConstantField)
    diffusion : tuple[VectorField, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.diffusion)

    @property
    def is_deterministic(self) -> bool:
        return all(field.is_zero for field in self.diffusion)

    def drift_density(self, x: np.ndarray) -> np.ndarray:
        """h0 + 1/2 sum of hj' hj, the integrand of the rotation-number formula."""
        x = np.asarray(x, dtype=float)
        density = self.drift(x)
        for field in self.diffusion:
            density = density + 0.5 * field.derivative(x) * field(x)
        return density

    def check_periodicity(self, grid_size: int = 1000, tol: float = 1e-12) -> bool:
        xs = np.linspace(0.0, 1.0, grid_size, endpoint=False)
        for field in (self.drift, *self.diffusion):
            if np.max(np.abs(field(xs + 1.0) - field(xs))) > tol:
                return False
        return True

    def check_derivatives(self, grid_size: int = 1000, tol: float = 1e-6) -> bool:
        """Compare supplied derivatives with central finite differences."""
        xs = np.linspace(0.0, 1.0, grid_size, endpoint=False)
        h = 1e-6
        for field in (self.drift, *self.diffusion):
            numeric = (field(xs + h) - field(xs - h)) / (2.0 * h)
            scale = max(1.0, float(np.max(np.abs(numeric))))
            if np.max(np.abs(numeric - field.derivative(xs))) > tol * scale:
                return False
        return True
