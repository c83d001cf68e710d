from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, computed_field

# Point of S^1 with the covering map x -> exp(2*pi*i*x), stored in [0, 1).
Angle = Annotated[float, Field(ge=0.0, lt=1.0, allow_inf_nan=False)]

# Point of the covering space R.
LiftValue = Annotated[float, Field(allow_inf_nan=False)]


class LiftParams(BaseModel):
    """Anchor q and window start alpha selecting the uniform (q, alpha)-lift."""
    model_config = ConfigDict(frozen=True)

    q : float = Field(default=0.0, allow_inf_nan=False)
    alpha : float = Field(default=0.0, allow_inf_nan=False)

    @computed_field
    @property
    def sampling_valid(self) -> bool:
        """q - 1 < alpha < q, the window condition of the sampling theorem."""
        return self.q - 1.0 < self.alpha < self.q

    def shifted(self, k: int, l: int) -> "LiftParams":
        return LiftParams(q=self.q + k, alpha=self.alpha + l)
