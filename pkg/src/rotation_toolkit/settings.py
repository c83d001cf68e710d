from pathlib import Path

from loguru import logger
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Pydantic settings for the toolkit.
    """
    model_config : SettingsConfigDict = SettingsConfigDict(
        env_file = ".env",
        env_file_encoding = "utf-8",
        env_prefix = "ROTATION_TOOLKIT_",
        extra = "ignore",
    )

    # Randomness
    DEFAULT_SEED : int = Field(
        default=20240601,
        ge=0,
        lt=2**64,
        description="Seed used when an experiment does not declare one."
    )

    # Execution
    THREADS : int = Field(
        default=4,
        ge=1,
        description="Maximum number of workers for grid sweeps and replicas."
    )
    HEUN_SUBSTEPS : int = Field(
        default=20,
        ge=1,
        description="Internal Heun steps per sampling interval."
    )

    # Numerics
    BOUNDARY_TOLERANCE : float = Field(
        default=1e-12,
        ge=0.0,
        description="Distance below which a lift value counts as lying on a cell boundary."
    )

    # Output
    CSV_SIGNIFICANT_DIGITS : int = Field(
        default=12,
        ge=1,
        le=17,
        description="Significant digits of floats written to CSV files."
    )
    OUTPUT_DIR : Path = Field(
        default=Path("results"),
        description="Directory for result files when no explicit path is given."
    )
    LOG_LEVEL : str = Field(
        default="INFO",
        description="Minimum level of the stderr log sink."
    )


try:
    settings = Settings()
except Exception as e:
    logger.error(f"Error loading settings: {e}")
    raise SystemExit(e)
