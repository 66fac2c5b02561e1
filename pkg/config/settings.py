"""
Configuration settings for the hypergeometric period toolkit.

Values come from constructor arguments and an optional JSON config file.
Environment variables are deliberately not consulted so that a run is fully
described by its command line and config file.
"""
from typing import Dict, Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    JsonConfigSettingsSource,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)


class Settings(BaseSettings):
    """Numerical defaults and logging options."""

    model_config = SettingsConfigDict(json_file="hypergeo.json", extra="ignore")

    # Shared tolerances
    integer_tolerance: float = Field(default=1e-8, gt=0.0)
    series_tolerance: float = Field(default=1e-14, gt=0.0)
    series_term_cap: int = Field(default=100_000, gt=0)
    series_x_guard: float = Field(default=0.9, gt=0.0, lt=1.0)
    tiny: float = Field(default=1e-300, gt=0.0)

    # Identity tolerances
    tpr_tolerance: float = 1e-8
    corollary_tolerance: float = 1e-9
    determinant_tolerance: float = 1e-10
    beta_tolerance: float = 1e-7
    euler_tolerance: float = 1e-6
    euler_tolerance_m3: float = 1e-5

    # Random parameter draws
    real_range: Tuple[float, float] = (-1.0, 1.0)
    imag_range: Tuple[float, float] = (-0.3, 0.3)
    euler_range: Tuple[float, float] = (0.2, 0.9)
    max_sampling_attempts: int = 10_000
    sweep_margin: float = 0.05

    # Quadrature
    quadrature_levels: Dict[int, int] = Field(default_factory=lambda: {1: 7, 2: 5, 3: 4})
    quadrature_max_dimension: int = 3
    quadrature_max_level: int = 12
    quadrature_cutoff: float = 1e-18

    # CLI defaults
    default_x: float = 0.1
    sweep_x_values: Tuple[float, ...] = (0.05, 0.1, 0.2)

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, JsonConfigSettingsSource(settings_cls)

    @classmethod
    def from_file(cls, path: str) -> "Settings":
        """Load settings from an explicit JSON config file."""
        file_settings = type(
            "FileSettings",
            (cls,),
            {"model_config": SettingsConfigDict(json_file=path, extra="ignore")},
        )
        return cls(**file_settings().model_dump())

    def apply(self, other: "Settings") -> None:
        """Copy every field of other onto this instance in place."""
        for name in type(self).model_fields:
            setattr(self, name, getattr(other, name))

    def quadrature_level(self, m: int) -> int:
        """Default tanh-sinh level for an m-dimensional cube."""
        return self.quadrature_levels.get(m, min(self.quadrature_levels.values()))


# Global settings instance
settings = Settings()
