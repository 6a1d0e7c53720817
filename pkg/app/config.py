"""Application configuration using Pydantic settings."""

from typing import Literal

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SearchSettings(BaseModel):
    """Default budgets for the exact search kernels."""
    colnum_time_limit_ms: int = Field(10_000, description="Budget for exact_colnum")
    treedepth_time_limit_ms: int = Field(10_000, description="Budget for treedepth_exact")
    chi_time_limit_ms: int = Field(60_000, description="Budget for chromatic_number")
    clique_time_limit_ms: int = Field(30_000, description="Budget for clique_number")
    check_interval: int = Field(256, description="Search nodes between two deadline checks")

    @field_validator('*')
    def validate_positive(cls, v: int) -> int:
        """Validate that budgets are positive."""
        if v <= 0:
            raise ValueError("Budget values must be positive")
        return v


class SweepSettings(BaseModel):
    """Sizes of the randomized verification sweeps."""
    seed: int = Field(20170419, description="Default PRNG seed")
    coloring_graphs: int = Field(200, description="Random graphs in the colouring sweep")
    coloring_max_vertices: int = Field(14, description="Largest graph in the colouring sweep")
    sandwich_graphs: int = Field(500, description="Random graphs in the order sandwich sweep")
    sandwich_max_vertices: int = Field(8, description="Largest graph in the order sandwich sweep")
    sandwich_max_radius: int = Field(5, description="Largest radius in the order sandwich sweep")
    kierstead_yang_max_vertices: int = Field(7, description="Largest graph for exact wcol/col comparison")
    kierstead_yang_graphs: int = Field(40, description="Graphs compared exactly for wcol_k <= col_k^k")
    bipartite_graphs: int = Field(100, description="Random bipartite graphs in the parity sweep")
    densities: list[float] = Field(default_factory=lambda: [0.15, 0.3, 0.5, 0.7], description="Edge densities")

    @field_validator('densities')
    def validate_densities(cls, v: list[float]) -> list[float]:
        """Validate that densities are probabilities."""
        if not v or any(not 0 <= d <= 1 for d in v):
            raise ValueError("Densities must be a non-empty list of values between 0 and 1")
        return v


class ReportSettings(BaseModel):
    """Report emission defaults."""
    format: Literal["tsv", "jsonl"] = Field("tsv", description="Default report format")


class Settings(BaseSettings):
    """Application settings."""

    PROJECT_NAME: str = "exactdist"
    VERSION: str = "0.1.0"
    LOG_LEVEL: str = "WARNING"

    search: SearchSettings = SearchSettings()
    sweeps: SweepSettings = SweepSettings()
    report: ReportSettings = ReportSettings()

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        env_nested_delimiter="__",
    )


settings = Settings()
