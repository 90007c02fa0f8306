"""
Configuration module for the finite-space invariant engine.
Loads settings from environment variables (and an optional .env file).
"""

from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""
    
    # Search limits
    limit_visited: int = Field(
        default=200_000,
        alias="FINSPACE_LIMIT_VISITED",
        description="Maximum number of hom-poset maps visited by one homotopy decision"
    )
    limit_seconds: float = Field(
        default=600.0,
        alias="FINSPACE_LIMIT_SECONDS",
        description="Wall-clock budget of one search or exploration run, in seconds"
    )
    
    # Homotopy engine
    reduce_to_cores: bool = Field(
        default=True,
        alias="FINSPACE_REDUCE_TO_CORES",
        description="Decide homotopy between maps of cores and lift the fence back"
    )
    use_cat_bound: bool = Field(
        default=True,
        alias="FINSPACE_USE_CAT_BOUND",
        description="Seed TC searches with the cat(X)^2 product covering"
    )
    
    # Order complexes
    max_simplices: int = Field(
        default=2_000_000,
        alias="FINSPACE_MAX_SIMPLICES",
        description="Refuse to enumerate order complexes with more chains than this"
    )
    
    # Artifacts
    output_dir: str = Field(
        default=".",
        alias="FINSPACE_OUTPUT_DIR",
        description="Directory for CLI reports when no output path is given"
    )
    
    # Logging
    log_level: str = Field(
        default="INFO",
        alias="LOG_LEVEL",
        description="Logging level"
    )
    
    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


# Global settings instance
settings = Settings()
