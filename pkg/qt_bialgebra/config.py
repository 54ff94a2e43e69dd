from __future__ import annotations

from dataclasses import dataclass
import os

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, Field


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


class AppConfig(BaseModel):
    radius: int = Field(default_factory=lambda: _env_int("QTB_RADIUS", 3), ge=0)
    seed: int = Field(default_factory=lambda: _env_int("QTB_SEED", 20120))
    threads: int = Field(default_factory=lambda: _env_int("QTB_THREADS", 1), ge=1)

    module_samples: int = Field(default_factory=lambda: _env_int("QTB_MODULE_SAMPLES", 1000))
    cojacobi_samples: int = Field(default_factory=lambda: _env_int("QTB_COJACOBI_SAMPLES", 200))
    compat_samples: int = Field(default_factory=lambda: _env_int("QTB_COMPAT_SAMPLES", 500))
    roundtrip_samples: int = Field(
        default_factory=lambda: _env_int("QTB_ROUNDTRIP_SAMPLES", 200)
    )
    faithfulness_samples: int = Field(
        default_factory=lambda: _env_int("QTB_FAITHFULNESS_SAMPLES", 500)
    )
    serialization_samples: int = Field(
        default_factory=lambda: _env_int("QTB_SERIALIZATION_SAMPLES", 1000)
    )


@dataclass(frozen=True)
class RuntimeInfo:
    python: str
    sympy: str
    pydantic: str
    threads: int


def load_config() -> AppConfig:
    dotenv_override = os.getenv("QTB_DOTENV_OVERRIDE", "0").strip().lower() in {
        "1",
        "true",
        "yes",
        "y",
    }
    dotenv_path = os.getenv("QTB_ENV_FILE") or find_dotenv(usecwd=True)
    if dotenv_path:
        load_dotenv(dotenv_path=dotenv_path, override=dotenv_override)
    else:
        load_dotenv(override=dotenv_override)
    return AppConfig()
