import yaml
from pathlib import Path
from typing import Any, Dict, Optional
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator
import os

ROOT_DIR = Path(__file__).resolve().parent.parent


class EngineSettings(BaseModel):
    pair_criteria: bool = True
    max_degree: int = Field(10, ge=0)
    degree_bound: int = Field(6, ge=1)
    default_field: str = "Q"


class ReductionSettings(BaseModel):
    verify_traces: bool = False


class DhSettings(BaseModel):
    verify_criteria: bool = False


class MonitoringSettings(BaseModel):
    log_level: str = "WARNING"
    log_path: str = "./logs"
    log_to_file: bool = False

    @field_validator('log_level')
    @classmethod
    def _upper(cls, value: str) -> str:
        return value.upper()


class Settings(BaseModel):
    environment: str = "dev"
    engine: EngineSettings = Field(default_factory=EngineSettings)
    reduction: ReductionSettings = Field(default_factory=ReductionSettings)
    dh: DhSettings = Field(default_factory=DhSettings)
    monitoring: MonitoringSettings = Field(default_factory=MonitoringSettings)


class ConfigLoader:
    def __init__(self, config_path: Optional[str] = None):
        self._load_env()
        config_path = config_path or os.getenv('DHGB_CONFIG') or ROOT_DIR / "config" / "config.yaml"
        self.config_path = Path(config_path)
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        if not self.config_path.exists():
            raise FileNotFoundError(f"Config file not found: {self.config_path}")

        with open(self.config_path, 'r') as f:
            return yaml.safe_load(f) or {}

    def _load_env(self):
        env_path = ROOT_DIR / "config" / "local.env"
        if env_path.exists():
            load_dotenv(env_path)

    def get(self, key: str, default: Any = None) -> Any:
        keys = key.split('.')
        value = self.config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default
            if value is None:
                return default
        return value

    def get_env(self, key: str, default: str = None) -> str:
        return os.getenv(key, default)

    def settings(self) -> Settings:
        """Validated view of the YAML, with environment overrides applied"""
        raw = dict(self.config)
        level = self.get_env('DHGB_LOG_LEVEL')
        if level:
            raw['monitoring'] = {**(raw.get('monitoring') or {}), 'log_level': level}
        return Settings.model_validate(raw)


config = ConfigLoader()
settings = config.settings()


def load_settings(config_path: str) -> Settings:
    """Re-read another YAML file, updating the shared ``config`` and ``settings`` in place"""
    config.config_path = Path(config_path)
    config.config = config._load_config()
    fresh = config.settings()
    for name in Settings.model_fields:
        setattr(settings, name, getattr(fresh, name))
    return settings
