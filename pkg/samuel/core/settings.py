import os
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseSettings, Field

from samuel import local_config


class EnvVarName(str, Enum):
    PROJECT_HOME = 'SAMUEL_HOME'
    PRIME = 'SAMUEL_PRIME'
    N_MAX_EXTRA = 'SAMUEL_N_MAX_EXTRA'
    R_MAX = 'SAMUEL_R_MAX'
    TRUNCATION_MAX = 'SAMUEL_N_MAX'
    STAB_WINDOW = 'SAMUEL_STAB_WINDOW'
    EXTEND_STEP = 'SAMUEL_EXTEND_STEP'
    EXTEND_ATTEMPTS = 'SAMUEL_EXTEND_ATTEMPTS'
    PRODUCT_COMPACTION = 'SAMUEL_PRODUCT_COMPACTION'
    LOG_LEVEL = 'SAMUEL_LOG_LEVEL'


class SamuelSettingsFile(BaseSettings):
    samuel_home: Path = Field(default=None, env=EnvVarName.PROJECT_HOME)
    prime: int = Field(default=32003, env=EnvVarName.PRIME)
    n_max_extra: int = Field(default=8, env=EnvVarName.N_MAX_EXTRA, description='Default n_max is d plus this')
    r_max: int = Field(default=10, env=EnvVarName.R_MAX)
    truncation_max: int = Field(default=24, env=EnvVarName.TRUNCATION_MAX, description='Largest truncation order N')
    stab_window: int = Field(default=2, env=EnvVarName.STAB_WINDOW)
    extend_step: int = Field(default=4, env=EnvVarName.EXTEND_STEP)
    extend_attempts: int = Field(default=3, env=EnvVarName.EXTEND_ATTEMPTS)
    product_compaction: int = Field(default=40, env=EnvVarName.PRODUCT_COMPACTION)
    log_level: str = Field(default='WARNING', env=EnvVarName.LOG_LEVEL)


class SamuelSettings:
    samuel_home: Optional[Path]
    prime: int
    n_max_extra: int
    r_max: int
    truncation_max: int
    stab_window: int
    extend_step: int
    extend_attempts: int
    product_compaction: int
    log_level: str

    def __init__(self, _env_file: str = None):
        if _env_file is None and os.environ.get(EnvVarName.PROJECT_HOME):
            candidate = Path(os.environ.get(EnvVarName.PROJECT_HOME)) / local_config.CONFIG_FILE_NAME
            if candidate.exists():
                _env_file = str(candidate)
        self._settings = SamuelSettingsFile(_env_file=_env_file).dict()

    def set(self, _env_file: str = None):
        self._settings = SamuelSettingsFile(_env_file=_env_file).dict()

    def __getattr__(self, item):
        try:
            return self.__dict__['_settings'][item]
        except KeyError:
            raise AttributeError(item)

    def __setattr__(self, key, value):
        if key == '_settings':
            super().__setattr__(key, value)
        else:
            self._settings[key] = value

    def export_vars(self):
        if self.samuel_home:
            os.environ[EnvVarName.PROJECT_HOME] = str(self.samuel_home)
        os.environ[EnvVarName.PRIME] = str(self.prime)
        os.environ[EnvVarName.N_MAX_EXTRA] = str(self.n_max_extra)
        os.environ[EnvVarName.R_MAX] = str(self.r_max)
        os.environ[EnvVarName.TRUNCATION_MAX] = str(self.truncation_max)
        os.environ[EnvVarName.STAB_WINDOW] = str(self.stab_window)
        os.environ[EnvVarName.EXTEND_STEP] = str(self.extend_step)
        os.environ[EnvVarName.EXTEND_ATTEMPTS] = str(self.extend_attempts)
        os.environ[EnvVarName.PRODUCT_COMPACTION] = str(self.product_compaction)
        os.environ[EnvVarName.LOG_LEVEL] = self.log_level

    @property
    def logger_config_path(self) -> Optional[Path]:
        if not self.samuel_home:
            return None
        return Path(self.samuel_home) / 'logger_config.yml'

    def default_n_max(self, d: int) -> int:
        return d + self.n_max_extra


def set_settings_from_file(settings_file: Path):
    Settings.set(_env_file=str(settings_file))
    Settings.export_vars()


Settings = SamuelSettings()

if not Settings.samuel_home:
    samuel_config_file = local_config.find_samuel_cfg_in_cwd_or_parents()
    if samuel_config_file:
        os.environ[EnvVarName.PROJECT_HOME] = str(samuel_config_file.parent)
        set_settings_from_file(samuel_config_file)
