import os

import pytest

from samuel.core.settings import EnvVarName, Settings, set_settings_from_file
from samuel.local_config import EXAMPLE_CONFIG, find_samuel_cfg_in_cwd_or_parents


@pytest.fixture
def restore_settings(monkeypatch):
    for name in EnvVarName:
        # setenv first so that values exported during the test are undone
        monkeypatch.setenv(name.value, '')
        monkeypatch.delenv(name.value)
    saved = dict(Settings._settings)
    yield
    Settings._settings = saved


def test_settings_from_env_file(tmp_path, restore_settings):
    cfg = tmp_path / 'samuel.cfg'
    cfg.write_text('SAMUEL_PRIME=101\nSAMUEL_R_MAX=7\n')
    Settings.set(_env_file=str(cfg))
    assert Settings.prime == 101
    assert Settings.r_max == 7
    assert Settings.stab_window == 2
    assert Settings.default_n_max(3) == 11


def test_settings_env_overrides_file(tmp_path, monkeypatch, restore_settings):
    cfg = tmp_path / 'samuel.cfg'
    cfg.write_text(EXAMPLE_CONFIG.format(prime=101))
    monkeypatch.setenv('SAMUEL_PRIME', '7')
    set_settings_from_file(cfg)
    assert Settings.prime == 7
    assert Settings.truncation_max == 24


def test_settings_attributes(tmp_path, restore_settings):
    Settings.samuel_home = tmp_path
    assert Settings.logger_config_path == tmp_path / 'logger_config.yml'
    Settings.samuel_home = None
    assert Settings.logger_config_path is None
    with pytest.raises(AttributeError):
        Settings.missing_setting


def test_find_config_in_parents(tmp_path):
    (tmp_path / 'samuel.cfg').write_text('')
    nested = tmp_path / 'a' / 'b'
    nested.mkdir(parents=True)
    assert find_samuel_cfg_in_cwd_or_parents(nested) == tmp_path / 'samuel.cfg'


def test_example_config_and_export_cover_every_setting(tmp_path, restore_settings):
    cfg = tmp_path / 'samuel.cfg'
    cfg.write_text(EXAMPLE_CONFIG.format(prime=101).replace('SAMUEL_PRODUCT_COMPACTION=40', 'SAMUEL_PRODUCT_COMPACTION=12'))
    names = {line.split('=')[0] for line in EXAMPLE_CONFIG.splitlines()}
    assert names == {name.value for name in EnvVarName} - {EnvVarName.PROJECT_HOME.value}
    set_settings_from_file(cfg)
    assert Settings.product_compaction == 12
    exported = {name.value: os.environ.get(name.value) for name in EnvVarName if name != EnvVarName.PROJECT_HOME}
    assert exported == {
        'SAMUEL_PRIME': '101',
        'SAMUEL_N_MAX_EXTRA': '8',
        'SAMUEL_R_MAX': '10',
        'SAMUEL_N_MAX': '24',
        'SAMUEL_STAB_WINDOW': '2',
        'SAMUEL_EXTEND_STEP': '4',
        'SAMUEL_EXTEND_ATTEMPTS': '3',
        'SAMUEL_PRODUCT_COMPACTION': '12',
        'SAMUEL_LOG_LEVEL': 'WARNING',
    }
