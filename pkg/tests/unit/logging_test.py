import logging.config

from samuel.core.logger import setup_logging
from samuel.core.settings import Settings

config = """
version: 1
root:
  level: INFO
  handlers: [console]
handlers:
  console:
    class: logging.StreamHandler
    level: INFO
    stream: ext://sys.stderr
"""


def test_logging_config(monkeypatch, tmp_path, capsys):
    (tmp_path / 'logger_config.yml').write_text(config)
    monkeypatch.setattr(Settings, 'samuel_home', tmp_path)
    setup_logging()
    logging.info('Hilbert table extended')
    captured = capsys.readouterr()
    assert captured.err == 'Hilbert table extended\n'
    assert captured.out == ''
