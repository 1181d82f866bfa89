import logging.config
import sys

import yaml

from samuel.core.settings import Settings

LOG_FORMAT = '[%(asctime)s] {{%(filename)s:%(lineno)d}} %(levelname)s - %(message)s'


def setup_logging(level: str = None):
    """Diagnostics always go to stderr so reports on stdout stay machine readable"""
    logging_config_path = Settings.logger_config_path
    if logging_config_path is not None and logging_config_path.exists():
        config = logging_config_path.read_text()
        logging.config.dictConfig(yaml.safe_load(config))
    else:
        logging.basicConfig(
            stream=sys.stderr,
            format=LOG_FORMAT,
            level=(level or Settings.log_level).upper(),
        )
