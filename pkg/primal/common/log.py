import logging
import os
from io import StringIO

from primal import __app_name__

LOG_ENABLED_VAR = 'PRIMAL_LOG'
LOG_LEVEL_VAR = 'PRIMAL_LOG_LEVEL'


class FilePathFilter(logging.Filter):

    def filter(self, record):
        record.module_path = record.pathname.split('site-packages/')[1] if 'site-packages' in record.pathname else str(record.pathname)
        return True


def get_log_format(level: int) -> str:
    log_format = StringIO()

    if level == logging.DEBUG:
        log_format.write('%(asctime)s [%(module_path)s:%(lineno)s] ')

    log_format.write('%(message)s')
    log_format.seek(0)
    return log_format.read()


def new_logger(name: str = __app_name__, enabled: bool = True, level: int = logging.INFO) -> logging.Logger:
    """
    Stream logger writing to stderr, so reports printed on stdout are never interleaved with log lines.
    """
    instance = logging.Logger(name, level=level)
    instance.addFilter(FilePathFilter())

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(get_log_format(level)))
    instance.addHandler(handler)
    instance.disabled = not enabled
    return instance


def set_debug(logger: logging.Logger):
    logger.setLevel(logging.DEBUG)

    for handler in logger.handlers:
        handler.setFormatter(logging.Formatter(get_log_format(logging.DEBUG)))


def get_log_level(var_name: str = LOG_LEVEL_VAR) -> int:
    level = os.getenv(var_name, 'INFO').upper().strip()

    if level and isinstance(getattr(logging, level, None), int):
        return getattr(logging, level)

    return logging.INFO


def is_log_enabled(var_name: str = LOG_ENABLED_VAR) -> bool:
    try:
        return bool(int(os.getenv(var_name, '1')))
    except ValueError:
        return True
