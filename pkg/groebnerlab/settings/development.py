from .base import *

DEBUG = True

LOG_LEVEL = config('LOG_LEVEL', default='INFO')
for logger_config in LOGGING['loggers'].values():
    logger_config['level'] = LOG_LEVEL
