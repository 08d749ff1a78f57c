from pathlib import Path

import dj_database_url
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = config('SECRET_KEY', default='groebnerlab-local-only')
DEBUG = config('DEBUG', default=False, cast=bool)
ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1').split(',')

# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third Party Apps
    'rest_framework',

    # Local Apps
    'core',
    'polynomials',
    'pairs',
    'f4',
    'middle_solving',
    'benchmarks',
]

# Database
DATABASES = {
    'default': dj_database_url.config(
        default=config('DATABASE_URL', default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}"),
        conn_max_age=config('CONN_MAX_AGE', default=0, cast=int),
    )
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Logging
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('core', 'polynomials', 'pairs', 'f4', 'middle_solving', 'benchmarks')
    },
}

# Solver settings
GROEBNER_CONFIG = {
    # Monomial order used when a problem file or command does not name one
    'DEFAULT_ORDER': config('GROEBNER_DEFAULT_ORDER', default='grevlex'),

    # Rounds of F_k / echelon rows kept for Simplify; 0 keeps every round
    'HISTORY_CAP': config('GROEBNER_HISTORY_CAP', default=0, cast=int),

    # Middle-Solving state repair: 'recompute' (renew pairs) or 'rebuild'
    'RENEW_MODE': config('GROEBNER_RENEW_MODE', default='recompute'),
    'CASCADE_SOLVING': config('GROEBNER_CASCADE_SOLVING', default=True, cast=bool),

    # Instrumented invariants raise InvariantViolation when violated
    'CHECK_INVARIANTS': config('GROEBNER_CHECK_INVARIANTS', default=True, cast=bool),

    # Exhaustive variety enumeration refuses rings with more variables
    'BRUTE_FORCE_MAX_VARS': config('GROEBNER_BRUTE_FORCE_MAX_VARS', default=24, cast=int),

    'HFE_DEFAULT_DEGREE': config('GROEBNER_HFE_DEFAULT_DEGREE', default=17, cast=int),
}
