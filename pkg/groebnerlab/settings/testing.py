from .base import *

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

GROEBNER_CONFIG = {
    **GROEBNER_CONFIG,
    'CHECK_INVARIANTS': True,
}
