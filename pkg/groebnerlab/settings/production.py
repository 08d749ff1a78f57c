from .base import *

# 1. Force Debug to False in production
DEBUG = False

# 2. Instrumented invariant checks are opt-in on benchmark hosts
GROEBNER_CONFIG = {
    **GROEBNER_CONFIG,
    'CHECK_INVARIANTS': config('GROEBNER_CHECK_INVARIANTS', default=False, cast=bool),
}
