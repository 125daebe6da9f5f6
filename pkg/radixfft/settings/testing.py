"""
Testing settings for radixfft project.
"""

from .base import *

SECRET_KEY = "test-secret-key-not-for-production"
DEBUG = True

# Celery eager execution for testing
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_BROKER_URL = "memory://"
CELERY_RESULT_BACKEND = "cache+memory://"

# Fixed seed and tolerances regardless of the environment
FFT_DEFAULT_SEED = 20240607
FFT_ABS_TOLERANCE = 1e-12
FFT_REL_TOLERANCE = 1e-9
FFT_BUTTERFLY_BATCH = 64

# Logging for testing
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {
            "level": "ERROR",
            "class": "logging.StreamHandler",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "ERROR",
        },
        "apps": {
            "handlers": ["console"],
            "level": "ERROR",
        },
    },
}
