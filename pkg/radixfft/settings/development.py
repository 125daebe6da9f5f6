"""
Development settings for radixfft project.
"""

from .base import *

DEBUG = True

# Celery eager execution for development
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True

# Logging for development
LOGGING["loggers"]["apps"]["level"] = os.getenv("LOG_LEVEL", "DEBUG")
