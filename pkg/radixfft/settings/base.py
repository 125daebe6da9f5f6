"""
Django settings for radixfft project.

Base settings shared across all environments.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / ".env")

SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "radixfft-insecure-local-key")

DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() == "true"

ALLOWED_HOSTS = []

# Application definition
DJANGO_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
]

THIRD_PARTY_APPS = [
    "rest_framework",
]

LOCAL_APPS = [
    "apps.common",
    "apps.indexing",
    "apps.operators",
    "apps.planner",
    "apps.executor",
    "apps.accelerator",
    "apps.verification",
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

# No persistent state; the database only satisfies contrib apps.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# Celery Configuration
CELERY_BROKER_URL = os.getenv("CELERY_BROKER_URL", "redis://localhost:6379/0")
CELERY_RESULT_BACKEND = os.getenv("CELERY_RESULT_BACKEND", "redis://localhost:6379/0")
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = TIME_ZONE

# Numerical tolerances
FFT_ABS_TOLERANCE = float(os.getenv("FFT_ABS_TOLERANCE", "1e-12"))
FFT_REL_TOLERANCE = float(os.getenv("FFT_TOLERANCE", "1e-9"))

# Oracle caps
FFT_DENSE_IDENTITY_MAX_N = int(os.getenv("FFT_DENSE_IDENTITY_MAX_N", "64"))
FFT_DENSE_ASSEMBLY_MAX_N = int(os.getenv("FFT_DENSE_ASSEMBLY_MAX_N", "256"))
FFT_INDEX_CHECK_MAX_N = int(os.getenv("FFT_INDEX_CHECK_MAX_N", "4096"))

# Executor
FFT_BUTTERFLY_BATCH = int(os.getenv("FFT_BUTTERFLY_BATCH", "64"))

# Reproducibility
FFT_DEFAULT_SEED = int(os.getenv("FFT_DEFAULT_SEED", "20240607"))

# Verification fan-out
FFT_VERIFY_WORKERS = int(os.getenv("FFT_VERIFY_WORKERS", "4"))

# Accelerator model
ACCEL_PIPELINE_DEPTH = int(os.getenv("ACCEL_PIPELINE_DEPTH", "0"))

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
        },
        "apps": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
        },
    },
}
