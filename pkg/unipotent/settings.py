import os
from pathlib import Path

from decouple import config
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = config("DJANGO_SECRET_KEY", default="unipotent-local-key")
DEBUG = os.environ.get("DJANGO_DEBUG") != "False"

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DATABASES = {}

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "rest_framework",
    "ugroup",
    "dyadic",
    "quadext",
    "admiss",
    "charp2",
    "builder2",
    "catalog",
]

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

UNIPOTENT = {
    "PRECISION": 64,
    "SEARCH_CAP": 32,
    "RANDOM_SEED": 1729,
    "FIXTURES_DIR": BASE_DIR / "fixtures",
}

LOG_LEVEL = config("LOG_LEVEL", default="WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s - %(levelname)s - %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        name: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for name in ("ugroup", "dyadic", "quadext", "admiss", "charp2", "builder2", "catalog")
    },
}
