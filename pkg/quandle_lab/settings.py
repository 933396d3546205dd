"""
Django settings for the quandle_lab project.

The project has no web surface: the only installed app is `quandles`, driven
through `manage.py quandle <subcommand>`. Computation tunables live in the
QUANDLE dict at the bottom of this file.
"""

from pathlib import Path
import os

import dj_database_url

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or served, but Django refuses to start without a key.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'quandle-lab-local-only')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    #My apps
    'quandles.apps.QuandlesConfig',
]


# Database
# Saved constructions (`make --save`) go here; DATABASE_URL overrides SQLite.

DATABASES = {
    'default': dj_database_url.config(default='sqlite:///' + str(BASE_DIR / 'db.sqlite3'))
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Logging: everything from the quandles app goes to stderr so stdout stays
# machine-readable for `--json`.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'quandles': {
            'handlers': ['stderr'],
            'level': os.environ.get('QUANDLE_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Quandle settings:
QUANDLE = {
    'CLOSURE_CAP': int(os.environ.get('QUANDLE_CAP', 10 ** 6)),
    'REALIZATION_CAP': 10 ** 5,
    'TABLE_LIMIT': 4096,
    'EXHAUSTIVE_ASSOCIATIVITY': 64,
    'EXHAUSTIVE_WELL_DEFINED': 512,
    'RANDOM_SAMPLES': 1000,
    'WITNESS_CAP': 100,
    'SEARCH_LIMIT': 64,
    'SL2_MAX_PRIME': 13,
    'DEFAULT_SEED': 0,
}
