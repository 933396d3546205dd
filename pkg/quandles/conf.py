'''Access to the QUANDLE settings dict, with defaults for library use outside the project'''
import os

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'CLOSURE_CAP': 10 ** 6,
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


def get(name):
    '''Return the QUANDLE setting `name`'''
    try:
        configured = getattr(settings, 'QUANDLE', {})
    except ImproperlyConfigured:
        configured = {}
        if name == 'CLOSURE_CAP' and 'QUANDLE_CAP' in os.environ:
            return int(os.environ['QUANDLE_CAP'])
    return configured.get(name, DEFAULTS[name])


def pick(name, value):
    '''`value` when given, the setting otherwise'''
    return get(name) if value is None else value
