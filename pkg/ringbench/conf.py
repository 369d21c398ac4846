import os
from pathlib import Path
from typing import Any, Dict

from django.conf import settings as django_settings


def get_default_cache_dir() -> Path:
    location = os.environ.get('RINGBENCH_CACHE_DIR')
    if location:
        return Path(location)
    return Path.home() / '.cache' / 'ringbench'


DEFAULTS: Dict[str, Any] = {
    'MAX_ORDER': 1024,
    'VALIDATE_MAX_ORDER': 512,
    'ORACLE_MAX_ORDER': 32,
    'MAXIMAL_IDEAL_CHECK_MAX_ORDER': 27,
    'SEQUENCE_MAX_STATES': 2 ** 16,
    'SEQUENCE_MAX_ORDER': 64,
    'T_NILPOTENT_GAME_MAX_SIZE': 8,
    'SUBRING_SAMPLES': 20,
    'SEED': 0,
    'N_LIKE_EXPONENTS': (2, 3, 4, 5, 6, 7),
    'CACHE_ALIAS': 'ringbench',
    'SUITE_BACKEND': 'inline',
}


class AppSettings:
    """`RINGBENCH_*` Django settings with library defaults.

    Works without a configured settings module so the algebra can be used as a
    plain library.
    """

    prefix = 'RINGBENCH_'

    def __getattr__(self, name: str) -> Any:
        if name not in DEFAULTS:
            raise AttributeError(name)
        if not django_settings.configured:
            return DEFAULTS[name]
        return getattr(django_settings, f'{self.prefix}{name}', DEFAULTS[name])


settings = AppSettings()


def get_cli_settings() -> Dict[str, Any]:
    """Django settings used when the CLI runs outside a project."""
    return {
        'INSTALLED_APPS': ['ringbench'],
        'DATABASES': {},
        'USE_TZ': True,
        'CACHES': {
            'default': {'BACKEND': 'django.core.cache.backends.locmem.LocMemCache'},
            'ringbench': {
                'BACKEND': 'django.core.cache.backends.filebased.FileBasedCache',
                'LOCATION': str(get_default_cache_dir()),
                'TIMEOUT': None,
            },
        },
        'LOGGING': {
            'version': 1,
            'disable_existing_loggers': False,
            'formatters': {
                'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
            },
            'handlers': {
                'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'},
            },
            'loggers': {
                'ringbench': {'handlers': ['console'], 'level': 'WARNING'},
            },
        },
    }
