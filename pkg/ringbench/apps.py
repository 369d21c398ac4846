from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class DefaultConfig(AppConfig):
    name = 'ringbench'
    verbose_name = _('Ring bench')

    def ready(self):
        # Connect `ringbench.tasks.on_check_completed` to `TheoremCheck.completed` signal
        from ringbench import tasks  # noqa: F401
