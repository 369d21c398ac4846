from celery import Celery

app = Celery('ringbench-tests')
app.config_from_object('django.conf:settings', namespace='CELERY')
