default_app_config = 'ringbench.apps.DefaultConfig'
