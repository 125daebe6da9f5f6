from django.apps import AppConfig


class AcceleratorConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.accelerator"
