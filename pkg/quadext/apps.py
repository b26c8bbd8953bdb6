from django.apps import AppConfig


class QuadextConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "quadext"
