from django.apps import AppConfig


class DyadicConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "dyadic"
