from django.apps import AppConfig


class UgroupConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "ugroup"
