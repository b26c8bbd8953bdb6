from django.apps import AppConfig


class AdmissConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "admiss"
