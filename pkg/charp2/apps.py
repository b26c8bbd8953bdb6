from django.apps import AppConfig


class Charp2Config(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "charp2"
