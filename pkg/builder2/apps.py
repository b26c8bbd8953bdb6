from django.apps import AppConfig


class Builder2Config(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "builder2"
