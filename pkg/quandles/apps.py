from django.apps import AppConfig


class QuandlesConfig(AppConfig):
    name = 'quandles'
    verbose_name = 'Finite quandles'
