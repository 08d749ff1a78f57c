from django.apps import AppConfig


class MiddleSolvingConfig(AppConfig):
    name = 'middle_solving'
