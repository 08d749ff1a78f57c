from django.db import models


class TimestampedModel(models.Model):
    """
    Abstract base for recorded results: when a row was first stored and
    when it last changed.
    """
    created_at = models.DateTimeField(auto_now_add=True, db_index=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        abstract = True
