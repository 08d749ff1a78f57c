from django.db import models

from benchmarks.utils.algorithms import AlgorithmType
from core.models import TimestampedModel


class SolverRun(TimestampedModel):
    """
    One recorded solver run: the problem it ran on and its counters.
    """
    label = models.CharField(max_length=255, help_text="Problem label, e.g. hfe:17,5,1 or a file name")
    algorithm = models.CharField(choices=AlgorithmType.choices(), max_length=16)
    order = models.CharField(max_length=16, default='grevlex')
    variables = models.PositiveIntegerField()
    equations = models.PositiveIntegerField()

    c_pair = models.PositiveIntegerField(default=0)
    l_matrix = models.PositiveIntegerField(default=0)
    reductor = models.PositiveIntegerField(default=0)
    round = models.PositiveIntegerField(default=0)
    solved = models.PositiveIntegerField(default=0)
    h_deg_gb = models.PositiveIntegerField(default=0)
    h_deg_gb_unreduced = models.PositiveIntegerField(default=0)
    gb_size = models.PositiveIntegerField(default=0)
    gb_size_unreduced = models.PositiveIntegerField(default=0)
    r_time = models.FloatField(default=0.0, help_text="Seconds spent in Reduction")

    inconsistent = models.BooleanField(default=False)
    verified = models.BooleanField(null=True, blank=True)

    class Meta:
        db_table = 'solver_runs'
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['label', 'algorithm'], name='solver_runs_label_algo_idx'),
        ]

    def __str__(self):
        return f"{self.algorithm} on {self.label}"

    @classmethod
    def from_result(cls, label, system, result, verified=None):
        """Persist a SolverResult."""
        stats = result.stats
        return cls.objects.create(
            label=label,
            algorithm=result.algorithm,
            order=result.ring.order.value,
            variables=result.ring.n,
            equations=len(system),
            c_pair=stats.c_pair,
            l_matrix=stats.l_matrix,
            reductor=stats.reductor,
            round=stats.round,
            solved=stats.solved,
            h_deg_gb=stats.h_deg_gb,
            h_deg_gb_unreduced=stats.h_deg_gb_unreduced,
            gb_size=stats.gb_size,
            gb_size_unreduced=stats.gb_size_unreduced,
            r_time=stats.r_time,
            inconsistent=result.inconsistent,
            verified=verified,
        )
