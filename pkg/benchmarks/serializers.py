from rest_framework import serializers

from benchmarks.models import SolverRun
from benchmarks.utils.algorithms import AlgorithmType
from polynomials.utils.monomial_orders import MonomialOrder


class RunStatsSerializer(serializers.Serializer):
    """
    JSON form of one run's statistics, as written by `solve --stats`.

    Build the instance with `payload(result, system, seed)`.
    """
    c_pair = serializers.IntegerField(min_value=0)
    l_matrix = serializers.IntegerField(min_value=0)
    reductor = serializers.IntegerField(min_value=0)
    round = serializers.IntegerField(min_value=0)
    solved = serializers.IntegerField(min_value=0)
    h_deg_gb = serializers.IntegerField(min_value=0)
    h_deg_gb_unreduced = serializers.IntegerField(min_value=0)
    gb_size = serializers.IntegerField(min_value=0)
    gb_size_unreduced = serializers.IntegerField(min_value=0)
    r_time_ms = serializers.FloatField(min_value=0)
    algorithm = serializers.ChoiceField(choices=AlgorithmType.choices())
    order = serializers.ChoiceField(choices=MonomialOrder.choices())
    n_vars = serializers.IntegerField(min_value=1)
    n_eqs = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(allow_null=True, required=False)

    @staticmethod
    def payload(result, system, seed=None):
        stats = result.stats
        return {
            'c_pair': stats.c_pair,
            'l_matrix': stats.l_matrix,
            'reductor': stats.reductor,
            'round': stats.round,
            'solved': stats.solved,
            'h_deg_gb': stats.h_deg_gb,
            'h_deg_gb_unreduced': stats.h_deg_gb_unreduced,
            'gb_size': stats.gb_size,
            'gb_size_unreduced': stats.gb_size_unreduced,
            'r_time_ms': stats.r_time * 1000.0,
            'algorithm': result.algorithm,
            'order': result.ring.order.value,
            'n_vars': result.ring.n,
            'n_eqs': len(system),
            'seed': seed,
        }

    def validate(self, attrs):
        if attrs['round'] >= 1 and attrs['l_matrix'] < 1:
            raise serializers.ValidationError({
                'l_matrix': 'A run with rounds has a matrix of at least one row.'
            })
        return attrs


class SolverRunSerializer(serializers.ModelSerializer):
    class Meta:
        model = SolverRun
        fields = [
            'id',
            'label',
            'algorithm',
            'order',
            'variables',
            'equations',
            'c_pair',
            'l_matrix',
            'reductor',
            'round',
            'solved',
            'h_deg_gb',
            'h_deg_gb_unreduced',
            'gb_size',
            'gb_size_unreduced',
            'r_time',
            'inconsistent',
            'verified',
            'created_at',
        ]
        read_only_fields = fields
