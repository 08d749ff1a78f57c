"""
Side-by-side comparisons of two F4 variants on the same instances.
"""
import logging
from dataclasses import dataclass, field

from benchmarks.models import SolverRun
from benchmarks.services.generators import gen_cyclic, gen_hfe
from f4.config import VariantConfig
from f4.services.solver import f4_main
from f4.utils.variants import F4Variant

logger = logging.getLogger(__name__)

COMPARISONS = {
    'plain-vs-fe': (F4Variant.PLAIN_F4, F4Variant.FE_F4, ('c_pair', 'l_matrix', 'h_deg_gb')),
    'fe-vs-s': (F4Variant.FE_F4, F4Variant.S_F4, ('reductor', 'l_matrix', 'r_time')),
    'fe-vs-ms': (F4Variant.FE_F4, F4Variant.MS_F4, ('solved', 'round', 'gb_size')),
}


@dataclass
class BenchmarkInstance:
    label: str
    system: list


@dataclass
class ComparisonRow:
    family: str
    label: str
    baseline: object
    candidate: object
    metrics: tuple = field(default_factory=tuple)

    def ratios(self):
        """candidate / baseline per metric; None when the baseline is 0."""
        ratios = {}
        for metric in self.metrics:
            base = getattr(self.baseline, metric)
            ratios[metric] = getattr(self.candidate, metric) / base if base else None
        return ratios

    def as_dict(self):
        return {
            'family': self.family,
            'instance': self.label,
            'baseline': {m: getattr(self.baseline, m) for m in self.metrics},
            'candidate': {m: getattr(self.candidate, m) for m in self.metrics},
            'ratio': self.ratios(),
        }


def mean_factor(rows, metric):
    """
    Mean of baseline / candidate over the rows where the candidate is
    nonzero: how many times smaller the candidate is on average.
    """
    factors = [
        getattr(row.baseline, metric) / getattr(row.candidate, metric)
        for row in rows if getattr(row.candidate, metric)
    ]
    return sum(factors) / len(factors) if factors else None


def build_instances(hfe_sizes=(), cyclic_sizes=(), seeds=(1,), degree=17):
    instances = []
    for n in hfe_sizes:
        for seed in seeds:
            system, _ = gen_hfe(degree, n, seed)
            instances.append(BenchmarkInstance(f"hfe:{degree},{n},{seed}", system))
    for n in cyclic_sizes:
        instances.append(BenchmarkInstance(f"cyclic:{n}", gen_cyclic(n)))
    return instances


def run_variant(instance, variant, record=False, **overrides):
    result = f4_main(instance.system, VariantConfig.for_variant(variant, **overrides))
    if record:
        SolverRun.from_result(instance.label, instance.system, result)
    return result


def compare(family, instances, record=False, **overrides):
    """
    Run both variants of `family` on every instance.

    Raises:
        ValueError: For an unknown family.
    """
    if family not in COMPARISONS:
        raise ValueError(f"Invalid comparison: {family}")
    baseline_variant, candidate_variant, metrics = COMPARISONS[family]
    rows = []
    for instance in instances:
        baseline = run_variant(instance, baseline_variant, record, **overrides)
        candidate = run_variant(instance, candidate_variant, record, **overrides)
        rows.append(ComparisonRow(family, instance.label, baseline.stats, candidate.stats, metrics))
        logger.info("%s on %s: %s", family, instance.label, rows[-1].ratios())
    return rows


def format_rows(rows):
    """Plain-text table, one line per instance and metric, then the mean factor per metric."""
    lines = [f"{'family':<12} {'instance':<16} {'metric':<10} {'baseline':>12} {'candidate':>12} {'ratio':>8}"]
    for row in rows:
        ratios = row.ratios()
        for metric in row.metrics:
            base = getattr(row.baseline, metric)
            cand = getattr(row.candidate, metric)
            ratio = '-' if ratios[metric] is None else f"{ratios[metric]:.2f}"
            lines.append(
                f"{row.family:<12} {row.label:<16} {metric:<10} "
                f"{_cell(base):>12} {_cell(cand):>12} {ratio:>8}"
            )
    families = dict.fromkeys(row.family for row in rows)
    for family in families:
        selected = [row for row in rows if row.family == family]
        for metric in selected[0].metrics:
            factor = mean_factor(selected, metric)
            if factor is not None:
                lines.append(f"{family:<12} {'mean factor':<16} {metric:<10} {factor:>34.2f}")
    return '\n'.join(lines)


def _cell(value):
    return f"{value:.4f}" if isinstance(value, float) else str(value)
