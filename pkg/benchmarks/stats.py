"""
Run counters: pairs considered, largest matrix, reducer rows, rounds,
solved variables, basis size and degree, and time spent in Reduction.
"""
from dataclasses import asdict, dataclass

from benchmarks.utils.solver_events import SolverEvent


@dataclass
class RunStats:
    c_pair: int = 0
    l_matrix: int = 0
    reductor: int = 0
    round: int = 0
    solved: int = 0
    h_deg_gb: int = 0
    h_deg_gb_unreduced: int = 0
    gb_size: int = 0
    gb_size_unreduced: int = 0
    r_time: float = 0.0

    def record(self, event, value=1):
        """
        Apply one solver event.

        PAIRS_SELECTED, REDUCERS_APPENDED and VARIABLE_SOLVED add `value`;
        MATRIX_BUILT keeps the largest row count; ROUND_COMPLETED counts a
        round; REDUCTION_TIMED adds seconds.
        """
        event = event if isinstance(event, SolverEvent) else SolverEvent.from_string(event)
        if value < 0:
            raise ValueError(f"Negative value for {event.value}: {value}")
        if event is SolverEvent.PAIRS_SELECTED:
            self.c_pair += value
        elif event is SolverEvent.MATRIX_BUILT:
            self.l_matrix = max(self.l_matrix, value)
        elif event is SolverEvent.REDUCERS_APPENDED:
            self.reductor += value
        elif event is SolverEvent.ROUND_COMPLETED:
            self.round += value
        elif event is SolverEvent.VARIABLE_SOLVED:
            self.solved += value
        elif event is SolverEvent.REDUCTION_TIMED:
            self.r_time += value
        return self

    def finalize(self, reduced_basis, final_basis):
        """
        Basis counters. h_deg_gb is the highest degree in the reduced basis;
        the _unreduced counters describe the basis the main loop ended with.
        """
        self.gb_size = len(reduced_basis)
        self.gb_size_unreduced = len(final_basis)
        self.h_deg_gb = max((p.degree for p in reduced_basis), default=0)
        self.h_deg_gb_unreduced = max((p.degree for p in final_basis), default=0)
        return self

    def as_dict(self):
        return asdict(self)


def record(stats, event, value=1):
    return stats.record(event, value)
