from enum import Enum


class SolverEvent(Enum):
    PAIRS_SELECTED = 'pairs-selected'
    MATRIX_BUILT = 'matrix-built'
    REDUCERS_APPENDED = 'reducers-appended'
    ROUND_COMPLETED = 'round-completed'
    VARIABLE_SOLVED = 'variable-solved'
    REDUCTION_TIMED = 'reduction-timed'

    @classmethod
    def choices(cls):
        return [(event.value, event.name.replace('_', ' ').title()) for event in cls]

    @staticmethod
    def from_string(event_str):
        for event in SolverEvent:
            if event.value == event_str:
                return event
        raise ValueError(f"Invalid solver event: {event_str}")
