from enum import Enum


class AlgorithmType(Enum):
    BUCHBERGER = 'buchberger'
    F4 = 'f4'
    FE_F4 = 'fe-f4'
    S_F4 = 's-f4'
    MS_F4 = 'ms-f4'

    @classmethod
    def choices(cls):
        return [(algorithm.value, algorithm.value) for algorithm in cls]

    @staticmethod
    def from_string(algorithm_str):
        for algorithm in AlgorithmType:
            if algorithm.value == algorithm_str:
                return algorithm
        raise ValueError(f"Invalid algorithm: {algorithm_str}")
