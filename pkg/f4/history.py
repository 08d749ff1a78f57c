"""
Per-round record of the matrix inputs F_k and their echelon rows, used by
Simplify to swap a product for a sparser row built earlier.
"""
from collections import deque
from dataclasses import dataclass, field


@dataclass
class HistoryRound:
    number: int
    inputs: list
    echelon: list
    inputs_by_head: dict = field(default_factory=dict)
    echelon_by_head: dict = field(default_factory=dict)

    def __post_init__(self):
        self.reindex()

    def reindex(self):
        self.inputs_by_head = {}
        for p in self.inputs:
            self.inputs_by_head.setdefault(p.head, set()).add(p)
        self.echelon_by_head = {}
        for p in self.echelon:
            self.echelon_by_head.setdefault(p.head, p)


class RoundHistory:
    """
    Rounds newest last; `cap` bounds how many are kept (0 keeps all).
    """

    def __init__(self, cap=0):
        if cap < 0:
            raise ValueError("History cap must be non-negative")
        self.cap = cap
        self.rounds = deque(maxlen=cap or None)

    def __len__(self):
        return len(self.rounds)

    def __bool__(self):
        return bool(self.rounds)

    def __iter__(self):
        return iter(self.rounds)

    def record(self, number, inputs, echelon):
        self.rounds.append(HistoryRound(number, list(inputs), list(echelon)))

    def has_input_head(self, head):
        return any(head in r.inputs_by_head for r in self.rounds)

    def lookup(self, product):
        """
        Echelon row of the newest round whose inputs contain `product` and
        whose echelon form has a row with the same leading term.
        """
        head = product.head
        for r in reversed(self.rounds):
            inputs = r.inputs_by_head.get(head)
            if not inputs or product not in inputs:
                continue
            row = r.echelon_by_head.get(head)
            if row is not None:
                return row
        return None

    def substitute(self, values):
        """Apply variable assignments to every stored row, dropping zeros."""
        for r in self.rounds:
            r.inputs = _substituted(r.inputs, values)
            r.echelon = _substituted(r.echelon, values)
            r.reindex()

    def mentions(self, index):
        return any(p.mentions(index) for r in self.rounds for p in (*r.inputs, *r.echelon))


def _substituted(polynomials, values):
    result = []
    for p in polynomials:
        q = p.substitute_all(values)
        if not q.is_zero:
            result.append(q)
    return result
