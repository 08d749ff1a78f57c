class PairQueue:
    """Critical pairs in insertion order, retrievable by minimal lcm degree."""

    def __init__(self, pairs=()):
        self.pairs = list(pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __bool__(self):
        return bool(self.pairs)

    def extend(self, pairs):
        self.pairs.extend(pairs)

    def retain(self, predicate):
        """Keep only the pairs satisfying `predicate`; returns how many were dropped."""
        before = len(self.pairs)
        self.pairs = [pair for pair in self.pairs if predicate(pair)]
        return before - len(self.pairs)

    def clear(self):
        self.pairs = []

    def min_degree(self):
        return min(pair.degree for pair in self.pairs)

    def select(self):
        """Remove and return every pair of the minimal lcm degree, in insertion order."""
        if not self.pairs:
            raise ValueError("Cannot select from an empty pair queue")
        degree = self.min_degree()
        selected = [pair for pair in self.pairs if pair.degree == degree]
        self.pairs = [pair for pair in self.pairs if pair.degree != degree]
        return selected


def select(queue):
    return queue.select()
