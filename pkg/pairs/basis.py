"""
Intermediate basis G: an indexed list of polynomials.

Entries are never moved, so critical pairs can refer to them by index.
A substituted entry is rewritten in place; a deleted entry becomes None.
"""
from polynomials.services.reduction import find_reducer


class Basis:
    def __init__(self, ring):
        self.ring = ring
        self.entries = []
        # live entries whose leading term another entry's leading term divides;
        # kept for reduction, never paired again
        self.redundant = set()

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def append(self, polynomial):
        self.entries.append(polynomial)
        return len(self.entries) - 1

    def replace(self, index, polynomial):
        if polynomial is None or polynomial.is_zero:
            self.entries[index] = None
            self.redundant.discard(index)
        else:
            self.entries[index] = polynomial

    def is_live(self, index):
        return self.entries[index] is not None

    def live_indices(self):
        return [i for i, p in enumerate(self.entries) if p is not None]

    def active_indices(self):
        return [i for i, p in enumerate(self.entries) if p is not None and i not in self.redundant]

    def polynomials(self):
        return [p for p in self.entries if p is not None]

    def heads(self):
        return {i: p.head for i, p in enumerate(self.entries) if p is not None}

    def reducer_for(self, monomial):
        """Live entry whose leading term divides `monomial` (largest leading term first)."""
        return find_reducer(monomial, self.entries)

    def is_top_reducible(self, monomial):
        return any(p is not None and p.head.divides(monomial) for p in self.entries)

    def recompute_redundancy(self):
        """
        Rebuild the redundant set from the current leading terms.

        An entry is redundant when another live entry has a strictly dividing
        leading term, or an equal one at a lower index. Returns the indices
        that stopped being redundant.
        """
        before = set(self.redundant)
        live = self.live_indices()
        redundant = set()
        for i in live:
            head = self.entries[i].head
            for j in live:
                if j == i:
                    continue
                other = self.entries[j].head
                if other.divides(head) and (other != head or j < i):
                    redundant.add(i)
                    break
        self.redundant = redundant
        return before - redundant
