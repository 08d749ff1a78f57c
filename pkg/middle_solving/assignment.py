from dataclasses import dataclass, field


@dataclass
class Assignment:
    """
    Variables fixed by Middle-Solving.

    solved maps a variable index to 0 or 1; order_of_solution lists
    (round, variable, value) in the order values were found.
    """
    solved: dict = field(default_factory=dict)
    order_of_solution: list = field(default_factory=list)

    def __len__(self):
        return len(self.solved)

    def __contains__(self, index):
        return index in self.solved

    def assign(self, round_number, index, value):
        if index in self.solved:
            raise ValueError(f"Variable {index} is already solved")
        if value not in (0, 1):
            raise ValueError(f"GF(2) values are 0 or 1, got {value}")
        self.solved[index] = value
        self.order_of_solution.append((round_number, index, value))

    def describe(self, ring):
        """'x1=1, x3=0' in variable order."""
        return ', '.join(f"{ring.names[i]}={self.solved[i]}" for i in sorted(self.solved))
