from dataclasses import dataclass

from polynomials.monomial import Monomial


@dataclass(frozen=True)
class CriticalPair:
    """
    (lcm, u1, f1, u2, f2) with u1*HT(f1) = lcm = u2*HT(f2).

    f1 and f2 are basis indices, not polynomial copies.
    """
    lcm: Monomial
    left_multiplier: Monomial
    left: int
    right_multiplier: Monomial
    right: int

    @property
    def degree(self):
        return self.lcm.degree

    @property
    def indices(self):
        return (self.left, self.right)

    def involves(self, index):
        return index == self.left or index == self.right

    def sides(self):
        """((u1, f1), (u2, f2))."""
        return ((self.left_multiplier, self.left), (self.right_multiplier, self.right))


def make_pair(i, j, basis):
    """Critical pair of basis entries i and j."""
    if i == j:
        raise ValueError("A critical pair needs two distinct basis entries")
    f, g = basis[i], basis[j]
    if f is None or g is None or f.is_zero or g.is_zero:
        raise ValueError("Critical pairs of zero polynomials are undefined")
    lcm = f.head.lcm(g.head)
    return CriticalPair(
        lcm=lcm,
        left_multiplier=lcm.divide(f.head),
        left=i,
        right_multiplier=lcm.divide(g.head),
        right=j,
    )
