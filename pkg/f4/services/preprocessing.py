"""
Symbolic Preprocessing: collect the rows of the round's Macaulay matrix.

Both flavours close the row set under reducers: every monomial that is not
yet a known leading term gets a row u*g with HT(u*g) equal to it, whenever
some basis leading term HT(g) divides it.
"""
import logging
from collections import deque
from dataclasses import dataclass, field

from f4.services.simplify import simplify
from f4.utils.variants import RowTag

logger = logging.getLogger(__name__)


@dataclass
class PreprocessedRows:
    rows: list = field(default_factory=list)
    tags: list = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def add(self, row, tag):
        self.rows.append(row)
        self.tags.append(tag)

    @property
    def reducers(self):
        """NewF: the rows appended to reduce a monomial."""
        return [row for row, tag in zip(self.rows, self.tags) if tag is RowTag.REDUCER]


def symbolic_preprocessing_classic(pairs, basis, history, check=False):
    """
    Rows for the plain and fe F4 paths: both sides t*f of every selected
    pair (Simplified), plus reducers. Leading terms of the pair rows start
    out as done.
    """
    prepared = PreprocessedRows()
    for pair in pairs:
        for multiplier, index in pair.sides():
            t, f = simplify(multiplier, basis[index], history, check=check)
            prepared.add(f.mul_monomial(t), RowTag.PAIR_PRODUCT)
    done = {row.head for row in prepared.rows}
    _add_reducers(prepared, basis, history, done, normalize=False, check=check)
    return prepared


def symbolic_preprocessing_spoly(pairs, basis, history, check=False):
    """
    Rows for the s-f4 / ms-f4 path: one S-polynomial row
    NF(t1*f1) + NF(t2*f2) per selected pair, zero rows dropped, plus
    reducers for every monomial, leading terms of the S-polynomials included.
    """
    prepared = PreprocessedRows()
    for pair in pairs:
        products = []
        for multiplier, index in pair.sides():
            t, f = simplify(multiplier, basis[index], history, normalize=True, check=check)
            products.append(f.mul_monomial_field(t))
        row = products[0] + products[1]
        if row.is_zero:
            logger.debug("S-polynomial of pair %s vanished modulo the field equations", pair.indices)
            continue
        prepared.add(row, RowTag.S_POLYNOMIAL)
    _add_reducers(prepared, basis, history, set(), normalize=True, check=check)
    return prepared


def _add_reducers(prepared, basis, history, done, normalize, check):
    seen = set(done)
    pending = deque()

    def enqueue(row):
        for monomial in row.terms:
            if monomial not in seen:
                seen.add(monomial)
                pending.append(monomial)

    for row in list(prepared.rows):
        enqueue(row)
    while pending:
        monomial = pending.popleft()
        g = basis.reducer_for(monomial)
        if g is None:
            continue
        t, f = simplify(monomial.divide(g.head), g, history, normalize=normalize, check=check)
        row = f.mul_monomial_field(t) if normalize else f.mul_monomial(t)
        prepared.add(row, RowTag.REDUCER)
        enqueue(row)
