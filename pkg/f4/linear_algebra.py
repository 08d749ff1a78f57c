"""
Dense GF(2) linear algebra on bit-packed numpy rows.

Rows are packed 64 columns to a uint64 word; column c lives in word c >> 6
at bit 63 - (c & 63), so column 0 is the most significant bit of word 0.
"""
import logging

import numpy as np

from polynomials.polynomial import Polynomial

logger = logging.getLogger(__name__)

WORD_BITS = 64
_ONE = np.uint64(1)


def pack_rows(bits):
    """Pack a (rows, cols) 0/1 array into (rows, words) uint64."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim != 2:
        raise ValueError("Expected a two-dimensional 0/1 array")
    rows, cols = bits.shape
    words = max(1, -(-cols // WORD_BITS))
    if rows == 0:
        return np.zeros((0, words), dtype=np.uint64)
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits & 1
    return np.packbits(padded, axis=1).view('>u8').astype(np.uint64)


def unpack_rows(words, cols):
    """Inverse of pack_rows."""
    if words.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.uint8)
    as_bytes = words.astype('>u8').view(np.uint8)
    return np.unpackbits(as_bytes, axis=1)[:, :cols]


def eliminate(words, cols):
    """
    Gauss-Jordan elimination over GF(2) on packed rows.

    Returns (rref_words, pivots): the nonzero rows of the reduced row echelon
    form, and the pivot column of each.
    """
    words = np.array(words, dtype=np.uint64, copy=True)
    rows = words.shape[0]
    rank = 0
    pivots = []
    for col in range(cols):
        if rank == rows:
            break
        w = col >> 6
        shift = np.uint64(63 - (col & 63))
        hits = np.flatnonzero((words[rank:, w] >> shift) & _ONE)
        if hits.size == 0:
            continue
        pivot = rank + int(hits[0])
        if pivot != rank:
            words[[rank, pivot]] = words[[pivot, rank]]
        mask = ((words[:, w] >> shift) & _ONE).astype(bool)
        mask[rank] = False
        if mask.any():
            words[mask, w:] ^= words[rank, w:]
        pivots.append(col)
        rank += 1
    return words[:rank], pivots


def rref_gf2(bits):
    """Reduced row echelon form of a 0/1 matrix; zero rows are dropped."""
    bits = np.asarray(bits, dtype=np.uint8)
    cols = bits.shape[1]
    reduced, pivots = eliminate(pack_rows(bits), cols)
    return unpack_rows(reduced, cols), pivots


def rank_gf2(bits):
    bits = np.asarray(bits, dtype=np.uint8)
    _, pivots = eliminate(pack_rows(bits), bits.shape[1])
    return len(pivots)


class MacaulayMatrix:
    """
    Polynomials as rows of a GF(2) matrix whose columns are the monomials
    they mention, sorted descending under the ring order.
    """

    def __init__(self, ring, columns, words, tags=None):
        self.ring = ring
        self.columns = list(columns)
        self.words = words
        self.tags = list(tags) if tags is not None else None

    @classmethod
    def from_polynomials(cls, ring, polynomials, tags=None):
        polynomials = list(polynomials)
        if any(p.is_zero for p in polynomials):
            raise ValueError("Matrix rows must be nonzero polynomials")
        monomials = set()
        for p in polynomials:
            monomials.update(p.terms)
        columns = ring.sorted_desc(monomials)
        position = {m: c for c, m in enumerate(columns)}
        bits = np.zeros((len(polynomials), len(columns)), dtype=np.uint8)
        for r, p in enumerate(polynomials):
            bits[r, [position[m] for m in p.terms]] = 1
        return cls(ring, columns, pack_rows(bits), tags)

    @property
    def shape(self):
        return self.words.shape[0], len(self.columns)

    def row_echelon(self):
        reduced, pivots = eliminate(self.words, len(self.columns))
        logger.debug("Echelon form of %sx%s matrix has rank %s", *self.shape, len(pivots))
        return MacaulayMatrix(self.ring, self.columns, reduced)

    def row_polynomials(self):
        bits = unpack_rows(self.words, len(self.columns))
        return [
            Polynomial(self.ring, [self.columns[c] for c in np.flatnonzero(row)])
            for row in bits
        ]


def row_echelon_gf2(polynomials, ring):
    """Echelon rows of the matrix built from `polynomials`, ordered by descending head."""
    if not polynomials:
        return []
    return MacaulayMatrix.from_polynomials(ring, polynomials).row_echelon().row_polynomials()
