"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{column: Fraction}``.  Columns only need to be
comparable; the pivot of a vector is its largest column.
"""

from fractions import Fraction


class Echelon:
    """Incrementally maintained row echelon form."""

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {k: v for k, v in row.items() if v}
        pivots = self.pivots
        while row:
            c = max(row)
            p = pivots.get(c)
            if p is None:
                return row
            f = row[c]
            for k, v in p.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Add a row; returns True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = max(row)
        inv = Fraction(1) / row[c]
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows):
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def self_reduced_basis(vectors):
    """Reduced echelon basis of the span: pivots are the largest columns and
    no basis vector involves the pivot of another."""
    e = Echelon()
    for v in vectors:
        e.add(v)
    basis = dict(e.pivots)
    for c in sorted(basis):
        row = dict(basis[c])
        for k in sorted(row, reverse=True):
            if k != c and k in basis and k in row:
                f = row[k]
                for kk, vv in basis[k].items():
                    nv = row.get(kk, 0) - f * vv
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
        basis[c] = row
    return [basis[c] for c in sorted(basis)]
