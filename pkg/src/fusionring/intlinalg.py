"""Sparse integer row echelon for lattice-membership and solving.

Rows are dicts mapping hashable column labels to integers.  Columns are
ordered by a caller-supplied key; each stored row owns the largest column
of its support as pivot, with a positive pivot entry.  All row operations
are unimodular, so the stored rows span exactly the lattice generated by
the inserted rows, and triangular back-reduction decides membership.
"""
from __future__ import annotations


def _addmul(target: dict, source: dict, factor: int):
    if not factor:
        return
    for k, v in source.items():
        nv = target.get(k, 0) + factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class ZEchelon:
    """Online integer echelon with optional combination tracking."""

    def __init__(self, col_key):
        self.col_key = col_key
        self.rows = {}  # pivot column -> (vector, meta)

    def _pivot_col(self, vec):
        return max(vec, key=self.col_key) if vec else None

    def insert(self, vec, meta=None) -> bool:
        """Add a row to the lattice.  Returns False if it was dependent."""
        vec = {k: v for k, v in vec.items() if v}
        meta = dict(meta or {})
        while vec:
            col = self._pivot_col(vec)
            if col not in self.rows:
                if vec[col] < 0:
                    vec = {k: -v for k, v in vec.items()}
                    meta = {k: -v for k, v in meta.items()}
                self.rows[col] = (vec, meta)
                return True
            pvec, pmeta = self.rows[col]
            q = vec[col] // pvec[col]
            _addmul(vec, pvec, -q)
            _addmul(meta, pmeta, -q)
            if col in vec:
                # remainder is a smaller positive pivot: swap and keep going
                if vec[col] < 0:
                    vec = {k: -v for k, v in vec.items()}
                    meta = {k: -v for k, v in meta.items()}
                self.rows[col] = (vec, meta)
                vec, meta = pvec, pmeta
        return False

    def reduce(self, vec, want_combination=False):
        """Back-reduce a vector against the lattice.

        Returns the residual vector, or (residual, combination) when
        combination tracking is requested; combination c satisfies
        vec = residual + sum over stored-row metas of c.
        """
        vec = {k: v for k, v in vec.items() if v}
        combo = {}
        while vec:
            col = self._pivot_col(vec)
            row = self.rows.get(col)
            if row is None or vec[col] % row[0][col] != 0:
                break  # this column can never be cleared: not in the lattice
            q = vec[col] // row[0][col]
            _addmul(vec, row[0], -q)
            _addmul(combo, row[1], q)
        if want_combination:
            return vec, combo
        return vec

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def absorb_unit(self, col) -> bool:
        """If the unit vector at col lies in the lattice, store it as the
        pivot row there, reinserting the displaced row's tail.

        Keeps the lattice unchanged while making later reductions through
        this column trivial.  Only valid when combination metadata is not
        being tracked.
        """
        unit = {col: 1}
        if not self.contains(unit):
            return False
        old = self.rows.pop(col, None)
        self.rows[col] = (unit, {})
        if old is not None:
            tail = dict(old[0])
            del tail[col]
            self.insert(tail, None)
        return True
