"""Tiny generic matrix arithmetic over any exact ring.

Entries only need __add__, __mul__, unary __neg__, __eq__ and is_zero();
products keep the left-to-right entry order, so noncommutative rings are
handled correctly.
"""

from __future__ import annotations


class Mat:
    __slots__ = ("rows",)

    def __init__(self, rows):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, o):
        return Mat(tuple(a + b for a, b in zip(ra, rb))
                   for ra, rb in zip(self.rows, o.rows))

    def __sub__(self, o):
        return Mat(tuple(a + (-b) for a, b in zip(ra, rb))
                   for ra, rb in zip(self.rows, o.rows))

    def __neg__(self):
        return Mat(tuple(-a for a in r) for r in self.rows)

    def __matmul__(self, o):
        n, k = self.shape
        k2, m = o.shape
        if k != k2:
            raise ValueError("shape mismatch")
        ocols = tuple(tuple(o.rows[s][j] for s in range(k)) for j in range(m))
        out = []
        for i in range(n):
            row = []
            ri = self.rows[i]
            for j in range(m):
                cj = ocols[j]
                acc = ri[0] * cj[0]
                for s in range(1, k):
                    acc = acc + ri[s] * cj[s]
                row.append(acc)
            out.append(tuple(row))
        return Mat(out)

    def scale(self, s):
        """Left-multiply every entry by the ring element s."""
        return Mat(tuple(s * a for a in r) for r in self.rows)

    def map(self, fn):
        return Mat(tuple(fn(a) for a in r) for r in self.rows)

    def transpose(self):
        n, m = self.shape
        return Mat(tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(m)))

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def is_zero(self):
        return all(a.is_zero() for r in self.rows for a in r)

    def __eq__(self, o):
        if not isinstance(o, Mat):
            return NotImplemented
        return self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ",\n     ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows)
        return f"Mat([{body}])"

    @staticmethod
    def diag(value, n, zero):
        return Mat(tuple(tuple(value if i == j else zero for j in range(n))
                         for i in range(n)))
