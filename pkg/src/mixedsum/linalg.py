"""Exact sparse linear algebra over QQ or a prime field.

Vectors are dicts ``{index: value}`` with no stored zeros. Indices can be any
sortable keys; pivots are chosen as the smallest index, so results only depend
on the order of the keys, never on hashing.
"""

from fractions import Fraction


class Field:
    """QQ for ``char == 0``, otherwise GF(char)."""

    def __init__(self, char=0):
        self.char = char

    def __repr__(self):
        return f"Field({self.char})"

    def __call__(self, x):
        if self.char:
            return self.reduce(x)
        return Fraction(x)

    def inv(self, x):
        if self.char:
            return pow(x, self.char - 2, self.char)
        return Fraction(1) / x

    def neg(self, x):
        return (-x) % self.char if self.char else -x

    def reduce(self, x):
        if not self.char:
            return x
        if type(x) is not int:
            x = Fraction(x)
            return x.numerator * pow(x.denominator, self.char - 2, self.char) % self.char
        return x % self.char


def _axpy(field, v, a, w):
    """v += a * w, in place; drops zeros."""
    p = field.char
    for k, x in w.items():
        y = v.get(k, 0) + a * x
        if p:
            y %= p
        if y:
            v[k] = y
        else:
            v.pop(k, None)


class Echelon:
    """Row echelon basis that grows one vector at a time.

    With ``track=True`` each stored row also remembers which input vectors
    it is a combination of; ``add`` then reports kernel relations among the
    inputs and ``express`` writes a vector in terms of the inputs.
    """

    def __init__(self, field, track=False):
        self.field = field
        self.track = track
        self.rows = {}  # pivot -> (vec with vec[pivot] == 1, combo)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, v, combo):
        f = self.field
        v = {k: f.reduce(x) for k, x in v.items() if f.reduce(x)}
        combo = dict(combo) if combo is not None else None
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v, combo
            k = min(hits)
            row, rcombo = self.rows[k]
            a = f.neg(v[k])
            _axpy(f, v, a, row)
            if combo is not None:
                _axpy(f, combo, a, rcombo)

    def reduce(self, v):
        return self._reduce(v, None)[0]

    def contains(self, v):
        return not self.reduce(v)

    def add(self, v, label=None):
        """Insert v. Returns None if independent, else the relation found.

        The relation (only with ``track``) is a dict label -> coefficient
        summing the inputs to zero.
        """
        f = self.field
        combo = {label: f(1)} if self.track else None
        r, combo = self._reduce(v, combo)
        if not r:
            return combo if self.track else {}
        k = min(r)
        s = f.inv(r[k])
        r = {j: f.reduce(x * s) for j, x in r.items()}
        if combo is not None:
            combo = {j: f.reduce(x * s) for j, x in combo.items()}
        self.rows[k] = (r, combo)
        return None

    def express(self, v):
        """Coefficients c with sum c[label] * input[label] == v, or None."""
        if not self.track:
            raise ValueError("express needs track=True")
        f = self.field
        r, combo = self._reduce(v, {})
        if r:
            return None
        return {k: f.neg(x) for k, x in combo.items() if f.reduce(x)}


def rank(vectors, field):
    e = Echelon(field)
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(columns, field):
    """Basis of {c : sum_j c[j] * columns[j] == 0}.

    ``columns`` maps labels to sparse vectors; labels are processed in sorted
    order so each basis vector has a distinct largest label.
    """
    e = Echelon(field, track=True)
    out = []
    for label in sorted(columns):
        rel = e.add(columns[label], label)
        if rel is not None:
            out.append(rel)
    return out


def solve(columns, target, field):
    """Some c with sum c[j] * columns[j] == target, or None if none exists.

    Free variables are set to zero.
    """
    e = Echelon(field, track=True)
    for label in sorted(columns):
        e.add(columns[label], label)
    return e.express(target)


def bareiss_rank(matrix):
    """Rank of an integer matrix via fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def matrix_rank(matrix, char):
    """Rank of a dense integer matrix over QQ (Bareiss) or GF(char)."""
    if char == 0:
        return bareiss_rank(matrix)
    f = Field(char)
    return rank(({j: x for j, x in enumerate(row) if x % char} for row in matrix), f)
