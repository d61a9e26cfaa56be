"""Explicit multigraded free complexes over a polynomial ring.

Every complex here is multigraded with monomial-shifted free modules, so a
matrix entry from generator h (column) to generator g (row) is always a
scalar times x^(deg h - deg g). Differentials are therefore stored as sparse
scalar matrices ``{col: {row: coefficient}}`` and all linear algebra happens
one multidegree at a time.

Kernels and homology only need to be inspected at lcms of generator degrees:
the part of a free module in multidegree b is spanned by the generators whose
degree divides b, and that set does not change between b and the lcm of the
degrees it contains.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from .betti import quotient_betti, betti_table, subquotient_betti
from .caps import CAPS
from .errors import CapExceeded, PreconditionError
from .linalg import Echelon, Field, _axpy, kernel, solve
from .monomial import (canonical_key, degree, divides, format_monomial, lcm_closure,
                       lcm_many, quotient, zero_ideal)


# -- complexes ---------------------------------------------------------------

@dataclass
class PolyEntry:
    terms: list  # [(coefficient, exponent tuple)]

    def __str__(self):
        return " + ".join(f"{c}*{m}" for c, m in self.terms) or "0"


@dataclass
class FreeComplex:
    """F_0 <- F_1 <- ... ; ``maps[i]`` is d_i : F_i -> F_{i-1} for i >= 1.

    ``maps[0]`` is always an empty dict so indices line up with degrees.
    """

    ring: object
    modules: list
    maps: list
    minimal: bool = False
    char: int = 0

    def __post_init__(self):
        while len(self.maps) < len(self.modules):
            self.maps.append({})

    @property
    def length(self):
        top = len(self.modules) - 1
        while top >= 0 and not self.modules[top]:
            top -= 1
        return top

    def ranks(self):
        return [len(m) for m in self.modules[:self.length + 1]]

    def entry(self, i, row, col):
        c = self.maps[i].get(col, {}).get(row)
        if not c:
            return PolyEntry([])
        return PolyEntry([(c, quotient(self.modules[i][col], self.modules[i - 1][row]))])

    def matrix(self, i):
        """Dense list-of-rows of PolyEntry for d_i."""
        rows, cols = len(self.modules[i - 1]), len(self.modules[i])
        return [[self.entry(i, r, c) for c in range(cols)] for r in range(rows)]

    def betti(self):
        out = {}
        for i, degs in enumerate(self.modules):
            for a in degs:
                out[(i, degree(a))] = out.get((i, degree(a)), 0) + 1
        return out

    def to_json(self):
        names = self.ring.vars
        diffs = []
        for i in range(1, len(self.modules)):
            terms = []
            for c in sorted(self.maps[i]):
                for r in sorted(self.maps[i][c]):
                    v = self.maps[i][c][r]
                    mono = quotient(self.modules[i][c], self.modules[i - 1][r])
                    terms.append([r, c, str(v), format_monomial(mono, names)])
            diffs.append({"i": i, "terms": terms})
        return {"schema": 1, "ring": str(self.ring), "minimal": self.minimal,
                "modules": [[list(a) for a in degs] for degs in self.modules],
                "differentials": diffs}


def check_complex(F):
    """Raise ValueError unless F is homogeneous and d∘d = 0 exactly."""
    f = Field(F.char)
    for i in range(1, len(F.modules)):
        for c, col in F.maps[i].items():
            for r, v in col.items():
                if not divides(F.modules[i - 1][r], F.modules[i][c]):
                    raise ValueError(f"d_{i} entry ({r},{c}) is not homogeneous")
                if not f.reduce(v):
                    raise ValueError(f"d_{i} stores a zero at ({r},{c})")
    for i in range(2, len(F.modules)):
        for c, col in F.maps[i].items():
            acc = {}
            for r, v in col.items():
                _axpy(f, acc, v, F.maps[i - 1].get(r, {}))
            if acc:
                raise ValueError(f"d_{i - 1} d_{i} is nonzero on column {c}")
    return True


def _is_minimal(F):
    for i in range(1, len(F.modules)):
        for c, col in F.maps[i].items():
            for r in col:
                if F.modules[i][c] == F.modules[i - 1][r]:
                    return False
    return True


# -- Taylor complex and minimalization ---------------------------------------

def taylor_complex(I, cap=None):
    """Taylor resolution of the ideal I."""
    gens = I.gens
    cap = CAPS.taylor_gens if cap is None else cap
    if I.is_zero:
        raise PreconditionError("Taylor complex needs at least one generator")
    if len(gens) > cap:
        raise CapExceeded("Taylor generators", len(gens), cap)
    n = I.nvars
    f = Field(I.ring.char)
    subsets = [list(combinations(range(len(gens)), k + 1)) for k in range(len(gens))]
    index = [{S: j for j, S in enumerate(level)} for level in subsets]
    modules = [[lcm_many([gens[g] for g in S], n) for S in level] for level in subsets]
    maps = [{}]
    for k in range(1, len(gens)):
        d = {}
        for c, S in enumerate(subsets[k]):
            col = {}
            for pos in range(len(S)):
                face = S[:pos] + S[pos + 1:]
                # sign (-1)^(pos+1) makes d(e_12) = y e_1 - x e_2 for (x^2, xy)
                col[index[k - 1][face]] = f(-1 if pos % 2 == 0 else 1)
            d[c] = col
        maps.append(d)
    return FreeComplex(I.ring, modules, maps, minimal=len(gens) == 1, char=I.ring.char)


def minimalize_complex(F):
    """Cancel unit entries by Gaussian elimination until the complex is minimal.

    Pivots are taken in order of homological degree, then row, then column,
    using the original generator positions, so the output is deterministic.
    """
    f = Field(F.char)
    n_levels = len(F.modules)
    alive = [dict(enumerate(m)) for m in F.modules]
    cols = [{c: dict(v) for c, v in d.items()} for d in F.maps]
    rows = []
    for i in range(n_levels):
        r_index = {}
        for c, col in cols[i].items():
            for r, v in col.items():
                r_index.setdefault(r, {})[c] = v
        rows.append(r_index)

    def set_entry(i, r, c, v):
        if v:
            cols[i].setdefault(c, {})[r] = v
            rows[i].setdefault(r, {})[c] = v
        else:
            cols[i].get(c, {}).pop(r, None)
            rows[i].get(r, {}).pop(c, None)

    def drop_col(i, c):
        for r in list(cols[i].get(c, {})):
            rows[i][r].pop(c, None)
        cols[i].pop(c, None)

    def drop_row(i, r):
        for c in list(rows[i].get(r, {})):
            cols[i][c].pop(r, None)
        rows[i].pop(r, None)

    for i in range(1, n_levels):
        while True:
            pivot = None
            for r in sorted(rows[i]):
                dr = alive[i - 1][r]
                for c in sorted(rows[i][r]):
                    if alive[i][c] == dr:
                        pivot = (r, c)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            r, c = pivot
            p_inv = f.inv(rows[i][r][c])
            col_c = {k: v for k, v in cols[i][c].items() if k != r}
            row_r = {k: v for k, v in rows[i][r].items() if k != c}
            for c2, a in row_r.items():
                factor = f.reduce(a * p_inv)
                for r2, b in col_c.items():
                    v = f.reduce(cols[i].get(c2, {}).get(r2, 0) - b * factor)
                    set_entry(i, r2, c2, v)
            drop_col(i, c)
            drop_row(i, r)
            if i + 1 < n_levels:
                drop_row(i + 1, c)
            drop_col(i - 1, r)
            del alive[i][c]
            del alive[i - 1][r]

    modules, maps, renum = [], [], []
    for i in range(n_levels):
        keep = sorted(alive[i])
        renum.append({old: new for new, old in enumerate(keep)})
        modules.append([alive[i][k] for k in keep])
    for i in range(n_levels):
        d = {}
        if i:
            for c, col in cols[i].items():
                if c in renum[i] and col:
                    d[renum[i][c]] = {renum[i - 1][r]: v for r, v in col.items()}
        maps.append(d)
    while len(modules) > 1 and not modules[-1]:
        modules.pop()
        maps.pop()
    return FreeComplex(F.ring, modules, maps, minimal=True, char=F.char)


# -- direct minimal resolutions of subquotients ------------------------------

def _betti_hints(I2, I1, char):
    if I1.is_zero and not I2.is_unit:
        t = betti_table(I2, char)
    elif I1.is_zero:
        return {(0, (0,) * I2.nvars): 1}
    elif I2.is_unit:
        t = quotient_betti(I1, char)
    else:
        t = subquotient_betti(I2, I1, char)
    return t.entries


def _degree_bucket(degs):
    return sorted(set(degs), key=canonical_key)


def _primitive(v):
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v.values():
        den = den * x.denominator // gcd(den, x.denominator)
    w = {k: int(x * den) for k, x in v.items()}
    g = 0
    for x in w.values():
        g = gcd(g, x)
    return {k: x // g for k, x in w.items()}


def minimal_resolution(I2, I1=None, char=None, hints=True):
    """Minimal free resolution of the module I2/I1 (I1 defaults to zero).

    Syzygies are found multidegree by multidegree: at b the new generators
    extend the span of the syzygies already chosen in degrees dividing b to
    the full kernel. With ``hints`` only the multidegrees carrying Betti
    numbers are visited (and the counts are cross-checked); without, every
    lcm of current generator degrees is scanned.
    """
    ring = I2.ring
    I1 = zero_ideal(ring) if I1 is None else I1
    char = ring.char if char is None else char
    f = Field(char)
    if not all(I2.contains_monomial(g) for g in I1.gens):
        raise PreconditionError("resolution of I2/I1 needs I1 inside I2")
    if I2.is_zero:
        return FreeComplex(ring, [[]], [{}], minimal=True, char=char)
    F0 = sorted((g for g in I2.gens if not I1.contains_monomial(g)), key=canonical_key)
    if not F0:
        return FreeComplex(ring, [[]], [{}], minimal=True, char=char)
    todo = None
    if hints:
        todo = {}
        for (i, a), c in _betti_hints(I2, I1, char).items():
            todo.setdefault(i, {})[a] = c
        got = sorted(todo.get(0, {}).items(), key=lambda kv: canonical_key(kv[0]))
        if [a for a, c in got for _ in range(c)] != F0:
            raise AssertionError("Betti hints disagree with the generators of I2/I1")
    modules = [F0]
    maps = [{}]
    i = 0
    while modules[i]:
        degs = modules[i]
        if i == 0:
            def column(j, b):
                return {} if I1.contains_monomial(b) else {0: f(1)}
        else:
            d = maps[i]

            def column(j, b, d=d):
                return d.get(j, {})
        if hints:
            targets = sorted(todo.get(i + 1, {}), key=canonical_key)
        else:
            targets = lcm_closure(list(degs) + list(I1.gens) if i == 0 else degs,
                                  CAPS.lattice_size)
        new_degs, new_cols = [], []
        for b in targets:
            below = [j for j, a in enumerate(degs) if divides(a, b)]
            if not below:
                continue
            K = kernel({j: column(j, b) for j in below}, f)
            if not K:
                continue
            ech = Echelon(f)
            for a, col in zip(new_degs, new_cols):
                if divides(a, b):
                    ech.add(col)
            found = []
            for v in K:
                if ech.add(v) is None:
                    found.append(v)
            if hints and len(found) != todo[i + 1][b]:
                raise AssertionError(
                    f"Betti hint beta_{i + 1},{b} = {todo[i + 1][b]} but kernel extension has {len(found)}")
            for v in found:
                new_degs.append(b)
                new_cols.append(_primitive(v) if char == 0 else v)
        order = sorted(range(len(new_degs)), key=lambda k: canonical_key(new_degs[k]))
        modules.append([new_degs[k] for k in order])
        maps.append({pos: new_cols[k] for pos, k in enumerate(order)})
        i += 1
    modules.pop()
    maps.pop()
    return FreeComplex(ring, modules, maps, minimal=True, char=char)


# -- linear part and homology ------------------------------------------------

def linear_part(F):
    """Keep only entries of total degree one."""
    if not F.minimal:
        raise PreconditionError("linear part is defined for minimal complexes")
    maps = [{}]
    for i in range(1, len(F.modules)):
        d = {}
        for c, col in F.maps[i].items():
            keep = {r: v for r, v in col.items()
                    if degree(F.modules[i][c]) - degree(F.modules[i - 1][r]) == 1}
            if keep:
                d[c] = keep
        maps.append(d)
    return FreeComplex(F.ring, [list(m) for m in F.modules], maps, minimal=True, char=F.char)


def graded_kernel(source, target, columns, char=0):
    """Homogeneous generators of the kernel of a monomial-entry matrix.

    ``source``/``target`` are generator degrees; ``columns`` maps source
    index to ``{target index: scalar}``. Returns a list of
    ``(degree, {source index: scalar})``.
    """
    f = Field(char)
    for j, col in columns.items():
        for r in col:
            if not divides(target[r], source[j]):
                raise PreconditionError(f"entry ({r},{j}) is not homogeneous")
    gens = []
    for b in lcm_closure(list(source), CAPS.lattice_size):
        below = [j for j, a in enumerate(source) if divides(a, b)]
        K = kernel({j: columns.get(j, {}) for j in below}, f)
        if not K:
            continue
        ech = Echelon(f)
        for a, v in gens:
            if divides(a, b):
                ech.add(v)
        for v in K:
            if ech.add(v) is None:
                gens.append((b, v))
    return gens


def _homology_dim_at(F, i, below, above, f):
    """dim H_i(F) in one multidegree, from ranks only.

    ``below`` lists the generators of F_i whose degree divides it and
    ``above`` those of F_(i+1).
    """
    if not below:
        return 0
    kdim = len(below)
    if i:
        ech = Echelon(f)
        for j in below:
            ech.add(F.maps[i].get(j, {}))
        kdim -= ech.rank
    if not kdim:
        return 0
    ech = Echelon(f)
    for j in above:
        ech.add(F.maps[i + 1].get(j, {}))
        if ech.rank >= kdim:
            return 0
    return kdim - ech.rank


def _divisor_masks(points, degs):
    """Boolean matrix: row p, column g is True when degs[g] divides points[p]."""
    if not degs:
        return np.zeros((len(points), 0), dtype=bool)
    P = np.array(points, dtype=np.int64)
    D = np.array(degs, dtype=np.int64)
    out = np.empty((len(P), len(D)), dtype=bool)
    block = max(1, 2_000_000 // (len(D) * max(P.shape[1], 1)))
    for lo in range(0, len(P), block):
        out[lo:lo + block] = (D[None, :, :] <= P[lo:lo + block, None, :]).all(axis=2)
    return out


# Over QQ, integral complexes are first checked modulo this prime: ranks can
# only drop mod p and d∘d = 0 survives reduction, so a zero homology count
# mod p is a proof of vanishing over QQ. Nonzero counts are redone exactly.
_FILTER_PRIME = (1 << 61) - 1


def _is_integral(F):
    for d in F.maps:
        for col in d.values():
            for v in col.values():
                if getattr(v, "denominator", 1) != 1:
                    return False
    return True


def _homology_at(F, i, below, above, f, filt=None):
    """Is H_i(F) nonzero in the multidegree described by ``below``/``above``?"""
    if filt is not None and not _homology_dim_at(F, i, below, above, filt):
        return False
    return _homology_dim_at(F, i, below, above, f) > 0


def _is_linear_complex(F):
    for i in range(1, len(F.modules)):
        for c, col in F.maps[i].items():
            for r in col:
                if degree(F.modules[i][c]) - degree(F.modules[i - 1][r]) != 1:
                    return False
    return True


def homology_nonzero(F, i):
    """True iff H_i(F) is nonzero."""
    if i < 0 or i >= len(F.modules) or not F.modules[i]:
        return False
    f = Field(F.char)
    filt = Field(_FILTER_PRIME) if F.char == 0 and _is_integral(F) else None
    src = F.modules[i]
    nxt = F.modules[i + 1] if i + 1 < len(F.modules) else []
    seen = set()

    def scan(points):
        ms, mn = _divisor_masks(points, src), _divisor_masks(points, nxt)
        for row in range(len(points)):
            key = (ms[row].tobytes(), mn[row].tobytes())
            if key in seen:
                continue
            seen.add(key)
            below = np.flatnonzero(ms[row]).tolist()
            above = np.flatnonzero(mn[row]).tolist()
            if _homology_at(F, i, below, above, f, filt):
                return True
        return False

    # cheap witnesses first: the generator degrees themselves
    if scan(_degree_bucket(src)):
        return True
    if _is_linear_complex(F):
        # a linear complex splits into strands of fixed degree minus position
        strands = {}
        for a in src:
            strands.setdefault(degree(a) - i, []).append(a)
        groups = list(strands.values())
    else:
        groups = [list(src)]
    for group in groups:
        if scan(lcm_closure(group, CAPS.lattice_size)):
            return True
    return False


def linearity_defect(I2, I1=None, char=None):
    """lind of the module I2/I1; 0 for the zero module."""
    F = minimal_resolution(I2, I1, char)
    if not F.modules[0]:
        return 0
    L = linear_part(F)
    for i in range(F.length, 0, -1):
        if homology_nonzero(L, i):
            return i
    return 0


# -- liftings ----------------------------------------------------------------

NOT_TOR_VANISHING = "not_tor_vanishing"
TOR_VANISHING = "tor_vanishing"
DOUBLY = "doubly_tor_vanishing"


@dataclass
class LiftingClassification:
    verdict: str
    lifting: list
    offending: tuple = None
    source: FreeComplex = None
    target: FreeComplex = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"schema": 1, "verdict": self.verdict,
                "offending": None if self.offending is None else
                {"i": self.offending[0], "row": list(self.offending[1]),
                 "col": list(self.offending[2]), "coefficient": str(self.offending[3])},
                "notes": list(self.notes)}


def lift_inclusion(I1, I2, char=None):
    """Resolutions F of I1, G of I2 and a chain map F -> G over the inclusion.

    ``phi[i]`` maps a column of F_i to ``{row of G_i: scalar}``. Each phi_0
    column sends f to the first generator of G_0 dividing it.
    """
    char = I1.ring.char if char is None else char
    if I1.is_zero:
        raise PreconditionError("lifting needs a nonzero source ideal")
    if not all(I2.contains_monomial(g) for g in I1.gens):
        raise PreconditionError("lifting needs I1 inside I2")
    f = Field(char)
    F = minimal_resolution(I1, None, char)
    G = minimal_resolution(I2, None, char)
    phi = [{}]
    for c, a in enumerate(F.modules[0]):
        g = next(j for j, b in enumerate(G.modules[0]) if divides(b, a))
        phi[0][c] = {g: f(1)}
    for i in range(1, len(F.modules)):
        phi_i = {}
        for c, a in enumerate(F.modules[i]):
            rhs = {}
            for r, v in F.maps[i].get(c, {}).items():
                _axpy(f, rhs, v, phi[i - 1].get(r, {}))
            if not rhs:
                continue
            if i >= len(G.modules):
                raise AssertionError("lifting target ran out of modules")
            cols = {j: G.maps[i].get(j, {}) for j, b in enumerate(G.modules[i]) if divides(b, a)}
            x = solve(cols, rhs, f)
            if x is None:
                raise AssertionError(f"no lift at level {i} column {c}")
            if x:
                phi_i[c] = x
        phi.append(phi_i)
    return F, G, phi


def is_chain_map(F, G, phi, char=None):
    """d^G phi_i == phi_{i-1} d^F on every column, plus homogeneity."""
    f = Field(F.char if char is None else char)
    for i in range(len(phi)):
        for c, col in phi[i].items():
            for r in col:
                if not divides(G.modules[i][r], F.modules[i][c]):
                    return False
    for i in range(1, len(phi)):
        for c in range(len(F.modules[i])):
            lhs = {}
            for r, v in phi[i].get(c, {}).items():
                _axpy(f, lhs, v, G.maps[i].get(r, {}))
            rhs = {}
            for r, v in F.maps[i].get(c, {}).items():
                _axpy(f, rhs, v, phi[i - 1].get(r, {}))
            _axpy(f, lhs, f(-1), rhs)
            if lhs:
                return False
    return True


def compose(phi, psi, char=0):
    """psi ∘ phi for chain maps given as per-level sparse matrices."""
    f = Field(char)
    out = []
    for i in range(min(len(phi), len(psi))):
        level = {}
        for c, col in phi[i].items():
            acc = {}
            for r, v in col.items():
                _axpy(f, acc, v, psi[i].get(r, {}))
            if acc:
                level[c] = acc
        out.append(level)
    return out


def entry_orders(F, G, phi):
    """Yield (order, i, row, col, value) for every nonzero lifting entry."""
    for i, level in enumerate(phi):
        for c, col in level.items():
            for r, v in col.items():
                yield degree(F.modules[i][c]) - degree(G.modules[i][r]), i, r, c, v


def _min_order(F, G, phi):
    best = None
    for item in entry_orders(F, G, phi):
        if best is None or item[0] < best[0]:
            best = item
    return best


_CONST = (1 << 60,)


def _doubly_lifting(F, G, char):
    """A lifting with every entry in m^2, or None if none exists.

    Solves one exact linear system whose unknowns are the lifting entries of
    order at least two; entries of order 0 or 1 are forced to vanish.
    """
    f = Field(char)
    unknowns = {}
    top = min(len(F.modules), len(G.modules))
    for i in range(top):
        for c, a in enumerate(F.modules[i]):
            for r, b in enumerate(G.modules[i]):
                if divides(b, a) and degree(a) - degree(b) >= 2:
                    unknowns[(i, r, c)] = True
    if len(unknowns) > CAPS.solve_size:
        raise CapExceeded("lifting unknowns", len(unknowns), CAPS.solve_size)
    ech = Echelon(f)
    # level 0: augmentations agree, i.e. the phi_0 column of f sums to 1
    for c, a in enumerate(F.modules[0]):
        eq = {(0, r, c): f(1) for r in range(len(G.modules[0])) if (0, r, c) in unknowns}
        eq[_CONST] = f(-1)
        ech.add(eq)
    for i in range(1, len(F.modules)):
        for c, a in enumerate(F.modules[i]):
            rows = [r for r, b in enumerate(G.modules[i - 1]) if divides(b, a)]
            eqs = {r: {} for r in rows}
            if i < len(G.modules):
                for g, b in enumerate(G.modules[i]):
                    if (i, g, c) in unknowns:
                        for r, v in G.maps[i].get(g, {}).items():
                            eqs[r][(i, g, c)] = f.reduce(eqs[r].get((i, g, c), 0) + v)
            for fp, v in F.maps[i].get(c, {}).items():
                for r in rows:
                    if (i - 1, r, fp) in unknowns:
                        key = (i - 1, r, fp)
                        eqs[r][key] = f.reduce(eqs[r].get(key, 0) - v)
            for eq in eqs.values():
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    ech.add(eq)
    if _CONST in ech.rows:
        return None
    # back substitution with free unknowns set to zero
    value = {}
    for p in sorted(ech.rows, reverse=True):
        row, _ = ech.rows[p]
        if p == _CONST:
            continue
        s = f(0)
        for k, v in row.items():
            if k == p:
                continue
            if k == _CONST:
                s -= v
            else:
                s -= v * value.get(k, 0)
        value[p] = f.reduce(s)
    phi = [{} for _ in range(len(F.modules))]
    for (i, r, c), v in value.items():
        if v:
            phi[i].setdefault(c, {})[r] = v
    return phi


def lift_and_classify(I1, I2, char=None):
    """Classify the inclusion I1 ⊆ I2 by the entries of a lifting.

    Tor-vanishing (no unit entries) does not depend on the lifting. For the
    doubly case a particular lifting may carry linear entries that another
    lifting avoids, so existence of an m^2 lifting is decided by an exact
    linear system.
    """
    char = I1.ring.char if char is None else char
    F, G, phi = lift_inclusion(I1, I2, char)
    low = _min_order(F, G, phi)
    if low is not None and low[0] == 0:
        _, i, r, c, v = low
        return LiftingClassification(NOT_TOR_VANISHING, phi,
                                     (i, G.modules[i][r], F.modules[i][c], v), F, G)
    if low is None or low[0] >= 2:
        return LiftingClassification(DOUBLY, phi, None, F, G)
    better = _doubly_lifting(F, G, char)
    if better is not None:
        if not is_chain_map(F, G, better, char):
            raise AssertionError("m^2 lifting failed the chain map check")
        return LiftingClassification(DOUBLY, better, None, F, G,
                                     ["particular lifting had linear entries; an m^2 lifting exists"])
    _, i, r, c, v = low
    return LiftingClassification(TOR_VANISHING, phi, (i, G.modules[i][r], F.modules[i][c], v), F, G,
                                 ["no lifting with all entries in m^2 exists"])


@dataclass
class SmallTypeReport:
    steps: list
    verdict: bool
    doubly: bool

    def to_json(self):
        return {"schema": 1, "doubly": self.doubly, "verdict": self.verdict, "steps": self.steps}


def small_type_check(I, s_max, doubly=False, char=None):
    """Classify I^s ⊆ I^(s-1) for s = 1..s_max.

    The d*-containment is reported alongside as the fast certificate.
    """
    from .calculus import partial_star
    from .monomial import contains, power
    if s_max < 1:
        raise PreconditionError("s_max must be at least 1")
    want = DOUBLY if doubly else TOR_VANISHING
    steps = []
    ok = True
    for s in range(1, s_max + 1):
        lower, upper = power(I, s - 1), power(I, s)
        cert = contains(lower, partial_star(upper))
        cls = lift_and_classify(upper, lower, char)
        good = cls.verdict == want or (not doubly and cls.verdict == DOUBLY)
        ok &= good
        steps.append({"s": s, "certificate": cert, "verdict": cls.verdict, "ok": good})
    return SmallTypeReport(steps, ok, doubly)


# -- Sega's criterion, bounded -----------------------------------------------

def _small_monomials(n, q):
    out = [()]
    for _ in range(n):
        out = [m + (k,) for m in out for k in range(q + 1)]
    return [m for m in out if sum(m) <= q]


def sega_map_vanishes(F, i, q):
    """Is Tor_i(R/m^(q+1), M) -> Tor_i(R/m^q, M) zero?

    F is a minimal resolution of M; both Tor modules are the homology of F
    tensored with the truncation, computed in each multidegree.
    """
    f = Field(F.char)
    if i < 0 or i >= len(F.modules) or not F.modules[i]:
        return True
    n = F.ring.nvars
    points = set()
    for a in F.modules[i]:
        for e in _small_monomials(n, q):
            points.add(tuple(x + y for x, y in zip(a, e)))

    def basis(level, b, trunc):
        if level < 0 or level >= len(F.modules):
            return []
        return [j for j, a in enumerate(F.modules[level])
                if divides(a, b) and degree(b) - degree(a) < trunc]

    def restricted(level, b, cols, trunc):
        keep = set(basis(level - 1, b, trunc))
        return {j: {r: v for r, v in F.maps[level].get(j, {}).items() if r in keep} for j in cols}

    for b in sorted(points, key=canonical_key):
        big = basis(i, b, q + 1)
        if not big:
            continue
        Z = kernel(restricted(i, b, big, q + 1), f) if i else [{j: f(1)} for j in big]
        if not Z:
            continue
        small = set(basis(i, b, q))
        ech = Echelon(f)
        if i + 1 < len(F.modules):
            for col in restricted(i + 1, b, basis(i + 1, b, q), q).values():
                ech.add({r: v for r, v in col.items() if r in small})
        for z in Z:
            img = {j: v for j, v in z.items() if j in small}
            if img and not ech.contains(img):
                return False
    return True


def sega_check(I2, I1=None, q_max=3, char=None):
    """Bounded check that the Sega maps vanish above the linearity defect."""
    F = minimal_resolution(I2, I1, char)
    if not F.modules[0]:
        return {"lind": 0, "ok": True, "failures": []}
    d = linearity_defect(I2, I1, char)
    failures = []
    for i in range(d + 1, F.length + 1):
        for q in range(1, q_max + 1):
            if not sega_map_vanishes(F, i, q):
                failures.append((i, q))
    return {"lind": d, "ok": not failures, "failures": failures}
