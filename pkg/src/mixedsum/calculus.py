"""Operators on monomial ideals: d*, *strongly Golod tests, closures, primes."""

from dataclasses import dataclass
from fractions import Fraction

from .caps import CAPS
from .errors import CapExceeded, PreconditionError
from .monomial import (MonomialIdeal, canonical_key, contains, divides, intersect,
                       minimalize, power, radical, saturate, support,
                       unit_ideal)


def partial_star(I):
    """Ideal generated by f/x for f a minimal generator and x dividing f."""
    if I.is_zero:
        raise PreconditionError("partial_star of the zero ideal")
    out = []
    for g in I.gens:
        for j in support(g):
            h = list(g)
            h[j] -= 1
            out.append(tuple(h))
    if not out:  # I is the unit ideal
        return unit_ideal(I.ring)
    return minimalize(out, I.ring)


@dataclass
class GolodReport:
    ideal: MonomialIdeal
    partial_star: MonomialIdeal
    is_star_strongly_golod: bool
    witness: tuple = None

    def to_json(self):
        return {"schema": 1, "ideal": self.ideal.text(), "partial_star": self.partial_star.text(),
                "is_star_strongly_golod": self.is_star_strongly_golod,
                "witness": None if self.witness is None else [list(w) for w in self.witness]}


def is_star_strongly_golod(I):
    """Test d*(I)^2 ⊆ I; the witness is a pair of d*(I) generators whose product escapes."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("*strongly Golod test needs a nonzero proper ideal")
    D = partial_star(I)
    gens = D.gens
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            m = tuple(x + y for x, y in zip(gens[a], gens[b]))
            if not I.contains_monomial(m):
                return GolodReport(I, D, False, (gens[a], gens[b]))
    return GolodReport(I, D, True)


# -- integral closure ---------------------------------------------------------

def _phase_one_feasible(A, b):
    """Is {x >= 0 : A x = b} nonempty? Exact Phase-I simplex, Bland's rule.

    ``b`` must be nonnegative. One artificial variable per row.
    """
    m, n = len(A), len(A[0]) if A else 0
    tab = [[Fraction(x) for x in A[r]] + [Fraction(int(r == k)) for k in range(m)] + [Fraction(b[r])]
           for r in range(m)]
    basis = [n + r for r in range(m)]
    width = n + m
    # objective: minimize the sum of artificials, written as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for r in range(m):
        for k in range(width + 1):
            if k < n or k == width:
                cost[k] -= tab[r][k]
    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for r in range(m):
            if tab[r][enter] > 0:
                ratio = tab[r][width] / tab[r][enter]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # cannot happen for a bounded Phase I
            break
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for r in range(m):
            if r != leave and tab[r][enter]:
                t = tab[r][enter]
                tab[r] = [x - t * y for x, y in zip(tab[r], tab[leave])]
        if cost[enter]:
            t = cost[enter]
            cost = [x - t * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[width] == 0


def in_newton_polyhedron(v, gens):
    """v ∈ conv(gens) + R_{>=0}^n, decided exactly.

    Variables are the convex weights and one slack per coordinate:
    sum_i l_i a_i + s = v and sum_i l_i = 1.
    """
    n = len(v)
    m = len(gens)
    A = []
    for j in range(n):
        A.append([g[j] for g in gens] + [int(k == j) for k in range(n)])
    A.append([1] * m + [0] * n)
    return _phase_one_feasible(A, list(v) + [1])


def integral_closure(I):
    """Integral closure of a monomial ideal via its Newton polyhedron.

    A minimal integral point v of the polyhedron has v_j <= max_i a_ij: if v_j
    were larger, v - e_j would still dominate the same convex combination.
    So candidates live in the box below the generator-wise maximum; they are
    tried by ascending degree and multiples of accepted points are skipped.
    """
    if I.is_zero:
        raise PreconditionError("integral closure of the zero ideal")
    if I.is_unit:
        return I
    top = I.max_exponents()
    volume = 1
    for t in top:
        volume *= t + 1
    if volume > CAPS.closure_box:
        raise CapExceeded("integral closure candidate box", volume, CAPS.closure_box)
    pts = [()]
    for t in top:
        pts = [p + (k,) for p in pts for k in range(t + 1)]
    pts.sort(key=canonical_key)
    found = []
    for v in pts:
        if any(divides(g, v) for g in found):
            continue
        if I.contains_monomial(v) or in_newton_polyhedron(v, I.gens):
            found.append(v)
    return minimalize(found, I.ring)


def is_integral_over(v, I, r_max):
    """Oracle: some r <= r_max has v^r ∈ I^r."""
    for r in range(1, r_max + 1):
        if power(I, r).contains_monomial(tuple(r * x for x in v)):
            return True
    return False


# -- primes and symbolic powers ----------------------------------------------

def _vertex_covers(edges):
    """All minimal vertex covers of a family of sets, as sorted tuples."""
    covers = set()

    def go(chosen, rest):
        pending = [e for e in rest if not (e & chosen)]
        if not pending:
            covers.add(chosen)
            return
        e = min(pending, key=lambda s: (len(s), sorted(s)))
        for v in sorted(e):
            go(chosen | {v}, pending)

    go(frozenset(), [frozenset(e) for e in edges])
    minimal = [c for c in covers if not any(d < c for d in covers)]
    return sorted((tuple(sorted(c)) for c in minimal), key=lambda t: (len(t), t))


def prime_ideal(ring, variables):
    n = ring.nvars
    return MonomialIdeal(ring, tuple(sorted((tuple(int(k == j) for k in range(n)) for j in variables),
                                            key=canonical_key)))


def min_primes(I):
    """Minimal primes of I, each generated by variables."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("minimal primes need a nonzero proper ideal")
    covers = _vertex_covers([support(g) for g in radical(I).gens])
    return [prime_ideal(I.ring, c) for c in covers]


def localize(I, variables):
    """Set the variables outside ``variables`` to 1 and minimalize."""
    keep = set(variables)
    return minimalize([tuple(x if j in keep else 0 for j, x in enumerate(g)) for g in I.gens], I.ring)


def symbolic_power(I, s):
    """I^(s): intersection over minimal primes P of I^s R_P ∩ R."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("symbolic power needs a nonzero proper ideal")
    if s < 1:
        raise PreconditionError("symbolic power exponent must be positive")
    Is = power(I, s)
    out = None
    for P in min_primes(I):
        loc = localize(Is, support_of_prime(P))
        out = loc if out is None else intersect(out, loc)
    return out


def support_of_prime(P):
    return sorted(j for g in P.gens for j in support(g))


def irreducible_components(I):
    """Irreducible decomposition: ideals generated by pure powers of variables."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("irreducible decomposition needs a nonzero proper ideal")
    out = []
    stack = [I]
    while stack:
        J = stack.pop()
        mixed = next((g for g in J.gens if len(support(g)) > 1), None)
        if mixed is None:
            out.append(J)
            continue
        j = support(mixed)[0]
        pure = tuple(mixed[k] if k == j else 0 for k in range(len(mixed)))
        rest = tuple(0 if k == j else mixed[k] for k in range(len(mixed)))
        for part in (pure, rest):
            stack.append(minimalize(J.gens + (part,), J.ring))
    out = list({J.gens: J for J in out}.values())
    # drop components that contain another one: they are redundant
    out = [J for J in out if not any(K != J and contains(J, K) for K in out)]
    return sorted(out, key=lambda J: [canonical_key(g) for g in J.gens])


def associated_primes(I):
    sets = sorted({tuple(sorted(j for g in J.gens for j in support(g))) for J in irreducible_components(I)},
                  key=lambda t: (len(t), t))
    return [prime_ideal(I.ring, c) for c in sets]


def symbolic_power_colon(I, s):
    """I^(s) as the saturation of I^s by the intersection of its embedded primes."""
    Is = power(I, s)
    minimal = {P.gens for P in min_primes(I)}
    embedded = [P for P in associated_primes(Is) if P.gens not in minimal]
    if not embedded:
        return Is
    J = embedded[0]
    for P in embedded[1:]:
        J = intersect(J, P)
    return saturate(Is, J)
