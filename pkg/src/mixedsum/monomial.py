"""Monomials, monomial ideals and the ring they live in.

A monomial is a tuple of nonnegative exponents, one per ring variable. A
:class:`MonomialIdeal` stores its minimal generators in canonical order
(total degree, then descending lex on exponents, so ``x^2, xy, y^2``), which
makes every printed result stable.
"""

from dataclasses import dataclass
import re

import numpy as np

from .caps import CAPS
from .errors import CapExceeded, ParseError, PreconditionError, RingMismatch

Monomial = tuple


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PolyRing:
    vars: tuple
    char: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in self.vars):
            raise ValueError("variable names must be nonempty strings")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")

    @property
    def nvars(self):
        return len(self.vars)

    def one(self):
        return (0,) * self.nvars

    def var(self, j):
        e = [0] * self.nvars
        e[j] = 1
        return tuple(e)

    def maximal_ideal(self):
        return MonomialIdeal(self, tuple(self.var(j) for j in range(self.nvars)))

    def __str__(self):
        base = "QQ" if self.char == 0 else f"GF({self.char})"
        return f"{base}[{','.join(self.vars)}]"


# -- monomial arithmetic -----------------------------------------------------

def degree(a):
    return sum(a)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def quotient(b, a):
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def support(a):
    return tuple(j for j, x in enumerate(a) if x)


def squarefree_part(a):
    return tuple(1 if x else 0 for x in a)


def canonical_key(a):
    return (sum(a), tuple(-x for x in a))


def lcm_many(monos, n):
    out = (0,) * n
    for m in monos:
        out = lcm(out, m)
    return out


def format_monomial(a, names):
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- ideals ------------------------------------------------------------------

def _minimal(gens):
    cands = sorted(set(gens), key=canonical_key)
    if len(cands) > 32:
        # g is redundant when some other candidate divides it; sorting by
        # degree first means any proper divisor is a distinct earlier entry
        A = np.array(cands, dtype=np.int64)
        keep = np.ones(len(cands), dtype=bool)
        for k in range(len(cands)):
            if keep[k]:
                below = np.all(A[k] <= A[k + 1:], axis=1)
                keep[k + 1:] &= ~below
        return tuple(g for g, good in zip(cands, keep) if good)
    kept = []
    for g in cands:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: PolyRing
    gens: tuple

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def nvars(self):
        return self.ring.nvars

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.ring.vars) for g in self.gens) + ")"

    def text(self):
        """Round-trippable text form (the ideal grammar)."""
        if self.is_zero:
            return "0"
        return ", ".join(format_monomial(g, self.ring.vars) for g in self.gens)

    def contains_monomial(self, a):
        return any(divides(g, a) for g in self.gens)

    def is_squarefree(self):
        return all(max(g, default=0) <= 1 for g in self.gens)

    def max_exponents(self):
        return tuple(max((g[j] for g in self.gens), default=0) for j in range(self.nvars))

    def lcm(self):
        return lcm_many(self.gens, self.nvars)

    def digest(self):
        return f"{self.nvars}:" + ";".join(",".join(map(str, g)) for g in self.gens)


def minimalize(gens, ring):
    """The monomial ideal of ``ring`` generated by ``gens``."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != ring.nvars:
            raise RingMismatch(f"monomial {g} has arity {len(g)}, ring {ring} has {ring.nvars}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
    out = _minimal(gens)
    if len(out) > CAPS.ideal_gens:
        raise CapExceeded("ideal generators", len(out), CAPS.ideal_gens)
    return MonomialIdeal(ring, out)


def zero_ideal(ring):
    return MonomialIdeal(ring, ())


def unit_ideal(ring):
    return MonomialIdeal(ring, (ring.one(),))


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatch(f"ideals live in different rings: {I.ring} vs {J.ring}")


def ideal_sum(I, J):
    _same_ring(I, J)
    return minimalize(I.gens + J.gens, I.ring)


def product(I, J):
    _same_ring(I, J)
    return minimalize([mul(f, g) for f in I.gens for g in J.gens], I.ring)


def intersect(I, J):
    _same_ring(I, J)
    return minimalize([lcm(f, g) for f in I.gens for g in J.gens], I.ring)


def colon_monomial(I, g):
    return minimalize([quotient(lcm(f, g), g) for f in I.gens], I.ring)


def colon(I, J):
    """I : J."""
    _same_ring(I, J)
    if J.is_zero:
        raise PreconditionError("colon by the zero ideal")
    out = None
    for g in J.gens:
        part = colon_monomial(I, g)
        out = part if out is None else intersect(out, part)
    return out


def combine(I, J, kind):
    ops = {"sum": ideal_sum, "product": product, "intersect": intersect, "colon": colon}
    try:
        return ops[kind](I, J)
    except KeyError:
        raise ValueError(f"unknown combine kind {kind!r}") from None


def power(I, s):
    if s < 0:
        raise ValueError("negative power")
    out = unit_ideal(I.ring)
    base = I
    # square-and-multiply keeps intermediate products small
    while s:
        if s & 1:
            out = product(out, base)
        s >>= 1
        if s:
            base = product(base, base)
    return out


def saturate(I, J):
    """I : J^infinity."""
    if J.is_zero:
        raise PreconditionError("saturation by the zero ideal")
    cur = I
    while True:
        nxt = colon(cur, J)
        if nxt == cur:
            return cur
        cur = nxt


def radical(I):
    return minimalize([squarefree_part(g) for g in I.gens], I.ring)


def contains(I, J):
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return all(I.contains_monomial(g) for g in J.gens)


def lcm_lattice(I, cap=None):
    """All lcms of nonempty subsets of G(I), in canonical order."""
    cap = CAPS.lattice_gens if cap is None else cap
    if I.is_zero or I.is_unit:
        raise PreconditionError("lcm lattice needs a nonzero proper ideal")
    if len(I.gens) > cap:
        raise CapExceeded("lcm lattice generators", len(I.gens), cap)
    return lcm_closure(I.gens)


def lcm_closure(monos, size_cap=None):
    """Closure of a set of monomials under pairwise lcm, in canonical order.

    Grows the set by lcm with the seeds only, which is enough: any subset
    lcm is an iterated lcm with single seeds. Points are encoded as mixed
    radix integers so each round is a handful of array operations.
    """
    size_cap = CAPS.lattice_size if size_cap is None else size_cap
    seeds = list(dict.fromkeys(monos))
    if not seeds:
        return []
    n = len(seeds[0])
    if n == 0:
        return [()]
    S = np.array(seeds, dtype=np.int64).reshape(len(seeds), n)
    radix = np.ones(n, dtype=np.int64)
    span = 1
    for j in range(n):
        radix[j] = span
        span *= int(S[:, j].max()) + 1
    if span >= 1 << 62:
        return _lcm_closure_slow(seeds, size_cap)
    keys, first = np.unique(S @ radix, return_index=True)
    seen = keys
    frontier = S[first]
    found = [frontier]
    block = max(1, 1_000_000 // (len(seeds) * max(n, 1)))
    while len(frontier):
        fresh_rows, fresh_keys = [], []
        for lo in range(0, len(frontier), block):
            C = np.maximum(frontier[lo:lo + block, None, :], S[None, :, :]).reshape(-1, n)
            ck, idx = np.unique(C @ radix, return_index=True)
            new = ~np.isin(ck, seen, assume_unique=True)
            fresh_rows.append(C[idx[new]])
            fresh_keys.append(ck[new])
        ck, idx = np.unique(np.concatenate(fresh_keys), return_index=True)
        frontier = np.concatenate(fresh_rows)[idx]
        seen = np.union1d(seen, ck)
        if len(seen) > size_cap:
            raise CapExceeded("lcm lattice points", len(seen), size_cap)
        found.append(frontier)
    pts = [tuple(row) for row in np.concatenate(found).tolist()]
    return sorted(pts, key=canonical_key)


def _lcm_closure_slow(seeds, size_cap):
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for a in frontier:
            for g in seeds:
                c = lcm(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        if len(seen) > size_cap:
            raise CapExceeded("lcm lattice points", len(seen), size_cap)
        frontier = nxt
    return sorted(seen, key=canonical_key)


def extend(I, ring, offset):
    """Image of I under the embedding placing its variables at ``offset``."""
    n = ring.nvars
    gens = []
    for g in I.gens:
        e = [0] * n
        e[offset:offset + len(g)] = g
        gens.append(tuple(e))
    return minimalize(gens, ring)


def tensor_ring(*rings):
    chars = {r.char for r in rings}
    if len(chars) != 1:
        raise RingMismatch(f"characteristics differ: {sorted(chars)}")
    names = []
    for r in rings:
        for v in r.vars:
            name, k = v, 2
            while name in names:
                name = f"{v}_{k}"
                k += 1
            names.append(name)
    return PolyRing(tuple(names), rings[0].char)


def mixed_embed(R, S, I, J):
    """Return (T, I_T, J_T, P) with P = I_T + J_T in T = R (x) S.

    Colliding variable names of S get a numeric suffix.
    """
    if I.ring != R or J.ring != S:
        raise RingMismatch("ideals must live in the rings passed alongside them")
    T = tensor_ring(R, S)
    I_T = extend(I, T, 0)
    J_T = extend(J, T, R.nvars)
    return T, I_T, J_T, ideal_sum(I_T, J_T)


def mixed_embed_many(ideals):
    """Mixed sum of ideals living in pairwise separate rings."""
    T = tensor_ring(*(I.ring for I in ideals))
    out, offset = [], 0
    for I in ideals:
        out.append(extend(I, T, offset))
        offset += I.nvars
    P = out[0]
    for K in out[1:]:
        P = ideal_sum(P, K)
    return T, out, P


# -- text grammar ------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


def parse_ring(text, char=0):
    names = [t.strip() for t in text.split(",")]
    pos = 0
    for t in text.split(","):
        stripped = t.strip()
        if not _NAME.fullmatch(stripped):
            raise ParseError(f"bad variable name {stripped!r}", text, pos + (len(t) - len(t.lstrip())))
        pos += len(t) + 1
    try:
        return PolyRing(tuple(names), char)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


class _Scanner:
    def __init__(self, text, start=0, end=None):
        self.text = text
        self.pos = start
        self.end = len(text) if end is None else end

    def skip_ws(self):
        while self.pos < self.end and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= self.end

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < self.end else ""

    def match(self, regex):
        self.skip_ws()
        m = regex.match(self.text, self.pos, self.end)
        if m:
            self.pos = m.end()
            return m.group(0)
        return None

    def fail(self, message):
        raise ParseError(message, self.text, min(self.pos, len(self.text)))


def _parse_monomial(sc, ring):
    index = {v: j for j, v in enumerate(ring.vars)}
    e = [0] * ring.nvars
    if sc.peek() == "1":
        sc.match(_INT)
        if not sc.at_end() and sc.peek() not in ",":
            sc.fail("unexpected text after 1")
        return tuple(e)
    while True:
        name = sc.match(_NAME)
        if name is None:
            sc.fail("expected a variable name")
        if name not in index:
            sc.pos -= len(name)
            sc.fail(f"unknown variable {name!r}")
        k = 1
        if sc.peek() == "^":
            sc.pos += 1
            num = sc.match(_INT)
            if num is None:
                sc.fail("expected an exponent after '^'")
            k = int(num)
        e[index[name]] += k
        if sc.peek() == "*":
            sc.pos += 1
            continue
        return tuple(e)


def parse_monomial(text, ring):
    sc = _Scanner(text)
    mono = _parse_monomial(sc, ring)
    if not sc.at_end():
        sc.fail("unexpected trailing text")
    return mono


def parse_ideal(text, ring):
    """Parse ``"x^2*y, z"``. ``"0"`` (or blank) is the zero ideal."""
    if text.strip() in ("", "0"):
        return zero_ideal(ring)
    sc = _Scanner(text)
    gens = []
    while True:
        gens.append(_parse_monomial(sc, ring))
        if sc.at_end():
            break
        if sc.peek() != ",":
            sc.fail("expected ',' between monomials")
        sc.pos += 1
    return minimalize(gens, ring)
