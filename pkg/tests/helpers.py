"""Shared builders and independent brute-force oracles for the tests."""

import random
from itertools import product as cartesian

from hypothesis import strategies as st

from mixedsum.monomial import PolyRing, minimalize, parse_ideal, power
from mixedsum.formulas import random_ideal


# acceptance criteria append (number, passed, detail); printed at session end
ACCEPTANCE = []


def ring(names, char=0):
    return PolyRing(tuple(v.strip() for v in names.split(",")), char)


def ideal(names, text, char=0):
    return parse_ideal(text, ring(names, char))


def single_corpus(seed, count, max_vars=3, max_gens=3, max_exp=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vars)
        R = PolyRing(tuple(f"x{k}" for k in range(1, n + 1)))
        out.append(random_ideal(rng, R, max_gens, max_exp))
    return out


@st.composite
def ideals(draw, nvars=2, max_gens=3, max_exp=3, names="xyzw"):
    R = PolyRing(tuple(names[:nvars]))
    k = draw(st.integers(1, max_gens))
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * nvars)
                         .filter(lambda e: sum(e) > 0), min_size=k, max_size=k))
    return minimalize(gens, R)


# -- oracles ------------------------------------------------------------------

def monomials_up_to(n, d):
    """All exponent vectors in n variables of total degree <= d."""
    return [e for e in cartesian(range(d + 1), repeat=n) if sum(e) <= d]


def member(I, m):
    """Membership straight from the definition: some generator divides m."""
    return any(all(a <= b for a, b in zip(g, m)) for g in I.gens)


def same_up_to(I, J, d):
    """I and J contain the same monomials of degree <= d."""
    n = I.nvars
    return all(member(I, m) == member(J, m) for m in monomials_up_to(n, d))


def taylor_ranks(I):
    """Ranks of the minimalized Taylor complex (oracle for Betti totals)."""
    from mixedsum.resolution import minimalize_complex, taylor_complex
    return minimalize_complex(taylor_complex(I)).ranks()


def powers(I, s_max):
    return [power(I, s) for s in range(1, s_max + 1)]
