"""LCM maps: checkable certificates that an inclusion I1 ⊆ I2 is Tor-vanishing.

A map phi from G(I1) to G(I2) has the LCM property when, for every nonempty
subset G' of G(I1), lcm(phi(G')) strictly divides lcm(G').
"""

from dataclasses import dataclass, field
from itertools import combinations

from .calculus import partial_star
from .caps import CAPS
from .errors import CapExceeded, PreconditionError
from .monomial import (MonomialIdeal, degree, divides, format_monomial, lcm_many,
                       minimalize, parse_ideal, parse_monomial, quotient, support)


@dataclass
class LcmMapCertificate:
    source: MonomialIdeal
    target: MonomialIdeal
    assignments: dict
    trace: list = field(default_factory=list)
    verified_up_to: int = 0
    verdict: bool = None
    hypothesis: bool = True  # d*(source) ⊆ target

    def to_json(self):
        names = self.source.ring.vars
        return {
            "schema": 1,
            "ring": list(names),
            "char": self.source.ring.char,
            "source": self.source.text(),
            "target": self.target.text(),
            "assignments": [[format_monomial(f, names), format_monomial(g, names)]
                            for f, g in self.assignments.items()],
            "trace": self.trace,
            "verified_up_to": self.verified_up_to,
            "verdict": self.verdict,
            "hypothesis": self.hypothesis,
        }

    @classmethod
    def from_json(cls, data, ring):
        src = parse_ideal(data["source"], ring)
        tgt = parse_ideal(data["target"], ring)
        assign = {parse_monomial(f, ring): parse_monomial(g, ring) for f, g in data["assignments"]}
        return cls(src, tgt, assign, list(data.get("trace", [])), data.get("verified_up_to", 0),
                   data.get("verdict"))


def _first_target(target, m):
    return next((g for g in target.gens if divides(g, m)), None)


class _Stuck(Exception):
    pass


def _build(gens, target, names, trace, depth):
    if len(gens) == 1:
        f = gens[0]
        for j in support(f):
            h = list(f)
            h[j] -= 1
            g = _first_target(target, tuple(h))
            if g is not None:
                trace.append({"depth": depth, "case": "principal", "variable": names[j],
                              "source": format_monomial(f, names), "image": format_monomial(g, names)})
                return {f: g}
        raise _Stuck(tuple(h))
    n = len(gens[0])
    x = next(j for j in range(n) if any(g[j] for g in gens))
    xk = [g for g in gens if g[x]]
    rest = [g for g in gens if not g[x]]
    trace.append({"depth": depth, "case": "split", "variable": names[x],
                  "xK": [format_monomial(g, names) for g in xk],
                  "L": [format_monomial(g, names) for g in rest]})
    out = _build(rest, target, names, trace, depth + 1) if rest else {}
    for y in xk:
        h = list(y)
        h[x] -= 1
        g = _first_target(target, tuple(h))
        if g is None:
            raise _Stuck(tuple(h))
        out[y] = g
    return out


def lcm_map(I1, I2):
    """Build an LCM map G(I1) -> G(I2) by induction on the number of generators.

    d*(I1) ⊆ I2 guarantees success. The construction only ever asks for one
    f/x per principal leaf and for K ⊆ I2 at each split, so it is attempted
    even when the full hypothesis fails (``hypothesis`` records which case
    applies); a failure is reported with the monomial that fell outside I2.
    """
    if I1.is_zero or I2.is_zero or I1.is_unit or I2.is_unit:
        raise PreconditionError("lcm_map needs nonzero proper ideals")
    names = I1.ring.vars
    bad = next((g for g in partial_star(I1).gens if not I2.contains_monomial(g)), None)
    trace = []
    try:
        assign = _build(list(I1.gens), I2, names, trace, 0)
    except _Stuck as stuck:
        witness = bad if bad is not None else stuck.args[0]
        raise PreconditionError(
            f"d*(I1) is not inside I2: {format_monomial(witness, names)} escapes", witness=witness) from None
    return LcmMapCertificate(I1, I2, {f: assign[f] for f in I1.gens}, trace, hypothesis=bad is None)


def verify_lcm_property(cert, cap=None):
    """Check every nonempty subset; records the subset bound on the certificate."""
    cap = CAPS.subset_verify if cap is None else cap
    gens = cert.source.gens
    if len(gens) > cap:
        raise CapExceeded("LCM subset verification generators", len(gens), cap)
    n = cert.source.nvars
    ok = True
    for f in gens:
        g = cert.assignments.get(f)
        if g is None or g not in cert.target.gens:
            ok = False
    if ok:
        for k in range(1, len(gens) + 1):
            for sub in combinations(gens, k):
                top = lcm_many(sub, n)
                img = lcm_many([cert.assignments[f] for f in sub], n)
                if not divides(img, top) or degree(img) >= degree(top):
                    ok = False
                    break
            if not ok:
                break
    cert.verified_up_to = len(gens)
    cert.verdict = ok
    return ok


def assignment_quotients(cert):
    """f / phi(f) for each source generator, as an ideal (all in m if valid)."""
    return minimalize([quotient(f, g) for f, g in cert.assignments.items()], cert.source.ring)
