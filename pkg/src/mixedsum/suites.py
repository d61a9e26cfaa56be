"""Seeded random suites: regenerable corpora run through the verifiers.

Each suite yields ``SuiteCase`` rows in corpus order. A case is ``ok`` when
every check in it passed; skipped theorem reports count as passing.
"""

import random
from dataclasses import dataclass, field

from .calculus import integral_closure, is_star_strongly_golod, partial_star, symbolic_power
from .errors import PreconditionError
from .formulas import THEOREM_IDS, random_ideal, random_pair, verify_theorem
from .monomial import (PolyRing, contains, ideal_sum, intersect, minimalize, mixed_embed, power,
                       product, saturate)

EXTRA_SUITES = ("identities", "dstar", "golod")
SUITE_IDS = THEOREM_IDS + EXTRA_SUITES


@dataclass
class SuiteCase:
    index: int
    inputs: str
    ok: bool
    checks: int
    reports: list = field(default_factory=list)
    note: str = ""

    def to_json(self):
        return {"index": self.index, "inputs": self.inputs, "ok": self.ok, "checks": self.checks,
                "reports": [r.to_json() for r in self.reports], "note": self.note}


def _identity_checks(I, J):
    """Both intersection identities on the tensor ring, all p, q, r, s in {0, 1, 2}."""
    T, I_T, J_T, P = mixed_embed(I.ring, J.ring, I, J)
    pw = {}

    def pw_of(K, k, tag):
        if (tag, k) not in pw:
            pw[(tag, k)] = power(K, k)
        return pw[(tag, k)]

    count = 0
    for p in range(3):
        for q in range(3):
            for r in range(3):
                for s in range(3):
                    rhs = product(pw_of(I_T, p + r, "I"), pw_of(J_T, s + q, "J"))
                    right = product(pw_of(I_T, r, "I"), pw_of(J_T, s + q, "J"))
                    for middle in (pw_of(J_T, q, "J"), pw_of(P, q, "P")):
                        left = product(pw_of(I_T, p + r, "I"), middle)
                        if intersect(left, right) != rhs:
                            return False, count, f"p={p} q={q} r={r} s={s}"
                        count += 1
    return True, count, ""


def dstar_checks(I, L):
    """Laws of d*: I ⊆ m d*(I); L ⊆ I gives d*(L) ⊆ d*(I); Leibniz; powers.

    Returns a list of (law, holds).
    """
    m = I.ring.maximal_ideal()
    D = partial_star(I)
    out = [("I in m d*(I)", contains(product(m, D), I))]
    if contains(I, L):
        out.append(("monotone", contains(D, partial_star(L))))
    leibniz = ideal_sum(product(D, L), product(I, partial_star(L)))
    out.append(("Leibniz", partial_star(product(I, L)) == leibniz))
    for s in (2, 3):
        out.append((f"power {s}", partial_star(power(I, s)) == product(D, power(I, s - 1))))
    return out


def golod_closure_checks(I, s_values=(2, 3)):
    """Powers, their closures, symbolic powers and saturations are *strongly Golod."""
    m = I.ring.maximal_ideal()
    out = []
    for s in s_values:
        Is = power(I, s)
        for label, K in (("power", Is), ("integral closure", integral_closure(Is)),
                         ("symbolic power", symbolic_power(I, s)), ("saturation", saturate(Is, m))):
            if K.is_unit:
                out.append((f"{label} {s}", True))
                continue
            out.append((f"{label} {s}", is_star_strongly_golod(K).is_star_strongly_golod))
    return out


def _single_corpus(seed, count, max_vars, max_gens, max_exp):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vars)
        R = PolyRing(tuple(f"x{k}" for k in range(1, n + 1)))
        out.append(random_ideal(rng, R, max_gens, max_exp))
    return out


def _theorem_inputs(suite, rng, max_vars, max_gens, max_exp, char):
    """Draw one input pair satisfying the theorem's standing hypotheses."""
    I, J = random_pair(rng, max_vars, max_gens, max_exp, char)
    if suite == "thm63":
        k = rng.randint(1, I.nvars)
        I = _variables(I.ring, k)
    elif suite == "cor65":
        I, J = power(I, 2), power(J, 2)
    elif suite == "c_fold":
        I, J = power(I.ring.maximal_ideal(), 2), power(J.ring.maximal_ideal(), 2)
    return I, J


def _variables(ring, k):
    return minimalize([ring.var(j) for j in range(k)], ring)


def run_suite(suite, seed=0, count=10, s_max=2, char=0, max_vars=2, max_gens=3, max_exp=3):
    """Run a suite; returns the list of SuiteCase in corpus order."""
    if suite not in SUITE_IDS:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(SUITE_IDS)}")
    rng = random.Random(seed)
    cases = []
    if suite in ("dstar", "golod"):
        ideals = _single_corpus(seed, count, max_vars, max_gens, max_exp)
        for k, I in enumerate(ideals):
            if suite == "dstar":
                L = product(I, random_ideal(rng, I.ring, max_gens, max_exp))
                checks = dstar_checks(I, L)
                inputs = f"I={I.text()}; L={L.text()}"
            else:
                checks = golod_closure_checks(I)
                inputs = f"I={I.text()}"
            bad = [name for name, good in checks if not good]
            cases.append(SuiteCase(k, inputs, not bad, len(checks), note=", ".join(bad)))
        return cases
    for k in range(count):
        I, J = _theorem_inputs(suite, rng, max_vars, max_gens, max_exp, char)
        inputs = f"I={I.text()} in {I.ring}; J={J.text()} in {J.ring}"
        if suite == "identities":
            ok, n, note = _identity_checks(I, J)
            cases.append(SuiteCase(k, inputs, ok, n, note=note))
            continue
        try:
            reports = verify_theorem(suite, I, J, s_max, char)
        except PreconditionError as exc:
            cases.append(SuiteCase(k, inputs, True, 0, note=f"skipped: {exc}"))
            continue
        cases.append(SuiteCase(k, inputs, all(r.ok for r in reports), len(reports), reports))
    return cases
