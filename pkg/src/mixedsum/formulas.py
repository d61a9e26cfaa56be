"""Closed-form and asymptotic formulas for powers of a mixed sum P = I + J.

Every formula is evaluated from per-power invariant tables of I and J alone
and compared with a direct computation of P^s on the tensor ring.

Conventions: pd and reg of I^s are those of the ideal; depth and reg of the
quotient R/I^s are derived (depth R/I^s = n - pd I^s - 1, reg R/I^s =
reg I^s - 1). For the zeroth power, I^0 = R has pd 0, reg 0 and depth n.
"""

import random
from dataclasses import dataclass, field

from .betti import betti_table, invariants, module_invariants
from .calculus import is_star_strongly_golod
from .errors import CapExceeded, PreconditionError
from .monomial import (MonomialIdeal, PolyRing, degree, mixed_embed, mixed_embed_many,
                       minimalize, power, product, unit_ideal)
from .resolution import linearity_defect

THEOREM_IDS = ("thm12", "prop51", "prop52", "thm58", "thm59", "cor517", "thm62",
               "thm63", "cor65", "prop310", "c_fold", "splitting")

THEOREM_HELP = {
    "thm12": "depth and reg of T/P^s from those of R/I^k and S/J^k",
    "prop51": "pd and reg of P^s from those of I^k and J^k",
    "prop52": "special cases: pd J^k constant, or reg J^k = k",
    "thm58": "asymptotic pd of P^s for s >= pstab(I) + pstab(J)",
    "thm59": "asymptotic reg of P^s for s >= rstab(I) + rstab(J)",
    "cor517": "depth and reg of I^(s-1)/I^s from I^(s-1) and I^s",
    "thm62": "lind bound for P^s, an equality for doubly small type",
    "thm63": "lind of P^s when I is generated by variables",
    "cor65": "asymptotic lind of P^s for s >= lstab(I) + lstab(J)",
    "prop310": "pd, reg and lind of P itself",
    "c_fold": "lind of powers of a c-fold mixed sum is c - 1",
    "splitting": "Betti splitting I^r P^s = I^(r+1) P^(s-1) + I^r J^s",
}


# -- power tables --------------------------------------------------------------

@dataclass
class PowerInvariantTable:
    """Invariants of I^s for s = 1..s_max (``truncated`` marks a cap hit)."""

    ideal: MonomialIdeal
    field_char: int
    records: dict = field(default_factory=dict)  # s -> InvariantRecord
    linds: dict = field(default_factory=dict)    # s -> lind of the ideal I^s
    truncated: int = None

    @property
    def s_max(self):
        return max(self.records, default=0)

    @property
    def nvars(self):
        return self.ideal.nvars

    def _need(self, s, lind=False):
        src = self.linds if lind else self.records
        if s not in src:
            kind = "lind" if lind else "invariants"
            raise PreconditionError(f"table has no {kind} entry for power {s}")

    def pd(self, s):
        if s == 0:
            return 0
        self._need(s)
        return self.records[s].pd_ideal

    def reg(self, s):
        if s == 0:
            return 0
        self._need(s)
        return self.records[s].reg_ideal

    def depth_ideal(self, s):
        if s == 0:
            return self.nvars
        self._need(s)
        return self.records[s].depth_ideal

    def depth_quotient(self, s):
        self._need(s)
        return self.records[s].depth_quotient

    def reg_quotient(self, s):
        self._need(s)
        return self.records[s].reg_quotient

    def lind(self, s):
        self._need(s, lind=True)
        return self.linds[s]

    def series(self, name):
        get = getattr(self, name)
        keys = self.linds if name == "lind" else self.records
        return [get(s) for s in sorted(keys)]

    def to_json(self):
        return {
            "schema": 1,
            "ideal": self.ideal.text(),
            "ring": list(self.ideal.ring.vars),
            "char": self.field_char,
            "truncated": self.truncated,
            "powers": [
                {"s": s, "pd": r.pd_ideal, "reg": r.reg_ideal, "depth_quotient": r.depth_quotient,
                 "reg_quotient": r.reg_quotient, "lind": self.linds.get(s)}
                for s, r in sorted(self.records.items())
            ],
        }

    @classmethod
    def from_json(cls, data, ideal):
        from .betti import InvariantRecord
        t = cls(ideal, data["char"], truncated=data.get("truncated"))
        for row in data["powers"]:
            t.records[row["s"]] = InvariantRecord(row["pd"], row["pd"] + 1, row["reg"],
                                                  row["reg"] - 1, row["depth_quotient"])
            if row.get("lind") is not None:
                t.linds[row["s"]] = row["lind"]
        return t


def power_table(I, s_max, char=None, with_lind=False):
    """Invariants of I, I^2, ..., I^s_max; stops early (marking it) on a cap."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("power table needs a nonzero proper ideal")
    char = I.ring.char if char is None else char
    t = PowerInvariantTable(I, char)
    for s in range(1, s_max + 1):
        try:
            Is = power(I, s)
            t.records[s] = invariants(Is, char)
            if with_lind:
                t.linds[s] = linearity_defect(Is, None, char)
        except CapExceeded:
            t.records.pop(s, None)
            t.truncated = s
            break
    return t


# -- stabilization -------------------------------------------------------------

def _tail_start(values):
    """Least 1-based index r with values[r-1:] constant."""
    r = len(values)
    while r > 1 and values[r - 2] == values[-1]:
        r -= 1
    return r


@dataclass
class AsymptoticProfile:
    window: int
    pd_limit: int
    pd_max: int
    pstab: int
    pstab_confirmed: bool
    depth_limit: int
    dstab: int
    reg_slope: int
    reg_intercept: int
    rstab: int
    rstab_confirmed: bool
    reg_values: list
    lind_limit: int = None
    lind_max: int = None
    lstab: int = None
    lstab_confirmed: bool = None

    def g_star(self, partner_slope):
        """max over i <= rstab of reg I^i - b*i for the partner slope b."""
        return max(self.reg_values[i - 1] - partner_slope * i for i in range(1, self.rstab + 1))

    @property
    def confirmed(self):
        flags = [self.pstab_confirmed, self.rstab_confirmed]
        if self.lstab_confirmed is not None:
            flags.append(self.lstab_confirmed)
        return all(flags)

    def to_json(self):
        out = dict(self.__dict__)
        out["schema"] = 1
        return out


def stabilization_detect(table, window=3):
    """Empirical stability indices from a power table (labeled estimates).

    An index r is confirmed when the constant tail r..s_max has at least
    ``window`` entries; otherwise the tail runs into s_max unconfirmed.
    """
    n = table.s_max
    if n < 2:
        raise PreconditionError("stabilization needs at least two powers")
    pds = table.series("pd")
    depths = [table.depth_quotient(s) for s in range(1, n + 1)]
    regs = table.series("reg")
    pstab = _tail_start(pds)
    dstab = _tail_start(depths)
    a = regs[-1] - regs[-2]
    resid = [r - a * (k + 1) for k, r in enumerate(regs)]
    rstab = _tail_start(resid)
    prof = AsymptoticProfile(
        window=window, pd_limit=pds[-1], pd_max=max(pds), pstab=pstab,
        pstab_confirmed=n - pstab + 1 >= window, depth_limit=depths[-1], dstab=dstab,
        reg_slope=a, reg_intercept=resid[-1], rstab=rstab, rstab_confirmed=n - rstab + 1 >= window,
        reg_values=regs)
    if table.linds:
        ls = [table.lind(s) for s in range(1, max(table.linds) + 1)]
        lstab = _tail_start(ls)
        prof.lind_limit, prof.lind_max, prof.lstab = ls[-1], max(ls), lstab
        prof.lstab_confirmed = len(ls) - lstab + 1 >= window
    return prof


# -- formula evaluation --------------------------------------------------------

def _opt(op, candidates):
    """op (min or max) over labeled candidates; returns (value, terms)."""
    value = op(v for _, v in candidates)
    return value, [{"term": label, "value": v} for label, v in candidates]


def _two_range(s, first, second, op):
    cands = [(f"i={i}", first(i)) for i in range(1, s)]
    cands += [(f"j={j}", second(j)) for j in range(1, s + 1)]
    return _opt(op, cands)


def formula_eval(formula_id, tI, tJ=None, s=1, params=None):
    """Evaluate one formula at power s; returns (value, terms).

    Pure arithmetic over table entries. When s = 1 the i-range [1, s-1]
    of the two-range formulas is empty and only the j-range is used.
    """
    params = params or {}
    if formula_id == "thm12_depth":
        return _two_range(s, lambda i: tI.depth_quotient(s - i) + tJ.depth_quotient(i) + 1,
                          lambda j: tI.depth_quotient(s - j + 1) + tJ.depth_quotient(j), min)
    if formula_id == "thm12_reg":
        return _two_range(s, lambda i: tI.reg_quotient(s - i) + tJ.reg_quotient(i) + 1,
                          lambda j: tI.reg_quotient(s - j + 1) + tJ.reg_quotient(j), max)
    if formula_id == "prop51_pd":
        return _two_range(s, lambda i: tI.pd(s - i) + tJ.pd(i),
                          lambda j: tI.pd(s - j + 1) + tJ.pd(j) + 1, max)
    if formula_id == "prop51_reg":
        return _two_range(s, lambda i: tI.reg(s - i) + tJ.reg(i),
                          lambda j: tI.reg(s - j + 1) + tJ.reg(j) - 1, max)
    if formula_id == "prop52_pd":
        v, terms = _opt(max, [(f"pd I^{i}", tI.pd(i)) for i in range(1, s + 1)])
        return v + tJ.pd(1) + 1, terms
    if formula_id == "prop52_reg":
        v, terms = _opt(max, [(f"reg I^{i} - {i}", tI.reg(i) - i) for i in range(1, s + 1)])
        return v + s, terms
    if formula_id == "thm62_lind":
        return _two_range(s, lambda i: tI.lind(s - i) + tJ.lind(i),
                          lambda j: tI.lind(s - j + 1) + tJ.lind(j) + 1, max)
    if formula_id == "thm63_lind":
        return _opt(max, [(f"lind J^{i}", tJ.lind(i)) for i in range(1, s + 1)])
    if formula_id in ("thm58_pd", "cor65_lind"):
        pI, pJ = params["profile_I"], params["profile_J"]
        if formula_id == "thm58_pd":
            limI, maxI, limJ, maxJ = pI.pd_limit, pI.pd_max, pJ.pd_limit, pJ.pd_max
        else:
            limI, maxI, limJ, maxJ = pI.lind_limit, pI.lind_max, pJ.lind_limit, pJ.lind_max
        return _opt(max, [("lim I + max J + 1", limI + maxJ + 1), ("max I + lim J + 1", maxI + limJ + 1)])
    if formula_id == "thm59_reg":
        pI, pJ = params["profile_I"], params["profile_J"]
        if pI.reg_slope < pJ.reg_slope:
            pI, pJ = pJ, pI
        a, g, b, h = pI.reg_slope, pI.reg_intercept, pJ.reg_slope, pJ.reg_intercept
        g_star, h_star = pI.g_star(b), pJ.g_star(a)
        v, terms = _opt(max, [("a(s+1)+g+h*", a * (s + 1) + g + h_star),
                              ("b(s+1)+g*+h", b * (s + 1) + g_star + h)])
        return v - 1, terms
    if formula_id == "cor517_depth":
        return _opt(min, [(f"depth I^{s - 1}", tI.depth_ideal(s - 1)), (f"depth I^{s} - 1", tI.depth_ideal(s) - 1)])
    if formula_id == "cor517_reg":
        return _opt(max, [(f"reg I^{s - 1}", tI.reg(s - 1)), (f"reg I^{s} - 1", tI.reg(s) - 1)])
    if formula_id == "prop310_pd":
        return tI.pd(1) + tJ.pd(1) + 1, [{"term": "pd I + pd J + 1", "value": tI.pd(1) + tJ.pd(1) + 1}]
    if formula_id == "prop310_reg":
        return tI.reg(1) + tJ.reg(1) - 1, [{"term": "reg I + reg J - 1", "value": tI.reg(1) + tJ.reg(1) - 1}]
    if formula_id == "prop310_lind":
        if params.get("quotient_I_koszul"):
            return tJ.lind(1), [{"term": "lind J", "value": tJ.lind(1)}]
        return tI.lind(1) + tJ.lind(1) + 1, [{"term": "lind I + lind J + 1", "value": tI.lind(1) + tJ.lind(1) + 1}]
    if formula_id == "c_fold_lind":
        c = params["c"]
        return c - 1, [{"term": "c - 1", "value": c - 1}]
    raise KeyError(f"unknown formula id {formula_id!r}")


# -- reports -------------------------------------------------------------------

@dataclass
class FormulaReport:
    theorem: str
    s: int
    quantity: str
    formula_value: int
    direct_value: int
    relation: str = "="
    verdict: str = None
    terms: list = field(default_factory=list)
    inputs: str = ""
    note: str = ""

    def __post_init__(self):
        if self.verdict is None:
            if self.formula_value is None or self.direct_value is None:
                self.verdict = "skipped"
            elif self.relation == "=":
                self.verdict = "equal" if self.formula_value == self.direct_value else "not_equal"
            else:  # direct <= formula
                self.verdict = "holds" if self.direct_value <= self.formula_value else "violated"

    @property
    def ok(self):
        return self.verdict in ("equal", "holds", "skipped")

    def to_json(self):
        return {"theorem": self.theorem, "s": self.s, "quantity": self.quantity,
                "formula_value": self.formula_value, "direct_value": self.direct_value,
                "relation": self.relation, "verdict": self.verdict, "terms": self.terms,
                "inputs": self.inputs, "note": self.note}


class _Direct:
    """Memoized direct invariants of ideals on the tensor ring."""

    def __init__(self, char):
        self.char = char
        self.inv = {}
        self.linds = {}
        self.betti = {}

    def invariants(self, K):
        if K.gens not in self.inv:
            self.inv[K.gens] = invariants(K, self.char)
        return self.inv[K.gens]

    def lind(self, K):
        if K.gens not in self.linds:
            self.linds[K.gens] = linearity_defect(K, None, self.char)
        return self.linds[K.gens]

    def totals(self, K):
        if K.gens not in self.betti:
            self.betti[K.gens] = betti_table(K, self.char).totals()
        return self.betti[K.gens]


def _is_linear(I):
    return all(degree(g) == 1 for g in I.gens)


def _doubly_hypothesis(I):
    """A checkable sufficient condition for doubly small type: d*(I)^2 ⊆ I."""
    return is_star_strongly_golod(I).is_star_strongly_golod


def _profiles_with_sum(tI, tJ, window, kind):
    pI, pJ = stabilization_detect(tI, window), stabilization_detect(tJ, window)
    index = {"pd": "pstab", "reg": "rstab", "lind": "lstab"}[kind]
    return pI, pJ, getattr(pI, index) + getattr(pJ, index)


def verify_theorem(theorem_id, I, J, s_max=3, char=None, window=3, tables=None):
    """Compare one theorem's formulas with direct computation on T = R (x) S.

    ``I`` lives in R and ``J`` in S (separate rings). ``tables`` may supply
    precomputed power tables ``(tI, tJ)``; they are extended as needed.
    Returns a list of FormulaReport.
    """
    if theorem_id not in THEOREM_IDS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    if theorem_id == "c_fold":
        return verify_c_fold([I, J], s_max, char)
    R, S = I.ring, J.ring
    char = R.char if char is None else char
    T, I_T, J_T, P = mixed_embed(R, S, I, J)
    need_lind = theorem_id in ("thm62", "thm63", "cor65", "prop310")
    asym = theorem_id in ("thm58", "thm59", "cor65")
    # asymptotic checks read the tables one step past the largest tested power
    table_max = s_max + 1 if asym else s_max
    if tables is not None:
        tI, tJ = tables
    else:
        tI = power_table(I, table_max, char, need_lind)
        tJ = power_table(J, table_max, char, need_lind)
    direct = _Direct(char)
    inputs = f"I={I.text()} in {R}; J={J.text()} in {S}"
    out = []

    def rep(s, quantity, fid, dval, relation="=", params=None, note=""):
        fval, terms = formula_eval(fid, tI, tJ, s, params)
        out.append(FormulaReport(theorem_id, s, quantity, fval, dval, relation, None, terms, inputs, note))

    if theorem_id == "thm12":
        for s in range(1, s_max + 1):
            d = direct.invariants(power(P, s))
            rep(s, "depth T/P^s", "thm12_depth", d.depth_quotient)
            rep(s, "reg T/P^s", "thm12_reg", d.reg_quotient)
    elif theorem_id == "prop51":
        for s in range(1, s_max + 1):
            d = direct.invariants(power(P, s))
            rep(s, "pd P^s", "prop51_pd", d.pd_ideal)
            rep(s, "reg P^s", "prop51_reg", d.reg_ideal)
    elif theorem_id == "prop52":
        pd_const = len(set(tJ.series("pd"))) == 1
        reg_linear = all(tJ.reg(k) == k for k in range(1, tJ.s_max + 1))
        for s in range(1, s_max + 1):
            d = direct.invariants(power(P, s))
            if pd_const:
                rep(s, "pd P^s", "prop52_pd", d.pd_ideal, note="pd J^k constant on the table")
            else:
                out.append(FormulaReport(theorem_id, s, "pd P^s", None, d.pd_ideal, inputs=inputs,
                                         note="hypothesis not met: pd J^k not constant"))
            if reg_linear:
                rep(s, "reg P^s", "prop52_reg", d.reg_ideal, note="reg J^k = k on the table")
            else:
                out.append(FormulaReport(theorem_id, s, "reg P^s", None, d.reg_ideal, inputs=inputs,
                                         note="hypothesis not met: reg J^k != k"))
    elif theorem_id in ("thm58", "thm59"):
        kind = "pd" if theorem_id == "thm58" else "reg"
        pI, pJ, start = _profiles_with_sum(tI, tJ, window, kind)
        fid = "thm58_pd" if kind == "pd" else "thm59_reg"
        note = "stability indices are estimates" + ("" if pI.confirmed and pJ.confirmed else " (unconfirmed)")
        for s in range(start, s_max + 1):
            d = direct.invariants(power(P, s))
            rep(s, f"{kind} P^s", fid, d.pd_ideal if kind == "pd" else d.reg_ideal,
                params={"profile_I": pI, "profile_J": pJ}, note=note)
    elif theorem_id == "cor517":
        for label, K, t in (("I", I, tI), ("J", J, tJ)):
            for s in range(1, s_max + 1):
                upper = unit_ideal(K.ring) if s == 1 else power(K, s - 1)
                m = module_invariants(upper, power(K, s), char)
                fval, terms = formula_eval("cor517_depth", t, None, s)
                out.append(FormulaReport(theorem_id, s, f"depth {label}^{s - 1}/{label}^{s}", fval,
                                         m["depth"], "=", None, terms, inputs))
                fval, terms = formula_eval("cor517_reg", t, None, s)
                out.append(FormulaReport(theorem_id, s, f"reg {label}^{s - 1}/{label}^{s}", fval,
                                         m["reg"], "=", None, terms, inputs))
    elif theorem_id == "thm62":
        equality = _doubly_hypothesis(I) and _doubly_hypothesis(J)
        note = "both sides *strongly Golod, so doubly small type" if equality else "inequality only"
        for s in range(1, s_max + 1):
            Ps = power(P, s)
            rep(s, "lind P^s", "thm62_lind", direct.lind(Ps), "=" if equality else "<=", note=note)
            lower = max(tI.lind(s), tJ.lind(s))
            out.append(FormulaReport(theorem_id, s, "max(lind I^s, lind J^s) <= lind P^s",
                                     direct.lind(Ps), lower, "<=", None, [], inputs, "retract lower bound"))
    elif theorem_id == "thm63":
        if not _is_linear(I):
            raise PreconditionError("thm63 needs I generated by variables")
        for s in range(1, s_max + 1):
            rep(s, "lind P^s", "thm63_lind", direct.lind(power(P, s)))
    elif theorem_id == "cor65":
        equality = _doubly_hypothesis(I) and _doubly_hypothesis(J)
        if not equality:
            raise PreconditionError("cor65 needs both ideals of doubly small type (*strongly Golod here)")
        pI, pJ, start = _profiles_with_sum(tI, tJ, window, "lind")
        for s in range(start, s_max + 1):
            rep(s, "lind P^s", "cor65_lind", direct.lind(power(P, s)),
                params={"profile_I": pI, "profile_J": pJ}, note="stability indices are estimates")
    elif theorem_id == "prop310":
        d = direct.invariants(P)
        rep(1, "pd P", "prop310_pd", d.pd_ideal)
        rep(1, "reg P", "prop310_reg", d.reg_ideal)
        qI = linearity_defect(unit_ideal(R), I, char)
        qJ = linearity_defect(unit_ideal(S), J, char)
        if qI == 0:
            rep(1, "lind P", "prop310_lind", direct.lind(P), params={"quotient_I_koszul": True},
                note="R/I Koszul")
        elif qJ >= 1:
            rep(1, "lind P", "prop310_lind", direct.lind(P), note="lind R/I, lind S/J >= 1")
        else:
            out.append(FormulaReport(theorem_id, 1, "lind P", None, direct.lind(P), inputs=inputs,
                                     note="hypothesis not met"))
        qP = linearity_defect(unit_ideal(T), P, char)
        out.append(FormulaReport(theorem_id, 1, "lind T/P", qI + qJ, qP, "=", None,
                                 [{"term": "lind R/I + lind S/J", "value": qI + qJ}], inputs))
    elif theorem_id == "splitting":
        out.extend(splitting_reports(I_T, J_T, P, s_max, direct, inputs))
    return out


def splitting_reports(I_T, J_T, P, s_max, direct, inputs="", r_values=(0, 1)):
    """beta_i(I^r P^s) = beta_i(I^(r+1) P^(s-1)) + beta_i(I^r J^s) + beta_(i-1)(I^(r+1) J^s)."""
    out = []
    for r in r_values:
        for s in range(1, s_max + 1):
            Ir, Ir1 = power(I_T, r), power(I_T, r + 1)
            whole = product(Ir, power(P, s))
            left = product(Ir1, power(P, s - 1))
            right = product(Ir, power(J_T, s))
            meet = product(Ir1, power(J_T, s))
            bw, bl, br, bm = (direct.totals(K) for K in (whole, left, right, meet))
            top = max(max(bw, default=0), max(bl, default=0), max(br, default=0), max(bm, default=0) + 1)
            for i in range(top + 1):
                rhs = bl.get(i, 0) + br.get(i, 0) + bm.get(i - 1, 0)
                out.append(FormulaReport("splitting", s, f"beta_{i}(I^{r} P^{s})", rhs, bw.get(i, 0),
                                         "=", None, [{"term": "left", "value": bl.get(i, 0)},
                                                     {"term": "right", "value": br.get(i, 0)},
                                                     {"term": "meet", "value": bm.get(i - 1, 0)}],
                                         inputs, f"r={r}"))
    return out


def verify_c_fold(ideals, s_max=2, char=None):
    """lind of the s-th power of a c-fold mixed sum equals c - 1.

    Each summand must lie in the square of its maximal ideal and have Koszul
    powers; the latter is checked (lind 0) up to s_max.
    """
    c = len(ideals)
    char = ideals[0].ring.char if char is None else char
    for K in ideals:
        if any(degree(g) < 2 for g in K.gens):
            raise PreconditionError("c-fold summands must lie in the square of the maximal ideal")
        for s in range(1, s_max + 1):
            if linearity_defect(power(K, s), None, char) != 0:
                raise PreconditionError(f"summand {K.text()} has a non-Koszul power {s}")
    T, _, P = mixed_embed_many(ideals)
    inputs = "; ".join(f"{K.text()} in {K.ring}" for K in ideals)
    out = []
    for s in range(1, s_max + 1):
        fval, terms = formula_eval("c_fold_lind", None, None, s, {"c": c})
        out.append(FormulaReport("c_fold", s, "lind P^s", fval, linearity_defect(power(P, s), None, char),
                                 "=", None, terms, inputs))
    return out


@dataclass
class ConstantDepthReport:
    depth_I: list
    depth_J: list
    depth_P: list
    implication: bool
    converse: bool = None
    dstab_bound: bool = None

    @property
    def ok(self):
        return self.implication and self.converse is not False and self.dstab_bound is not False

    def to_json(self):
        out = dict(self.__dict__)
        out["schema"] = 1
        return out


def constant_depth_check(I, J, s_max=3, char=None):
    """Constant depth functions: I, J constant implies P constant; converse if squarefree."""
    char = I.ring.char if char is None else char
    T, _, _, P = mixed_embed(I.ring, J.ring, I, J)
    dI = [invariants(power(I, s), char).depth_quotient for s in range(1, s_max + 1)]
    dJ = [invariants(power(J, s), char).depth_quotient for s in range(1, s_max + 1)]
    dP = [invariants(power(P, s), char).depth_quotient for s in range(1, s_max + 1)]
    const = [len(set(d)) == 1 for d in (dI, dJ, dP)]
    report = ConstantDepthReport(dI, dJ, dP, implication=not (const[0] and const[1]) or const[2])
    if I.is_squarefree() and J.is_squarefree():
        report.converse = not const[2] or (const[0] and const[1])
    report.dstab_bound = _tail_start(dP) <= _tail_start(dI) + _tail_start(dJ)
    return report


# -- random corpora ------------------------------------------------------------

def random_ideal(rng, ring, max_gens=3, max_exp=3, min_degree=1):
    """A random nonzero proper monomial ideal of ``ring``.

    The number k of minimal generators is drawn first and generators are
    redrawn until exactly k survive minimalization (k is lowered when the
    exponent box is too small to allow it).
    """
    n = ring.nvars
    k = rng.randint(1, max_gens)
    for attempt in range(200):
        gens = []
        while len(gens) < k:
            e = tuple(rng.randint(0, max_exp) for _ in range(n))
            if sum(e) >= max(1, min_degree):
                gens.append(e)
        I = minimalize(gens, ring)
        if len(I.gens) == k:
            return I
        if attempt % 20 == 19 and k > 1:
            k -= 1
    return I


def random_pair(rng, max_vars=2, max_gens=3, max_exp=3, char=0, min_degree=1):
    """Random (I, J) in separate rings k[x...] and k[y...]."""
    nR = rng.randint(1, max_vars)
    nS = rng.randint(1, max_vars)
    R = PolyRing(tuple(f"x{k}" for k in range(1, nR + 1)), char)
    S = PolyRing(tuple(f"y{k}" for k in range(1, nS + 1)), char)
    return (random_ideal(rng, R, max_gens, max_exp, min_degree),
            random_ideal(rng, S, max_gens, max_exp, min_degree))


def corpus(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_pair(rng, **kwargs) for _ in range(count)]
