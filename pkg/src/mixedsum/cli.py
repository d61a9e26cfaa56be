"""Command line interface: ``mixedsum <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a resource
cap was hit.
"""

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from .betti import betti_table, invariants, quotient_betti
from .calculus import integral_closure, is_star_strongly_golod, symbolic_power
from .caps import set_caps
from .certificates import lcm_map, verify_lcm_property
from .errors import CapExceeded, MixedSumError, ParseError, PreconditionError
from .formulas import (THEOREM_HELP, THEOREM_IDS, PowerInvariantTable, power_table,
                       stabilization_detect, verify_c_fold, verify_theorem)
from .monomial import (format_monomial, mixed_embed, parse_ideal, parse_ring, power, saturate,
                       unit_ideal)
from .resolution import linearity_defect
from .suites import SUITE_IDS, run_suite

CACHE_ENV = "MIXEDSUM_CACHE_DIR"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


# -- power table cache -----------------------------------------------------------

class TableCache:
    """PowerInvariantTable JSON files keyed by (ideal digest, characteristic)."""

    def __init__(self, root):
        self.root = Path(root) if root else None

    def _path(self, ideal, char):
        key = hashlib.sha256(f"{ideal.digest()}|{char}".encode()).hexdigest()[:32]
        return self.root / f"{key}.json"

    def load(self, ideal, char):
        if self.root is None:
            return None
        path = self._path(ideal, char)
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        if data.get("ring") != list(ideal.ring.vars) or data.get("ideal") != ideal.text():
            return None
        return PowerInvariantTable.from_json(data, ideal)

    def store(self, table):
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(table.ideal, table.field_char)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(table.to_json(), indent=2))
        tmp.replace(path)

    def table(self, ideal, s_max, char, with_lind=False):
        """A table covering 1..s_max (with lind if asked), from cache when possible."""
        t = self.load(ideal, char)
        covered = t is not None and (t.s_max >= s_max or t.truncated is not None)
        if covered and with_lind:
            covered = all(s in t.linds for s in t.records if s <= s_max)
        if not covered:
            t = power_table(ideal, s_max, char, with_lind)
            self.store(t)
        # a larger cached table would move the stability estimates: cut it back
        out = PowerInvariantTable(ideal, char, truncated=t.truncated if t.truncated and t.truncated <= s_max else None)
        out.records = {s: r for s, r in t.records.items() if s <= s_max}
        if with_lind:
            out.linds = {s: v for s, v in t.linds.items() if s <= s_max}
        return out


# -- argument handling -----------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-R", dest="ring_r", help="variables of R, comma separated (e.g. \"x,y\")")
    p.add_argument("-S", dest="ring_s", help="variables of S, disjoint from R")
    p.add_argument("-I", dest="ideal_i", help="generators of I in R (e.g. \"x^2, x*y\")")
    p.add_argument("-J", dest="ideal_j", help="generators of J in S")
    p.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime (default 0)")
    p.add_argument("--smax", type=int, default=3, help="largest power to examine (default 3)")
    p.add_argument("--lind", action="store_true", help="also compute linearity defects")
    p.add_argument("--json", action="store_true", help="emit JSON instead of tables")
    p.add_argument("--cache-dir", default=None,
                   help=f"directory for cached power tables (default: ${CACHE_ENV}, else no cache)")
    for cap in ("taylor-gens", "lattice-size", "lattice-gens", "subset-verify", "closure-box"):
        p.add_argument(f"--cap-{cap}", type=int, default=None, metavar="N", help=f"resource cap {cap}")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="mixedsum", description="Betti tables and invariants of monomial ideals and their mixed sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table of I (or of P = I + J)")
    p.add_argument("--quotient", action="store_true", help="table of the quotient ring instead")
    sub.add_parser("invariants", parents=[common], help="pd, depth and reg of I (or P)")
    p = sub.add_parser("powers", parents=[common], help="invariants of I^s for s <= smax")
    p.add_argument("--window", type=int, default=3, help="tail length that confirms a stability index")
    p = sub.add_parser("lind", parents=[common], help="linearity defect of I (or P)")
    p.add_argument("--quotient", action="store_true", help="of the quotient ring instead")
    sub.add_parser("golod", parents=[common], help="test d*(I)^2 ⊆ I")
    p = sub.add_parser("closure", parents=[common], help="integral closure, symbolic power or saturation")
    p.add_argument("kind", choices=("integral", "symbolic", "saturation"))
    p.add_argument("--power", type=int, default=1, help="apply to I^s (default 1)")
    p = sub.add_parser("certificate", parents=[common], help="LCM map certificates")
    p.add_argument("kind", choices=("lcm-map",))
    p.add_argument("--target", help="target ideal in R; default I^(s-1) when --power s is given")
    p.add_argument("--power", type=int, default=None, help="certify I^s ⊆ I^(s-1)")

    ids = "\n".join(f"  {k:<10} {THEOREM_HELP[k]}" for k in THEOREM_IDS)
    p = sub.add_parser("verify", parents=[common], help="compare a theorem's formulas with direct values",
                       description="Theorem ids:\n" + ids, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("theorem", choices=THEOREM_IDS, metavar="theorem-id")
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--summand", action="append", default=[], metavar="VARS:IDEAL",
                   help="extra summand for c_fold, e.g. \"z,w:z^2,z*w,w^2\" (repeatable)")

    p = sub.add_parser("random-suite", parents=[common], help="run a seeded random suite",
                       description="Suite ids: " + ", ".join(SUITE_IDS))
    p.add_argument("suite", choices=SUITE_IDS, metavar="suite-id")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-vars", type=int, default=2, choices=range(1, 5))
    p.add_argument("--max-gens", type=int, default=3, choices=range(1, 6))
    p.add_argument("--max-exp", type=int, default=3, choices=range(1, 4))
    return parser


def _ring_ideal(args, which):
    ring_text, ideal_text = (args.ring_r, args.ideal_i) if which == "R" else (args.ring_s, args.ideal_j)
    flag = "-R/-I" if which == "R" else "-S/-J"
    if ring_text is None or ideal_text is None:
        raise ParseError(f"{flag} are required")
    ring = parse_ring(ring_text, args.char)
    return ring, parse_ideal(ideal_text, ring)


def _subject(args):
    """I alone, or P = I + J on the tensor ring when -S/-J are given."""
    R, I = _ring_ideal(args, "R")
    if args.ring_s is None and args.ideal_j is None:
        return I
    S, J = _ring_ideal(args, "S")
    return mixed_embed(R, S, I, J)[3]


# -- output ------------------------------------------------------------------------

def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _align(rows):
    widths = [max(len(str(r[k])) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _report_rows(reports):
    rows = [("theorem", "s", "quantity", "formula", "direct", "rel", "verdict")]
    for r in reports:
        rows.append((r.theorem, r.s, r.quantity, _show(r.formula_value), _show(r.direct_value),
                     r.relation, r.verdict))
    return _align(rows)


def _show(v):
    return "-" if v is None else v


# -- commands ----------------------------------------------------------------------

def cmd_betti(args, cache):
    K = _subject(args)
    t = (quotient_betti(K, args.char) if args.quotient else betti_table(K, args.char)).coarsen()
    data = t.to_json()
    data.update(ideal=K.text(), ring=list(K.ring.vars), quotient=args.quotient)
    label = f"R/({K.text()})" if args.quotient else f"({K.text()})"
    _emit(args, data, f"Betti table of {label} over {K.ring}\n{t}")
    return EXIT_OK


def cmd_invariants(args, cache):
    K = _subject(args)
    r = invariants(K, args.char)
    data = {"schema": 1, "ideal": K.text(), "ring": list(K.ring.vars), "char": args.char,
            "pd_ideal": r.pd_ideal, "reg_ideal": r.reg_ideal, "depth_ideal": r.depth_ideal,
            "pd_quotient": r.pd_quotient, "reg_quotient": r.reg_quotient, "depth_quotient": r.depth_quotient}
    if args.lind:
        data["lind_ideal"] = linearity_defect(K, None, args.char)
    rows = [("", "ideal", "quotient"), ("pd", r.pd_ideal, r.pd_quotient),
            ("depth", r.depth_ideal, r.depth_quotient), ("reg", r.reg_ideal, r.reg_quotient)]
    if args.lind:
        rows.append(("lind", data["lind_ideal"], "-"))
    _emit(args, data, _align(rows))
    return EXIT_OK


def cmd_powers(args, cache):
    R, I = _ring_ideal(args, "R")
    t = cache.table(I, args.smax, args.char, args.lind)
    data = t.to_json()
    rows = [("s", "pd", "reg", "depth R/I^s", "reg R/I^s") + (("lind",) if args.lind else ())]
    for s in sorted(t.records):
        r = t.records[s]
        row = (s, r.pd_ideal, r.reg_ideal, r.depth_quotient, r.reg_quotient)
        rows.append(row + ((t.linds.get(s, "-"),) if args.lind else ()))
    text = _align(rows)
    if t.truncated is not None:
        text += f"\n(stopped at power {t.truncated}: resource cap)"
    if t.s_max >= 2:
        prof = stabilization_detect(t, args.window)
        data["profile"] = prof.to_json()
        text += (f"\nestimates: pstab {prof.pstab}, dstab {prof.dstab}, rstab {prof.rstab}"
                 f" (reg slope {prof.reg_slope})" + (f", lstab {prof.lstab}" if prof.lstab else "")
                 + ("" if prof.confirmed else "  [unconfirmed]"))
    _emit(args, data, text)
    return EXIT_OK


def cmd_lind(args, cache):
    K = _subject(args)
    if args.quotient:
        value = linearity_defect(unit_ideal(K.ring), K, args.char)
        label = f"R/({K.text()})"
    else:
        value = linearity_defect(K, None, args.char)
        label = f"({K.text()})"
    _emit(args, {"schema": 1, "ideal": K.text(), "ring": list(K.ring.vars), "char": args.char,
                 "quotient": args.quotient, "lind": value}, f"lind {label} = {value}")
    return EXIT_OK


def cmd_golod(args, cache):
    R, I = _ring_ideal(args, "R")
    rep = is_star_strongly_golod(I)
    text = f"d*(I) = ({rep.partial_star.text()})\n*strongly Golod: {str(rep.is_star_strongly_golod).lower()}"
    if rep.witness is not None:
        a, b = (format_monomial(w, R.vars) for w in rep.witness)
        text += f"\nwitness: ({a})*({b}) is not in I"
    _emit(args, rep.to_json(), text)
    return EXIT_OK


def cmd_closure(args, cache):
    R, I = _ring_ideal(args, "R")
    s = args.power
    if s < 1:
        raise PreconditionError("--power must be positive")
    if args.kind == "integral":
        K = integral_closure(power(I, s))
    elif args.kind == "symbolic":
        K = symbolic_power(I, s)
    else:
        K = saturate(power(I, s), R.maximal_ideal())
    _emit(args, {"schema": 1, "kind": args.kind, "power": s, "ideal": I.text(), "result": K.text(),
                 "ring": list(R.vars)}, K.text())
    return EXIT_OK


def cmd_certificate(args, cache):
    R, I = _ring_ideal(args, "R")
    if args.power is not None:
        if args.power < 2:
            raise PreconditionError("--power must be at least 2")
        source, target = power(I, args.power), power(I, args.power - 1)
    else:
        if args.target is None:
            raise ParseError("certificate needs --target or --power")
        source, target = I, parse_ideal(args.target, R)
    cert = lcm_map(source, target)
    ok = verify_lcm_property(cert)
    lines = [f"{format_monomial(f, R.vars)} -> {format_monomial(g, R.vars)}" for f, g in cert.assignments.items()]
    lines.append(f"LCM property over all {2 ** cert.verified_up_to - 1} subsets: {'pass' if ok else 'FAIL'}")
    if not cert.hypothesis:
        lines.append("note: d*(source) is not inside the target; the map was still found")
    _emit(args, cert.to_json(), "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, cache):
    R, I = _ring_ideal(args, "R")
    S, J = _ring_ideal(args, "S")
    if args.theorem == "c_fold":
        ideals = [I, J]
        for spec in args.summand:
            vars_text, _, ideal_text = spec.partition(":")
            ring = parse_ring(vars_text, args.char)
            ideals.append(parse_ideal(ideal_text, ring))
        reports = verify_c_fold(ideals, args.smax, args.char)
    else:
        need_lind = args.theorem in ("thm62", "thm63", "cor65", "prop310")
        top = args.smax + 1 if args.theorem in ("thm58", "thm59", "cor65") else args.smax
        tables = None
        if args.theorem != "splitting":
            tables = (cache.table(I, top, args.char, need_lind), cache.table(J, top, args.char, need_lind))
        reports = verify_theorem(args.theorem, I, J, args.smax, args.char, args.window, tables)
    ok = all(r.ok for r in reports)
    data = {"schema": 1, "theorem": args.theorem, "ok": ok, "reports": [r.to_json() for r in reports]}
    _emit(args, data, _report_rows(reports) + f"\n{'all checks pass' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_random_suite(args, cache):
    cases = run_suite(args.suite, args.seed, args.count, args.smax, args.char,
                      args.max_vars, args.max_gens, args.max_exp)
    ok = all(c.ok for c in cases)
    data = {"schema": 1, "suite": args.suite, "seed": args.seed, "count": args.count, "ok": ok,
            "cases": [c.to_json() for c in cases]}
    rows = [("#", "ok", "checks", "inputs", "note")]
    rows += [(c.index, "yes" if c.ok else "NO", c.checks, c.inputs, c.note) for c in cases]
    _emit(args, data, _align(rows) + f"\n{sum(c.ok for c in cases)}/{len(cases)} cases pass")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "betti": cmd_betti, "invariants": cmd_invariants, "powers": cmd_powers, "lind": cmd_lind,
    "golod": cmd_golod, "closure": cmd_closure, "certificate": cmd_certificate,
    "verify": cmd_verify, "random-suite": cmd_random_suite,
}


def run_cli(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        set_caps(taylor_gens=args.cap_taylor_gens, lattice_size=args.cap_lattice_size,
                 lattice_gens=args.cap_lattice_gens, subset_verify=args.cap_subset_verify,
                 closure_box=args.cap_closure_box)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.char != 0 and (args.char < 2 or any(args.char % d == 0 for d in range(2, int(args.char ** 0.5) + 1))):
        print(f"error: characteristic must be 0 or prime, got {args.char}", file=sys.stderr)
        return EXIT_INPUT
    cache = TableCache(args.cache_dir or os.environ.get(CACHE_ENV))
    try:
        return COMMANDS[args.command](args, cache)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MixedSumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
