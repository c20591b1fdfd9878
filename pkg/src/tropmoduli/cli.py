"""Command-line driver: ``tropmoduli {bergman,push,curve,verify}``.

Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Sequence

from .exactnum import OMEGA, CycScalar, ValScalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# Laurent polynomial grammar
#
#   point  := term (('+' | '-') term)*
#   term   := [coeff ['*']] ['t' ['^' int]] | coeff
#   coeff  := rational | 'w' ['^' int] | '(' wpoly ')'
#   wpoly  := rational and w-power terms joined by + and -, no nesting

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[tw])|(?P<op>[-+*^()]))")


def _tokens(text: str, line: int):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, line: int):
        self.toks = _tokens(text, line)
        self.i = 0
        self.line = line
        self.end = len(text) + 1

    def peek(self, value=None):
        if self.i >= len(self.toks):
            return None
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            return None
        return tok

    def take(self, value=None):
        tok = self.peek(value)
        if tok is None:
            col = self.toks[self.i][2] if self.i < len(self.toks) else self.end
            raise ParseError(f"expected {value or 'a term'}", self.line, col)
        self.i += 1
        return tok

    def integer(self) -> int:
        sign = -1 if self.peek("-") else 1
        if sign < 0:
            self.take("-")
        kind, val, col = self.take()
        if kind != "num" or "/" in val:
            raise ParseError("expected an integer exponent", self.line, col)
        return sign * int(val)

    def w_power(self) -> CycScalar:
        self.take("w")
        k = self.integer() if self.peek("^") and self.take("^") else 1
        return OMEGA ** (k % 3)

    def atom_coeff(self) -> CycScalar:
        tok = self.peek()
        if tok and tok[0] == "num":
            self.i += 1
            c = CycScalar.rational(Fraction(tok[1]))
            if self.peek("w"):
                c = c * self.w_power()
            return c
        if tok and tok[1] == "w":
            return self.w_power()
        if tok and tok[1] == "(":
            self.take("(")
            acc = CycScalar.rational(0)
            sign = 1
            first = True
            while True:
                if self.peek("-"):
                    self.take("-")
                    sign = -1
                elif self.peek("+") and not first:
                    self.take("+")
                    sign = 1
                elif not first:
                    break
                acc = acc + sign * self.atom_coeff()
                first = False
                if self.peek(")"):
                    break
                sign = 1
            self.take(")")
            return acc
        col = tok[2] if tok else self.end
        raise ParseError("expected a coefficient", self.line, col)

    def term(self) -> ValScalar:
        coeff = CycScalar.rational(1)
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a term", self.line, self.end)
        if tok[1] != "t":
            coeff = self.atom_coeff()
            if self.peek("*"):
                self.take("*")
                tok = self.peek()
                if tok is None or tok[1] != "t":
                    col = tok[2] if tok else self.end
                    raise ParseError("expected 't' after '*'", self.line, col)
            elif not self.peek("t"):
                return ValScalar.const(coeff)
        self.take("t")
        k = 1
        if self.peek("^"):
            self.take("^")
            k = self.integer()
        return ValScalar.monomial(coeff, k)

    def point(self) -> ValScalar:
        sign = 1
        if self.peek("-"):
            self.take("-")
            sign = -1
        acc = sign * self.term()
        while self.i < len(self.toks):
            kind, val, col = self.take()
            if val not in "+-":
                raise ParseError(f"unexpected {val!r}", self.line, col)
            t = self.term()
            acc = acc + t if val == "+" else acc - t
        return acc


def parse_laurent(text: str, line: int = 1) -> ValScalar:
    """Parse one Laurent polynomial such as ``3 + w*t^2 - 1/2*t^-1``."""
    if not text.strip():
        raise ParseError("empty point", line, 1)
    return _Parser(text, line).point()


def parse_points(text: str) -> List[ValScalar]:
    """Points separated by newlines or semicolons; '#' starts a comment."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        offset = 0
        for chunk in body.split(";"):
            if chunk.strip():
                try:
                    out.append(parse_laurent(chunk, ln))
                except ParseError as e:
                    raise ParseError(str(e).split(": ", 1)[1], ln, e.column + offset) from None
            offset += len(chunk) + 1
    return out


# ---------------------------------------------------------------------------
# commands


def _out_dir(args) -> Path | None:
    if args.out is None:
        return None
    p = Path(args.out)
    p.mkdir(parents=True, exist_ok=True)
    return p


def cmd_bergman(args) -> int:
    from .arrangements import UnknownName, arrangement
    from .matroidfan import bergman_fan, matroid

    try:
        arr = arrangement(args.arrangement)
    except UnknownName:
        raise UsageError(f"unknown arrangement {args.arrangement!r}")
    out = _out_dir(args)
    tag = arr.name.replace("(", "").replace(")", "").lower()
    if args.rays_only:
        counts, irr = matroid(arr.name).count_irreducible_streaming()
        print(f"{arr.name}: {len(irr)} rays (irreducible flats by rank {counts})")
        if out:
            rays = [sorted(f.elements) for f in irr]
            (out / f"{tag}_rays.json").write_text(json.dumps({"rays": rays}))
        return EXIT_OK
    if arr.name == "E7":
        raise UsageError("E7 is only available with --rays-only")
    fan = bergman_fan(arr.name)
    print(f"{arr.name}: f-vector {fan.f_vector()}")
    if out:
        (out / f"{tag}_fan.json").write_text(fan.to_json())
        (out / f"{tag}_fvector.csv").write_text(fan.f_vector_csv())
    return EXIT_OK


def cmd_push(args) -> int:
    from . import pushforward as P

    name = args.map
    out = _out_dir(args)
    if name in ("goepel", "goepel-rays"):
        rep = P.goepel_report()
        print(json.dumps(rep, indent=1))
        if out:
            (out / "goepel_rays.json").write_text(json.dumps(rep))
        return EXIT_OK
    if name not in ("segre", "igusa", "burkhardt", "yoshida"):
        raise UsageError(f"unknown map {name!r}")
    try:
        pf = P.pushed(name)
    except P.DimensionCollapse as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    mults = Counter(pf.image.multiplicity(c) for c in pf.image.maximal)
    print(f"{name}: image f-vector {pf.image.f_vector()}, multiplicities {dict(mults)}")
    if name == "burkhardt":
        labels = P.label_types(pf)
        cover = Counter(("".join(sorted(labels[i] for i in k)), len(v)) for k, v in pf.covering.items())
        orbits = P.burkhardt_orbit_table(pf)
        print(f"{'type':6} {'cones':>6} {'map':>6} {'orbits':>12}")
        for t in ("a", "b", "aa", "ab", "aaa", "aab"):
            degs = sorted({d for (tt, d) in cover if tt == t})
            count = sum(n for (tt, _), n in cover.items() if tt == t)
            print(f"{t:6} {count:6d} {'/'.join(f'{d}:1' for d in degs):>6} {str(orbits.get(t)):>12}")
    if name == "yoshida":
        rep = P.yoshida_report(pf)
        nar = P.naruki_complex(pf)
        print(f"yoshida rays {rep['distinct_rays']}, classes {rep['class_sizes']}")
        print(f"naruki f-vector {nar['f_vector']}, types {nar['types']}")
    if out:
        (out / f"{name}_fan.json").write_text(pf.to_json())
        (out / f"{name}_fvector.csv").write_text(pf.image.f_vector_csv())
    return EXIT_OK


def cmd_curve(args) -> int:
    from . import curvetrees as C

    if args.preset:
        if args.preset not in C.PRESETS:
            raise UsageError(f"unknown preset {args.preset!r}; choose from {sorted(C.PRESETS)}")
        text = C.PRESETS[args.preset]
    elif args.points:
        text = Path(args.points).read_text()
    else:
        raise UsageError("give a points file or --preset")
    try:
        pts = parse_points(text)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if len(pts) == 4:
            ell, valj = C.genus1_check(pts)
            result = {"nu": C.nu_from_points(pts), "edge": str(ell), "val_j": str(valj)}
            dot = None
        elif len(pts) == 6:
            nu = C.nu_from_points(pts)
            tree = C.tree_from_nu(nu)
            g = C.genus2_from_tree(tree)
            result = {
                "nu": nu,
                "splits": {str(s): str(w) for s, w in tree.weights.items()},
                "type": g.type,
                "curve": C.CURVE_NAMES[g.type],
                "lengths": [str(x) for x in g.lengths],
                "burkhardt_cone": C.BURKHARDT_CONE[g.type],
            }
            dot = (tree.to_dot(), g.to_dot())
        else:
            raise UsageError(f"expected 4 or 6 points, got {len(pts)}")
    except (C.CoincidentPoints, C.NotTreelike) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(json.dumps(result))
    out = _out_dir(args)
    if out:
        stem = args.preset or Path(args.points).stem
        (out / f"{stem}.json").write_text(json.dumps(result))
        if dot:
            (out / f"{stem}_tree.dot").write_text(dot[0])
            (out / f"{stem}_curve.dot").write_text(dot[1])
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


@dataclass
class CheckResult:
    checkName: str
    expected: object
    actual: object
    passed: bool
    seconds: float


@dataclass
class SuiteResult:
    suite: str
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_jsonl(self) -> str:
        """One object per check with keys checkName, expected, actual, pass, seconds."""
        lines = []
        for c in self.checks:
            row = asdict(c)
            row["pass"] = row.pop("passed")
            lines.append(json.dumps(row, default=str) + "\n")
        return "".join(lines)


def _check_m0n6(seed):
    from .matroidfan import bergman_fan

    return (56, 490, 1260, 945), bergman_fan("M0N(6)").f_vector()


def _check_segre_igusa(seed):
    from . import pushforward as P
    from .identities import kernel_comparison

    s, i = P.pushed("segre"), P.pushed("igusa")
    k = kernel_comparison()
    actual = (s.image.f_vector(), sorted({s.image.multiplicity(c) for c in s.image.maximal}),
              i.image.f_vector(), sorted({i.image.multiplicity(c) for c in i.image.maximal}),
              k["equal"], k["dim_segre"])
    return ((25, 105, 105), [1], (25, 105, 105), [2], True, 5), actual


def _check_g32(seed):
    from .matroidfan import bergman_complex, matroid, moebius_number
    from .pushforward import g32_source_classes

    nc = bergman_complex("G32")
    cl = g32_source_classes(nc)
    actual = (nc.f_vector(), moebius_number(matroid("G32")),
              (cl["a"], cl["b"], cl["ä"]),
              (cl["aaä"], cl["aab"], cl["abä"]),
              (cl["aa"], cl["ab"], cl["aä"], cl["ab⊥"], cl["bä"]))
    return ((170, 1800, 3360), 1729, (40, 90, 40), (480, 1440, 1440), (240, 360, 480, 360, 360)), actual


BURKHARDT_TABLE = {"a": ([40], 2), "b": ([45], 2), "aa": ([240], 3), "ab": ([360], 3),
                   "aaa": ([160], 3), "aab": ([720], 4)}


def _check_burkhardt(seed):
    from . import pushforward as P

    pf = P.pushed("burkhardt")
    labels = P.label_types(pf)
    counts = P.type_counts(pf, labels)
    cover = {}
    for k, srcs in pf.covering.items():
        t = "".join(sorted(labels[i] for i in k))
        cover.setdefault(t, set()).add(len(srcs))
    orbits = P.burkhardt_orbit_table(pf)
    actual = (pf.image.f_vector(), dict(counts),
              {t: (sorted(orbits.get(t, [])), sorted(cover.get(t, set()))) for t in BURKHARDT_TABLE})
    expected = ((85, 600, 880), {"a": 40, "b": 45, "aa": 240, "ab": 360, "aaa": 160, "aab": 720},
                {t: (o, [d]) for t, (o, d) in BURKHARDT_TABLE.items()})
    return expected, actual


def _check_groups(seed):
    from .finitegeom import generate_sp4

    return (720, 25920), (generate_sp4(2).order(), generate_sp4(3).order())


def _check_support(seed):
    from .identities import check_support_bijection

    rep = check_support_bijection()
    return (45, 45, [16], True), (rep.witness["orbit"], rep.witness["b_rays"], rep.witness["sizes"], rep.passed)


def _check_balancing(seed):
    from . import pushforward as P

    return [0, 0, 0], [len(P.balancing_failures(P.pushed(n).image)) for n in ("segre", "igusa", "burkhardt")]


def circuit_oracle_trial(n_in: int = 10000, n_off: int = 1000, seed: int = 0):
    """(in-fan points failing the circuit test, off-fan points passing it)."""
    import numpy as np

    from .matroidfan import bergman_complex, circuit_membership_batch, circuits, nested_set_of_point

    rng = random.Random(seed)
    C = circuits("G32")
    nc = bergman_complex("G32")
    top = nc.faces[max(nc.faces)]
    W = np.zeros((n_in, 40), dtype=np.int64)
    for r in range(n_in):
        cone = rng.choice(top)
        for i in rng.sample(cone, rng.randint(1, len(cone))):
            W[r, list(nc.building[i].elements)] += rng.randint(1, 9)
    inside_fail = 0
    for b in range(0, n_in, 25):
        inside_fail += int((~circuit_membership_batch("G32", W[b:b + 25], C)).sum())
    off = []
    while len(off) < n_off:
        w = [rng.randint(0, 20) for _ in range(40)]
        if nested_set_of_point(nc, w) is None:
            off.append(w)
    off_pass = int(circuit_membership_batch("G32", off, C).sum())
    return inside_fail, off_pass


def _check_circuits(seed):
    return (0, 0), circuit_oracle_trial(seed=seed)


def tree_trial(per_type: int = 200, lambdas: int = 500, seed: int = 0):
    """Failures of the tree/curve correspondence on random configurations."""
    from . import curvetrees as C

    rng = random.Random(seed)
    bad_type = bad_weights = 0
    for label in range(1, 8):
        for _ in range(per_type):
            tree = C.random_tree(label, rng)
            pts = C.configuration_for_tree(tree, rng)
            got = C.tree_from_nu(C.nu_from_points(pts))
            if C.tree_type(got) != label:
                bad_type += 1
            splits = list(tree.weights)
            w = C.weights_from_m(C.m_valuations(pts), splits)
            if w is None or list(w) != [tree.weights[s] for s in splits]:
                bad_weights += 1
    snow = C.genus2_from_tree(C.tree_from_nu(C.nu_from_points(parse_points(C.PRESETS["snowflake"]))))
    bad_j = 0
    for _ in range(lambdas):
        k = rng.randint(1, 6)
        c = rng.randint(1, 9) * rng.choice([1, -1])
        lam = ValScalar.monomial(c, k) + rng.choice([0, 1]) * ValScalar.monomial(rng.randint(1, 5), k + 1)
        lam = lam if rng.random() < 0.5 else ValScalar.const(1) + lam
        ell, valj = C.genus1_from_lambda(lam)
        if ell != k or valj != -2 * ell:
            bad_j += 1
    return bad_type, bad_weights, snow.type, tuple(str(x) for x in sorted(snow.lengths)), bad_j


def _check_trees(seed):
    return (0, 0, 7, ("2", "4", "6"), 0), tree_trial(seed=seed)


def _check_kummer(seed):
    from . import curvetrees as C
    from .kummer import fiber_from_lifts, kummer_fiber

    _, snow = kummer_fiber(parse_points(C.PRESETS["snowflake"]))
    _, cat = kummer_fiber(parse_points(C.PRESETS["caterpillar"]))
    triv = fiber_from_lifts([0] * 11)
    actual = ((snow.total, snow.n_unbounded, snow.n_bounded),
              (cat.total, cat.n_unbounded, cat.n_bounded), triv.n_bounded)
    return ((30, 24, 6), (33, 24, 9), 0), actual


def _check_identities(seed):
    from .identities import run_all

    reps = [r for r in run_all(seed) if r.name != "support_bijection"]
    return {r.name: True for r in reps}, {r.name: r.passed for r in reps}


E6_FLAT_SIZES = [36, 120, 270, 270, 720, 540, 45, 216, 540, 120, 1080, 27, 36, 216, 360]


def _check_e6(seed):
    from . import pushforward as P
    from .finitegeom import e6_finite_model
    from .matroidfan import matroid

    M = matroid("E6")
    fam = Counter()
    for lev in M.flats_by_rank()[1:-1]:
        for f in lev:
            fam[P.e6_family(f)] += 1
    pf = P.pushed("yoshida", multiplicities=False)
    yr = P.yoshida_report(pf)
    nr = P.naruki_complex(pf)
    aniso, planes, triples = e6_finite_model()
    actual = ([fam[i] for i in range(1, 16)], len(pf.source.rays), yr["class_sizes"],
              sorted(k for k, v in yr["family_images"].items() if v is None), yr["distinct_rays"],
              tuple(nr["f_vector"]), nr["types"], len(yr["decomposition"]) == yr["class_sizes"]["c"],
              (len(aniso), len(planes), len(triples)))
    expected = (E6_FLAT_SIZES, 750, {"a": 36, "b": 40, "c": 270}, [7, 12], 346,
                (76, 630, 1620, 1215),
                {"a": 36, "b": 40, "aa": 270, "ab": 360, "aaa": 540, "aab": 1080, "aaaa": 135, "aaab": 1080},
                True, (36, 120, 40))
    return expected, actual


def _check_e7(seed):
    from . import pushforward as P
    from .arrangements import goepel_heptads
    from .matroidfan import matroid

    heptads = goepel_heptads(matroid("E7"))
    per_root = set(Counter(i for h in heptads for i in h).values())
    rep = P.goepel_report()
    sizes = sorted(rep["class_sizes"])
    sekiguchi = sum(s for s in sizes if s in (63, 336, 630, 36))
    actual = (rep["irreducible_flats"], sizes, sekiguchi, len(heptads), per_root, rep["rules"])
    expected = (6091, sorted([63, 336, 630, 36, 2016, 315, 1008]), 1065, 135, {15},
                {"F8=F2+F24": 2016, "F9=F1+F1+F1": 315, "F16=F1+F24": 1008})
    return expected, actual


CHECKS: List[tuple] = [
    ("1 Berg(M0N6)", "fast", _check_m0n6),
    ("2 Segre/Igusa", "fast", _check_segre_igusa),
    ("3 Berg(G32)", "fast", _check_g32),
    ("4 trop(B)", "fast", _check_burkhardt),
    ("5 group orders", "fast", _check_groups),
    ("6 support bijection", "fast", _check_support),
    ("7 balancing", "fast", _check_balancing),
    ("8 circuit oracle", "full", _check_circuits),
    ("9 trees and curves", "fast", _check_trees),
    ("10 Kummer fibers", "fast", _check_kummer),
    ("11 identities", "fast", _check_identities),
    ("12 E6", "full", _check_e6),
    ("13 E7", "e7", _check_e7),
]
SUITES = {"fast": ("fast",), "full": ("fast", "full"), "e7": ("fast", "full", "e7")}


def run_suite(name: str, seed: int = 0, only: Sequence[str] | None = None,
              report: Callable[[CheckResult], None] | None = None) -> SuiteResult:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    results = []
    for label, tag, fn in CHECKS:
        if tag not in SUITES[name] or (only and label.split()[0] not in only):
            continue
        t0 = time.time()
        try:
            expected, actual = fn(seed)
            ok = expected == actual
        except Exception as e:  # a crash is a failed check, reported by name
            expected, actual, ok = "no error", f"{type(e).__name__}: {e}", False
        res = CheckResult(label, expected, actual, ok, round(time.time() - t0, 2))
        results.append(res)
        if report:
            report(res)
    return SuiteResult(name, results)


def cmd_verify(args) -> int:
    def show(r: CheckResult):
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.checkName} ({r.seconds}s)")
        if not r.passed:
            print(f"    expected {r.expected}\n    actual   {r.actual}")

    res = run_suite(args.suite, seed=args.seed, report=show)
    out = _out_dir(args)
    if out:
        (out / f"verify_{args.suite}.jsonl").write_text(res.to_jsonl())
    bad = res.first_failure()
    if bad:
        print(f"first failing check: {bad.checkName}")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropmoduli", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", metavar="DIR", help="directory for output files")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work is serial")

    b = sub.add_parser("bergman", help="Bergman fan of a catalog arrangement")
    b.add_argument("--arrangement", required=True)
    b.add_argument("--rays-only", action="store_true")
    common(b)
    b.set_defaults(func=cmd_bergman)

    m = sub.add_parser("push", help="push a Bergman fan through a monomial map")
    m.add_argument("--map", required=True)
    common(m)
    m.set_defaults(func=cmd_push)

    c = sub.add_parser("curve", help="tree and tropical curve of marked points")
    c.add_argument("points", nargs="?", help="file with 4 or 6 Laurent polynomials")
    c.add_argument("--preset")
    common(c)
    c.set_defaults(func=cmd_curve)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="fast")
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
