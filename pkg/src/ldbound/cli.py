"""Command-line front end: bound queries, oracle runs, verification
suites, and asymptotic tables, with machine-readable JSON/CSV output.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration cap or search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from . import bounds as bnd
from . import oracles as orc
from .codefile import load_code
from .exactmath import krawtchouk_smallest_root
from .linear import dual_stats, enumerate_codewords, random_linear_code, \
    syndrome_covering_radius
from .spaces import (
    CoverMetric,
    EnumerationCapError,
    Hamming,
    Insdel,
    PairMetric,
    Permutation,
    Rank,
    Subspace,
    SumRank,
    distance,
    enumerate_space,
    subsequence_test,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class Report:
    """Serializable command outcome; all values are plain JSON types with
    big integers as decimal strings."""

    query: dict
    results: list
    environment: dict
    status: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(data["query"], data["results"], data["environment"],
                   data["status"])


def encode_value(v):
    """Big ints become decimal strings; LogSize and Fraction become
    tagged dicts; floats pass through."""
    if v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return {"fraction": f"{v.numerator}/{v.denominator}"}
    if isinstance(v, bnd.LogSize):
        return {"log_base": v.base, "exponent": v.exponent}
    return str(v)


def encode_result(r: bnd.BoundResult) -> dict:
    return {
        "name": r.name,
        "kind": r.kind,
        "value": encode_value(r.value),
        "applicable": r.applicable,
        "citation": r.citation,
        "reason": r.reason,
        "note": r.note,
        "raw": r.raw,
    }


def _environment(args, seed=None) -> dict:
    return {
        "version": __version__,
        "seed": seed,
        "cap": getattr(args, "cap", None),
        "nodes": getattr(args, "nodes", None),
    }


def _emit(report: Report, args, pretty_lines) -> None:
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    for line in pretty_lines:
        print(line)


def _value_text(v) -> str:
    if isinstance(v, dict):
        if "fraction" in v:
            return v["fraction"]
        if "log_base" in v:
            return f"{v['log_base']}^{v['exponent']:.4f}"
    return str(v)


# ---------------------------------------------------------------- spaces


def _add_space_args(p):
    p.add_argument("--space", required=True,
                   choices=["hamming", "rank", "sumrank", "subspace",
                            "cover", "pair", "insdel", "permutation"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, help="subspace dimension")
    p.add_argument("--v", type=int, help="insdel alphabet size")
    p.add_argument("--blocks", help="sum-rank blocks, e.g. 2x2,2x2,2x2")
    p.add_argument("--metric", help="S|I for subspace, hamming|chebyshev "
                                    "for permutation")


def _build_space(args):
    if args.space == "hamming":
        return Hamming(args.q, args.n)
    if args.space == "rank":
        return Rank(args.q, args.m, args.n)
    if args.space == "cover":
        return CoverMetric(args.q, args.m, args.n)
    if args.space == "pair":
        return PairMetric(args.q, args.n)
    if args.space == "insdel":
        return Insdel(args.v, args.n)
    if args.space == "permutation":
        return Permutation(args.n, args.metric or "hamming")
    if args.space == "subspace":
        if args.k is None:
            raise ValueError("subspace queries need --k")
        return Subspace(args.q, args.n, (args.k,), args.metric or "S")
    if args.space == "sumrank":
        if not args.blocks:
            raise ValueError("sum-rank queries need --blocks n1xm1,...")
        blocks = tuple(tuple(int(x) for x in b.split("x"))
                       for b in args.blocks.split(","))
        return SumRank(args.q, blocks)
    raise ValueError(f"unknown space {args.space!r}")


# ---------------------------------------------------------------- bound


def cmd_bound(args) -> int:
    space = _build_space(args)
    if args.space == "insdel":
        if args.d1 is None or args.d2 is None:
            raise ValueError("insdel queries need --d1 and --d2")
        radius = (args.d1, args.d2)
    else:
        radius = args.d if args.d is not None else args.rho
        if radius is None:
            raise ValueError("bound queries need --d (or --rho)")
    aux = {}
    if args.table:
        table = bnd.builtin_ktable()
        for path in args.table:
            table.load_csv(path)
        aux["ktable"] = table
    if args.linear_code:
        aux["linear_code"] = _load_linear(args.linear_code)
    if args.dim_k is not None:
        aux["dim_k"] = args.dim_k
    if args.perm_blocks:
        m, t = (int(x) for x in args.perm_blocks.split(","))
        aux["perm_blocks"] = (m, t)
    if args.average_radius:
        aux["average_radius"] = True

    query = bnd.BoundQuery(space, radius, args.L, aux)
    results = bnd.evaluate(query)
    best = bnd.best_size_upper(results)

    def order(r):
        if r.applicable and r.kind == "size-upper":
            return (0, bnd._size_key(r.value))
        return (1 if r.applicable else 2, 0.0)

    results = sorted(results, key=order)
    encoded = [encode_result(r) for r in results]
    status = "ok" if any(r.applicable for r in results) else "inapplicable"
    report = Report(
        query={"space": repr(space), "radius": encode_value(radius)
               if not isinstance(radius, tuple) else list(radius),
               "L": args.L},
        results=encoded,
        environment=_environment(args),
        status=status,
    )
    lines = [f"{'name':30s} {'kind':11s} {'value':>20s}  ok citation"]
    for e in encoded:
        val = _value_text(e["value"]) if e["applicable"] else f"({e['reason']})"
        lines.append(f"{e['name']:30s} {e['kind']:11s} {val:>20s}  "
                     f"{'Y' if e['applicable'] else 'n'} {e['citation']}")
    if best is not None:
        lines.append(f"best size-upper: {best.name} = {_value_text(encode_value(best.value))}")
    _emit(report, args, lines)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["name", "kind", "value", "applicable", "citation"])
            for e in encoded:
                w.writerow([e["name"], e["kind"], _value_text(e["value"]),
                            e["applicable"], e["citation"]])
    return EXIT_OK


def _load_linear(path):
    """A linear code given as a code file whose words span it, reduced to
    a generator; or a .gen file of generator rows."""
    from .linear import LinearCode

    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    header = lines[0].split()
    q = int(next(t.split("=")[1] for t in header if t.startswith("q=")))
    rows = [tuple(int(v) for v in ln.split()) for ln in lines[1:]]
    return LinearCode.from_generator(q, rows)


# ---------------------------------------------------------------- oracle


def cmd_oracle(args) -> int:
    results = []
    if args.quantity in ("covering-radius", "profile", "multiplicity", "mindist"):
        if not args.code:
            raise ValueError(f"{args.quantity} needs --code FILE")
        code = load_code(args.code)
        if args.quantity == "covering-radius":
            val = orc.covering_radius(code, cap=args.cap)
            results.append({"quantity": "covering-radius", "value": str(val)})
        elif args.quantity == "profile":
            prof = orc.list_profile(code, args.r, cap=args.cap)
            results.append({"quantity": "profile", "radius": args.r,
                            "l1": str(prof.l1), "l2": str(prof.l2)})
        elif args.quantity == "multiplicity":
            r = args.r if args.r is not None else orc.covering_radius(code, cap=args.cap)
            st = orc.multiplicity_stats(code, r, cap=args.cap)
            results.append({"quantity": "multiplicity", "radius": r,
                            "max_mul": str(st.max_mul),
                            "multi_count": str(st.multi_count),
                            "multiratio": encode_value(st.multiratio)})
        else:
            results.append({"quantity": "mindist",
                            "value": str(orc.min_distance(code))})
        query = {"quantity": args.quantity, "code": args.code, "r": args.r}
    else:
        space = _build_space(args)
        if args.quantity == "mincover":
            found = orc.min_covering(space, args.r, mode=args.mode,
                                     cap=args.cap, node_budget=args.nodes)
            results.append({"quantity": "mincover", "mode": args.mode,
                            "radius": args.r, "size": str(len(found))})
        elif args.quantity == "maxpack":
            found = orc.max_packing(space, args.d, mode=args.mode,
                                    cap=args.cap, node_budget=args.nodes)
            results.append({"quantity": "maxpack", "mode": args.mode,
                            "distance": args.d, "size": str(len(found))})
        else:
            raise ValueError(f"unknown quantity {args.quantity!r}")
        query = {"quantity": args.quantity, "space": repr(space),
                 "r": args.r, "d": args.d, "mode": args.mode}
    report = Report(query=query, results=results,
                    environment=_environment(args), status="ok")
    lines = [", ".join(f"{k}={v}" for k, v in r.items()) for r in results]
    _emit(report, args, lines)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _suite_covering_bound(args):
    """Thm 3.1 harness: exhaustive over F_2^3 with the exact minimum
    cover, plus seeded greedy-cover trials in F_2^8."""
    lines, results = [], []
    ok = True
    s = Hamming(2, 3)
    cover = orc.min_covering(s, 1, mode="exact")
    points = list(enumerate_space(s))
    masks = orc._ball_masks(s, points, 1)
    for bits in range(1, 256):
        size = bits.bit_count()
        l2 = max((masks[i] & bits).bit_count() for i in range(len(points)))
        if size > l2 * len(cover):
            ok = False
            lines.append(f"FAIL: F_2^3 code {bits:08b}: {size} > {l2}*{len(cover)}")
    results.append({"check": "exhaustive-f2-3", "codes": "255",
                    "cover_size": str(len(cover)), "holds": ok})
    lines.append(f"exhaustive F_2^3 (255 codes, exact cover size {len(cover)}): "
                 f"{'ok' if ok else 'FAIL'}")

    rng = random.Random(args.seed)
    s8 = Hamming(2, 8)
    trials_ok = True
    for t in range(args.trials):
        size = rng.randrange(1, 40)
        words = set()
        while len(words) < size:
            words.add(tuple(rng.randrange(2) for _ in range(8)))
        code = orc.ExplicitCode(s8, tuple(sorted(words)))
        for r in (1, 2, 3):
            cov = orc.min_covering(s8, r, mode="greedy")
            rep = orc.verify_covering_bound(code, cov, r)
            if not (rep.precondition_ok and rep.holds):
                trials_ok = False
                lines.append(f"FAIL: trial {t} r={r}")
    ok = ok and trials_ok
    results.append({"check": "seeded-f2-8", "trials": str(args.trials),
                    "holds": trials_ok})
    lines.append(f"seeded F_2^8 greedy covers ({args.trials} trials, r=1..3): "
                 f"{'ok' if trials_ok else 'FAIL'}")
    return ok, lines, results


def _suite_probabilistic(args):
    """Thm 3.2 harness.  Asserts the guarantee the construction actually
    provides (each cover-codeword ball holds at most L picks when the
    multiratio is 0) and reports the all-centers list profile, which can
    exceed L even for perfect covers."""
    from .linear import hamming_code

    lines, results = [], []
    ok = True
    perfect = enumerate_codewords(hamming_code(2, 3))
    runs = args.runs
    worst_all, worst_cover = 0, 0
    for seed in range(args.seed, args.seed + runs):
        code = orc.probabilistic_construct(perfect, args.L, seed, radius=1)
        cover_max = max(
            sum(1 for w in code.codewords if distance(code.space, w, c) <= 1)
            for c in perfect.codewords
        )
        worst_cover = max(worst_cover, cover_max)
        if cover_max > args.L:
            ok = False
            lines.append(f"FAIL: seed {seed}: cover-ball occupancy {cover_max} > L")
        worst_all = max(worst_all, orc.list_profile(code, 1).l2)
    results.append({"check": "perfect-cover", "runs": str(runs), "L": str(args.L),
                    "worst_cover_ball": str(worst_cover),
                    "worst_all_centers_l2": str(worst_all), "holds": ok})
    lines.append(f"perfect [7,4]_2 cover, {runs} runs, L={args.L}: "
                 f"cover-ball occupancy <= L {'ok' if ok else 'FAIL'} "
                 f"(all-centers l2 reaches {worst_all}, reported only)")
    return ok, lines, results


def _suite_tietavainen(args):
    """Covering radius <= smallest Krawtchouk root for random codes with
    even dual distance."""
    lines, results = [], []
    ok = True
    rng = random.Random(args.seed)
    checked = 0
    attempts = 0
    while checked < args.trials and attempts < args.trials * 40:
        attempts += 1
        q = rng.choice([2, 3])
        n = rng.randrange(4, 11)
        k = rng.randrange(1, n)
        code = random_linear_code(q, n, k, rng)
        st = dual_stats(code)
        if st.degenerate or st.dual_distance is None or st.dual_distance % 2:
            continue
        u = st.dual_distance // 2
        root = krawtchouk_smallest_root(u, q, n)
        rc = syndrome_covering_radius(code)
        checked += 1
        if rc > root + 1e-6:
            ok = False
            lines.append(f"FAIL: [{n},{k}]_{q} R_cov={rc} > x({u})={root:.6f}")
    results.append({"check": "tietavainen-root", "codes": str(checked), "holds": ok})
    lines.append(f"Tietavainen root bound on {checked} random even-dual codes: "
                 f"{'ok' if ok else 'FAIL'}")
    return ok, lines, results


def _suite_delsarte(args):
    """Covering radius <= number of nonzero dual weights (external norm
    theorem) on seeded random linear codes."""
    lines, results = [], []
    ok = True
    rng = random.Random(args.seed)
    for _ in range(args.trials):
        q = rng.choice([2, 3])
        n = rng.randrange(3, 10)
        k = rng.randrange(1, n + 1)
        code = random_linear_code(q, n, k, rng)
        st = dual_stats(code)
        rc = syndrome_covering_radius(code)
        s_count = st.s
        if rc > s_count:
            ok = False
            lines.append(f"FAIL: [{n},{k}]_{q} R_cov={rc} > s={s_count}")
    results.append({"check": "delsarte-s", "codes": str(args.trials), "holds": ok})
    lines.append(f"Delsarte R_cov <= s on {args.trials} random codes: "
                 f"{'ok' if ok else 'FAIL'}")
    return ok, lines, results


def _suite_insdel_example(args):
    """Every string in F_2^{2n} has an all-zero or all-one length-n
    subsequence (exhaustive)."""
    import itertools

    lines, results = [], []
    ok = True
    n = args.n or 4
    for nn in range(1, n + 1):
        for word in itertools.product((0, 1), repeat=2 * nn):
            zeros = (0,) * nn
            ones = (1,) * nn
            if not (subsequence_test(zeros, word) or subsequence_test(ones, word)):
                ok = False
                lines.append(f"FAIL: {word}")
    results.append({"check": "allzero-allone-cover", "n_max": str(n), "holds": ok})
    lines.append(f"all-zero/all-one insertion cover up to n={n}: "
                 f"{'ok' if ok else 'FAIL'}")
    return ok, lines, results


def _suite_chebyshev_cyclic(args):
    """Brute-force cyclic-group covering radius in (S_n, d_Ch) equals
    n - floor((sqrt(4n+1)+1)/2)."""
    import itertools

    lines, results = [], []
    ok = True
    n_max = args.n_max or 7
    for n in range(3, n_max + 1):
        s = Permutation(n, "chebyshev")
        cyc = [tuple((i + shift - 1) % n + 1 for i in range(1, n + 1))
               for shift in range(n)]
        rc = max(
            min(distance(s, p, c) for c in cyc)
            for p in itertools.permutations(range(1, n + 1))
        )
        expect = bnd.chebyshev_cyclic_radius(n)
        if rc != expect:
            ok = False
            lines.append(f"FAIL: n={n}: brute force {rc} != formula {expect}")
        else:
            lines.append(f"n={n}: R_Ch = {rc} (matches formula)")
        results.append({"check": "cyclic-radius", "n": str(n),
                        "brute": str(rc), "formula": str(expect)})
    return ok, lines, results


SUITES = {
    "covering-bound": _suite_covering_bound,
    "probabilistic": _suite_probabilistic,
    "tietavainen": _suite_tietavainen,
    "delsarte": _suite_delsarte,
    "insdel-example": _suite_insdel_example,
    "chebyshev-cyclic": _suite_chebyshev_cyclic,
}


def cmd_verify(args) -> int:
    ok, lines, results = SUITES[args.suite](args)
    report = Report(
        query={"suite": args.suite, "seed": args.seed, "L": args.L,
               "trials": args.trials, "runs": args.runs},
        results=results,
        environment=_environment(args, seed=args.seed),
        status="ok" if ok else "failed",
    )
    _emit(report, args, lines + [f"suite {args.suite}: {'PASS' if ok else 'FAIL'}"])
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------- asympt


def cmd_asympt(args) -> int:
    rows = []
    warnings = []
    rho = args.rho_min
    params = {}
    if args.q:
        params["q"] = args.q
    if args.b is not None:
        params["b"] = args.b
    if args.n:
        params["n"] = args.n
    if args.m:
        params["m"] = args.m
    while rho <= args.rho_max + 1e-12:
        try:
            rows.append((round(rho, 12),
                         bnd.asymptotic_threshold(args.family, rho, **params)))
        except ValueError as e:
            warnings.append(f"skipped rho={rho:g}: {e}")
        rho += args.step
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["rho", "rate_threshold"])
    for r, v in rows:
        w.writerow([f"{r:.6f}", f"{v:.9f}"])
    text = buf.getvalue()
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    report = Report(
        query={"family": args.family, "rho_min": args.rho_min,
               "rho_max": args.rho_max, "step": args.step, **params},
        results=[{"rho": f"{r:.6f}", "rate_threshold": v} for r, v in rows],
        environment=_environment(args),
        status="ok" if rows else "inapplicable",
    )
    _emit(report, args, warnings + [text.rstrip()])
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ldbound",
                                description="bounds workbench for "
                                            "list-decodable codes")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--cap", type=int, default=2**24,
                        help="enumeration cap (points)")
        sp.add_argument("--nodes", type=int, default=10**7,
                        help="exact-search node budget")
        sp.add_argument("--json", help="write the JSON report to a file")
        sp.add_argument("--csv", help="write CSV output to a file")

    b = sub.add_parser("bound", help="evaluate all closed-form bounds")
    _add_space_args(b)
    b.add_argument("--d", type=int, help="list radius")
    b.add_argument("--rho", type=int, help="alias of --d for rank-type spaces")
    b.add_argument("--d1", type=int, help="insdel insertion radius")
    b.add_argument("--d2", type=int, help="insdel deletion radius")
    b.add_argument("--L", type=int, default=1)
    b.add_argument("--table", action="append", help="extra K-table CSV")
    b.add_argument("--linear-code", help="aux linear code file (generator rows)")
    b.add_argument("--dim-k", type=int, help="aux dimension for list-lower bounds")
    b.add_argument("--perm-blocks", help="m,t for the Thm 9.1 block form")
    b.add_argument("--average-radius", action="store_true")
    common(b)
    b.set_defaults(func=cmd_bound)

    o = sub.add_parser("oracle", help="exact oracle quantities")
    o.add_argument("quantity", choices=["covering-radius", "profile",
                                        "multiplicity", "mindist",
                                        "mincover", "maxpack"])
    o.add_argument("--code", help="code file")
    o.add_argument("--space", choices=["hamming", "rank", "sumrank",
                                       "subspace", "cover", "pair",
                                       "insdel", "permutation"])
    o.add_argument("--q", type=int)
    o.add_argument("--n", type=int)
    o.add_argument("--m", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--v", type=int)
    o.add_argument("--blocks")
    o.add_argument("--metric")
    o.add_argument("--r", type=int, help="radius")
    o.add_argument("--d", type=int, help="minimum distance for maxpack")
    o.add_argument("--mode", choices=["greedy", "exact"], default="greedy")
    common(o)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--L", type=int, default=1)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--runs", type=int, default=100)
    v.add_argument("--n", type=int)
    v.add_argument("--n-max", type=int, dest="n_max")
    common(v)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("asympt", help="rate-threshold table")
    a.add_argument("--family", required=True,
                   choices=["hamming", "rank", "subspace-S", "subspace-I",
                            "sumrank", "permutation-chebyshev",
                            "mrrw-binary", "tvz-q"])
    a.add_argument("--q", type=int)
    a.add_argument("--b", type=float)
    a.add_argument("--n", type=int)
    a.add_argument("--m", type=int)
    a.add_argument("--rho-min", type=float, required=True)
    a.add_argument("--rho-max", type=float, required=True)
    a.add_argument("--step", type=float, default=0.05)
    common(a)
    a.set_defaults(func=cmd_asympt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EnumerationCapError, orc.BudgetExceededError) as e:
        report = Report(query={"command": args.command}, results=[],
                        environment=_environment(args),
                        status="budget-exceeded")
        if getattr(args, "json", None):
            with open(args.json, "w") as fh:
                fh.write(report.to_json() + "\n")
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
