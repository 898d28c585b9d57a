"""Command-line front end.

Every subcommand wraps exactly one library operation family and prints
either a plain-text report or a versioned JSON document (``--json``).
Exit codes: 0 success, 2 invalid input, 3 verification failure,
4 enumeration cap exceeded.
"""

import argparse
import json
import sys

from .acceptance import run as run_acceptance
from .caps import Counter
from .catalan_narayana import (
    catalan_poly,
    macmahon_ehrhart,
    narayana_bosonic,
    narayana_fermionic,
    narayana_maj,
    schroeder_poly,
)
from .core_partitions import parse_partition, parse_rects, unit_rows
from .errors import EnumerationCapExceeded, RCKostkaError
from .gelfand_tsetlin import count_gt_points, stretched_gt_series
from .kostka_polynomials import kostka_foulkes, parabolic_kostka
from .qalgebra import QPolynomial
from .rigged_configurations import enumerate_admissible, level_sizes, vacancy
from .schur_internal import (
    internal_fermionic_value,
    liskova,
    principal_specialization_character,
    stable_limit,
)
from .stretched_kostka import (
    fit_stretched,
    fit_stretched_symmetric,
    gt_generating_function_check,
    okounkov_certificate,
    okounkov_closed_forms,
    okounkov_threshold,
    stretched_values,
)
from .tableaux_oracles import lattice_paths_asc, lattice_words

SCHEMA = 1


def _poly_text(p, coeffs=False):
    if coeffs:
        if p.is_zero():
            return "[] at q^0"
        return "%s at q^%d" % (
            "(" + ",".join(str(c) for c in p.coeff_list()) + ")",
            p.min_degree(),
        )
    return str(p)


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        payload = dict(payload)
        payload["schema"] = SCHEMA
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _maybe_poly(args, p):
    """JSON value / text for a polynomial honoring --at-one."""
    if getattr(args, "at_one", False) or not getattr(args, "q", True):
        return p.at_one(), str(p.at_one())
    return p.to_json(), _poly_text(p, getattr(args, "coeffs", False))


def cmd_kostka(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    counter = Counter(args.cap)
    if args.method == "gt":
        value = count_gt_points(lam, mu, counter=counter)
        _emit(args, {"value": value}, [str(value)])
        return 0
    if args.method == "charge":
        from .tableaux_oracles import charge_statistic, enumerate_ssyt

        p = QPolynomial.zero()
        for t in enumerate_ssyt(lam, mu, counter=counter):
            p = p + QPolynomial.monomial(charge_statistic(t))
    else:
        p = kostka_foulkes(lam, mu, counter=counter).polynomial
    jval, tval = _maybe_poly(args, p)
    _emit(args, {"polynomial": jval}, [tval])
    return 0


def cmd_pkostka(args):
    lam = parse_partition(args.lam)
    rects = parse_rects(args.rect)
    counter = Counter(args.cap)
    res = parabolic_kostka(lam, rects, counter=counter)
    jval, tval = _maybe_poly(args, res.polynomial)
    payload = {"polynomial": jval}
    lines = [tval]
    if args.decompose:
        payload["contributions"] = [
            {
                "levels": [list(lev) for lev in cfg.levels],
                "charge": c,
                "factors": [list(f) for f in factors],
            }
            for cfg, c, factors in res.contributions
        ]
        for cfg, c, factors in res.contributions:
            lines.append(
                "levels=%s charge=%d factors=%s"
                % (list(map(list, cfg.levels)), c, list(factors))
            )
    _emit(args, payload, lines)
    return 0


def cmd_configs(args):
    lam = parse_partition(args.lam)
    rects = parse_rects(args.rect)
    counter = Counter(args.cap)
    from .rigged_configurations import charge as cfg_charge

    configs = enumerate_admissible(lam, rects, counter=counter)
    sizes = level_sizes(lam, rects)
    out = []
    lines = []
    for cfg in configs:
        vac = []
        for k in range(1, len(sizes) + 1):
            for j in sorted(set(cfg.level(k))):
                vac.append([k, j, vacancy(cfg, k, j)])
        c = cfg_charge(cfg)
        out.append(
            {"levels": [list(lev) for lev in cfg.levels], "charge": c,
             "vacancy": vac}
        )
        lines.append("levels=%s charge=%d" % ([list(l) for l in cfg.levels], c))
    lines.append("total %d" % len(configs))
    _emit(args, {"configurations": out, "count": len(configs)}, lines)
    return 0


def cmd_catalan(args):
    p = catalan_poly(args.n, args.m)
    if args.q:
        _emit(args, {"polynomial": p.to_json()}, [_poly_text(p, args.coeffs)])
    else:
        _emit(args, {"value": p.at_one()}, [str(p.at_one())])
    return 0


def cmd_narayana(args):
    if args.method == "maj":
        table = narayana_maj(args.n, args.m, counter=Counter(args.cap))
        by_k = table.by_k
    elif args.method == "bosonic":
        top = (args.n - 1) * (args.m - 1)
        by_k = {k: narayana_bosonic(args.n, args.m, k) for k in range(top + 1)}
    else:
        groups = narayana_fermionic(
            args.n, args.m, group_by=args.group_by, counter=Counter(args.cap)
        )
        by_k = {k: total for k, (_, total) in sorted(groups.items())}
    if args.k is not None:
        by_k = {args.k: by_k[args.k]}
    if args.q:
        payload = {"by_k": {str(k): p.to_json() for k, p in by_k.items()}}
        lines = ["k=%d: %s" % (k, _poly_text(p, args.coeffs)) for k, p in sorted(by_k.items())]
    else:
        payload = {"by_k": {str(k): p.at_one() for k, p in by_k.items()}}
        lines = ["k=%d: %d" % (k, p.at_one()) for k, p in sorted(by_k.items())]
    _emit(args, payload, lines)
    return 0


def cmd_macmahon(args):
    v = macmahon_ehrhart(args.n, args.m, args.k)
    _emit(args, {"value": v}, [str(v)])
    return 0


def cmd_schroeder(args):
    p = schroeder_poly(args.n, args.m)
    _emit(
        args,
        {"polynomial": p.to_json(), "variable": "t"},
        [_poly_text(p, args.coeffs).replace("q", "t")],
    )
    return 0


def cmd_gt_count(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    counter = Counter(args.cap)
    if args.stretch is not None:
        vals = stretched_gt_series(lam, mu, args.stretch, counter=counter)
        _emit(
            args,
            {"values": list(vals)},
            ["N=%d: %d" % (i, v) for i, v in enumerate(vals)],
        )
    else:
        v = count_gt_points(lam, mu, counter=counter)
        _emit(args, {"value": v}, [str(v)])
    return 0


def cmd_gt_gf(args):
    ok = gt_generating_function_check(
        args.n, args.d, args.nmax, with_q=args.q, counter=Counter(args.cap)
    )
    _emit(args, {"holds": ok}, ["holds" if ok else "FAILS"])
    return 0 if ok else 3


def cmd_stretched(args):
    lam = parse_partition(args.lam)
    rects = parse_rects(args.rect)
    series = stretched_values(
        lam, rects, args.nmax,
        at_q="generic" if args.q else "one",
        counter=Counter(args.cap),
    )
    payload = {
        "values": [v.to_json() if args.q else v for v in series.values],
    }
    lines = [
        "N=%d: %s" % (i, v if not args.q else str(v))
        for i, v in enumerate(series.values)
    ]
    if args.fit is not None and not args.q:
        if args.symmetric:
            gf = fit_stretched_symmetric(
                series, power=args.fit if args.fit > 0 else None
            )
        else:
            gf = fit_stretched(series, power=args.fit if args.fit > 0 else None)
        payload["fit"] = gf.to_json()
        lines.append("numerator %s over (1-t)^%d"
                     % (tuple(gf.numerator_int_list()), len(gf.denominator_exponents)))
    _emit(args, payload, lines)
    return 0


def cmd_okounkov(args):
    threshold = okounkov_threshold(args.n, power=args.power)
    K, K2 = okounkov_closed_forms(args.n)
    payload = {
        "n": args.n,
        "power": args.power,
        "threshold": threshold,
        "at_threshold": {
            "doubled": K2(threshold),
            "single_power": K(threshold) ** args.power,
        },
    }
    lines = [
        "first N with K2(N) > K(N)^%d: %d" % (args.power, threshold),
        "K2(%d) = %d" % (threshold, K2(threshold)),
        "K(%d)^%d = %d" % (threshold, args.power, K(threshold) ** args.power),
    ]
    if args.n in (3, 5):
        cert = okounkov_certificate(args.n)
        payload["certificate"] = cert
        lines.append("certificate identity: %s" % ("holds" if cert else "FAILS"))
    _emit(args, payload, lines)
    return 0


def cmd_internal(args):
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    counter = Counter(args.cap)
    payload = {}
    lines = []
    if args.limit is not None:
        p = stable_limit(alpha, beta, args.limit, counter=counter)
        payload["stable_limit"] = p.to_json()
        lines.append("stable limit: %s" % _poly_text(p, args.coeffs))
    else:
        if args.method in ("fermionic", "both"):
            p = internal_fermionic_value(alpha, beta, args.N, counter=counter)
            payload["fermionic"] = p.to_json()
            lines.append("fermionic: %s" % _poly_text(p, args.coeffs))
        if args.method in ("character", "both"):
            p = principal_specialization_character(alpha, beta, args.N)
            payload["character"] = p.to_json()
            lines.append("character: %s" % _poly_text(p, args.coeffs))
    _emit(args, payload, lines)
    return 0


def cmd_liskova(args):
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    table = liskova(alpha, beta, counter=Counter(args.cap))
    payload = {
        "table": {",".join(map(str, mu)): p.to_json() for mu, p in table.items()}
    }
    lines = [
        "mu=%s: %s" % (",".join(map(str, mu)), _poly_text(p, args.coeffs))
        for mu, p in sorted(table.items(), reverse=True)
    ]
    _emit(args, payload, lines)
    return 0


def cmd_words(args):
    weight = parse_partition(args.weight)
    counts = {}
    for _, maj, des in lattice_words(weight, counter=Counter(args.cap)):
        key = des if args.group_by == "des" else maj
        counts[key] = counts.get(key, 0) + 1
    _emit(
        args,
        {"by_%s" % args.group_by: {str(k): v for k, v in counts.items()}},
        ["%s=%d: %d" % (args.group_by, k, v) for k, v in sorted(counts.items())],
    )
    return 0


def cmd_paths(args):
    counts = lattice_paths_asc(args.d, args.n, counter=Counter(args.cap))
    _emit(
        args,
        {"by_asc": {str(k): v for k, v in counts.items()}},
        ["asc=%d: %d" % (k, v) for k, v in sorted(counts.items())],
    )
    return 0


def cmd_verify(args):
    results = run_acceptance(args.suite)
    failed = [name for name, ok, _ in results if not ok]
    if getattr(args, "json", False):
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "suite": args.suite,
                    "results": [
                        {"name": n, "passed": ok, "detail": d}
                        for n, ok, d in results
                    ],
                    "passed": not failed,
                },
                sort_keys=True,
            )
        )
    else:
        for name, ok, detail in results:
            print("%-28s %s%s" % (name, "ok" if ok else "FAIL",
                                  "  " + detail if detail else ""))
        print("%d/%d passed" % (len(results) - len(failed), len(results)))
    return 0 if not failed else 3


def _add_common(p, q_flag=True):
    p.add_argument("--json", action="store_true")
    p.add_argument("--coeffs", action="store_true",
                   help="print dense coefficient lists instead of sparse terms")
    p.add_argument("--cap", type=int, default=None,
                   help="enumeration cap (default from RK_CAP or 10^7)")
    if q_flag:
        p.add_argument("--q", action="store_true",
                       help="report the full q-polynomial")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rck",
        description="Exact Kostka polynomial toolkit: fermionic formulas, "
        "q-Catalan/Narayana tables, stretched generating functions, and "
        "Kronecker-product specializations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lambda,mu}(q)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--method", choices=("fermionic", "charge", "gt"),
                   default="fermionic")
    p.add_argument("--at-one", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("pkostka", help="parabolic Kostka polynomial K_{lambda,R}(q)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--rect", required=True)
    p.add_argument("--at-one", action="store_true")
    p.add_argument("--decompose", action="store_true",
                   help="list per-configuration charges and binomial factors")
    _add_common(p)
    p.set_defaults(func=cmd_pkostka)

    p = sub.add_parser("configs", help="list admissible configurations")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--rect", required=True)
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_configs)

    p = sub.add_parser("catalan", help="rectangular q-Catalan number C(n,m|q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("narayana", help="rectangular q-Narayana numbers N(n,m;k|q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--method", choices=("maj", "bosonic", "fermionic"),
                   default="maj")
    p.add_argument("--group-by", choices=("colength", "length"),
                   default="colength")
    _add_common(p)
    p.set_defaults(func=cmd_narayana)

    p = sub.add_parser("macmahon", help="Ehrhart value i(M_{n,m}; k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_macmahon)

    p = sub.add_parser("schroeder", help="Schroeder polynomial C(n,m|1+t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_schroeder)

    p = sub.add_parser("gt-count", help="Gelfand-Tsetlin lattice point count")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--stretch", type=int, default=None, metavar="NMAX",
                   help="values for (N lambda, N mu), N = 0..NMAX")
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_gt_count)

    p = sub.add_parser("gt-gf", help="hook-family generating-function identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gt_gf)

    p = sub.add_parser("stretched", help="stretched values K_{N lambda, N R} and fits")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--rect", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--fit", type=int, nargs="?", const=0, default=None,
                   metavar="POWER",
                   help="fit P(t)/(1-t)^POWER (family default when omitted)")
    p.add_argument("--symmetric", action="store_true",
                   help="use the symmetric-numerator ansatz for the fit")
    _add_common(p)
    p.set_defaults(func=cmd_stretched)

    p = sub.add_parser("okounkov", help="log-concavity failure threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int, default=2, choices=(2, 3))
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_okounkov)

    p = sub.add_parser("internal", help="principal specialization of s_alpha * s_beta")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--method", choices=("character", "fermionic", "both"),
                   default="both")
    p.add_argument("--limit", type=int, default=None, metavar="DEPTH",
                   help="stable large-N limit to the given depth instead")
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_internal)

    p = sub.add_parser("liskova", help="Hall-Littlewood expansion of s_alpha * s_beta")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_liskova)

    p = sub.add_parser("words", help="lattice words grouped by descents or maj")
    p.add_argument("--weight", required=True)
    p.add_argument("--group-by", choices=("des", "maj"), default="des")
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("paths", help="monotone lattice paths grouped by ascents")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p, q_flag=False)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=("all", "paper", "fast"), default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code else 0
    if args.command == "internal" and args.N is None and args.limit is None:
        print("internal: one of --N or --limit is required", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except EnumerationCapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except RCKostkaError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
