"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails or methods disagree,
2 on usage errors (including exceeded order budgets).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import capsid_bijection as cb
from . import identities as ids
from . import qseries as qs
from .partitions import (
    CapsidSpec,
    Partition,
    capsid_stats,
    enumerate_capsids,
    enumerate_mk_capsids,
)
from .tau import DEFAULT_MAX_ORDER, OrderBudgetError, TauMethod, tau_values
from .vector_partitions import FAMILIES, VectorFamily, family_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_IDENTITY_ORDER = 500
DEFAULT_THEOREM_UPTO = 500
DEFAULT_INVOLUTION_UPTO = 40


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _emit(out, text: str) -> None:
    out.write(text + "\n")


# --- tau ------------------------------------------------------------------


def _cmd_tau(args, out) -> int:
    if (args.n is None) == (args.upto is None):
        raise UsageError("give exactly one of -n or --upto")
    ns = [args.n] if args.n is not None else list(range(1, args.upto + 1))
    if ns and ns[0] < 1:
        raise UsageError("n must be at least 1")
    methods = list(TauMethod) if args.method == "all" else [TauMethod.parse(args.method)]
    fmt = args.format
    if fmt == "table" and len(ns) == 0:
        return EXIT_OK

    values = {m: tau_values(ns, m, args.max_order) for m in methods}
    status = EXIT_OK
    rows = []
    for n in ns:
        row = {"n": n}
        for m in methods:
            row[m.value] = values[m][n]
        agree = len({values[m][n] for m in methods}) == 1
        if len(methods) > 1:
            row["agree"] = agree
        if not agree:
            status = EXIT_FAIL
        rows.append(row)

    if fmt == "table":
        cols = ["n", *(m.value for m in methods)] + (["agree"] if len(methods) > 1 else [])
        cells = [[str(r[c]) if c != "agree" else ("OK" if r[c] else "MISMATCH") for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        _emit(out, "  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        for row in cells:
            _emit(out, "  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return status
    for r in rows:
        if fmt == "json":
            _emit(out, _dumps(r))
        elif fmt == "csv":
            vals = [str(r["n"]), *(str(r[m.value]) for m in methods)]
            if len(methods) > 1:
                vals.append("OK" if r["agree"] else "MISMATCH")
            _emit(out, ",".join(vals))
        elif len(methods) == 1:
            m = methods[0]
            _emit(out, f"tau({r['n']}) = {r[m.value]}  [{m.value}]")
        else:
            parts = " ".join(f"{m.value}={r[m.value]}" for m in methods)
            _emit(out, f"n={r['n']} {parts} agreement={'OK' if r['agree'] else 'MISMATCH'}")
    return status


# --- verify ---------------------------------------------------------------


def _identity_payload(res: ids.IdentityResult) -> dict:
    return {"identity": res.name, "order": res.order, "ok": res.ok, "first_failure": res.first_failure}


def _cmd_verify(args, out) -> int:
    chosen = [x for x in (args.identity, args.theorem, args.involution or None) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --identity, --theorem or --involution")

    if args.identity is not None:
        order = args.order if args.order is not None else DEFAULT_IDENTITY_ORDER
        if order < 0:
            raise UsageError("order must be nonnegative")
        names = list(ids.IDENTITIES) + ["jacobi"] if args.identity == "all" else [args.identity]
        results = []
        for name in names:
            if name == "jacobi":
                results.extend(ids.verify_jacobi(order).values())
            elif name in ids.IDENTITIES:
                results.append(ids.verify_identity(name, order))
            else:
                raise UsageError(f"unknown identity {name!r}")
        for res in results:
            if args.format == "json":
                _emit(out, _dumps(_identity_payload(res)))
            else:
                state = "PASS" if res.ok else f"FAIL (first nonzero residual at q^{res.first_failure})"
                _emit(out, f"{res.name} to order {res.order}: {state}")
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL

    if args.theorem is not None:
        upto = args.upto if args.upto is not None else DEFAULT_THEOREM_UPTO
        if upto < 1:
            raise UsageError("--upto must be positive")
        rep = ids.verify_thm3(upto) if args.theorem == 3 else ids.verify_thm_ii(args.theorem, upto)
        if args.format == "json":
            _emit(
                out,
                _dumps(
                    {
                        "theorem": args.theorem,
                        "upto": upto,
                        "checked": rep.checked,
                        "ok": rep.ok,
                        "violations": [list(v) for v in rep.violations],
                        "special": {str(k): v for k, v in rep.special.items()},
                    }
                ),
            )
        else:
            _emit(out, f"{rep.name} up to {upto}: {'PASS' if rep.ok else 'FAIL'} ({rep.checked} values checked)")
            for n, v in rep.violations[:20]:
                _emit(out, f"  violation at {n}: {v}")
            for n, v in rep.special.items():
                _emit(out, f"  {n}: {v}")
        return EXIT_OK if rep.ok else EXIT_FAIL

    spec = _spec_from_args(args, allow_k=False)
    upto = args.upto if args.upto is not None else DEFAULT_INVOLUTION_UPTO
    rep = cb.verify_involution(spec, upto)
    if args.format == "json":
        _emit(
            out,
            _dumps(
                {
                    "spec": [spec.m, spec.r1, spec.r2],
                    "upto": upto,
                    "checked": rep.checked,
                    "ok": rep.ok,
                    "failures": [[str(lam), why] for lam, why in rep.failures],
                }
            ),
        )
    else:
        _emit(out, f"bijection on {spec}-capsids up to {upto}: {'PASS' if rep.ok else 'FAIL'} ({rep.checked} capsids)")
        for lam, why in rep.failures[:20]:
            _emit(out, f"  {lam}: {why}")
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- capsids and bijection --------------------------------------------------


def _spec_from_args(args, allow_k=True) -> CapsidSpec | None:
    has_k = getattr(args, "k", None) is not None
    has_r = args.r1 is not None or args.r2 is not None
    if has_k and has_r:
        raise UsageError("give either --k or --r1/--r2, not both")
    if args.m is None:
        raise UsageError("--m is required")
    if has_k:
        if not allow_k:
            raise UsageError("this command needs --r1 and --r2")
        if 2 * args.k == args.m:
            return None
        return CapsidSpec.from_mk(args.m, args.k)
    if args.r1 is None or args.r2 is None:
        raise UsageError("need --k, or both --r1 and --r2")
    return CapsidSpec(args.m, args.r1, args.r2)


def _cmd_capsids(args, out) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    spec = _spec_from_args(args)
    lams = enumerate_capsids(spec, args.n) if spec is not None else enumerate_mk_capsids(args.m, args.k, args.n)
    label = f"({args.m},{args.k})" if args.k is not None else str(spec)
    if args.format == "json":
        payload = {"family": label, "n": args.n, "count": len(lams)}
        if args.list:
            payload["partitions"] = [str(lam) for lam in lams]
            if spec is not None:
                payload["stats"] = [list(capsid_stats(lam, spec)) for lam in lams]
        _emit(out, _dumps(payload))
        return EXIT_OK
    _emit(out, f"{label}-capsids of {args.n}: {len(lams)}")
    if args.list:
        for lam in lams:
            extra = ""
            if spec is not None:
                a, b = capsid_stats(lam, spec)
                extra = f"  (alpha={a}, beta={b})"
            _emit(out, f"  {lam}{extra}")
    return EXIT_OK


def _cmd_bijection(args, out) -> int:
    spec = _spec_from_args(args, allow_k=False)
    lam = Partition.parse(args.partition)
    tr = cb.bijection_trace(lam, spec)
    fields = [
        ("lambda", str(tr.source)),
        ("a", tr.a),
        ("b", tr.b),
        ("pi1", str(tr.pi1)),
        ("pi2", str(tr.pi2)),
        ("pi", str(tr.pi)),
        ("pi'", str(tr.pi_conj)),
        ("pi1~", str(tr.pi1_tilde)),
        ("pi2~", " ".join(map(str, tr.pi2_tilde)) or "()"),
        ("image", str(tr.image)),
    ]
    if args.format == "json":
        _emit(out, _dumps({"spec": [spec.m, spec.r1, spec.r2], **dict(fields)}))
    else:
        for k, v in fields:
            _emit(out, f"{k:>6}: {v}")
    return EXIT_OK


# --- vcount and series ------------------------------------------------------


def _family_from_args(args) -> VectorFamily:
    if args.family_file:
        return VectorFamily.from_json(Path(args.family_file).read_text())
    return FAMILIES[args.family]


def _cmd_vcount(args, out) -> int:
    if (args.family is None) == (args.family_file is None):
        raise UsageError("give exactly one of --family or --family-file")
    if (args.n is None) == (args.upto is None):
        raise UsageError("give exactly one of -n or --upto")
    fam = _family_from_args(args)
    ns = [args.n] if args.n is not None else list(range(0, args.upto + 1))
    top = max(ns)
    if top > args.max_order:
        raise OrderBudgetError(top, args.max_order, "lower n or raise --max-order")
    s = family_series(fam, max(top, 0))
    for n in ns:
        val = 0 if n < 0 else s[n]
        if args.format == "json":
            _emit(out, _dumps({"family": fam.name, "n": n, "count": val}))
        elif args.format == "csv":
            _emit(out, f"{n},{val}")
        else:
            _emit(out, f"{fam.name.lower()}({n}) = {val}")
    return EXIT_OK


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"series {args.name} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _cmd_series(args, out) -> int:
    N = args.order
    if N < 0:
        raise UsageError("order must be nonnegative")
    if N > args.max_order:
        raise OrderBudgetError(N, args.max_order, "lower --order or raise --max-order")
    name = args.name
    if name == "euler":
        s = qs.euler(N)
    elif name == "eta24":
        s = qs.eta24(max(N, 1)).truncate(N)
    elif name == "pochhammer":
        _need(args, "k", "m")
        s = qs.pochhammer_inf(args.k, args.m, N)
    elif name == "pmk":
        _need(args, "m", "k")
        s = qs.p_mk(args.m, args.k, N)
    elif name == "tcore":
        _need(args, "t")
        s = qs.tcore_series(args.t, N)
    elif name == "capsid":
        _need(args, "m", "k")
        s = qs.capsid_series_product(args.m, args.k, N)
    elif name == "capsid-sum":
        _need(args, "m", "r1", "r2")
        s = qs.capsid_series_sum(args.m, args.r1, args.r2, N)
    elif name == "phi":
        _need(args, "j")
        s = qs.phi_series(args.j, N)
    elif name == "eisenstein":
        _need(args, "weight")
        s = qs.eisenstein(args.weight, N)
    elif name == "family":
        if args.family is None and args.family_file is None:
            raise UsageError("series family needs --family or --family-file")
        s = family_series(_family_from_args(args), N)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown series {name}")
    if args.format == "json":
        _emit(out, s.to_json())
    elif args.format == "csv":
        for row in s.to_csv_rows():
            _emit(out, row)
    else:
        _emit(out, " ".join(str(c) for c in s.coeffs))
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramtau", description="Capsids, t-cores and Ramanujan's tau function.")
    p.add_argument("--threads", type=int, default=1, help="parallelism hint (computations are single-threaded)")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tau", help="evaluate tau(n)")
    t.add_argument("-n", type=int)
    t.add_argument("--upto", type=int)
    t.add_argument("--method", default="eta24", choices=[m.value for m in TauMethod] + ["all"])
    t.add_argument("--format", default="text", choices=["text", "json", "csv", "table"])
    t.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    t.set_defaults(func=_cmd_tau)

    v = sub.add_parser("verify", help="verify identities, theorems, or the capsid bijection")
    v.add_argument("--identity", choices=sorted(ids.IDENTITIES) + ["jacobi", "all"])
    v.add_argument("--order", type=int)
    v.add_argument("--theorem", type=int, choices=[1, 2, 3])
    v.add_argument("--involution", action="store_true")
    v.add_argument("--upto", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--r1", type=int)
    v.add_argument("--r2", type=int)
    v.add_argument("--format", default="text", choices=["text", "json"])
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("capsids", help="enumerate capsid partitions")
    csub = c.add_subparsers(dest="action", required=True)
    ce = csub.add_parser("enumerate")
    ce.add_argument("--m", type=int, required=True)
    ce.add_argument("--k", type=int)
    ce.add_argument("--r1", type=int)
    ce.add_argument("--r2", type=int)
    ce.add_argument("-n", type=int, required=True)
    ce.add_argument("--list", action="store_true")
    ce.add_argument("--format", default="text", choices=["text", "json"])
    ce.set_defaults(func=_cmd_capsids)

    b = sub.add_parser("bijection", help="apply the capsid symmetry bijection")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--r1", type=int, required=True)
    b.add_argument("--r2", type=int, required=True)
    b.add_argument("--partition", required=True, help='multiplicity notation, e.g. "1^3 5 15^2 22 27"')
    b.add_argument("--format", default="text", choices=["text", "json"])
    b.set_defaults(func=_cmd_bijection)

    vc = sub.add_parser("vcount", help="count vector partitions in a family")
    vc.add_argument("--family", choices=sorted(FAMILIES))
    vc.add_argument("--family-file")
    vc.add_argument("-n", type=int)
    vc.add_argument("--upto", type=int)
    vc.add_argument("--format", default="text", choices=["text", "json", "csv"])
    vc.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    vc.set_defaults(func=_cmd_vcount)

    s = sub.add_parser("series", help="print a truncated q-series")
    s.add_argument(
        "name",
        choices=["euler", "eta24", "pochhammer", "pmk", "tcore", "capsid", "capsid-sum", "phi", "eisenstein", "family"],
    )
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--r1", type=int)
    s.add_argument("--r2", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--weight", type=int)
    s.add_argument("--family", choices=sorted(FAMILIES))
    s.add_argument("--family-file")
    s.add_argument("--format", default="text", choices=["text", "json", "csv"])
    s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    s.set_defaults(func=_cmd_series)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, out)
    except OrderBudgetError as e:
        err.write(f"ramtau: resource budget exceeded: {e}\n")
        return EXIT_USAGE
    except (UsageError, ValueError, KeyError, OSError) as e:
        err.write(f"ramtau: error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
