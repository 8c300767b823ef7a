"""Command-line front end; every subcommand prints JSON (or CSV for sweeps).

Equations are given inline as `deg=<n>; coeffs=[...]`, via --eq-file, or for
Weierstrass curves as --curve a1,a2,a3,a4,a6.  Component-group classes are
written "i" (cyclic) or "a,b" (Klein); points are "x,y" or "inf".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from genusone import fixtures
from genusone.counting import (
    CountingProblem,
    counts_by_psi,
    enumerate_models,
    local_count,
    table1,
)
from genusone.equations import (
    GenusOneEquation,
    apply_transformation,
    det_transformation,
    invariants,
    is_integral,
    jacobian,
    parse_equation,
    transformation1,
    transformation2,
    transformation3,
    transformation4,
    weierstrass,
)
from genusone.fiberdata import fiber
from genusone.globalcount import bad_primes, global_count, verify_model_list
from genusone.localred import component_of_point, is_minimal_at, parse_kodaira, tate
from genusone.arith import factor, padic_valuation


def _fmt(x) -> str | int:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_curve(text: str) -> GenusOneEquation:
    return weierstrass(*(Fraction(t) for t in text.split(",")))


def _load_equation(args) -> GenusOneEquation:
    if getattr(args, "curve", None):
        return _parse_curve(args.curve)
    if getattr(args, "eq_inline", None):
        return parse_equation(args.eq_inline)
    if getattr(args, "eq_file", None):
        with open(args.eq_file) as fh:
            return parse_equation(fh.read())
    raise ValueError("no equation given (use --curve, --eq-inline or --eq-file)")


def _parse_point(text: str):
    if text.strip().lower() == "inf":
        return None
    x, y = text.split(",")
    return (Fraction(x), Fraction(y))


def _parse_matrix(text: str):
    rows = json.loads(text)
    return [[Fraction(str(v)) for v in row] for row in rows]


def _parse_transformation(spec: str, degree: int):
    """Mini-language: `u=..; r=..; s=..; t=..` (deg 1), `mu=..; r=[..]; M=[[..]]`
    (deg 2), `mu=..; M=[[..]]` (deg 3), `M=[[..]]; N=[[..]]` (deg 4)."""
    fields = {}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        fields[key.strip()] = val.strip()
    if degree == 1:
        return transformation1(
            Fraction(fields.get("u", "1")),
            Fraction(fields.get("r", "0")),
            Fraction(fields.get("s", "0")),
            Fraction(fields.get("t", "0")),
        )
    if degree == 2:
        rv = [Fraction(str(v)) for v in json.loads(fields.get("r", "[0,0,0]"))]
        return transformation2(Fraction(fields.get("mu", "1")), rv, _parse_matrix(fields["M"]))
    if degree == 3:
        return transformation3(Fraction(fields.get("mu", "1")), _parse_matrix(fields["M"]))
    return transformation4(_parse_matrix(fields["M"]), _parse_matrix(fields["N"]))


def _emit(obj) -> int:
    print(json.dumps(obj, indent=2))
    return 0


# -- subcommand handlers -----------------------------------------------------


def _cmd_invariants(args) -> int:
    eq = _load_equation(args)
    inv = invariants(eq)
    return _emit({"c4": _fmt(inv.c4), "c6": _fmt(inv.c6), "delta": _fmt(inv.delta)})


def _cmd_tate(args) -> int:
    eq = _parse_curve(args.curve)
    return _emit(tate(eq, args.prime).to_json())


def _cmd_localcount(args) -> int:
    eq = _load_equation(args)
    psi_or_point = None
    if args.point is not None:
        psi_or_point = _parse_point(args.point)
    elif args.psi is not None:
        E = eq if eq.degree == 1 else jacobian(eq)
        red = tate(E, args.prime)
        psi_or_point = red.phi.parse_element(args.psi)
    br = local_count(eq, args.prime, args.degree, psi_or_point)
    return _emit(br.to_json())


def _cmd_globalcount(args) -> int:
    eq = _load_equation(args)
    psi_map = {}
    if args.psi:
        E = eq if eq.degree == 1 else jacobian(eq)
        for item in args.psi.split(";"):
            ptxt, _, etxt = item.partition("=")
            p = int(ptxt)
            psi_map[p] = tate(E, p).phi.parse_element(etxt)
    gc = global_count(eq, args.degree, psi_map)
    return _emit(gc.to_json())


def _cmd_table1(args) -> int:
    kod = parse_kodaira(args.type) if args.m is None else _generic_type(args.type, args.m)
    fib = None
    psi = _psi_for_row(kod, args.cp, args.psi)
    print(json.dumps(table1(kod, args.cp, args.degree, psi)))
    return 0


def _generic_type(text: str, m: int):
    text = text.strip()
    generic = {
        "I2m": ("I", 2 * m), "I2m+1": ("I", 2 * m + 1),
        "I2m*": ("I*", 2 * m), "I2m+1*": ("I*", 2 * m + 1),
    }
    if text in generic:
        kind, n = generic[text]
        from genusone.localred import KodairaType

        return KodairaType(kind, n)
    return parse_kodaira(text)


def _psi_for_row(kod, cp, text):
    from genusone.localred import PhiGroup

    if kod.kind == "I":
        group = PhiGroup("cyclic", max(kod.n, 1))
    elif kod.kind == "I*":
        group = PhiGroup("klein", 4) if kod.n % 2 == 0 else PhiGroup("cyclic", 4)
    else:
        group = PhiGroup("cyclic", {"II": 1, "III": 2, "IV": 3, "IV*": 3, "III*": 2, "II*": 1}[kod.kind])
    return group.parse_element(text) if text else group.zero()


def _table_rows(max_m: int):
    """All tabulated (symbol, c_p, m) rows, with the fiber used to check them."""
    from genusone.localred import I, Istar, II, III, IV, IVstar, IIIstar, IIstar

    rows = []
    for m in range(0, max_m + 1):
        if m >= 1:
            rows.append((I(2 * m), 2, m, fiber(I(2 * m), 2)))
        if m >= 2:
            rows.append((I(2 * m), 2 * m, m, fiber(I(2 * m), 2 * m)))
        rows.append((I(2 * m + 1), 1, m, fiber(I(2 * m + 1), 1)))
        if m >= 1:
            rows.append((I(2 * m + 1), 2 * m + 1, m, fiber(I(2 * m + 1), 2 * m + 1)))
        if m >= 1:
            rows.append((Istar(2 * m), 2, m, fiber(Istar(2 * m), 2)))
            rows.append((Istar(2 * m), 4, m, fiber(Istar(2 * m), 4)))
        rows.append((Istar(2 * m + 1), 2, m, fiber(Istar(2 * m + 1), 2)))
        rows.append((Istar(2 * m + 1), 4, m, fiber(Istar(2 * m + 1), 4)))
    rows.append((II, 1, 0, fiber(II, 1)))
    rows.append((III, 1, 0, fiber(III, 2)))  # row printed with c_p = 1
    rows.append((IV, 1, 0, fiber(IV, 1)))
    rows.append((IV, 3, 0, fiber(IV, 3)))
    rows.append((Istar(0), 1, 0, fiber(Istar(0), 1)))
    rows.append((IVstar, 1, 0, fiber(IVstar, 1)))
    rows.append((IVstar, 3, 0, fiber(IVstar, 3)))
    rows.append((IIIstar, 2, 0, fiber(IIIstar, 2)))
    rows.append((IIstar, 1, 0, fiber(IIstar, 1)))
    return rows


def sweep_table1(max_m: int):
    """Yield CSV rows comparing the enumeration against the closed forms."""
    yield "type,cp,n,m,psi,enumerate,table1,match"
    for kod, cp, m, fib in _table_rows(max_m):
        for n in (2, 3, 4):
            buckets = counts_by_psi(fib, n)
            for psi in fib.fixed_psis():
                enum = buckets[psi.value].total
                closed = table1(kod, cp, n, psi)
                ok = enum == closed
                yield f"{kod},{cp},{n},{m},{psi},{enum},{closed},{str(ok).lower()}"


def _cmd_sweep(args) -> int:
    bad = 0
    for line in sweep_table1(args.max_m):
        print(line)
        if line.endswith(",false"):
            bad += 1
    return 1 if bad else 0


def _cmd_transform(args) -> int:
    eq = _load_equation(args)
    g = _parse_transformation(args.g, eq.degree)
    image = apply_transformation(g, eq)
    return _emit(
        {
            "equation": image.to_json_dict(),
            "det": _fmt(det_transformation(g)),
            "integral": is_integral(image),
        }
    )


def _cmd_minimal(args) -> int:
    eq = _load_equation(args)
    if args.prime:
        return _emit({str(args.prime): is_minimal_at(eq, args.prime)})
    delta = invariants(eq).delta
    primes = sorted(set(factor(delta.numerator)) | set(factor(delta.denominator)))
    return _emit({str(p): is_minimal_at(eq, p) for p in primes})


def _cmd_verify_example1(args) -> int:
    E = fixtures.EXAMPLE1_CURVE
    report = {
        "tate5": tate(E, 5).to_json(),
        "tate19": tate(E, 19).to_json(),
        "localCounts": {
            "5": local_count(E, 5, 3).to_json(),
            "19": local_count(E, 19, 3).to_json(),
        },
        "global": global_count(E, 3).to_json(),
        "modelList": _jsonable(verify_model_list(fixtures.EXAMPLE1_CUBIC, fixtures.EXAMPLE1_TRANSFORMS)),
        "note": "pairwise inequivalence of the listed models is not checked; "
                "the count is the local-global product",
    }
    ok = (
        report["global"]["N"] == 12
        and report["modelList"]["ok"]
        and str(tate(E, 5).kodaira) == "III*"
        and str(tate(E, 19).kodaira) == "I2"
    )
    report["ok"] = ok
    _emit(report)
    return 0 if ok else 1


def _cmd_verify_example2(args) -> int:
    E = fixtures.EXAMPLE2_CURVE
    quartic = fixtures.EXAMPLE2_QUARTIC
    quadrics = fixtures.EXAMPLE2_QUADRICS
    iv = invariants(quadrics)
    report = {
        "deltaMin": _fmt(invariants(E).delta),
        "badPrimes": bad_primes(E),
        "global4": global_count(quadrics, 4).to_json(),
        "quadricsIntegral": is_integral(quadrics),
        "quadricsVDelta": {
            "5": padic_valuation(iv.delta, 5),
            "37": padic_valuation(iv.delta, 37),
        },
        "quarticVDelta": {
            "5": padic_valuation(invariants(quartic).delta, 5),
            "37": padic_valuation(invariants(quartic).delta, 37),
        },
    }
    ok = (
        report["deltaMin"] == 185
        and report["badPrimes"] == []
        and report["global4"]["N"] == 1
        and report["quadricsIntegral"]
        and report["quadricsVDelta"] == {"5": 1, "37": 1}
    )
    report["ok"] = ok
    _emit(report)
    return 0 if ok else 1


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return _fmt(obj)
    return obj


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="genusone",
        description="Count minimal models of genus one curves over Q.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_eq_args(p, curve_only=False):
        p.add_argument("--curve", help="Weierstrass coefficients a1,a2,a3,a4,a6")
        if not curve_only:
            p.add_argument("--eq-inline", help="equation as 'deg=<n>; coeffs=[...]'")
            p.add_argument("--eq-file", help="file holding the equation text")

    p = sub.add_parser("invariants", help="c4, c6 and Delta of an equation")
    add_eq_args(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("tate", help="reduction data of a curve at a prime")
    p.add_argument("--curve", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_tate)

    p = sub.add_parser("localcount", help="local minimal model count at a prime")
    add_eq_args(p)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--degree", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--psi", help="component class, e.g. '1' or '1,0'")
    p.add_argument("--point", help="rational point 'x,y' or 'inf'")
    p.set_defaults(func=_cmd_localcount)

    p = sub.add_parser("globalcount", help="global minimal model count over Q")
    add_eq_args(p)
    p.add_argument("--degree", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--psi", help="per-prime classes 'p=elt;p=elt'")
    p.set_defaults(func=_cmd_globalcount)

    p = sub.add_parser("table1", help="closed-form count for a tabulated row")
    p.add_argument("--type", required=True, help="Kodaira symbol, e.g. I4, I3*, IV*")
    p.add_argument("--cp", type=int, required=True)
    p.add_argument("--degree", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--psi", help="component class (default identity)")
    p.add_argument("--m", type=int, help="resolve I2m/I2m+1/I2m*/I2m+1* with this m")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("sweep-table1", help="CSV: enumeration vs closed forms")
    p.add_argument("--max-m", type=int, default=10)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("transform", help="apply a transformation to an equation")
    add_eq_args(p)
    p.add_argument("--g", required=True, help="e.g. 'mu=1/5; M=[[5,0,0],[0,1,0],[0,0,1]]'")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("minimal", help="per-prime minimality of an equation")
    add_eq_args(p)
    p.add_argument("--prime", type=int)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("verify-example1", help="run the degree-3 demo end to end")
    p.set_defaults(func=_cmd_verify_example1)

    p = sub.add_parser("verify-example2", help="run the degree-4 demo end to end")
    p.set_defaults(func=_cmd_verify_example2)

    p = sub.add_parser("psi", help="component class of a rational point")
    p.add_argument("--curve", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_psi)

    return ap


def _cmd_psi(args) -> int:
    eq = _parse_curve(args.curve)
    elt = component_of_point(eq, args.prime, _parse_point(args.point))
    return _emit({"psi": str(elt), "phi": elt.group.to_json()})


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, LookupError, ArithmeticError, OSError) as exc:
        print(json.dumps({"error": str(exc), "where": args.command}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
