"""Command-line frontend exposing the library operations.

Exit codes: 0 success, 1 argument/format errors, 2 domain errors raised
by the library.  ``--json`` emits a stable schema with exact integers as
decimal strings; floats carry 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import (
    GroupAction,
    IntersectionSums,
    Permutation,
    Residue,
    bracelets_odd,
    burnside_orbits,
    complement_size,
    compose,
    conjugate_by,
    cube_face_rotations,
    cycle_type,
    cyclic_group,
    decimal_period,
    delta,
    derangements,
    detect_polynomial,
    dihedral_group,
    discrete_log,
    find_primitive_root,
    format_cycles,
    format_poly,
    g_factor,
    gauss_constructible,
    lagrange_resolvents,
    legendre,
    mod_pow,
    multiplicative_order,
    necklaces,
    order,
    parse_cycles,
    parse_gaussian,
    parse_poly,
    parse_rational,
    sigma_poly,
    solve_cubic,
    solve_quartic,
    sqrt_mod,
    surjections,
    two_squares,
    union_size,
)


class InputError(Exception):
    """Malformed input bodies (polynomials, permutations, JSON families)."""


def _read_arg(value: str) -> str:
    return sys.stdin.read() if value == "-" else value


def _decode(fn, *args):
    try:
        return fn(*args)
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return _fmt_float(z.real)
    return f"{_fmt_float(z.real)}{z.imag:+.12g}i"


def _json_complex(z: complex) -> dict:
    return {"re": float(_fmt_float(z.real)), "im": float(_fmt_float(z.imag))}


def _json_float(x: float) -> float:
    return float(_fmt_float(x))


# ----- handlers: each returns (human_text, json_payload) ---------------


def _cmd_modpow(args):
    r = mod_pow(Residue(args.base, args.modulus), args.exponent)
    return str(r.value), {"result": str(r.value)}


def _cmd_order(args):
    k = multiplicative_order(Residue(args.a, args.modulus))
    return str(k), {"result": str(k)}


def _cmd_primroot(args):
    g = find_primitive_root(args.modulus)
    if g is None:
        return "none", {"result": None}
    return str(g.value), {"result": str(g.value)}


def _cmd_dlog(args):
    x = discrete_log(
        Residue(args.base, args.modulus), Residue(args.target, args.modulus)
    )
    if x is None:
        return "none", {"result": None}
    return str(x), {"result": str(x)}


def _cmd_period(args):
    k = decimal_period(args.modulus)
    return str(k), {"result": str(k)}


def _cmd_legendre(args):
    v = legendre(args.a, args.p)
    return str(v), {"result": str(v)}


def _cmd_sqrtmod(args):
    roots = sqrt_mod(args.a, args.p)
    if roots is None:
        return "none", {"roots": None}
    if roots == (0, 0):
        return "0", {"roots": ["0"]}
    return f"{roots[0]} {roots[1]}", {"roots": [str(r) for r in roots]}


def _cmd_gfactor(args):
    z = _decode(parse_gaussian, _read_arg(args.z))
    fac = g_factor(z)
    parts = [
        f"({pi})" if e == 1 else f"({pi})^{e}" for pi, e in fac.factors
    ]
    if str(fac.unit) != "1":
        parts.insert(0, str(fac.unit))
    text = " * ".join(parts) if parts else "1"
    payload = {
        "unit": str(fac.unit),
        "factors": [[str(pi), str(e)] for pi, e in fac.factors],
    }
    return text, payload


def _cmd_twosquares(args):
    pair = two_squares(args.n)
    if pair is None:
        return "none", {"pair": None}
    return f"{pair[0]} {pair[1]}", {"pair": [str(v) for v in pair]}


def _solver(args, solve):
    f = _decode(parse_poly, _read_arg(args.poly))
    rs = solve(f)
    text = "\n".join(_fmt_complex(z) for z in rs.roots)
    payload = {
        "roots": [_json_complex(z) for z in rs.roots],
        "residual_bound": _json_float(rs.residual_bound),
    }
    return text, payload


def _cmd_solve_cubic(args):
    return _solver(args, solve_cubic)


def _cmd_solve_quartic(args):
    return _solver(args, solve_quartic)


def _cmd_constructible(args):
    v = gauss_constructible(args.n)
    if v.constructible:
        text = "yes"
    else:
        text = f"no ({v.failure_reason} {v.offending_prime})"
    payload = {
        "constructible": v.constructible,
        "failure_reason": v.failure_reason,
        "offending_prime": None
        if v.offending_prime is None
        else str(v.offending_prime),
        "fermat_primes": [str(p) for p in v.fermat_primes],
        "factorization": [[str(p), str(e)] for p, e in v.factorization.factors],
    }
    return text, payload


def _cmd_resolvents(args):
    rset = lagrange_resolvents(args.p, slow=args.slow)
    lines = [f"g = {rset.g}"]
    for r, (t, ok) in enumerate(zip(rset.ts, rset.power_checks)):
        status = "ok" if ok else "FAIL"
        lines.append(f"T_{r} = {_fmt_complex(t)} [lattice {status}]")
    lines.append(f"reconstruction error = {_fmt_float(rset.reconstruction_error)}")
    payload = {
        "g": str(rset.g),
        "ts": [_json_complex(t) for t in rset.ts],
        "power_checks": list(rset.power_checks),
        "reconstruction_error": _json_float(rset.reconstruction_error),
    }
    return "\n".join(lines), payload


def _perm_args(args, names):
    perms = [
        _decode(parse_cycles, _read_arg(getattr(args, name)), args.n)
        for name in names
    ]
    size = max(p.size for p in perms)
    return [
        p
        if p.size == size
        else Permutation(p.images + tuple(range(p.size + 1, size + 1)))
        for p in perms
    ]


def _cmd_perm(args):
    if args.action == "compose":
        f, g = _perm_args(args, ("f", "g"))
        h = compose(f, g)
        return format_cycles(h), {"result": format_cycles(h)}
    if args.action == "order":
        (f,) = _perm_args(args, ("f",))
        k = order(f)
        return str(k), {"result": str(k)}
    if args.action == "type":
        (f,) = _perm_args(args, ("f",))
        t = cycle_type(f)
        text = ",".join(str(v) for v in t)
        return text, {"result": [str(v) for v in t]}
    if args.action == "conj":
        f, x = _perm_args(args, ("f", "g"))
        h = conjugate_by(f, x)
        return format_cycles(h), {"result": format_cycles(h)}
    raise InputError(f"unknown perm action {args.action!r}")


def _group_from_spec(spec: str) -> GroupAction:
    if spec == "cube-faces":
        return cube_face_rotations()
    if spec.startswith("cyclic:"):
        return cyclic_group(int(spec.split(":", 1)[1]))
    if spec.startswith("dihedral:"):
        return dihedral_group(int(spec.split(":", 1)[1]))
    if spec == "-":
        data = json.loads(sys.stdin.read())
        return GroupAction(Permutation(tuple(images)) for images in data)
    raise ValueError(
        "group must be cyclic:N, dihedral:N, cube-faces, or - for JSON stdin"
    )


def _cmd_burnside(args):
    action = _decode(_group_from_spec, args.group)
    k = burnside_orbits(action, args.colors)
    return str(k), {"result": str(k)}


def _cmd_necklace(args):
    k = bracelets_odd(args.n, args.r) if args.bracelets else necklaces(args.n, args.r)
    return str(k), {"result": str(k)}


def _cmd_derangements(args):
    k = derangements(args.n)
    return str(k), {"result": str(k)}


def _cmd_surjections(args):
    k = surjections(args.k, args.n)
    return str(k), {"result": str(k)}


def _family_from_json(text: str) -> IntersectionSums:
    data = json.loads(text)
    if not isinstance(data, dict) or "sets" not in data:
        raise ValueError('expected {"universe": ..., "sets": [[...], ...]}')
    universe = data.get("universe")
    if isinstance(universe, int):
        universe = range(1, universe + 1)
    elif not isinstance(universe, list):
        raise ValueError("universe must be an int or a list")
    return IntersectionSums.from_sets(universe, data["sets"])


def _cmd_delta(args):
    f = _decode(parse_poly, _read_arg(args.poly))
    g = delta(f)
    return format_poly(g), {"result": format_poly(g)}


def _cmd_sigma(args):
    f = _decode(parse_poly, _read_arg(args.poly))
    g = sigma_poly(f)
    return format_poly(g), {"result": format_poly(g)}


def _parse_samples(text: str):
    toks = [t for t in text.replace(",", " ").split() if t]
    if not toks:
        raise ValueError("no samples given")
    return [parse_rational(t) for t in toks]


def _cmd_detect(args):
    samples = _decode(_parse_samples, _read_arg(args.samples))
    fit = detect_polynomial(samples)
    if fit.polynomial is not None:
        return format_poly(fit.polynomial), {
            "polynomial": format_poly(fit.polynomial),
            "candidate": format_poly(fit.candidate),
        }
    text = f"not polynomial (candidate {format_poly(fit.candidate)})"
    return text, {"polynomial": None, "candidate": format_poly(fit.candidate)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmkit",
        description="Exact number theory and algebra toolkit.",
    )
    parser.add_argument(
        "--json", action="store_true", help="emit JSON instead of plain text"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("modpow", help="a^e mod m")
    p.add_argument("base", type=int)
    p.add_argument("exponent", type=int)
    p.add_argument("modulus", type=int)
    p.set_defaults(func=_cmd_modpow)

    p = sub.add_parser("order", help="multiplicative order of a mod m")
    p.add_argument("a", type=int)
    p.add_argument("modulus", type=int)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("primroot", help="smallest primitive root mod m")
    p.add_argument("modulus", type=int)
    p.set_defaults(func=_cmd_primroot)

    p = sub.add_parser("dlog", help="least x with a^x = b (mod m)")
    p.add_argument("base", type=int)
    p.add_argument("target", type=int)
    p.add_argument("modulus", type=int)
    p.set_defaults(func=_cmd_dlog)

    p = sub.add_parser("period", help="decimal period length of 1/m")
    p.add_argument("modulus", type=int)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("legendre", help="Legendre symbol (a/p)")
    p.add_argument("a", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_legendre)

    p = sub.add_parser("sqrtmod", help="square roots of a mod p")
    p.add_argument("a", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_sqrtmod)

    p = sub.add_parser("gfactor", help="factor a Gaussian integer a+bi")
    p.add_argument("z", help='e.g. "7+5i" (or - for stdin)')
    p.set_defaults(func=_cmd_gfactor)

    p = sub.add_parser("twosquares", help="n = a^2 + b^2 if possible")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_twosquares)

    p = sub.add_parser("solve-cubic", help="roots of a degree-3 polynomial")
    p.add_argument("poly", help='e.g. "x^3 + 3*x - 4" (or - for stdin)')
    p.set_defaults(func=_cmd_solve_cubic)

    p = sub.add_parser("solve-quartic", help="roots of a degree-4 polynomial")
    p.add_argument("poly", help='e.g. "x^4 + 4*x - 1" (or - for stdin)')
    p.set_defaults(func=_cmd_solve_quartic)

    p = sub.add_parser("constructible", help="is the regular n-gon constructible")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_constructible)

    p = sub.add_parser("resolvents", help="Lagrange resolvents at prime p")
    p.add_argument("p", type=int)
    p.add_argument("--slow", action="store_true", help="allow p = 257")
    p.set_defaults(func=_cmd_resolvents)

    p = sub.add_parser("perm", help="permutation algebra in cycle notation")
    p.add_argument("action", choices=["compose", "order", "type", "conj"])
    p.add_argument("f", help='cycles, e.g. "(1 2)(3 4 5)" (or - for stdin)')
    p.add_argument("g", nargs="?", help="second permutation for compose/conj")
    p.add_argument("--n", type=int, default=None, help="act on 1..n")
    p.set_defaults(func=_cmd_perm_checked)

    p = sub.add_parser("burnside", help="orbit count of r-colorings")
    p.add_argument("group", help="cyclic:N | dihedral:N | cube-faces | -")
    p.add_argument("colors", type=int)
    p.set_defaults(func=_cmd_burnside)

    p = sub.add_parser("necklace", help="rotating necklace colorings")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument(
        "--bracelets", action="store_true", help="also identify reflections (odd n)"
    )
    p.set_defaults(func=_cmd_necklace)

    p = sub.add_parser("derangements", help="fixed-point-free permutations")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_derangements)

    p = sub.add_parser("surjections", help="surjections from a k-set onto an n-set")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_surjections)

    p = sub.add_parser("ie", help="inclusion-exclusion from a JSON family")
    p.add_argument("family", help="path to JSON, or - for stdin")
    p.set_defaults(func=_cmd_ie_checked)

    p = sub.add_parser("delta", help="difference polynomial P(n+1) - P(n)")
    p.add_argument("poly")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("sigma", help="summation polynomial P(1) + ... + P(n)")
    p.add_argument("poly")
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("detect", help="fit a polynomial to samples at n = 1, 2, ...")
    p.add_argument("samples", help='e.g. "1,4,9,16,25" (or - for stdin)')
    p.set_defaults(func=_cmd_detect)

    return parser


def _cmd_perm_checked(args):
    if args.action in ("compose", "conj") and args.g is None:
        raise InputError(f"perm {args.action} needs two permutations")
    if args.action in ("order", "type") and args.g is not None:
        raise InputError(f"perm {args.action} takes one permutation")
    return _cmd_perm(args)


def _cmd_ie_checked(args):
    if args.family != "-":
        try:
            with open(args.family, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        args = argparse.Namespace(**{**vars(args), "family": "-"})
        sums = _decode(_family_from_json, text)
    else:
        sums = _decode(_family_from_json, sys.stdin.read())
    u = union_size(sums)
    c = complement_size(sums)
    text = f"union = {u}\ncomplement = {c}"
    payload = {
        "m": [str(m) for m in sums.sums],
        "union": str(u),
        "complement": str(c),
    }
    return text, payload


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        text, payload = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"command": args.command, **payload}))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
