"""Command-line front end.

Examples::

    symchar sigma --lambda 2,1 --cycles 3
    symchar boolean-poly --cycles 3,2 --zeta 0
    symchar kerov-poly --cycles 2,2,2 --grade 2
    symchar verify main --nmax 6 --c 3
    symchar reproduce --filter kerov

Options given on the command line win over a ``--config`` file of
``key = value`` lines, which wins over the environment (``SYMCHAR_WORKERS``)
and the built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Dict, List, Optional

from . import __version__
from .algebra.multipoly import MultiPoly
from .algebra.rational import format_rational, parse_rational
from .characters.frobenius import (
    SYMBOLIC,
    sigma_evaluate,
    sigma_frobenius_numeric,
    sigma_frobenius_polynomial,
    verify_nonnegativity,
)
from .characters.mn import mn_character, normalized_character, sigma_oracle
from .characters.stanley import STANLEY_SIGN, stanley_evaluate, stanley_polynomial
from .diagrams import YoungDiagram, shifted_boolean_cumulants
from .errors import CapExceededError, ShapeError, TruncationError
from .kerov import (
    evaluate_free,
    free_from_boolean,
    identity_cumulant,
    kerov_graded_phi,
    kerov_polynomial,
    linear_terms_check,
)
from .permutations import DEFAULT_CAP, CycleType

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATION = 0, 1, 2, 3

DEFAULTS: Dict[str, object] = {
    "json": False,
    "workers": 1,
    "zeta": "0",
    "order": 10,
    "cap": DEFAULT_CAP,
    "engine": None,
    "basis": "twisted",
    "kmax": 8,
    "nmax": 8,
    "c": "3/2",
    "a": "1",
}


class UsageError(Exception):
    """Invalid input detected after argument parsing."""


# -- value parsers ------------------------------------------------------------


def _diagram(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ShapeError as exc:
        raise UsageError(f"--lambda: {exc}") from None


def _cycles(text: str) -> CycleType:
    try:
        return CycleType.parse(text)
    except (ValueError, ShapeError) as exc:
        raise UsageError(f"--cycles: {exc}") from None


def _rational(text, flag: str):
    try:
        return parse_rational(str(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: expected an integer or a/b, got {text!r}") from None


def _zeta(text) -> object:
    if str(text).strip() == SYMBOLIC:
        return SYMBOLIC
    z = _rational(text, "--zeta")
    if not isinstance(z, int) or z < 0:
        raise UsageError("--zeta must be a non-negative integer or 'zeta'")
    return z


def _int(value, flag: str, minimum: int = 0) -> int:
    try:
        v = int(str(value))
    except ValueError:
        raise UsageError(f"{flag}: expected an integer, got {value!r}") from None
    if v < minimum:
        raise UsageError(f"{flag} must be at least {minimum}")
    return v


def _bool(value) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "on")


# -- configuration ------------------------------------------------------------


def read_config(path: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"--config: {exc}") from None
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_").lower()] = value
    return out


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset options from the config file, the environment, then defaults."""
    config = read_config(args.config) if getattr(args, "config", None) else {}
    env_workers = os.environ.get("SYMCHAR_WORKERS")
    for key in set(DEFAULTS) | set(config):
        if getattr(args, key, None) is not None:
            continue
        if key in config:
            value = config[key]
        elif key == "workers" and env_workers:
            value = env_workers
        elif key in DEFAULTS:
            value = DEFAULTS[key]
        else:
            continue
        setattr(args, key, value)
    args.json = _bool(args.json)
    args.workers = _int(args.workers, "--workers", 1)
    return args


# -- output -------------------------------------------------------------------


def convention(zeta=None) -> Dict[str, str]:
    block = {
        "composition": "(a*b)(x) = a(b(x))",
        "boolean_cumulants": "H(z + zeta) = z + zeta + sum_i B~i z^(1-i); B^i is the zeta = 0 case",
        "free_cumulants": "R_{k+1} = -(1/k) [z^(k+1)] (1 + sum B^i z^i)^k",
        "sigma": "chi(k, 1^(n-K)) * n(n-1)...(n-K+1); zero when K > n",
        "signed_sigma": "(-1)^l Sigma_k",
        "stanley_sign": f"{STANLEY_SIGN} * (-1)^K sum p^kappa(s1) (-q)^kappa(s2)",
        "rectangle": "p rows of length q",
    }
    if zeta is not None:
        block["zeta"] = str(zeta)
    return block


def _emit(args, result: dict, text: str, zeta=None) -> None:
    if args.json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command_path,
            "convention": convention(zeta),
            "result": result,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _fmt(v) -> str:
    return str(v) if isinstance(v, MultiPoly) else format_rational(v)


# -- commands -----------------------------------------------------------------


def cmd_character(args) -> int:
    lam = _diagram(args.lam)
    mu = _cycles(args.mu)
    size = sum(mu.parts)
    if size > lam.n:
        raise UsageError(f"--mu has {size} points but --lambda has only {lam.n} boxes")
    mu = CycleType(mu.parts + (1,) * (lam.n - size))
    chi = mn_character(lam, mu)
    norm = normalized_character(lam, mu)
    value = norm if args.normalized else chi
    _emit(
        args,
        {"lambda": str(lam), "mu": str(mu), "character": _fmt(chi), "normalized": _fmt(norm)},
        _fmt(value),
    )
    return EXIT_OK


def cmd_sigma(args) -> int:
    lam = _diagram(args.lam)
    k = _cycles(args.cycles)
    engine = args.engine or "frobenius"
    zeta = _zeta(args.zeta)
    if zeta == SYMBOLIC:
        raise UsageError("sigma needs a numeric --zeta")
    if engine == "oracle":
        value = sigma_oracle(lam, k)
    elif engine == "frobenius":
        value = sigma_evaluate(lam, k, zeta) if lam.n else sigma_oracle(lam, k)
    elif engine == "numeric":
        value = sigma_frobenius_numeric(lam, k, zeta)
    elif engine == "free":
        order = k.K + k.l
        free = free_from_boolean(shifted_boolean_cumulants(lam, 0, max(order, 2)), max(order, 2))
        value = evaluate_free(kerov_polynomial(k).total(), free)
    else:
        raise UsageError(f"unknown engine {engine!r}; use oracle, frobenius, numeric or free")
    _emit(
        args,
        {"lambda": str(lam), "cycles": str(k), "engine": engine, "sigma": _fmt(value)},
        _fmt(value),
        zeta,
    )
    return EXIT_OK


def cmd_boolean_poly(args) -> int:
    k = _cycles(args.cycles)
    zeta = _zeta(args.zeta)
    cp = sigma_frobenius_polynomial(k, zeta)
    _emit(args, cp.to_json(), str(cp.signed()), zeta)
    return EXIT_OK


def cmd_stanley(args) -> int:
    k = _cycles(args.cycles)
    cap = _int(args.cap, "--cap", 1)
    if (args.p is None) != (args.q is None):
        raise UsageError("give both --p and --q, or neither")
    poly = stanley_polynomial(k, cap)
    result = {"cycles": str(k), "polynomial": str(poly)}
    text = str(poly)
    if args.p is not None:
        p, q = _rational(args.p, "--p"), _rational(args.q, "--q")
        value = stanley_evaluate(k, p, q, cap)
        result.update(p=_fmt(p), q=_fmt(q), value=_fmt(value))
        text = _fmt(value)
    _emit(args, result, text)
    return EXIT_OK


def cmd_kerov_poly(args) -> int:
    k = _cycles(args.cycles)
    engine = args.engine or "substitution"
    if engine == "substitution":
        graded = kerov_polynomial(k)
    elif engine == "phi":
        graded = kerov_graded_phi(k)
    else:
        raise UsageError(f"unknown engine {engine!r}; use substitution or phi")
    if args.grade is None:
        poly = graded.total()
    else:
        g = _int(args.grade, "--grade")
        if g % 2 or g > graded.top_weight:
            raise UsageError(f"--grade must be even and at most {graded.top_weight}")
        poly = graded.grade(g)
    result = graded.to_json()
    result["engine"] = engine
    if args.grade is not None:
        result["grade"] = str(args.grade)
        result["selected"] = str(poly)
    _emit(args, result, str(poly))
    return EXIT_OK


def cmd_cumulant_id(args) -> int:
    k = _cycles(args.cycles)
    poly = identity_cumulant(k)
    _emit(args, {"cycles": str(k), "basis": "free", "cumulant": str(poly)}, str(poly))
    return EXIT_OK


def cmd_cumulants(args) -> int:
    lam = _diagram(args.lam)
    if not lam.n:
        raise UsageError("the empty diagram has no transition measure")
    order = _int(args.order, "--order", 2)
    basis = args.basis
    if basis == "free":
        vec = free_from_boolean(shifted_boolean_cumulants(lam, 0, order), order)
        zeta = None
    else:
        zeta = 0 if basis == "twisted" else _zeta(args.zeta)
        if zeta == SYMBOLIC:
            raise UsageError("cumulants need a numeric --zeta")
        vec = shifted_boolean_cumulants(lam, zeta, order)
    text = "\n".join(f"{i} {format_rational(v)}" for i, v in sorted(vec.values.items()))
    result = vec.to_json()
    result["lambda"] = str(lam)
    _emit(args, result, text, zeta)
    return EXIT_OK


def _report(args, rep, ok: bool, text: str) -> int:
    _emit(args, rep.to_json(), text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_linear(args) -> int:
    mu = _cycles(args.cycles)
    rep = linear_terms_check(mu, _int(args.cap, "--cap", 1))
    result = {
        "cycles": str(mu),
        "status": "pass" if rep.ok else "fail",
        "coefficients": {str(b): _fmt(c) for b, c in sorted(rep.coefficients.items())},
        "counts": {str(b): str(c) for b, c in sorted(rep.counts.items())},
        "linear_mass": _fmt(rep.linear_mass),
        "expected_mass": str(rep.expected_mass),
        "problems": rep.problems,
    }
    lines = [f"b={b}: {_fmt(c)}" for b, c in sorted(rep.coefficients.items())]
    lines.append("pass" if rep.ok else "fail: " + "; ".join(rep.problems))
    _emit(args, result, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_sigma_bound(args) -> int:
    from .bounds import verify_sigma_bound

    rep = verify_sigma_bound(_int(args.nmax, "--nmax", 1), workers=args.workers)
    return _report(args, rep, rep.ok, _summary(rep))


def cmd_verify_main(args) -> int:
    from .bounds import verify_main_bound

    C = _rational(args.c, "--c")
    if C <= 0:
        raise UsageError("--c must be positive")
    rep = verify_main_bound(_int(args.nmax, "--nmax", 1), C, workers=args.workers)
    return _report(args, rep, rep.ok, _summary(rep))


def cmd_verify_corollary(args) -> int:
    from .bounds import verify_corollary_sum

    lam = _diagram(args.lam)
    if not lam.n:
        raise UsageError("--lambda must be non-empty")
    A = _rational(args.a, "--a")
    rep = verify_corollary_sum(lam, A)
    text = (
        f"sum = {format_rational(rep.total)} over {len(rep.classes)} classes; "
        f"within proof-side bound: {rep.within_bound} ({rep.status})"
    )
    _emit(args, rep.to_json(), text)
    return EXIT_OK


def cmd_verify_nonneg(args) -> int:
    k = _cycles(args.cycles)
    zeta = _zeta(args.zeta)
    if zeta == SYMBOLIC:
        raise UsageError("verify nonneg needs a numeric --zeta")
    rep = verify_nonnegativity(k, zeta)
    result = {
        "cycles": str(k),
        "zeta": str(zeta),
        "within_hypothesis": rep.within_hypothesis,
        "status": "pass" if rep.ok else "fail",
        "offending": rep.offending,
    }
    text = "pass" if rep.ok else "fail: " + ", ".join(f"{m}: {c}" for m, c in rep.offending.items())
    if not rep.within_hypothesis:
        text += " (zeta below max k: outside the positivity hypothesis)"
    _emit(args, result, text, zeta)
    return EXIT_OK if rep.ok or not rep.within_hypothesis else EXIT_FAIL


def _summary(rep) -> str:
    head = f"{rep.name}: {rep.status} ({rep.checked} checks, {len(rep.violations)} violations)"
    return "\n".join([head, *rep.notes, *(json.dumps(v, sort_keys=True) for v in rep.violations[:20])])


def cmd_scan(args) -> int:
    from .kerov import conjecture_scan

    scan = conjecture_scan(_int(args.kmax, "--kmax", 1))
    text = (
        f"{scan.checked_free} free and {scan.checked_twisted} twisted polynomials scanned: {scan.status}"
    )
    _emit(args, scan.to_json(), text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .acceptance import run_all, select

    if not select(args.filter):
        raise UsageError(f"--filter {args.filter!r} matches no criterion")
    results = run_all(args.filter, workers=args.workers)
    ok = all(r.ok for _, r, _ in results)
    rows = [
        f"[{'PASS' if r.ok else 'FAIL'}] {c.number:>2} {c.name:<32} {t:8.2f}s  {r.detail}"
        for c, r, t in results
    ]
    rows.append(f"{sum(r.ok for _, r, _ in results)}/{len(results)} criteria passed")
    payload = {
        "criteria": [
            {"number": str(c.number), "name": c.name, "status": "pass" if r.ok else "fail", "detail": r.detail}
            for c, r, _ in results
        ],
        "status": "pass" if ok else "fail",
    }
    _emit(args, payload, "\n".join(rows))
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the sub-command from being reset
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_const", const=True, default=argparse.SUPPRESS,
                        help="emit a schema-versioned JSON document")
    common.add_argument("--config", default=argparse.SUPPRESS, metavar="FILE",
                        help="key = value defaults, overridden by flags")
    common.add_argument("--workers", default=argparse.SUPPRESS, metavar="N",
                        help="worker processes for sweeps (env SYMCHAR_WORKERS)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="symchar", description=__doc__.split("\n\n")[0],
                                     parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn: Callable, help_text: str, parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("character", cmd_character, "irreducible character value by Murnaghan-Nakayama")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 3,1")
    p.add_argument("--mu", required=True, help="cycle type (fixed points optional)")
    p.add_argument("--normalized", action="store_true", help="print chi / dimension")

    p = add("sigma", cmd_sigma, "normalized character Sigma_k on a diagram")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--cycles", required=True)
    p.add_argument("--zeta")
    p.add_argument("--engine", choices=["frobenius", "numeric", "oracle", "free"])

    p = add("boolean-poly", cmd_boolean_poly, "(-1)^l Sigma_k in shifted Boolean cumulants")
    p.add_argument("--cycles", required=True)
    p.add_argument("--zeta", help="non-negative integer or 'zeta' (default 0)")

    p = add("stanley", cmd_stanley, "Sigma_k on the p x q rectangle as a polynomial in p, q")
    p.add_argument("--cycles", required=True)
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--cap", help="largest K for which factorizations are enumerated")

    p = add("kerov-poly", cmd_kerov_poly, "Sigma_k in free cumulants")
    p.add_argument("--cycles", required=True)
    p.add_argument("--grade", help="select the terms of weight K + l - grade")
    p.add_argument("--engine", choices=["substitution", "phi"])

    p = add("cumulant-id", cmd_cumulant_id, "identity cumulant of Sigma_{k_1}, ..., Sigma_{k_l}")
    p.add_argument("--cycles", required=True)

    p = add("cumulants", cmd_cumulants, "cumulants of a diagram's transition measure")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--basis", choices=["twisted", "shifted", "free"], default="twisted")
    p.add_argument("--zeta")
    p.add_argument("--order", help="highest index computed")

    verify = add("verify", None, "exhaustive small-n checks").add_subparsers(
        dest="check", required=True, metavar="CHECK")
    p = add("linear", cmd_verify_linear, "linear terms of identity cumulants", verify)
    p.add_argument("--cycles", required=True)
    p.add_argument("--cap")
    p = add("sigma-bound", cmd_verify_sigma_bound, "bound on |Sigma_k| for small diagrams", verify)
    p.add_argument("--nmax")
    p = add("main", cmd_verify_main, "character bound on balanced diagrams", verify)
    p.add_argument("--nmax")
    p.add_argument("--c")
    p = add("corollary", cmd_verify_corollary, "fourth-moment sum over short permutations", verify)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--a")
    p = add("nonneg", cmd_verify_nonneg, "non-negativity of (-1)^l Sigma_k at zeta", verify)
    p.add_argument("--cycles", required=True)
    p.add_argument("--zeta")

    scan = add("scan", None, "counterexample scans").add_subparsers(
        dest="target", required=True, metavar="TARGET")
    p = add("conjectures", cmd_scan, "negative coefficients in Kerov-type expansions", scan)
    p.add_argument("--kmax")

    p = add("reproduce", cmd_reproduce, "run every acceptance criterion")
    p.add_argument("--filter", help="comma-separated numbers, names or tags")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_path = " ".join(
        x for x in (args.command, getattr(args, "check", None), getattr(args, "target", None)) if x
    )
    try:
        resolve(args)
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"symchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"symchar: error: {exc}; raise --cap to allow a larger enumeration", file=sys.stderr)
        return EXIT_USAGE
    except TruncationError as exc:
        print(f"symchar: error: {exc}; retry with a larger --order", file=sys.stderr)
        return EXIT_TRUNCATION
    except (ShapeError, ValueError) as exc:
        print(f"symchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
