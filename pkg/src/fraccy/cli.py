"""Command line interface: ``fraccy <command> <algebra> [options]``.

An algebra argument is either a built-in example name or a path to a file in
the quiver DSL.  Exit status is 0 for decided runs, 2 when some verdict was
left undecided at the cutoff and 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import classifier as cl
from . import fixtures
from . import homdims as hd
from .algebra import BasedAlgebra, fingerprint, replicate
from .homdims import UNDECIDED, YES
from .linalg import check_prime
from .modules import (
    direct_sum,
    dual_regular,
    injective,
    projective,
    projective_resolution,
    regular,
    simple,
)
from .presentation import BuildError, ParseError, QuiverPresentation, build_algebra, parse, serialize

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2


class InputError(Exception):
    pass


def load_presentation(source: str, p: int | None = None) -> QuiverPresentation:
    if source in fixtures.FIXTURES:
        P = fixtures.get(source).presentation()
    elif os.path.exists(source):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"{source}: {e}") from None
        try:
            P = parse(text)
        except ParseError as e:
            raise InputError(f"{source}:{e.line}:{e.col}: {e.message}") from None
    else:
        raise InputError(f"unknown example or missing file: {source!r} (known: {', '.join(sorted(fixtures.FIXTURES))})")
    if p is not None:
        check_prime(p)
        P.p = p
    return P


def load_algebra(source: str, p: int | None = None) -> BasedAlgebra:
    P = load_presentation(source, p)
    try:
        return build_algebra(P)
    except (BuildError, ParseError) as e:
        raise InputError(f"{source}: {e}") from None


def parse_module(A: BasedAlgebra, text: str):
    """``P<v>``, ``I<v>``, ``S<v>``, ``A``, ``DA`` joined by ``+``."""
    names = A.meta.get("vertex_names") or [str(v + 1) for v in range(A.n_vertices)]
    parts = []
    for tok in text.replace(" ", "").split("+"):
        if tok == "A":
            parts.append(regular(A))
            continue
        if tok == "DA":
            parts.append(dual_regular(A))
            continue
        kind, name = tok[:1], tok[1:]
        if kind not in "PIS" or name not in names:
            raise InputError(f"bad module term {tok!r}; use P<v>, I<v>, S<v>, A or DA with v in {names}")
        v = names.index(name)
        parts.append({"P": projective, "I": injective, "S": simple}[kind](A, v))
    return parts[0] if len(parts) == 1 else direct_sum(A, parts)


# -- reports ---------------------------------------------------------------------------


def _table(rows: list[tuple[str, str]]) -> str:
    w = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(w)}  {v}" for k, v in rows)


def _status_exit(*statuses: str) -> int:
    return EXIT_UNDECIDED if UNDECIDED in statuses else EXIT_OK


def _target(args) -> BasedAlgebra:
    A = load_algebra(args.algebra, args.p)
    m = getattr(args, "replicate", 0) or 0
    return replicate(A, m) if m else A


def cmd_info(args):
    A = _target(args)
    fp = fingerprint(A)
    prof = hd.profile(A, args.cutoff)
    data = {"algebra": A.name, "p": A.p, "fingerprint": fp.to_json(), "profile": prof.to_json(), "notes": prof.notes}
    text = _table([
        ("algebra", A.name), ("p", str(A.p)), ("dim", str(fp.dim)), ("simples", str(fp.n_simples)),
        ("radical layers", str(fp.rad_dims)), ("gldim", str(prof.gldim)), ("idim (right)", str(prof.idim_right)),
        ("idim (left)", str(prof.idim_left)), ("domdim (right)", str(prof.domdim_right)),
        ("domdim (left)", str(prof.domdim_left)), ("Iwanaga-Gorenstein", prof.iwanaga_gorenstein),
    ] + [("note", n) for n in prof.notes])
    return data, text, _status_exit(prof.iwanaga_gorenstein)


def cmd_replicate(args):
    A = load_algebra(args.algebra, args.p)
    if args.m < 0:
        raise InputError("-m must be non-negative")
    B = replicate(A, args.m)
    fp = fingerprint(B)
    data = {"algebra": B.name, "m": args.m, "fingerprint": fp.to_json()}
    if args.data:
        data["structure"] = {"labels": list(B.labels), "src": B.src.tolist(), "tgt": B.tgt.tolist(),
                             "idempotents": [list(e) for e in B.idempotents], "mult": B.mult.tolist()}
    text = _table([("algebra", B.name), ("dim", str(fp.dim)), ("simples", str(fp.n_simples)),
                   ("radical layers", str(fp.rad_dims)), ("signature", fp.signature())])
    return data, text, EXIT_OK


def cmd_classify(args):
    if args.lmax < 2:
        raise InputError("--lmax must be at least 2")
    A = load_algebra(args.algebra, args.p)
    cert = cl.classify(A, args.lmax, args.cutoff, args.budget)
    data = cert.to_json()
    rows = [("algebra", A.name), ("selfinjective", str(cert.selfinjective))]
    for r in cert.pairs:
        rows.append((f"l={r.ell}", f"m={r.m} routeB={r.route_b} routeA={r.route_a} sigma={r.sigma}"))
    least = cert.least
    rows.append(("least", f"(m, l) = ({least.m}, {least.ell})" if least else "none"))
    rows += [("note", d) for d in cert.diagnostics]
    return data, _table(rows), EXIT_UNDECIDED if cert.undecided else EXIT_OK


def _verdict_cmd(fn, search, args):
    A = _target(args)
    v = fn(A, args.d, args.cutoff) if args.d is not None else search(A, args.cutoff)
    data = {"algebra": A.name, "status": v.status, "d": v.value, "reason": v.reason}
    return data, _table([(k, str(x)) for k, x in data.items()]), _status_exit(v.status)


def cmd_check_ha(args):
    return _verdict_cmd(hd.check_higher_auslander, hd.is_higher_auslander, args)


def cmd_check_mag(args):
    return _verdict_cmd(hd.check_min_auslander_gorenstein, hd.is_min_auslander_gorenstein, args)


def cmd_half_cy(args):
    A = load_algebra(args.algebra, args.p)
    r = cl.check_half_cy(A, args.n, args.cutoff)
    data = r.to_json()
    text = _table([("(1) twisted n/2-CY", r.cond1), ("(2) precluster + Hom(DA,A)=0", r.cond2),
                   ("(3) duplicated min-AG", r.cond3), ("agree", str(r.agree))])
    code = _status_exit(r.cond1, r.cond2, r.cond3)
    if not r.agree and code == EXIT_OK and UNDECIDED not in (r.cond1, r.cond2, r.cond3):
        print("error: the three conditions disagree", file=sys.stderr)
        code = EXIT_ERROR
    return data, text, code


def _parse_range(s: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in s.split(":"))
    except ValueError:
        raise InputError(f"bad range {s!r}; expected LO:HI") from None
    if lo > hi:
        raise InputError("range must satisfy LO <= HI")
    return lo, hi


def cmd_serre_formal(args):
    A = load_algebra(args.algebra, args.p)
    lo, hi = _parse_range(args.range)
    res = cl.serre_formal_check(A, lo, hi, args.budget, args.cutoff)
    data = {"algebra": A.name, "stalk": {str(i): s for i, s in res.items()}}
    return data, _table([(f"nu^{i}(A)", s) for i, s in res.items()]), _status_exit(*res.values())


def cmd_stalk_property(args):
    A = load_algebra(args.algebra, args.p)
    r = cl.stalk_property_check(A, args.m, args.cutoff)
    wit = {str(v + 1): [{"step": k, "dimVector": dv} for k, dv in w] for v, w in r.witnesses.items()}
    data = {"algebra": A.name, "m": args.m, "status": r.status, "witnesses": wit, "reason": r.reason}
    rows = [("status", r.status)] + [(f"I{v}", str(w)) for v, w in wit.items()]
    if r.reason:
        rows.append(("reason", r.reason))
    return data, _table(rows), _status_exit(r.status)


def cmd_resolve(args):
    A = _target(args)
    M = parse_module(A, args.module)
    res = projective_resolution(M, args.length)
    names = A.meta.get("vertex_names") or [str(v + 1) for v in range(A.n_vertices)]
    terms = [[names[v] if v < len(names) else str(v + 1) for v in t] for t in res.tops]
    data = {"algebra": A.name, "module": args.module, "dimVector": M.dim_vector, "terms": terms, "complete": res.complete}
    rows = [(f"P_{i}", " + ".join(f"P{x}" for x in t) or "0") for i, t in enumerate(terms)]
    rows.append(("complete", str(res.complete)))
    return data, _table(rows), EXIT_OK if res.complete else EXIT_UNDECIDED


def cmd_examples(args):
    if args.action == "list":
        data = {name: f.expected for name, f in fixtures.FIXTURES.items()}
        return data, "\n".join(sorted(fixtures.FIXTURES)), EXIT_OK
    if not args.name:
        raise InputError("examples emit needs a name")
    try:
        fx = fixtures.get(args.name)
    except KeyError as e:
        raise InputError(str(e.args[0])) from None
    text = serialize(fx.presentation())
    return {"name": fx.name, "source": text}, text.rstrip("\n"), EXIT_OK


def _batch_job(path: str, lmax: int, cutoff: int, budget, p) -> tuple[str, dict, int]:
    try:
        A = load_algebra(path, p)
        cert = cl.classify(A, lmax, cutoff, budget)
        return path, cert.to_json(), EXIT_UNDECIDED if cert.undecided else EXIT_OK
    except (InputError, ValueError) as e:
        return path, {"error": str(e)}, EXIT_ERROR


def run_batch(paths: list[str], lmax: int, cutoff: int, budget=None, p=None, jobs: int = 1) -> list[tuple[str, dict, int]]:
    if jobs <= 1:
        return [_batch_job(x, lmax, cutoff, budget, p) for x in paths]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futs = [ex.submit(_batch_job, x, lmax, cutoff, budget, p) for x in paths]
        return [f.result() for f in futs]


def cmd_batch(args):
    d = Path(args.directory)
    if not d.is_dir():
        raise InputError(f"not a directory: {d}")
    paths = sorted(str(x) for x in d.glob(args.glob))
    results = run_batch(paths, args.lmax, args.cutoff, args.budget, args.p, args.jobs)
    data = {path: rep for path, rep, _ in results}
    rows = []
    for path, rep, _ in results:
        least = rep.get("least")
        rows.append((Path(path).name, rep["error"] if "error" in rep else (f"(m, l) = ({least['m']}, {least['l']})" if least else "none")))
    codes = [c for _, _, c in results]
    code = EXIT_ERROR if EXIT_ERROR in codes else (EXIT_UNDECIDED if EXIT_UNDECIDED in codes else EXIT_OK)
    return data, _table(rows) if rows else "(no files)", code


# -- argument parsing ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; status 2 is reserved for undecided runs
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-p", type=int, default=None, help="override the field characteristic")
    common.add_argument("--cutoff", type=int, default=hd.DEFAULT_CUTOFF)
    common.add_argument("--lmax", type=int, default=4)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--jobs", type=int, default=1)

    ap = _Parser(prog="fraccy", description="Twisted fractionally Calabi-Yau tests for bound quiver algebras over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, algebra=True, rep=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if algebra:
            sp.add_argument("algebra", help="example name or DSL file")
        if rep:
            sp.add_argument("-m", "--replicate", type=int, default=0, help="work with the m-replicated algebra")
        sp.set_defaults(func=fn)
        return sp

    add("info", cmd_info, "fingerprint and homological profile", rep=True)
    sp = add("replicate", cmd_replicate, "fingerprint of the m-replicated algebra")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--data", action="store_true", help="include structure constants")
    add("classify", cmd_classify, "search for twisted (m, l)-CY pairs")
    sp = add("check-ha", cmd_check_ha, "higher Auslander test", rep=True)
    sp.add_argument("-d", type=int, default=None)
    sp = add("check-mag", cmd_check_mag, "minimal Auslander-Gorenstein test", rep=True)
    sp.add_argument("-d", type=int, default=None)
    sp = add("half-cy", cmd_half_cy, "three equivalent n/2-CY conditions")
    sp.add_argument("-n", type=int, required=True)
    sp = add("serre-formal", cmd_serre_formal, "are the Nakayama powers of A sums of stalks")
    sp.add_argument("--range", default="0:2", help="LO:HI")
    sp = add("stalk-property", cmd_stalk_property, "syzygy stalk pattern over A^(m)")
    sp.add_argument("-m", type=int, required=True)
    sp = add("resolve", cmd_resolve, "minimal projective resolution", rep=True)
    sp.add_argument("--module", required=True, help="e.g. S1, P2+I3, DA")
    sp.add_argument("--length", type=int, default=10)
    sp = add("examples", cmd_examples, "built-in examples", algebra=False)
    sp.add_argument("action", choices=["list", "emit"])
    sp.add_argument("name", nargs="?")
    sp = add("batch", cmd_batch, "classify every DSL file in a directory", algebra=False)
    sp.add_argument("directory")
    sp.add_argument("--glob", default="*.quiver")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.cutoff < 1:
        print("error: --cutoff must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        data, text, code = args.func(args)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    print(json.dumps(data, indent=2, sort_keys=False) if args.format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
