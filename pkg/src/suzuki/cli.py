"""Command-line front end: ``suzuki <subcommand> ...`` or ``python -m suzuki``.

Matrix files hold ``{"ring": {"kind": "gf2m", "m": 3}, "matrix": [[...], ...]}``
with elements as integers (gf2m) or ``[a, b]`` pairs (dual).  ``-`` reads
stdin.  Exit codes: 0 success, 1 negative answer (non-member, failing
suite), 2 bad input or unsupported ring.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bruhat import NotAFieldError, decompose
from .enumeration import MAX_CLOSURE_Q, cell_count, count_elements, enumerate_set, random_element, write_keys
from .group import is_member
from .linalg import Matrix, NotSymplecticError, symplectic_inverse
from .ring import Ring, RingError, make_ring
from .symbolic import IDENTITIES, check_identity
from .verify import SUITES, run_suite


class InputError(Exception):
    pass


def _ring_arg(args):
    if getattr(args, "ring", None):
        try:
            return Ring.from_dict(json.loads(args.ring))
        except (ValueError, RingError) as exc:
            raise InputError("bad --ring: %s" % exc) from None
    if getattr(args, "m", None) is not None:
        try:
            return make_ring("dual" if getattr(args, "dual", False) else "gf2m", args.m)
        except RingError as exc:
            raise InputError(str(exc)) from None
    return None


def _load_matrix(path, ring):
    try:
        fh = sys.stdin if path == "-" else open(path)
        with fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError("cannot read matrix file %s: %s" % (path, exc)) from None
    if isinstance(doc, dict):
        if "ring" in doc:
            try:
                file_ring = Ring.from_dict(doc["ring"])
            except RingError as exc:
                raise InputError(str(exc)) from None
            if ring is not None and ring != file_ring:
                raise InputError("ring in %s is %s but --ring says %s" % (path, file_ring, ring))
            ring = file_ring
        rows = doc.get("matrix")
    else:
        rows = doc
    if ring is None:
        raise InputError("no ring given (use --ring or put it in the matrix file)")
    try:
        conv = [[tuple(v) if isinstance(v, list) else v for v in r] for r in rows]
        m = Matrix.from_values(ring, conv)
    except (TypeError, ValueError, RingError) as exc:
        raise InputError("malformed matrix: %s" % exc) from None
    if m.n != 4:
        raise InputError("expected a 4x4 matrix")
    return m


def _matrix_doc(m):
    return {"ring": m.ring.to_dict(), "matrix": m.tolist()}


def _emit(args, doc, human):
    if args.machine:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(human)


def cmd_ring_info(args):
    R = _ring_arg(args)
    if R is None:
        raise InputError("ring-info needs --ring or --m")
    doc = R.to_dict()
    doc.update(size=R.size, modulus=R.modulus, tits_exponent=2 ** (R.n + 1), is_field=R.is_field)
    if R.is_field:
        doc["group_order"] = cell_count(R.q)
    human = "%s: %d elements, modulus %s, tau(x) = x^%d" % (R, R.size, bin(R.modulus), 2 ** (R.n + 1))
    if R.is_field:
        human += ", |Sz| = %d" % doc["group_order"]
    _emit(args, doc, human)
    return 0


def cmd_member(args):
    m = _load_matrix(args.matrix, _ring_arg(args))
    res = is_member(m)
    doc = {"member": res.ok, "reason": res.reason, "generator": res.generator, "coordinate": res.coordinate}
    _emit(args, doc, "true" if res else "false: " + res.describe())
    return 0 if res else 1


def cmd_decompose(args):
    m = _load_matrix(args.matrix, _ring_arg(args))
    if not m.ring.is_field:
        print("decompose needs a field, got %s" % m.ring, file=sys.stderr)
        return 2
    res = is_member(m)
    if not res:
        _emit(args, {"member": False, "reason": res.reason}, "not a member: " + res.describe())
        return 1
    form = decompose(m, check=False)
    _emit(args, form.to_dict(), json.dumps(form.to_dict()))
    return 0


def cmd_mul(args):
    ring = _ring_arg(args)
    if len(args.matrix) < 2:
        raise InputError("mul needs at least two --matrix arguments")
    mats = [_load_matrix(p, ring) for p in args.matrix]
    out = mats[0]
    for m in mats[1:]:
        if m.ring != out.ring:
            raise InputError("matrices over different rings")
        out = out @ m
    doc = _matrix_doc(out)
    _emit(args, doc, json.dumps(doc))
    return 0


def cmd_inv(args):
    m = _load_matrix(args.matrix, _ring_arg(args))
    try:
        out = symplectic_inverse(m)
    except NotSymplecticError:
        print("matrix is not symplectic", file=sys.stderr)
        return 1
    doc = _matrix_doc(out)
    _emit(args, doc, json.dumps(doc))
    return 0


def cmd_enumerate(args):
    R = _ring_arg(args)
    if R is None or not R.is_field:
        print("enumerate needs --m for a field GF(2^m)", file=sys.stderr)
        return 2
    if R.q > 32:
        print("enumeration is limited to q <= 32", file=sys.stderr)
        return 2
    if args.out:
        n = write_keys(R, args.out)
        doc = {"count": n, "out": args.out, "record_bytes": 2 * R.width}
        _emit(args, doc, str(n))
    elif args.count_only:
        n = count_elements(R, verify=not args.no_verify)
        _emit(args, {"count": n}, str(n))
    else:
        if R.q > MAX_CLOSURE_Q:
            print("set mode is limited to q <= %d; use --count-only" % MAX_CLOSURE_Q, file=sys.stderr)
            return 2
        n = enumerate_set(R).count
        _emit(args, {"count": n}, str(n))
    return 0


def cmd_verify(args):
    R = _ring_arg(args)
    if R is None:
        raise InputError("verify needs --m or --ring")
    try:
        rep = run_suite(args.suite, R, args.samples, args.seed)
    except NotAFieldError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    _emit(args, rep.to_dict(), rep.summary())
    return 1 if rep.status == "fail" else 0


def cmd_prove(args):
    names = list(IDENTITIES) if args.all or not args.identity else [args.identity]
    results = [check_identity(n, args.convention, args.literal and n in ("weyl-first", "weyl-second")) for n in names]
    doc = [
        {"identity": r.name, "pass": r.ok, "at": r.label, "difference": None if r.ok else repr(r.difference)}
        for r in results
    ]
    if args.machine:
        print(json.dumps(doc, sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return 0 if all(results) else 1


def cmd_random(args):
    R = _ring_arg(args)
    if R is None or not R.is_field:
        print("random needs --m for a field GF(2^m)", file=sys.stderr)
        return 2
    g = random_element(R, args.seed)
    doc = _matrix_doc(g.matrix)
    _emit(args, doc, json.dumps(doc))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="suzuki", description="Suzuki groups Sz(R, tau) over Tits rings")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, ring=True, matrix=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        sp.add_argument("--machine", action="store_true", help="print one JSON document")
        if ring:
            sp.add_argument("--ring", help='ring as JSON, e.g. \'{"kind": "gf2m", "m": 3}\'')
            sp.add_argument("--m", type=int, help="odd extension degree (shortcut for --ring)")
            sp.add_argument("--dual", action="store_true", help="with --m: use the dual numbers over GF(2^m)")
        if matrix == "one":
            sp.add_argument("--matrix", required=True, help="matrix file, or - for stdin")
        elif matrix == "many":
            sp.add_argument("--matrix", action="append", required=True, help="matrix file (repeat)")
        return sp

    add("ring-info", cmd_ring_info, "describe a ring")
    add("member", cmd_member, "test membership in Sz", matrix="one")
    add("decompose", cmd_decompose, "Bruhat normal form", matrix="one")
    add("mul", cmd_mul, "multiply matrices", matrix="many")
    add("inv", cmd_inv, "inverse of a symplectic matrix", matrix="one")
    sp = add("enumerate", cmd_enumerate, "count or list Sz(q)")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--no-verify", action="store_true", help="with --count-only: skip per-batch checks")
    sp.add_argument("--out", help="write fixed-width key records to this file")
    sp = add("verify", cmd_verify, "run a witness suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("prove", cmd_prove, "check symbolic identities", ring=False)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--identity", choices=list(IDENTITIES))
    g.add_argument("--all", action="store_true")
    sp.add_argument("--convention", choices=("right", "left"), default="right",
                    help="conjugation g^h = h^-1 g h (right) or h g h^-1 (left)")
    sp.add_argument("--literal", action="store_true", help="Weyl relation with s h(t) instead of s h(t^tau)")
    sp = add("random", cmd_random, "uniform random element")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
