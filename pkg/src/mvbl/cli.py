"""Command line entry point: ``mvbl <subcommand> ...``.

Exit status is 0 on success, 1 when a domain error is raised (its class name
and witness go to stderr) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as core
from .cipher import DEFAULT_ALPHABET, Alphabet, SecretKey, decrypt, encrypt
from .comet import classify, ordinal_split
from .constructors import boolean_algebra, direct_product, mv_chain, ordinal_sum, parse_descriptor, ring_ideal_lattice
from .enumeration import census, default_catalog, enumerate_bl, ring_scan
from .errors import AlgebraError
from .quotient_ring import annihilator, classify_element, ideals, lattice_order, make_general, make_ring, to_algebra
from .zp_poly import parse_poly


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _read_algebra(path: str) -> core.FiniteAlgebra:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return core.from_json(text)


def _emit_algebra(L, fmt: str, out: str | None):
    if fmt == "dot":
        text = core.to_dot(L)
    elif fmt == "table":
        text = f"{L.label or 'algebra'} (n={L.n})\n{L.table('imp')}\n\n{L.table('odot')}\n"
    else:
        text = core.to_json(L, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _alphabet(args) -> Alphabet:
    return Alphabet.from_file(args.alphabet) if args.alphabet else DEFAULT_ALPHABET


# -- handlers ----------------------------------------------------------------------

def cmd_encrypt(args):
    ct, key, tr = encrypt(args.text, _alphabet(args), args.p, args.beta, ideal=args.ideal)
    if args.trace:
        print(_dump({"ciphertext": ct, "key": [key.p, key.beta, key.l], "trace": tr.to_dict()}))
    else:
        print(ct)
        print(f"key {key.p},{key.beta},{key.l}")


def cmd_decrypt(args):
    key = SecretKey.parse(args.key)
    cands = decrypt(args.text, _alphabet(args), key, strict=args.strict)
    if args.format == "json":
        print(_dump({"key": [key.p, key.beta, key.l], "candidates": cands}))
    else:
        print("\n".join(cands))


def cmd_ring_ideals(args):
    if args.modulus:
        ring = make_general(args.p, parse_poly(args.modulus, args.p))
    else:
        ring = make_ring(args.p, args.beta)
    L = to_algebra(ring)
    if args.format == "dot":
        sys.stdout.write(core.to_dot(L, name=str(ring)))
        return
    edges = [[L.names[x], L.names[y]] for x, y in core.covers(L)]
    name = {I.exps: L.names[k] for k, I in enumerate(lattice_order(ring))}
    rows = []
    for I in ideals(ring):
        rows.append({"ideal": name[I.exps], "size": I.size, "annihilator": name[annihilator(I).exps]})
    if args.format == "json":
        print(_dump({"ring": str(ring), "factorization": str(ring.factorization),
                     "squarefree": ring.squarefree, "ideals": rows, "hasse": edges}))
        return
    print(f"{ring}   {ring.modulus} = {ring.factorization}   ({len(rows)} ideals)")
    w = max(len(r["ideal"]) for r in rows)
    for r in rows:
        print(f"  {r['ideal'].ljust(w)}  size {r['size']:<6} Ann = {r['annihilator']}")
    print("  Hasse edges: " + ", ".join(f"{a} < {b}" for a, b in edges))
    if args.element:
        a = ring(parse_poly(args.element, args.p))
        print(f"  {a} is {classify_element(a).value}")


def cmd_algebra(args):
    L = _read_algebra(args.input)
    if args.action == "check":
        rep = core.check_axioms(L)
        print(_dump({"n": L.n, **rep.flags(), "witnesses": {k: list(v) for k, v in rep.witnesses.items()}}))
    elif args.action == "classify":
        print(_dump(classify(L).to_dict(L.names)))
    elif args.action == "split":
        print(_dump([s.to_dict(L.names) for s in ordinal_split(L)]))
    elif args.action == "iso":
        if not args.other:
            raise SystemExit("algebra iso needs --other")
        M = _read_algebra(args.other)
        f = core.isomorphism(L, M, cap=args.cap)
        print(_dump(None if f is None else {L.names[a]: M.names[b] for a, b in enumerate(f)}))
    elif args.action == "dot":
        sys.stdout.write(core.to_dot(L))


def cmd_build(args):
    kind = args.kind
    if kind == "mvchain":
        L = mv_chain(args.m)
    elif kind == "boolean":
        L = boolean_algebra(args.m)
    elif kind in ("ordsum", "product"):
        if not (args.left and args.right):
            raise SystemExit(f"build {kind} needs --left and --right")
        A, B = _read_algebra(args.left), _read_algebra(args.right)
        L = ordinal_sum(A, B) if kind == "ordsum" else direct_product(A, B)
    else:
        if not args.desc:
            raise SystemExit("build ring needs --desc")
        L = ring_ideal_lattice(parse_descriptor(args.desc), cap=args.cap)
    _emit_algebra(L, args.format, args.out)


def cmd_enumerate(args):
    algs = enumerate_bl(args.n, include_products=not args.no_products)
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        for k, L in enumerate(algs, 1):
            (d / f"bl{args.n}_{k:02d}.json").write_text(core.to_json(L, indent=2) + "\n", encoding="utf-8")
    for k, L in enumerate(algs, 1):
        print(f"{k:3d}  {classify(L).classification.value:<14} {L.label}")


def cmd_census(args):
    rep = census(args.max, include_products=not args.no_products)
    print(rep.to_json(args.representatives) if args.format == "json" else rep.to_table())


def cmd_scan(args):
    descs = [parse_descriptor(s) for s in args.desc] if args.desc else default_catalog()
    rep = ring_scan(descs, strict=False)
    if args.format == "json":
        print(_dump(rep.to_dict()))
    else:
        for e in rep.entries:
            flag = "ok" if not e.violations else "VIOLATION " + ",".join(e.violations)
            print(f"{e.ring:<36} n={e.n:<4} {e.classification:<14} {flag}")
        print(f"{len(rep.entries)} rings, {len(rep.violations)} violations")
    if rep.violations:
        return 1
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mvbl", description="Ideal lattices, BL-algebras and the annihilator cipher.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("encrypt", help="encrypt a plaintext")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--beta", type=int, required=True)
    s.add_argument("--text", required=True)
    s.add_argument("--ideal", help="explicit generator of I_t, e.g. 'x^2+2x'")
    s.add_argument("--alphabet", help="file with one symbol per line")
    s.add_argument("--trace", action="store_true", help="print the full trace as JSON")
    s.set_defaults(func=cmd_encrypt)

    s = sub.add_parser("decrypt", help="list candidate plaintexts")
    s.add_argument("--key", required=True, help="p,beta,l")
    s.add_argument("--text", required=True)
    s.add_argument("--alphabet")
    s.add_argument("--strict", action="store_true", help="keep only canonical re-encryptions")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_decrypt)

    s = sub.add_parser("ring-ideals", help="ideals of Z_p[x]/(x^(beta+1)-x) or Z_p[x]/(f)")
    s.add_argument("--p", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--beta", type=int)
    g.add_argument("--modulus")
    s.add_argument("--element", help="also classify this element")
    s.add_argument("--format", choices=("table", "json", "dot"), default="table")
    s.set_defaults(func=cmd_ring_ideals)

    s = sub.add_parser("algebra", help="inspect an algebra given as JSON")
    s.add_argument("action", choices=("check", "classify", "split", "iso", "dot"))
    s.add_argument("--in", dest="input", required=True, help="JSON file, or - for stdin")
    s.add_argument("--other", help="second algebra for iso")
    s.add_argument("--cap", type=int, default=core.ISO_SIZE_CAP)
    s.set_defaults(func=cmd_algebra)

    s = sub.add_parser("build", help="construct an algebra")
    s.add_argument("kind", choices=("mvchain", "boolean", "ordsum", "product", "ring"))
    s.add_argument("--m", type=int, default=2, help="size for mvchain / boolean")
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--desc", help="ring descriptor, e.g. 'Prod(Zn(2),Zn(4))'")
    s.add_argument("--cap", type=int, default=4096)
    s.add_argument("--format", choices=("json", "dot", "table"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("enumerate", help="all BL-algebras of a given size")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", help="directory for one JSON file per class")
    s.add_argument("--no-products", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", help="counts per size")
    s.add_argument("--max", type=int, default=6)
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.add_argument("--representatives", action="store_true")
    s.add_argument("--no-products", action="store_true")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("scan", help="check ideal lattices of catalog rings")
    s.add_argument("--desc", action="append", help="ring descriptor (repeatable); default: built-in catalog")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_scan)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args) or 0
    except AlgebraError as exc:
        w = f" witness={exc.witness}" if exc.witness is not None else ""
        print(f"{type(exc).__name__}: {exc}{w}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        if isinstance(exc.code, str):
            ap.print_usage(sys.stderr)
            print(f"mvbl: error: {exc.code}", file=sys.stderr)
            return 2
        raise


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
