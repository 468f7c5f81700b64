"""Command-line front end (``kideal``)."""

from __future__ import annotations

import argparse
import io
import itertools
import logging
import sys
from pathlib import Path

from . import classify as cl
from .errors import InvalidParameter, InvalidSemiring, KIdealError, ParseError, PreconditionError
from .extcontract import PROBE_ITEMS, FAIL as CEP_FAIL, cep_verify
from .formats import load_semiring, serialize_semiring
from .ideals import (
    enumerate_ideals,
    format_ideal,
    gen_mask,
    ideal_masks,
    ideal_product_mask,
    is_k_ideal_mask,
    k_product_mask,
    kclose_mask,
    lattice_check,
    parse_ideal,
    sum_mask,
)
from .nat import (
    nat_combine,
    nat_ideal_generated,
    nat_is_k_ideal,
    nat_k_closure,
)
from .report import CheckRecord, FAIL, PASS, emit_report, exit_code
from .semiring import (
    Homomorphism,
    canonical_form,
    corpus,
    enumerate_homomorphisms,
    enumerate_semirings,
    is_homomorphism,
    table_string,
    validate,
)
from .verify import SUITES, run_suites

EXIT_USAGE = 2
EXIT_INPUT = 3

log = logging.getLogger("kideal")


def _load(path):
    try:
        R, perm = load_semiring(path)
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from None
    except ParseError as e:
        raise ParseError(f"{path}: {e.message}", e.line) from None
    except InvalidSemiring as e:
        raise ParseError(f"{path}: {e}") from None
    return R, perm


def cmd_validate(args, out):
    try:
        R, perm = load_semiring(args.file)
    except InvalidSemiring as e:
        recs = [CheckRecord(f"axiom.{ax}", FAIL, "witness=" + ",".join(map(str, w)))
                for ax, w in e.report.violations]
        out.write(emit_report(recs, args.format))
        return 1
    except (OSError, ParseError):
        _load(args.file)
        raise
    rep = validate(R)
    recs = [CheckRecord("axiom.all", PASS, f"{R.name} order={R.order}")]
    if perm != tuple(range(R.order)):
        recs.append(CheckRecord("normalize.relabel", PASS,
                                " ".join(f"{old}->{new}" for old, new in enumerate(perm))))
    assert rep.ok
    out.write(emit_report(recs, args.format))
    return 0


def cmd_ideals(args, out):
    R, _ = _load(args.file)
    for I in enumerate_ideals(R, k_only=args.k_only):
        out.write(str(I) + "\n")
    return 0


def cmd_classify(args, out):
    R, _ = _load(args.file)
    I = parse_ideal(R, args.ideal)
    tags = cl.class_tags(I)
    out.write(tags.line(R, I.mask) + "\n")
    if is_k_ideal_mask(R, I.mask):
        out.write(f"K_RADICAL {cl.k_radical(I)}\n")
    else:
        out.write(f"K_CLOSURE {format_ideal(R, kclose_mask(R, I.mask))}\n")
    return 0


def cmd_spectrum(args, out):
    R, _ = _load(args.file)
    sp = cl.spectrum(R)
    for p in sp.primes:
        tag = " MINIMAL" if p in sp.minimal_primes else ""
        out.write(f"PRIME {format_ideal(R, p)}{tag}\n")
    for comp in sp.components:
        members = [format_ideal(R, sp.primes[i]) for i in range(len(sp.primes)) if comp >> i & 1]
        out.write("COMPONENT " + " ".join(members) + "\n")
    for m, v in sorted(sp.closed_sets.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0])):
        members = [format_ideal(R, sp.primes[i]) for i in range(len(sp.primes)) if v >> i & 1]
        out.write(f"V {format_ideal(R, m)} = [{' '.join(members)}]\n")
    lat = lattice_check(R)
    flags = cl.structure_flags(R)
    out.write(f"LATTICE size={len(lat)} modular={int(lat.modular)} distributive={int(lat.distributive)} "
              f"totally_ordered={int(lat.totally_ordered)} arithmetic_all_ideals={int(flags.arithmetic_all_ideals)}\n")
    return 0


def cmd_verify(args, out):
    semirings = [_load(f)[0] for f in args.files]
    if args.corpus:
        semirings = corpus() + semirings
    if not semirings:
        raise InvalidParameter("verify needs at least one file or --corpus")
    recs = run_suites(semirings, args.suite)
    out.write(emit_report(recs, args.format))
    return exit_code(recs)


def cmd_hom(args, out):
    A, _ = _load(args.file_a)
    B, _ = _load(args.file_b)
    if args.map is None:
        homs = enumerate_homomorphisms(A, B)
        for h in homs:
            out.write(f"HOM {h.ident}\n")
        out.write(f"COUNT {len(homs)}\n")
        return 0
    names = [t.strip() for t in args.map.split(",") if t.strip()]
    m = tuple(B.index(nm) for nm in names)
    v = is_homomorphism(m, A, B)
    if not v:
        w = v.witness
        if len(w) == 3:
            w = (w[0], A.names[w[1]], A.names[w[2]])
        out.write(f"HOM FAIL {' '.join(w)}\n")
        return 1
    rep = cep_verify(Homomorphism(A, B, m))
    for line in rep.lines():
        out.write(line + "\n")
    return 0 if rep.ok else 1


def cmd_enumerate(args, out):
    count = 0
    for R in enumerate_semirings(args.order, up_to_iso=args.up_to_iso, max_order=args.cap):
        out.write(f"{R.name} {canonical_form(R) if args.up_to_iso else _table(R)}\n")
        count += 1
    out.write(f"COUNT {count}\n")
    return 0


def _table(R):
    return table_string(R)


def _population(max_order, cap):
    for n in range(1, max_order + 1):
        yield from enumerate_semirings(n, up_to_iso=True, max_order=cap)


def cmd_search(args, out):
    prop = args.property
    found = None
    instances = strict = 0
    # an explicit --max-order is consent to enumerate that far
    cap = args.cap if args.cap is not None else max(args.max_order, 1)
    pop = list(_population(args.max_order, cap))
    for R in pop:
        if prop == "cep7-literal-fail":
            for S in pop:
                for h in enumerate_homomorphisms(R, S):
                    instances += 1
                    rep = cep_verify(h)
                    bad = [i for i in PROBE_ITEMS if rep.items[i].status == CEP_FAIL]
                    if bad:
                        strict += 1
                        if found is None:
                            found = (R, [l for l in rep.lines() if any(f"ITEM {b} " in l for b in bad)])
            continue
        A = ideal_masks(R)
        K = ideal_masks(R, k_only=True)
        if prop == "sum-not-k":
            for a, b in itertools.product(K, K):
                instances += 1
                s = gen_mask(R, sum_mask(R, a, b))
                if not is_k_ideal_mask(R, s):
                    strict += 1
                    if found is None:
                        found = (R, [f"I={format_ideal(R, a)} J={format_ideal(R, b)} I+J={format_ideal(R, s)}"])
        elif prop in ("strict-6", "strict-9"):
            for a, b in itertools.product(A, A):
                instances += 1
                if prop == "strict-6":
                    small = kclose_mask(R, a) | kclose_mask(R, b)
                    big = kclose_mask(R, gen_mask(R, a | b))
                else:
                    small = k_product_mask(R, kclose_mask(R, a), kclose_mask(R, b))
                    big = kclose_mask(R, ideal_product_mask(R, a, b))
                if small != big:
                    strict += 1
                    if found is None:
                        found = (R, [f"I={format_ideal(R, a)} J={format_ideal(R, b)} "
                                     f"smaller={format_ideal(R, small)} larger={format_ideal(R, big)}"])
        else:
            raise InvalidParameter(f"unknown property {prop!r}")
    out.write(f"SEARCH {prop} semirings={len(pop)} instances={instances} hits={strict}\n")
    if found is None:
        out.write(f"NO WITNESS up to order {args.max_order}\n")
    else:
        R, lines = found
        out.write(f"WITNESS {R.name}\n")
        for l in lines:
            out.write(l + "\n")
        out.write(serialize_semiring(R))
    if prop == "sum-not-k":
        out.write("KNOWN N: 2N + 3N = N \\ {1} is not a k-ideal (x=2, y=1)\n")
    return 0


def cmd_nat(args, out):
    try:
        gens = [int(t) for t in args.generators.split(",") if t.strip()]
    except ValueError:
        raise InvalidParameter(f"bad generator list {args.generators!r}") from None
    if args.op in ("sum", "intersect"):
        parts = [nat_ideal_generated([g]) for g in gens]
        result = parts[0]
        for p in parts[1:]:
            result = nat_combine(result, p, args.op)
        out.write(f"{result.format()}\n{result.describe()}\n")
        return 0
    I = nat_ideal_generated(gens)
    if args.op == "generate":
        result = I
    elif args.op == "kclosure":
        result = nat_k_closure(I)
    else:
        v = nat_is_k_ideal(I)
        out.write(f"{I.format()}\n{I.describe()}\n")
        out.write("K-IDEAL yes\n" if v else f"K-IDEAL no witness x={v.witness[0]} y={v.witness[1]}\n")
        return 0
    out.write(f"{result.format()}\n{result.describe()}\n")
    return 0


def cmd_corpus(args, out):
    dest = Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)
    for R in corpus():
        path = dest / f"{R.name.lower()}.sr"
        path.write_text(serialize_semiring(R), encoding="utf-8")
        out.write(f"{path}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kideal", description="k-ideals of finite commutative semirings")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the semiring axioms of a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("ideals", help="list all ideals (or k-ideals)")
    s.add_argument("file")
    s.add_argument("--k-only", action="store_true")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("classify", help="classification flags of one ideal")
    s.add_argument("file")
    s.add_argument("--ideal", required=True, help="comma-separated element names")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("spectrum", help="k-primes, closed sets and components")
    s.add_argument("file")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("files", nargs="*")
    s.add_argument("--corpus", action="store_true", help="include the built-in corpus")
    s.add_argument("--suite", choices=("all",) + SUITES, default="all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("hom", help="list or check homomorphisms between two semirings")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--map", help="images of the source elements, comma-separated")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("enumerate", help="enumerate semirings of a given order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--cap", type=int, default=None, help="raise the enumeration order cap")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search", help="exhaustive witness search over small semirings")
    s.add_argument("--property", required=True,
                   choices=("sum-not-k", "strict-6", "strict-9", "cep7-literal-fail"))
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("nat", help="ideals of the natural numbers")
    s.add_argument("--generators", required=True)
    s.add_argument("--op", choices=("generate", "kclosure", "sum", "intersect", "is-k"), default="generate")
    s.set_defaults(func=cmd_nat)

    s = sub.add_parser("corpus", help="write the built-in corpus as .sr files")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_corpus)
    return p


def run_command(argv, out=None) -> int:
    """Run one command writing to ``out`` (default stdout); return the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidParameter, PreconditionError, KIdealError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run_capture(argv) -> tuple[int, str]:
    buf = io.StringIO()
    code = run_command(argv, buf)
    return code, buf.getvalue()


def main(argv=None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
