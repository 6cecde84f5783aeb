"""Command-line interface.

Exit codes: 0 claim found/verified, 1 property fails (witness printed),
2 usage or format error, 3 enumeration budget exceeded.  ``MONOPATH_BUDGET``
caps every enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import certify
from .duo import (
    Duo,
    PatternTournament,
    SymbolicPower,
    SymbolicTower,
    duo_construct,
    min_duo,
    theorem_bound,
)
from .enumgen import (
    enumerate_colourings,
    enumerate_tournaments,
    random_instance,
)
from .errors import BudgetExceeded, FormatError, MonopathError, NotFoundWithinCap
from .kernels import (
    gs_violations,
    min_absorbing,
    polychromatic_triples,
    quasi_kernel,
    quasi_partition_duo,
    scan_absorbing_above,
)
from .model import (
    SimpleGraph,
    cycle_graph,
    parse_cdt,
    parse_dg,
    parse_ug,
    serialize_cdt,
)
from .ramsey import (
    build_t,
    check_quasi_mono_c3_all_colourings,
    ramsey_check,
    t1_pattern,
)
from .reach import forbidding_edges, quasi_mono_triangles

ANALYZE_DUO_MAX_N = 40


class Output:
    """Collects a human summary and a JSON record; prints one of them."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.record: dict = {}

    def say(self, line: str) -> None:
        self.lines.append(line)

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.record, sort_keys=True))
        else:
            for line in self.lines:
                print(line)


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _emit_cert(args, out: Output, cert: dict, instance: bytes) -> None:
    cert = {**cert, "input_digest": certify.digest(instance)}
    out.record["certificate"] = cert
    if args.cert:
        Path(args.cert).write_text(json.dumps(cert, sort_keys=True) + "\n")
        out.say(f"certificate written to {args.cert}")
    else:
        out.say("certificate: " + json.dumps(cert, sort_keys=True))


def _pattern(spec: str) -> tuple[PatternTournament, bytes]:
    if spec == "builtin:t1":
        P = t1_pattern()
        return P, serialize_cdt(P.to_tournament()).encode()
    data = _read(spec)
    return PatternTournament.from_tournament(parse_cdt(data)), data


def _motif(spec: str) -> SimpleGraph:
    if spec[:1] in "cC" and spec[1:].isdigit():
        return cycle_graph(int(spec[1:]))
    return parse_ug(_read(spec))


def _fmt(vs) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vs)) + "}"


# commands ------------------------------------------------------------------------------


def cmd_analyze(args, out: Output) -> int:
    T = parse_cdt(_read(args.instance))
    forb = forbidding_edges(T)
    tris = list(quasi_mono_triangles(T))
    gs_bad = next(gs_violations(T), None)
    poly = next(polychromatic_triples(T), None)
    out.record.update(n=T.n, k=T.k, forbidding=len(forb), quasi_mono_triangles=len(tris))
    out.say(f"n={T.n} k={T.k} arcs={T.n * (T.n - 1) // 2}")
    out.say(f"forbidding arcs: {len(forb)}")
    out.say(f"quasi-monochromatic directed triangles: {len(tris)}")
    out.say(f"galeana-sanchez condition: {'holds' if gs_bad is None else f'fails at {gs_bad}'}")
    out.say(f"minggang condition: {'holds' if poly is None else f'fails at {poly}'}")
    out.record.update(gs_condition=gs_bad is None, minggang_condition=poly is None)
    if T.n:
        size, S = min_absorbing(T)
        out.say(f"min absorbing set: size {size} witness {_fmt(S)}")
        out.record["min_absorbing"] = {"size": size, "S": list(S)}
    if T.n <= ANALYZE_DUO_MAX_N:
        size, d = min_duo(T)
        out.say(f"min duo: size {size} K={_fmt(d.K)} S={_fmt(d.S)}")
        out.record["min_duo"] = {"size": size, "K": sorted(d.K), "S": sorted(d.S)}
    else:
        out.say(f"min duo: skipped for n > {ANALYZE_DUO_MAX_N} (run min-duo)")
    return 0


def cmd_min_duo(args, out: Output) -> int:
    data = _read(args.instance)
    T = parse_cdt(data)
    try:
        size, d = min_duo(T, args.cap)
    except NotFoundWithinCap as exc:
        out.say(f"no duo of size <= {exc.cap}")
        out.record.update(found=False, cap=exc.cap)
        return 1
    out.say(f"min duo size {size}: K={_fmt(d.K)} S={_fmt(d.S)}")
    out.record.update(found=True, size=size)
    _emit_cert(args, out, {**d.to_json(), "size": size, "minimum": True}, data)
    return 0


def cmd_duo_construct(args, out: Output) -> int:
    data = _read(args.instance)
    T = parse_cdt(data)
    P, _ = _pattern(args.pattern)
    res = duo_construct(T, P)
    if isinstance(res, Duo):
        out.say(f"duo branch: size {res.size} K={_fmt(res.K)} S={_fmt(res.S)}")
        out.record.update(branch="duo", size=res.size)
    else:
        out.say(f"embedding branch: images {list(res.images)}")
        out.record.update(branch="embedding", images=list(res.images))
    _emit_cert(args, out, res.to_json(), data)
    return 0


def cmd_min_absorbing(args, out: Output) -> int:
    data = _read(args.instance)
    T = parse_cdt(data)
    size, S = min_absorbing(T)
    out.say(f"min absorbing set size {size}: {_fmt(S)}")
    out.record.update(size=size, S=list(S))
    cert = {"type": "absorbing", "S": list(S), "size": size, "minimum": True}
    _emit_cert(args, out, cert, data)
    return 0


def cmd_quasi_kernel(args, out: Output) -> int:
    data = _read(args.instance)
    K = quasi_kernel(parse_dg(data))
    out.say(f"quasi-kernel of size {len(K)}: {_fmt(K)}")
    out.record.update(K=list(K))
    _emit_cert(args, out, {"type": "quasi-kernel", "K": list(K)}, data)
    return 0


def cmd_partition_duo(args, out: Output) -> int:
    data = _read(args.instance)
    K, S = quasi_partition_duo(parse_dg(data))
    out.say(f"quasi-kernel/quasi-sink pair of size {len(K) + len(S)}: K={_fmt(K)} S={_fmt(S)}")
    out.record.update(K=list(K), S=list(S))
    _emit_cert(args, out, {"type": "partition-duo", "K": list(K), "S": list(S)}, data)
    return 0


def cmd_gs_check(args, out: Output) -> int:
    bad = next(gs_violations(parse_cdt(_read(args.instance))), None)
    out.record["holds"] = bad is None
    if bad is None:
        out.say("every directed 3- and 4-cycle is quasi-monochromatic")
        return 0
    out.record["witness_cycle"] = list(bad)
    out.say(f"directed cycle {list(bad)} is not quasi-monochromatic")
    return 1


def cmd_minggang_check(args, out: Output) -> int:
    bad = next(polychromatic_triples(parse_cdt(_read(args.instance))), None)
    out.record["holds"] = bad is None
    if bad is None:
        out.say("no vertex triple carries three colours")
        return 0
    out.record["witness_triple"] = list(bad)
    out.say(f"triple {list(bad)} carries three colours")
    return 1


def cmd_build_t(args, out: Output) -> int:
    P = build_t(parse_ug(_read(args.instance)))
    text = serialize_cdt(P.to_tournament())
    out.record["pattern"] = P.to_json()
    out.say(text.rstrip("\n"))
    return 0


def _witness_result(args, out: Output, verdict, cert: dict, data: bytes, what: str) -> int:
    out.record["holds"] = verdict.holds
    if verdict.holds:
        out.say(f"holds: every {args.k}-colouring contains {what}")
        return 0
    out.say(f"fails: a {args.k}-colouring without {what}")
    colouring = [[u, v, c] for (u, v), c in sorted(verdict.witness.items())]
    _emit_cert(args, out, {**cert, "k": args.k, "colouring": colouring}, data)
    return 1


def cmd_ramsey_check(args, out: Output) -> int:
    data = _read(args.instance)
    G = parse_ug(data)
    H = _motif(args.motif)
    verdict = ramsey_check(G, args.k, H)
    cert = {
        "type": "witness-colouring",
        "property": "mono-induced-motif",
        "motif": {"n": H.n, "edges": [list(e) for e in H.sorted_edges()]},
    }
    return _witness_result(args, out, verdict, cert, data, "a monochromatic induced motif")


def cmd_lemma5_check(args, out: Output) -> int:
    P, data = _pattern(args.pattern)
    verdict = check_quasi_mono_c3_all_colourings(P, args.k)
    cert = {"type": "witness-colouring", "property": "quasi-mono-c3"}
    return _witness_result(args, out, verdict, cert, data, "a quasi-monochromatic directed triangle")


def cmd_enumerate(args, out: Output) -> int:
    docs = []
    for T in enumerate_tournaments(args.n, canonical=args.canonical):
        if args.k > 1:
            docs.extend(serialize_cdt(C) for C in enumerate_colourings(T, args.k, args.first_fixed))
        else:
            docs.append(serialize_cdt(T))
    out.record["count"] = len(docs)
    out.record["instances"] = docs
    out.say("\n".join(d.rstrip("\n") + "\n" for d in docs).rstrip("\n"))
    return 0


def cmd_random(args, out: Output) -> int:
    T = random_instance(args.n, args.k, args.seed)
    text = serialize_cdt(T)
    out.record["instance"] = text
    out.say(text.rstrip("\n"))
    return 0


def cmd_search_f(args, out: Output) -> int:
    hit = scan_absorbing_above(args.k, args.n, args.target, jobs=args.jobs)
    if hit is None:
        out.say(f"every {args.k}-coloured tournament on {args.n} vertices has an absorbing set of size <= {args.target}")
        out.record["found"] = False
        return 1
    T, size, S = hit
    text = serialize_cdt(T)
    out.record.update(found=True, size=size, S=list(S), instance=text)
    out.say(f"found instance with min absorbing set size {size} > {args.target}: witness {_fmt(S)}")
    out.say(text.rstrip("\n"))
    if args.instance_out:
        Path(args.instance_out).write_text(text)
        out.say(f"instance written to {args.instance_out}")
    cert = {"type": "absorbing", "S": list(S), "size": size, "minimum": True}
    _emit_cert(args, out, cert, text.encode())
    return 0


def cmd_bound(args, out: Output) -> int:
    mode = "finite" if args.finite else "general"
    b = theorem_bound(args.k, mode)
    out.record.update(k=args.k, mode=mode, form=type(b).__name__)
    if isinstance(b, (SymbolicTower, SymbolicPower)):
        out.say(f"{mode} bound for k={args.k}: {b.describe()} (symbolic)")
        out.record["expression"] = b.describe()
        return 0
    out.say(f"{mode} bound for k={args.k}: {b.describe()}")
    out.record["digits"] = b.digits
    if args.full or b.digits <= 60:
        sys.set_int_max_str_digits(0)
        out.say(str(b.value))
        out.record["value"] = str(b.value)
    return 0


def cmd_verify(args, out: Output) -> int:
    data = _read(args.instance)
    try:
        cert = json.loads(_read(args.cert))
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not JSON: {exc}") from None
    ok, reason = certify.verify_certificate(data, cert)
    out.record.update(valid=ok, reason=reason)
    out.say(("VALID: " if ok else "INVALID: ") + reason)
    return 0 if ok else 1


# parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monopath", description=__doc__.split("\n")[0])
    p.add_argument("--json", action="store_true", help="print a JSON record instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, instance: str | None = "instance", cert=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        if instance:
            sp.add_argument(instance)
        if cert:
            sp.add_argument("--cert", metavar="FILE", help="write the certificate to FILE")
        sp.set_defaults(fn=fn)
        return sp

    add("analyze", cmd_analyze, "summary of a .cdt instance")
    add("min-duo", cmd_min_duo, "exact minimum king-serf duo", cert=True).add_argument(
        "--cap", type=int, default=None, help="give up above this size (exit 1)"
    )
    add("duo-construct", cmd_duo_construct, "embed a pattern into forbidding arcs or return a duo", cert=True).add_argument(
        "--pattern", required=True, help="pattern .cdt (colours ignored) or builtin:t1"
    )
    add("min-absorbing", cmd_min_absorbing, "exact minimum absorbing set", cert=True)
    add("quasi-kernel", cmd_quasi_kernel, "minimum quasi-kernel of a .dg digraph", cert=True)
    add("partition-duo", cmd_partition_duo, "minimum quasi-kernel/quasi-sink pair of a .dg", cert=True)
    add("gs-check", cmd_gs_check, "are all directed 3- and 4-cycles quasi-monochromatic")
    add("minggang-check", cmd_minggang_check, "is there no three-coloured vertex triple")
    add("build-t", cmd_build_t, "ordered orientation of a .ug graph, as .cdt")
    sp = add("ramsey-check", cmd_ramsey_check, "monochromatic induced motif in every colouring", cert=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--motif", required=True, help=".ug file or cN for the N-cycle")
    sp = add("lemma5-check", cmd_lemma5_check, "quasi-monochromatic triangle in every colouring", "pattern", cert=True)
    sp.add_argument("-k", type=int, required=True)
    sp = add("enumerate", cmd_enumerate, "stream tournaments as .cdt records", None)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, default=1)
    sp.add_argument("--canonical", action="store_true", help="one orientation per isomorphism class")
    sp.add_argument("--first-fixed", action="store_true", help="fix the first arc's colour to 0")
    sp = add("random", cmd_random, "seeded random instance", None)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp = add("search-f", cmd_search_f, "find a tournament whose min absorbing set exceeds a target", None, cert=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--target", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--instance-out", metavar="FILE", help="also write the instance found to FILE")
    sp = add("bound", cmd_bound, "size bound for k colours", None)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--finite", action="store_true", help="k^(62500k) instead of exp_10(k)")
    sp.add_argument("--full", action="store_true", help="print every digit of an exact value")
    sp = add("verify", cmd_verify, "re-check a certificate against its instance")
    sp.add_argument("--cert", required=True, metavar="FILE")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.json)
    try:
        code = args.fn(args, out)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MonopathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


def main() -> None:
    sys.exit(run())
