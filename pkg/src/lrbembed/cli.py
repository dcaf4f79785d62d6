"""Command line front end.

Exit status: 0 for a positive answer, 1 for a negative verdict, 2 when the
input cannot be read or parsed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import catalog
from .band import Band, BandAxiomError, NotRightHereditary
from .embedder import (
    Embeddable,
    EmbeddingFault,
    NoLocalLinearOrderVerdict,
    NotRightHereditaryVerdict,
    chi,
    decide_embeddable,
    kernel,
    verify_embedding,
)
from .formats import (
    ParseError,
    band_to_document,
    document_to_band,
    format_order,
    parse_band,
    parse_map,
    parse_order,
)
from .harness import CensusConfig, FuzzConfig, census_csv, fuzz_subbands, run_census
from .localorder import NoLocalLinearOrder, analyze, base_constraints, fast_path_order, find_local_linear_order
from .qvar import H_LABELS, qvar_membership
from .words import format_word, parse_word

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def resolve(path: str) -> str:
    """Read a band file; ``fixtures/bandB`` also finds ``fixtures/bandB.band``
    and a bare fixture name falls back to the built-in catalog."""
    p = Path(path)
    for cand in (p, p.with_name(p.name + ".band")):
        if cand.is_file():
            return cand.read_text(encoding="utf-8")
    if p.name in catalog.FIXTURES and str(p.parent) in (".", "fixtures"):
        return catalog.FIXTURES[p.name]
    raise InputError(f"cannot read {path!r}")


def load_band(path: str, adjoin: bool) -> Band:
    text = resolve(path)
    doc = parse_band(text)
    return document_to_band(doc, adjoin=adjoin)


def _labels(band: Band, xs) -> list[str]:
    return [band.label(x) for x in sorted(xs)]


def _word(band: Band, w) -> str:
    return format_word(w, band.labels)


def _images(band: Band, emap) -> dict[str, str]:
    return {band.label(x): _word(band, emap[x]) for x in band.elements}


def _kernel(band: Band, emap) -> list[list[str]]:
    return [[band.label(x), band.label(y)] for x, y in sorted(kernel(emap))]


def _emit(args, report: dict, text: str) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# ---------------------------------------------------------------- commands

def cmd_validate(args) -> int:
    doc = parse_band(resolve(args.band))
    try:
        band = document_to_band(doc, adjoin=args.adjoin_identity)
    except BandAxiomError as err:
        vs = [v.describe(err.labels) for v in err.violations]
        _emit(args, {"verdict": "not-lrb", "violations": vs},
              f"not a left regular band ({len(vs)} violations)\n" + "".join(f"  {v}\n" for v in vs[:20]))
        return NEGATIVE
    _emit(args, {"verdict": "lrb", "size": band.n, "identity": band.label(band.identity)},
          f"left regular band with {band.n} elements, identity {band.label(band.identity)}")
    return OK


def analysis_report(band: Band) -> tuple[dict, str, int]:
    rep: dict = {"size": band.n, "identity": band.label(band.identity)}
    lines = [f"{band.n} elements, identity {band.label(band.identity)}"]
    try:
        st = analyze(band)
    except NotRightHereditary as err:
        s, p1, p2 = err.witness
        rep["verdict"] = "not-right-hereditary"
        rep["witness"] = [band.label(s), band.label(p1), band.label(p2)]
        lines.append(f"not right hereditary: {band.label(s)} covers both {band.label(p1)} and {band.label(p2)}")
        return rep, "\n".join(lines) + "\n", NEGATIVE
    rep["parent"] = {band.label(s): band.label(p) for s, p in sorted(st.tree.parent.items())}
    lines.append("tree of <= (element: parent)")
    lines += [f"  {band.label(s)}: {band.label(p)}" for s, p in sorted(st.tree.parent.items())]
    classes = [_labels(band, c) for c in st.quotient.classes]
    nus = [sorted(f"a{t + 1}" for t in st.numap(k)) for k in range(len(classes))]
    rep["support"] = [{"class": c, "nu": n} for c, n in zip(classes, nus)]
    lines.append("support classes and their letter sets")
    lines += [f"  {{{', '.join(c)}}} -> {{{', '.join(n)}}}" for c, n in zip(classes, nus)]
    rep["s_sets"] = {band.label(c): _labels(band, ss) for c, ss in sorted(st.ssets.items())}
    lines.append("S-sets")
    lines += [f"  S_{band.label(c)} = {{{', '.join(_labels(band, ss))}}}" for c, ss in sorted(st.ssets.items())]
    try:
        fast = fast_path_order(st, base_constraints(st)) is not None
    except NoLocalLinearOrder:
        fast = False
    llo = find_local_linear_order(st)
    if llo is None:
        rep["verdict"] = "no-local-linear-order"
        lines.append("no local linear order exists")
        return rep, "\n".join(lines) + "\n", NEGATIVE
    rep["verdict"] = "local-linear-order"
    rep["order"] = {band.label(b): [band.label(x) for x in seq] for b, seq in sorted(llo.order_of.items())}
    rep["order_source"] = "fast-path" if fast else "search"
    lines.append(f"local linear order ({rep['order_source']})")
    lines += ["  " + ln for ln in format_order(band, llo).splitlines()]
    return rep, "\n".join(lines) + "\n", OK


def cmd_analyze(args) -> int:
    band = load_band(args.band, args.adjoin_identity)
    rep, text, code = analysis_report(band)
    _emit(args, rep, text)
    return code


def embed_report(band: Band, verdict, trace: bool) -> tuple[dict, str]:
    doc = band_to_document(band)
    rep: dict = {"verdict": verdict.kind,
                 "band": {"elements": doc.labels, "identity": doc.identity, "table": doc.table}}
    lines = []
    if isinstance(verdict, NotRightHereditaryVerdict):
        s, p1, p2 = verdict.witness
        rep["witness"] = [band.label(s), band.label(p1), band.label(p2)]
        lines.append(f"not right hereditary: {band.label(s)} covers both {band.label(p1)} and {band.label(p2)}")
        return rep, "\n".join(lines) + "\n"
    if isinstance(verdict, NoLocalLinearOrderVerdict):
        lines.append("right hereditary but no local linear order exists")
        return rep, "\n".join(lines) + "\n"
    st, llo = verdict.structure, verdict.order
    rep["order"] = {band.label(b): [band.label(x) for x in seq] for b, seq in sorted(llo.order_of.items())}
    rep["chi"] = {
        band.label(c): [[band.label(e.element), band.label(e.owner)] for e in chi(st, llo, c)]
        for c in st.band.nonidentity
    }
    rep["initial"] = _images(band, verdict.initial)
    rep["initial_kernel"] = _kernel(band, verdict.initial)
    rep["rounds"] = [
        {"at": band.label(r.c), "images": _images(band, r.after), "kernel": _kernel(band, r.after)}
        for r in verdict.rounds
    ]
    rep["final"] = _images(band, verdict.final)
    rep["rank"] = verdict.rank
    lines.append(f"embeddable: {len(verdict.rounds)} modification rounds, rank {verdict.rank}")
    if trace:
        lines.append("local order")
        lines += ["  " + ln for ln in format_order(band, llo).splitlines()]
        lines.append("h")
        lines += [f"  {k} = {v}".rstrip() for k, v in rep["initial"].items()]
        lines.append(f"  kernel: {rep['initial_kernel']}")
        for i, r in enumerate(rep["rounds"], 1):
            lines.append(f"round {i} at {r['at']}")
            lines += [f"  {k} = {v}".rstrip() for k, v in r["images"].items()]
            lines.append(f"  kernel: {r['kernel']}")
    lines.append("embedding")
    lines += [f"  {k} = {v}".rstrip() for k, v in rep["final"].items()]
    return rep, "\n".join(lines) + "\n"


def cmd_embed(args) -> int:
    band = load_band(args.band, args.adjoin_identity)
    order = None
    if args.order:
        order = parse_order(Path(args.order).read_text(encoding="utf-8"), band)
    try:
        verdict = decide_embeddable(band, order)
    except ValueError as err:  # a supplied order that is not a local linear order
        raise InputError(str(err)) from None
    rep, text = embed_report(band, verdict, args.trace)
    if args.output:
        Path(args.output).write_text(json.dumps(rep, indent=2) + "\n", encoding="utf-8")
    _emit(args, rep, text)
    return OK if isinstance(verdict, Embeddable) else NEGATIVE


def cmd_verify(args) -> int:
    """``verify REPORT.json`` or ``verify BAND WITNESS`` (JSON report or map text)."""
    if len(args.inputs) not in (1, 2):
        raise InputError("verify takes a report, or a band and a witness")
    wpath = Path(args.inputs[-1])
    if not wpath.is_file():
        raise InputError(f"cannot read {str(wpath)!r}")
    wtext = wpath.read_text(encoding="utf-8")
    report = None
    if wtext.lstrip().startswith("{"):
        try:
            report = json.loads(wtext)
        except json.JSONDecodeError as err:
            raise ParseError(err.msg, err.lineno, err.colno) from None
    if len(args.inputs) == 2:
        band = load_band(args.inputs[0], args.adjoin_identity)
    elif report is not None and "band" in report:
        band = document_to_band(parse_band(json.dumps(report["band"])))
    else:
        raise InputError("a map file needs a band file as well")
    if report is not None:
        if "final" not in report:
            raise InputError("report contains no embedding")
        images = []
        for x in band.elements:
            try:
                images.append(parse_word(report["final"][band.label(x)], band.labels))
            except (KeyError, ValueError) as err:
                raise InputError(f"bad image for {band.label(x)}: {err}") from None
    else:
        images = parse_map(wtext, band)
    failure = verify_embedding(images, band)
    if failure is None:
        _emit(args, {"verdict": "ok"}, "ok: injective homomorphism")
        return OK
    x, y = failure.witness
    _emit(args, {"verdict": failure.kind, "witness": [band.label(x), band.label(y)]},
          f"{failure.kind} at ({band.label(x)}, {band.label(y)})")
    return NEGATIVE


def cmd_qvar(args) -> int:
    band = load_band(args.band, args.adjoin_identity)
    res = qvar_membership(band)
    if not res.member:
        x, y = res.witness
        _emit(args, {"verdict": "no", "witness": [band.label(x), band.label(y)]},
              f"no: no homomorphism into H separates {band.label(x)} and {band.label(y)}")
        return NEGATIVE
    homs = sorted(set(res.certificates.values()))
    rep = {"verdict": "yes",
           "homomorphisms": [{band.label(x): H_LABELS[f[x]] for x in band.elements} for f in homs],
           "certificates": {f"{band.label(x)},{band.label(y)}": homs.index(f)
                            for (x, y), f in res.certificates.items()}}
    lines = [f"yes: {len(homs)} homomorphisms into H separate all pairs"]
    lines += ["  " + " ".join(f"{band.label(x)}->{H_LABELS[f[x]]}" for x in band.elements) for f in homs]
    _emit(args, rep, "\n".join(lines) + "\n")
    return OK


def cmd_census(args) -> int:
    rows = run_census(CensusConfig(max_size=args.max_size, seed=args.seed))
    out = census_csv(rows)
    if args.json:
        print(json.dumps([{f: getattr(r, f) for f in r.FIELDS} for r in rows], indent=2))
    else:
        print(out, end="")
    return OK


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(seed=args.seed, count=args.count, max_generators=args.max_generators,
                     max_seeds=args.max_seeds, cap=args.max_size)
    s = fuzz_subbands(cfg)
    bad = s.failure
    rep = {"passed": s.passed, "skipped": s.skipped, "ok": s.ok,
           "failure": None if bad is None else {"case_seed": bad.case_seed, "seeds": bad.seeds, "reason": bad.failure}}
    text = f"{s.passed} passed, {s.skipped} skipped"
    if bad is not None:
        text += f"\nFAILED case {bad.case_seed} (seeds {bad.seeds}): {bad.failure}"
    _emit(args, rep, text)
    return OK if s.ok else NEGATIVE


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")
    band_opts = argparse.ArgumentParser(add_help=False)
    band_opts.add_argument("--adjoin-identity", action="store_true", help="adjoin a new identity element")

    p = argparse.ArgumentParser(prog="lrbembed", description="Embed finite left regular bands into free ones.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common, band_opts], help="check the band axioms")
    s.add_argument("band")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common, band_opts], help="tree, support, S-sets, local order")
    s.add_argument("band")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("embed", parents=[common, band_opts], help="run the full decision procedure")
    s.add_argument("band")
    s.add_argument("--order", help="file with a local order to use instead of searching")
    s.add_argument("--trace", action="store_true", help="print h and every modification round")
    s.add_argument("-o", "--output", help="save the JSON report here")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("verify", parents=[common, band_opts], help="recheck a saved embedding")
    s.add_argument("inputs", nargs="+", metavar="FILE")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("qvar", parents=[common, band_opts], help="separate points by homomorphisms into H")
    s.add_argument("band")
    s.set_defaults(func=cmd_qvar)

    s = sub.add_parser("census", parents=[common], help="classify every band up to a size")
    s.add_argument("--max-size", type=int, default=4, help="largest band size, identity not counted")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("fuzz", parents=[common], help="random subbands of free bands")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--max-generators", type=int, default=5)
    s.add_argument("--max-seeds", type=int, default=4)
    s.add_argument("--max-size", type=int, default=512, help="closure cap; larger cases are skipped")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    for name in ("count", "max_generators", "max_seeds", "max_size"):
        if getattr(args, name, 1) < (0 if name == "count" else 1):
            print(f"error: --{name.replace('_', '-')} out of range", file=sys.stderr)
            return INPUT_ERROR
    try:
        return args.func(args)
    except (InputError, ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    except BandAxiomError as err:
        print(f"error: not a left regular band: {err.violations[0].describe(err.labels)}", file=sys.stderr)
        return INPUT_ERROR if args.command == "verify" else NEGATIVE
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    except EmbeddingFault as err:
        print(f"internal fault: {err}", file=sys.stderr)
        return NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
