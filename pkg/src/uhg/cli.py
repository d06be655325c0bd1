"""Command-line surface.

Subcommands: search, construct, verify, catalog, hog-fetch.  Every command
that writes graphs also writes a `<out>.manifest` recording the command
line, wall time, shard count, sha256 digests of the outputs and the
verification outcomes, so any run is reproducible from its manifest.

Exit codes: 0 success, 1 verification failure, 2 usage, 3 budget
truncation, 4 network failure; construct additionally maps NoEvenDegree,
UnknownSeed and UnsupportedDegree to 10, 11 and 12.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from pathlib import Path

from . import __version__
from .codec import decode, dump_lines, format_header, load_lines
from .errors import (
    BudgetExceededError,
    GraphFormatError,
    NoEvenDegreeError,
    UhgError,
    UnknownSeedError,
    UnsupportedDegreeError,
)
from .graphs import DegreeSet, Graph, MultiGraph, degree_set

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NETWORK = 4


def _out_dir() -> Path:
    return Path(os.environ.get("UHG_OUT_DIR", "."))


def _resolve_out(path: str) -> Path:
    p = Path(path)
    return p if p.is_absolute() else _out_dir() / p


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(out: Path, args: argparse.Namespace, started: float,
                    outputs: list[Path], extra: dict) -> None:
    lines = [
        f"command: {args.command}",
        f"arguments: {' '.join(sys.argv[1:])}",
        f"version: {__version__}",
        f"random_seed: none",
        f"wall_time_s: {time.time() - started:.3f}",
    ]
    for key, val in extra.items():
        lines.append(f"{key}: {val}")
    for p in outputs:
        lines.append(f"output: {p.name} sha256 {_digest(p)}")
    manifest = out.with_suffix(out.suffix + ".manifest")
    manifest.write_text("\n".join(lines) + "\n")


def _load_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    cfg = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        k, v = line.split("=", 1)
        cfg[k.strip()] = v.strip()
    return cfg


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_search(args) -> int:
    from .search import SearchSpec, search_seeds

    started = time.time()
    spec = SearchSpec(args.n, args.d, budget=args.budget, split_depth=args.split_depth)
    res = search_seeds(spec, jobs=args.jobs)
    out = _resolve_out(args.out)
    header = format_header(s=0, t=args.n - 1, d=args.d)
    body = [header] + res.lines()
    out.write_text("\n".join(body) + "\n")
    _write_manifest(
        out, args, started, [out],
        {
            "n": args.n, "d": args.d, "jobs": args.jobs,
            "split_depth": args.split_depth,
            "budget": args.budget if args.budget is not None else "none",
            "seeds_found": len(res.seeds),
            "complete": res.complete,
            "nodes": res.nodes,
        },
    )
    print(f"{len(res.seeds)} seed(s) -> {out}" + ("" if res.complete else " [TRUNCATED]"))
    return EXIT_OK if res.complete else EXIT_BUDGET


def cmd_construct(args) -> int:
    from .construct import (
        FamilySpec,
        family,
        realize_min2,
        realize_min3,
        realize_min4,
        realize_multigraph,
    )

    started = time.time()
    try:
        M = DegreeSet(int(x) for x in args.degrees.split(","))
    except (ValueError, UhgError) as exc:
        print(f"bad --degrees: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.family_count:
            d2 = tuple(int(x) for x in args.d2.split(",")) if args.d2 else ()
            d1 = tuple(d for d in M[1:] if d not in d2)
            spec = FamilySpec(M, d1, d2, args.family_count)
            fam = family(spec, budget=args.budget)
            reals = fam.realizations
            extra = {"achieved_c1": fam.achieved_c1, "achieved_c2": f"{fam.achieved_c2:.4f}"}
        else:
            if args.multigraph and min(M) >= 3:
                reals = [realize_multigraph(M, budget=args.budget)]
            elif M[0] == 2:
                reals = [realize_min2(M, budget=args.budget)]
            elif M[0] == 3:
                reals = [realize_min3(M, budget=args.budget)]
            elif M[0] == 4:
                reals = [realize_min4(M, budget=args.budget)]
            else:
                raise UnsupportedDegreeError(
                    f"no construction for minimum degree {M[0]}"
                )
            extra = {}
    except NoEvenDegreeError as exc:
        print(f"NoEvenDegree: {exc}", file=sys.stderr)
        return 10
    except UnknownSeedError as exc:
        print(f"UnknownSeed: {exc}", file=sys.stderr)
        return 11
    except UnsupportedDegreeError as exc:
        print(f"UnsupportedDegree: {exc}", file=sys.stderr)
        return 12
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    out = _resolve_out(args.out)
    out.write_text(dump_lines([(r.graph, {"degrees": args.degrees}) for r in reals]))
    outputs = [out]
    if args.trace:
        tr = _resolve_out(args.trace)
        tr.write_text("".join(r.trace.to_text() for r in reals))
        outputs.append(tr)
    extra.update(
        {
            "degrees": str(M),
            "graphs": len(reals),
            "uhc": ";".join(r.uhc_status for r in reals),
            "connectivity": ";".join(str(r.connectivity) for r in reals),
        }
    )
    _write_manifest(out, args, started, outputs, extra)
    print(f"{len(reals)} graph(s) -> {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .connectivity import is_k_connected
    from .hamilton import is_uniquely_hamiltonian
    from .seeds import validate_seed
    from .splice import classify_plugin

    try:
        entries = load_lines(Path(args.file).read_text())
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not entries:
        print("no graphs in file", file=sys.stderr)
        return EXIT_USAGE
    all_ok = True
    budget_hit = False
    for idx, (g, meta) in enumerate(entries):
        label = f"graph {idx}"
        if args.mode == "uhc":
            ver = is_uniquely_hamiltonian(g, budget=args.budget)
            if ver.unique is None:
                print(f"{label}: INDETERMINATE (budget)")
                budget_hit = True
            elif ver.unique:
                print(f"{label}: uniquely hamiltonian; cycle {list(ver.cycle)}")
            else:
                print(f"{label}: NOT uniquely hamiltonian "
                      f"(count >= {ver.report.count})")
                all_ok = False
        elif args.mode == "seed":
            if isinstance(g, MultiGraph):
                g = g.support()
            s = int(meta.get("s", 0))
            t = int(meta.get("t", g.n - 1))
            d = int(meta.get("d", args.d or 0))
            rep = validate_seed(g, s, t, d, budget=args.budget)
            if rep.passed:
                print(f"{label}: valid {d}-seed")
            elif any(v is None for v in rep.clauses.values()):
                print(f"{label}: INDETERMINATE (budget) {rep.failing()}")
                budget_hit = True
            else:
                print(f"{label}: INVALID seed {rep.failing()} {rep.witnesses}")
                all_ok = False
        elif args.mode == "plugin":
            s, t, v = (int(meta.get(k, -1)) for k in ("s", "t", "v"))
            if min(s, t, v) < 0:
                print(f"{label}: missing s/t/v header", file=sys.stderr)
                return EXIT_USAGE
            cls = classify_plugin(g, s, t, v, budget=args.budget)
            print(f"{label}: {cls.kind}")
            if cls.kind == "invalid":
                all_ok = False
            elif cls.kind == "indeterminate":
                budget_hit = True
        elif args.mode == "connectivity":
            k = args.k or 3
            gg = g.support() if isinstance(g, MultiGraph) else g
            ok = is_k_connected(gg, k)
            print(f"{label}: {'' if ok else 'NOT '}{k}-connected")
            all_ok = all_ok and ok
    if budget_hit and all_ok:
        return EXIT_BUDGET
    return EXIT_OK if all_ok else EXIT_VERIFY


def cmd_catalog(args) -> int:
    from .catalog import CATALOG_NAMES, reconstruct_catalog, save_catalog_cache

    if args.name not in CATALOG_NAMES:
        print(f"unknown catalog entry {args.name}; choose from {CATALOG_NAMES}",
              file=sys.stderr)
        return EXIT_USAGE
    started = time.time()
    entry = reconstruct_catalog(args.name, use_cache=not args.rebuild)
    if args.rebuild:
        save_catalog_cache(entry)
    meta = {k: v for k, v in entry.meta.items() if isinstance(v, (int, str))}
    out = _resolve_out(args.out) if args.out else None
    if out:
        out.write_text(dump_lines([(g, meta) for g in entry.graphs]))
        _write_manifest(out, args, started, [out],
                        {"entry": args.name, "witnesses": len(entry.graphs)})
    print(f"{args.name}: {len(entry.graphs)} graph(s) {meta}"
          + (f" -> {out}" if out else ""))
    return EXIT_OK


def cmd_hog_fetch(args) -> int:
    from .catalog import CATALOG_NAMES, reconstruct_catalog
    from .hog import NetworkError, fetch_graph6, match_against_catalog, search_by_keyword

    started = time.time()
    try:
        ids = search_by_keyword(args.keyword, endpoint=args.endpoint)
        lines = [fetch_graph6(i, endpoint=args.endpoint) for i in ids]
    except NetworkError as exc:
        print(f"network failure: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    print(f"{len(lines)} graph(s) for keyword {args.keyword!r}")
    if args.match:
        entries = {}
        for name in CATALOG_NAMES:
            entry = reconstruct_catalog(name)
            entries[name] = entry.graphs
        matches = match_against_catalog(lines, entries)
        for name in CATALOG_NAMES:
            hit = matches.get(name)
            print(f"  {name}: {'matches ' + str(hit) if hit else 'no match'}")
    if args.out:
        out = _resolve_out(args.out)
        out.write_text("\n".join(lines) + "\n")
        _write_manifest(out, args, started, [out],
                        {"keyword": args.keyword, "downloaded": len(lines)})
        print(f"-> {out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="uhg",
        description="Construct, search for and exactly verify uniquely "
                    "hamiltonian graphs with prescribed degree sets.",
    )
    ap.add_argument("--config", help="plain-text key=value config file; flags win")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("search", help="exhaustive d-seed search on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--split-depth", type=int, default=2, dest="split_depth")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--out", default="seeds.g6")
    sp.set_defaults(func=cmd_search)

    cp = sub.add_parser("construct", help="realize a degree set")
    cp.add_argument("--degrees", required=True, help="comma list, e.g. 3,4,24")
    cp.add_argument("--multigraph", action="store_true")
    cp.add_argument("--family-count", type=int, default=0, dest="family_count")
    cp.add_argument("--d2", default="", help="degrees grown linearly (family mode)")
    cp.add_argument("--budget", type=int, default=None)
    cp.add_argument("--out", default="graphs.g6")
    cp.add_argument("--trace", default=None)
    cp.set_defaults(func=cmd_construct)

    vp = sub.add_parser("verify", help="verify graphs in a file")
    vp.add_argument("file")
    vp.add_argument("--mode", choices=("uhc", "seed", "plugin", "connectivity"),
                    default="uhc")
    vp.add_argument("--k", type=int, default=None)
    vp.add_argument("--d", type=int, default=None)
    vp.add_argument("--budget", type=int, default=None)
    vp.set_defaults(func=cmd_verify)

    kp = sub.add_parser("catalog", help="materialize a catalog graph")
    kp.add_argument("name")
    kp.add_argument("--rebuild", action="store_true",
                    help="ignore the cache and reconstruct from constraints")
    kp.add_argument("--out", default=None)
    kp.set_defaults(func=cmd_catalog)

    hp = sub.add_parser("hog-fetch", help="House of Graphs keyword cross-check")
    hp.add_argument("--keyword", default="UHG_degree_sequence")
    hp.add_argument("--endpoint", default="https://houseofgraphs.org")
    hp.add_argument("--match", action="store_true",
                    help="report which catalog entries match the downloads")
    hp.add_argument("--out", default=None)
    hp.set_defaults(func=cmd_hog_fetch)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = _load_config(args.config)
    for key, val in cfg.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) in (None, 0, ""):
            cur = getattr(args, attr)
            if cur in (None, "", 0) and attr not in ("command",):
                try:
                    setattr(args, attr, type(cur)(val) if cur is not None else val)
                except (TypeError, ValueError):
                    setattr(args, attr, val)
    try:
        return args.func(args)
    except UhgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
