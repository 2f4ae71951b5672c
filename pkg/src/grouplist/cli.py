"""grouplist command line: build, query, gen, bench.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a data or I/O error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .bench import CLASSES, GeneratorParams, generate_corpus, run_benchmark, sample_workload
from .corpus import choose_zeta, compute_term_stats, load_corpus, parse_zeta, partition_terms
from .errors import CorrectnessFailure, GroupListError
from .group_index import build_group_index
from .inverted import build_inverted
from .query import Query, grouplist_query, inverted_query, oracle_scan
from .storage import load_index, save_index

log = logging.getLogger("grouplist")


def _csv_list(conv=str):
    def parse(s):
        try:
            return [conv(x.strip()) for x in s.split(",") if x.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list: {s!r}") from None
    return parse


def _add_gen_args(p):
    d = GeneratorParams()
    p.add_argument("--docs", type=int, default=d.n_docs, help="number of documents (default: %(default)s)")
    p.add_argument("--avg-size", type=int, default=d.avg_doc_size, help="mean terms per document (default: %(default)s)")
    p.add_argument("--terms", type=int, default=d.n_terms, help="vocabulary size (default: %(default)s)")
    p.add_argument("--skew", type=float, default=d.skew, help="Zipf popularity exponent (default: %(default)s)")
    p.add_argument("--seed", type=int, default=d.seed, help="random seed (default: %(default)s)")


def _gen_params(args) -> GeneratorParams:
    return GeneratorParams(args.docs, args.avg_size, args.terms, args.skew, args.seed)


def cmd_build(args) -> int:
    zeta = parse_zeta(args.zeta)
    corpus = load_corpus(args.input)
    gindex, tree = build_group_index(corpus, zeta)
    inverted = build_inverted(corpus)
    save_index(gindex, inverted, args.out)
    part = gindex.partition
    print(f"documents: {gindex.n_docs}")
    print(f"terms: {len(part.order)}")
    print(f"zeta: {float(part.zeta):g}")
    print(f"frequent terms: {len(part.frequent)}")
    print(f"tree nodes: {len(tree)}")
    print(f"tuples: {gindex.n_tuples()}")
    print(f"written: {args.out}")
    return 0


def cmd_query(args, parser) -> int:
    if args.engine == "oracle" and not args.input:
        parser.error("--engine oracle requires --input CORPUS")
    q = Query(args.op, tuple(args.terms))
    if args.engine == "oracle":
        result = oracle_scan(load_corpus(args.input), q)
    else:
        gindex, inverted = load_index(args.index)
        if args.engine == "inverted":
            result = inverted_query(inverted, q)
        else:
            result = grouplist_query(gindex, q)
    if args.format == "json":
        print(json.dumps({"op": q.op, "terms": list(q.terms), "doc_ids": result}))
    else:
        sys.stdout.write("".join(f"{d}\n" for d in result))
    return 0


def cmd_gen(args) -> int:
    corpus = generate_corpus(_gen_params(args))
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(corpus.to_text())
    log.info("wrote %d documents to %s", len(corpus), args.out)
    return 0


def cmd_bench(args) -> int:
    zeta = parse_zeta(args.zeta) if args.zeta is not None else None
    if args.input:
        corpus = load_corpus(args.input)
    else:
        corpus = generate_corpus(_gen_params(args))
    stats = compute_term_stats(corpus)
    if zeta is None:
        zeta = choose_zeta(stats, args.min_frequent)
        log.info("chose zeta = %.4f for >= %d frequent terms", float(zeta), args.min_frequent)
    part = partition_terms(stats, zeta)
    workload = sample_workload(
        part, args.classes, args.lengths, args.queries_per_group, args.op, args.seed
    )
    report = run_benchmark(corpus, zeta, workload, oracle_sample=args.oracle_sample)
    st = report.index
    print(
        f"{st.n_docs} docs, {st.n_terms} terms, zeta = {st.zeta:.4g}, "
        f"{st.n_frequent} frequent terms, {st.n_tuples} tuples "
        f"({st.frequent_tuples} frequent)"
    )
    from .report import format_grid, write_report

    print(f"total seconds per group ({args.queries_per_group} {args.op.upper()} queries each):")
    sys.stdout.write(format_grid(report))
    if args.report:
        for kind, path in write_report(report, args.report, figure=not args.no_figure).items():
            log.info("%s report: %s", kind, path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouplist", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and save a group-list + inverted index")
    p.add_argument("--input", required=True, help="corpus text file")
    p.add_argument("--zeta", required=True, help="frequency threshold, e.g. 0.5 or 50%%")
    p.add_argument("--out", required=True, help="index file to write")

    p = sub.add_parser("query", help="run a Boolean AND/OR query")
    p.add_argument("--index", help="index file written by 'build'")
    p.add_argument("--op", choices=("and", "or"), default="and", type=str.lower)
    p.add_argument("--terms", nargs="+", required=True)
    p.add_argument("--engine", choices=("grouplist", "inverted", "oracle"), default="grouplist")
    p.add_argument("--input", help="corpus file (needed by --engine oracle)")
    p.add_argument("--format", choices=("lines", "json"), default="lines")

    p = sub.add_parser("gen", help="write a synthetic corpus")
    _add_gen_args(p)
    p.add_argument("--out", required=True, help="corpus file to write")

    p = sub.add_parser("bench", help="time group-list against inverted index")
    p.add_argument("--input", help="corpus file; omit to generate one")
    _add_gen_args(p)
    p.add_argument("--zeta", default=None,
                   help="frequency threshold; default picks the largest giving --min-frequent terms")
    p.add_argument("--min-frequent", type=int, default=50)
    p.add_argument("--classes", type=_csv_list(str.upper), default=list(CLASSES))
    p.add_argument("--lengths", type=_csv_list(int), default=[2, 4, 6])
    p.add_argument("--queries-per-group", type=int, default=200)
    p.add_argument("--op", choices=("and", "or"), default="and", type=str.lower)
    p.add_argument("--oracle-sample", type=int, default=5,
                   help="queries per group also checked by brute-force scan")
    p.add_argument("--report", help="write text report here, plus .json/.csv/.png siblings")
    p.add_argument("--no-figure", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "query" and args.engine != "oracle" and not args.index:
        parser.error("--index is required unless --engine oracle is used")
    try:
        if args.command == "build":
            return cmd_build(args)
        if args.command == "query":
            return cmd_query(args, parser)
        if args.command == "gen":
            return cmd_gen(args)
        return cmd_bench(args)
    except CorrectnessFailure as exc:
        print(f"grouplist: correctness failure on query: {exc.query}", file=sys.stderr)
        return 1
    except GroupListError as exc:
        print(f"grouplist: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"grouplist: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
