"""Synthetic corpora, FQ/MQ/IQ query workloads and the timing harness."""
from __future__ import annotations

import logging
import random
import statistics
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .corpus import (
    Corpus,
    Document,
    FrequencyPartition,
    compute_term_stats,
    partition_terms,
    sort_corpus,
)
from .errors import CorrectnessFailure, InsufficientTerms, InternalInconsistency, InvalidParams
from .group_index import GroupIndex, generate_group_lists
from .inverted import InvertedIndex, build_inverted
from .ptree import build_ptree
from .query import AND, OR, Query, grouplist_query, inverted_query, oracle_scan

log = logging.getLogger(__name__)

CLASSES = ("FQ", "MQ", "IQ")
_CHUNK = 2048


@dataclass(frozen=True)
class GeneratorParams:
    n_docs: int = 100_000
    avg_doc_size: int = 60
    n_terms: int = 1000
    skew: float = 4.0
    seed: int = 0

    def __post_init__(self):
        if self.n_docs < 1 or self.avg_doc_size < 1 or self.n_terms < 1:
            raise InvalidParams("n_docs, avg_doc_size and n_terms must be positive")
        if self.avg_doc_size > self.n_terms:
            raise InvalidParams(
                f"avg_doc_size ({self.avg_doc_size}) exceeds n_terms ({self.n_terms})"
            )
        if not self.skew >= 0:
            raise InvalidParams(f"skew must be non-negative, got {self.skew}")
        if not 0 <= self.seed < 2**64:
            raise InvalidParams("seed must be a 64-bit unsigned integer")


def term_names(n_terms: int) -> list:
    width = len(str(n_terms - 1))
    return [f"t{i:0{width}d}" for i in range(n_terms)]


def generate_corpus(params: GeneratorParams) -> Corpus:
    """Poisson document sizes, Zipf term popularity, no repeats inside a doc.

    Drawing without replacement uses the Gumbel-top-k trick: perturb the log
    weights with Gumbel noise and keep the k largest, which matches sequential
    weighted sampling without replacement and vectorises per chunk of docs.
    """
    rng = np.random.default_rng(params.seed)
    names = term_names(params.n_terms)
    logw = -params.skew * np.log(np.arange(1, params.n_terms + 1, dtype=np.float64))
    sizes = np.clip(rng.poisson(params.avg_doc_size, params.n_docs), 1, params.n_terms)
    docs = []
    for start in range(0, params.n_docs, _CHUNK):
        k = sizes[start:start + _CHUNK]
        keys = rng.gumbel(size=(len(k), params.n_terms)) + logw
        order = np.argsort(-keys, axis=1, kind="stable")
        for row, kk in enumerate(k.tolist()):
            docs.append(
                Document(start + row + 1, frozenset(names[j] for j in order[row, :kk].tolist()))
            )
    return Corpus(docs, vocab={t: i for i, t in enumerate(names)})


@dataclass
class QueryWorkload:
    groups: dict
    queries_per_group: int
    op: str = AND

    def __iter__(self):
        return iter(self.groups.items())


def _pool(partition: FrequencyPartition, cls: str) -> tuple:
    if cls == "FQ":
        return partition.frequent
    if cls == "IQ":
        return partition.infrequent
    if cls == "MQ":
        return partition.order
    raise InvalidParams(f"unknown query class {cls!r} (expected one of {CLASSES})")


def sample_workload(
    partition: FrequencyPartition,
    classes=CLASSES,
    lengths=(2, 4, 6),
    queries_per_group: int = 200,
    op: str = AND,
    seed: int = 0,
) -> QueryWorkload:
    """Groups named ``<class><length>``, each an independent seeded stream."""
    if isinstance(classes, str):
        classes = [classes]
    if queries_per_group < 1:
        raise InvalidParams("queries_per_group must be positive")
    op = op.upper()
    if op not in (AND, OR):
        raise InvalidParams(f"unknown operator {op!r}")
    groups = {}
    for cls in classes:
        pool = _pool(partition, cls.upper())
        for length in lengths:
            name = f"{cls.upper()}{length}"
            if length < 1:
                raise InvalidParams(f"{name}: query length must be positive")
            if len(pool) < length:
                raise InsufficientTerms(
                    f"{name}: needs {length} distinct terms, pool has {len(pool)}"
                )
            rng = random.Random(f"{seed}/{name}")
            groups[name] = [Query(op, tuple(rng.sample(pool, length))) for _ in range(queries_per_group)]
    return QueryWorkload(groups, queries_per_group, op)


@dataclass
class IndexStats:
    n_docs: int
    n_terms: int
    zeta: float
    n_frequent: int
    n_nodes: int
    n_tuples: int
    frequent_tuples: int
    mean_frequent_did_set: float
    mean_frequent_posting: float
    grouplist_ints: int
    inverted_ints: int
    grouplist_build_s: float
    inverted_build_s: float

    @property
    def overhead_ints(self) -> int:
        return self.grouplist_ints - self.inverted_ints


@dataclass
class GroupTiming:
    name: str
    n_queries: int
    grouplist_total_s: float
    grouplist_mean_s: float
    grouplist_median_s: float
    inverted_total_s: float
    inverted_mean_s: float
    inverted_median_s: float
    mean_result_size: float
    max_result_size: int
    oracle_checked: int
    correct: bool

    @property
    def speedup(self) -> float:
        return self.inverted_total_s / self.grouplist_total_s if self.grouplist_total_s else float("inf")


@dataclass
class BenchReport:
    index: IndexStats
    groups: list = field(default_factory=list)
    op: str = AND

    @property
    def correct(self) -> bool:
        return all(g.correct for g in self.groups)

    def group(self, name) -> GroupTiming:
        for g in self.groups:
            if g.name == name:
                return g
        raise KeyError(name)

    def to_dict(self) -> dict:
        d = {"op": self.op, "correct": self.correct, "index": asdict(self.index)}
        d["groups"] = [dict(asdict(g), speedup=g.speedup) for g in self.groups]
        return d


def index_stats(gindex: GroupIndex, inverted: InvertedIndex, n_nodes=0, build_s=(0.0, 0.0)) -> IndexStats:
    part = gindex.partition
    freq = part.frequent
    f_tuples = gindex.n_tuples(freq)
    f_ids = sum(len(tp.dids) for t in freq for tp in gindex.lists[t])
    return IndexStats(
        n_docs=gindex.n_docs,
        n_terms=len(part.order),
        zeta=float(part.zeta),
        n_frequent=len(freq),
        n_nodes=n_nodes,
        n_tuples=gindex.n_tuples(),
        frequent_tuples=f_tuples,
        mean_frequent_did_set=f_ids / f_tuples if f_tuples else 0.0,
        mean_frequent_posting=(
            sum(len(inverted.postings[t]) for t in freq) / len(freq) if freq else 0.0
        ),
        grouplist_ints=gindex.int_count(),
        inverted_ints=inverted.int_count(),
        grouplist_build_s=build_s[0],
        inverted_build_s=build_s[1],
    )


def _timed(fn, index, queries):
    times, results = [], []
    clock = time.perf_counter_ns
    for q in queries:
        t0 = clock()
        r = fn(index, q)
        times.append(clock() - t0)
        results.append(r)
    return [t / 1e9 for t in times], results


def run_benchmark(corpus: Corpus, zeta, workload: QueryWorkload, oracle_sample: int = 5) -> BenchReport:
    """Build both indexes, time every group on both engines, verify results.

    Each group gets one untimed warm-up pass per engine. Every group-list
    result is compared with the inverted-index result; the first
    ``oracle_sample`` queries of each group are also checked by brute force.
    """
    t0 = time.perf_counter()
    stats = compute_term_stats(corpus)
    part = partition_terms(stats, zeta)
    tree = build_ptree(sort_corpus(corpus, part), part)
    gindex = generate_group_lists(tree)
    t1 = time.perf_counter()
    inverted = build_inverted(corpus)
    t2 = time.perf_counter()
    istats = index_stats(gindex, inverted, len(tree), (t1 - t0, t2 - t1))
    del tree
    if istats.grouplist_ints != istats.inverted_ints + 2 * istats.n_tuples:
        raise InternalInconsistency("footprint identity violated")
    log.info(
        "indexes built: %d docs, %d terms, %d frequent, %d tuples",
        istats.n_docs, istats.n_terms, istats.n_frequent, istats.n_tuples,
    )

    report = BenchReport(istats, op=workload.op)
    for name, queries in workload:
        for fn, idx in ((grouplist_query, gindex), (inverted_query, inverted)):
            for q in queries:
                fn(idx, q)
        gl_t, gl_r = _timed(grouplist_query, gindex, queries)
        inv_t, inv_r = _timed(inverted_query, inverted, queries)
        for q, a, b in zip(queries, gl_r, inv_r):
            if a != b:
                raise CorrectnessFailure(q, f"group-list {len(a)} ids, inverted {len(b)} ids")
        checked = 0
        for q, a in list(zip(queries, gl_r))[:oracle_sample]:
            if oracle_scan(corpus, q) != a:
                raise CorrectnessFailure(q, "group-list result differs from oracle scan")
            checked += 1
        sizes = [len(r) for r in gl_r]
        report.groups.append(
            GroupTiming(
                name=name,
                n_queries=len(queries),
                grouplist_total_s=sum(gl_t),
                grouplist_mean_s=statistics.fmean(gl_t),
                grouplist_median_s=statistics.median(gl_t),
                inverted_total_s=sum(inv_t),
                inverted_mean_s=statistics.fmean(inv_t),
                inverted_median_s=statistics.median(inv_t),
                mean_result_size=statistics.fmean(sizes),
                max_result_size=max(sizes),
                oracle_checked=checked,
                correct=True,
            )
        )
        log.info("%s: group-list %.3fs, inverted %.3fs", name, sum(gl_t), sum(inv_t))
    return report
