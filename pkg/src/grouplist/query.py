"""Boolean AND/OR query processing over group-lists.

Frequent terms are joined by ancestor tests on node codes: the joined list
for ``t1 .. tk`` keeps the ``tk`` tuples that sit below some tuple of the list
for ``t1 .. t(k-1)``. Infrequent terms only ever share a node when they share
a bucket leaf, so their join is an equality match on the preorder number.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .corpus import Corpus, FrequencyPartition
from .errors import InvalidQuery
from .group_index import GroupIndex, GroupTuple
from .inverted import InvertedIndex, intersect_postings, union_postings

AND = "AND"
OR = "OR"


@dataclass(frozen=True)
class Query:
    op: str
    terms: tuple

    def __post_init__(self):
        op = str(self.op).upper()
        if op not in (AND, OR):
            raise InvalidQuery(f"unknown operator {self.op!r}")
        terms = tuple(dict.fromkeys(self.terms))
        if not terms:
            raise InvalidQuery("query has no terms")
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "terms", terms)

    def __str__(self):
        return f" {self.op} ".join(self.terms)


def _terms_of(q) -> tuple:
    if isinstance(q, Query):
        return q.terms
    if isinstance(q, str):
        q = [q]
    terms = tuple(dict.fromkeys(q))
    if not terms:
        raise InvalidQuery("query has no terms")
    return terms


def split_query(terms, partition: FrequencyPartition):
    """Return ``(frequent, infrequent, unknown)``; the first two in rank order."""
    rank = partition.rank
    n_freq = len(partition.frequent)
    known = sorted((t for t in dict.fromkeys(terms) if t in rank), key=rank.__getitem__)
    unknown = [t for t in dict.fromkeys(terms) if t not in rank]
    freq = [t for t in known if rank[t] < n_freq]
    infreq = [t for t in known if rank[t] >= n_freq]
    return freq, infreq, unknown


def _descendants(anc, desc) -> list:
    """Tuples of ``desc`` whose node lies strictly below some node in ``anc``.

    Both lists are preorder-sorted with no ancestry inside either list, so
    one forward pass suffices: an ``anc`` tuple whose postorder number is
    below the current ``desc`` tuple's has been left behind for good.
    """
    out = []
    i = 0
    na = len(anc)
    if not na:
        return out
    a_pre, a_post = anc[0][0], anc[0][1]
    for tp in desc:
        post = tp[1]
        while a_post < post:
            i += 1
            if i == na:
                return out
            a_pre, a_post = anc[i][0], anc[i][1]
        if a_pre < tp[0]:
            out.append(tp)
    return out


def join_frequent(lists) -> list:
    """Group-list of a frequent termset; ``lists`` ordered most frequent first."""
    lists = list(lists)
    if not lists:
        raise InvalidQuery("join of zero group-lists")
    acc = lists[0]
    for nxt in lists[1:]:
        if not acc:
            break
        acc = _descendants(acc, nxt)
    return list(acc)


def _same_node(a, b) -> list:
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        pa, pb = a[i][0], b[j][0]
        if pa == pb:
            other = set(b[j][2])
            ids = tuple(d for d in a[i][2] if d in other)
            if ids:
                out.append(GroupTuple(pa, a[i][1], ids))
            i += 1
            j += 1
        elif pa < pb:
            i += 1
        else:
            j += 1
    return out


def join_infrequent(lists) -> list:
    """Group-list of an infrequent termset: tuples sharing a bucket leaf."""
    lists = sorted(lists, key=len)
    if not lists:
        raise InvalidQuery("join of zero group-lists")
    acc = lists[0]
    for nxt in lists[1:]:
        if not acc:
            break
        acc = _same_node(acc, nxt)
    return list(acc)


def flatten(group_list) -> list:
    """Sorted doc ids of a group-list; did_sets within one list are disjoint."""
    return sorted(chain.from_iterable(tp[2] for tp in group_list))


def band_query(index: GroupIndex, q) -> list:
    terms = _terms_of(q)
    freq, infreq, unknown = split_query(terms, index.partition)
    if unknown:
        return []
    lists = index.lists
    gl_f = join_frequent([lists[t] for t in freq]) if freq else None
    gl_i = join_infrequent([lists[t] for t in infreq]) if infreq else None
    if gl_f is None:
        return flatten(gl_i)
    if gl_i is None:
        return flatten(gl_f)
    return flatten(_descendants(gl_f, gl_i))


def bor_query(index: GroupIndex, q) -> list:
    terms = _terms_of(q)
    lists = [index.lists[t] for t in terms if t in index.lists]
    if not lists:
        raise InvalidQuery(f"no known terms in {terms}")
    if len(lists) == 1:
        return flatten(lists[0])
    ids = set()
    for gl in lists:
        for tp in gl:
            ids.update(tp[2])
    return sorted(ids)


def inverted_query(index: InvertedIndex, q: Query) -> list:
    """Same semantics as the group-list engine, evaluated on posting lists."""
    postings = index.postings
    if q.op == AND:
        if any(t not in postings for t in q.terms):
            return []
        return intersect_postings([postings[t] for t in q.terms])
    known = [postings[t] for t in q.terms if t in postings]
    if not known:
        raise InvalidQuery(f"no known terms in {q.terms}")
    return union_postings(known)


def grouplist_query(index: GroupIndex, q: Query) -> list:
    return band_query(index, q) if q.op == AND else bor_query(index, q)


def oracle_scan(corpus: Corpus, q: Query) -> list:
    """Brute force: test every document against the query predicate."""
    if not isinstance(q, Query):
        raise InvalidQuery("oracle_scan needs a Query with an operator")
    want = frozenset(q.terms)
    if q.op == AND:
        return [d.doc_id for d in corpus.docs if want <= d.terms]
    return [d.doc_id for d in corpus.docs if not want.isdisjoint(d.terms)]
