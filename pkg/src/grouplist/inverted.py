"""Plain inverted index with galloping AND and heap-merge OR; the baseline."""
from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass

from .corpus import Corpus
from .errors import EmptyCorpus, InvalidQuery


@dataclass
class InvertedIndex:
    postings: dict
    n_docs: int

    def posting(self, term) -> list:
        return self.postings.get(term, [])

    def int_count(self) -> int:
        return sum(len(p) for p in self.postings.values())


def build_inverted(corpus: Corpus) -> InvertedIndex:
    if not corpus.docs:
        raise EmptyCorpus("corpus has no documents")
    postings = {}
    for doc in corpus.docs:
        for t in doc.terms:
            ids = postings.get(t)
            if ids is None:
                postings[t] = [doc.doc_id]
            else:
                ids.append(doc.doc_id)
    return InvertedIndex(postings, len(corpus.docs))


def _gallop(small, large):
    out = []
    n = len(large)
    lo = 0
    for x in small:
        if lo >= n:
            break
        if large[lo] < x:
            step = 1
            hi = lo + 1
            while hi < n and large[hi] < x:
                lo = hi
                step <<= 1
                hi = lo + step
            lo = bisect_left(large, x, lo, hi if hi < n else n)
            if lo >= n:
                break
        if large[lo] == x:
            out.append(x)
            lo += 1
    return out


def intersect_postings(lists) -> list:
    """Intersect sorted posting lists, shortest first, pairwise galloping."""
    lists = sorted(lists, key=len)
    if not lists:
        raise InvalidQuery("nothing to intersect")
    acc = list(lists[0])
    for other in lists[1:]:
        if not acc:
            break
        acc = _gallop(acc, other)
    return acc


def union_postings(lists) -> list:
    lists = list(lists)
    if not lists:
        raise InvalidQuery("nothing to unite")
    out = []
    last = None
    for x in heapq.merge(*lists):
        if x != last:
            out.append(x)
            last = x
    return out
