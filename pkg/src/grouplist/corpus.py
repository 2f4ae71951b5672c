"""Document collections, term statistics and the frequent/infrequent split.

A corpus is a sequence of documents, each one a *set* of term tokens. Terms
are ranked by document count (descending, token ascending on ties); that rank
drives the insertion order into the prefix tree and query planning.
"""
from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import (
    DuplicateDocId,
    EmptyCorpus,
    InternalInconsistency,
    InvalidThreshold,
    MalformedDocument,
)

_WS = re.compile(r"[ \t\n\r\f\v]+")
_EXPLICIT_ID = re.compile(r"^\s*(\d+)\t(.*)$")


class Document(NamedTuple):
    doc_id: int
    terms: frozenset


class SortedDocument(NamedTuple):
    doc_id: int
    terms: tuple


@dataclass
class Corpus:
    docs: list
    vocab: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.vocab:
            for doc in self.docs:
                for t in sorted(doc.terms):
                    self.vocab.setdefault(t, len(self.vocab))

    @classmethod
    def from_documents(cls, docs: Iterable[Iterable[str]]) -> "Corpus":
        """Build a corpus from term iterables; ids are assigned 1, 2, 3, ..."""
        out = []
        for i, terms in enumerate(docs, start=1):
            ts = frozenset(terms)
            if not ts:
                raise MalformedDocument(i, "empty document")
            out.append(Document(i, ts))
        if not out:
            raise EmptyCorpus("corpus has no documents")
        return cls(out)

    def __len__(self):
        return len(self.docs)

    def __iter__(self):
        return iter(self.docs)

    def to_text(self) -> str:
        """Render in the plain one-document-per-line format (tokens sorted)."""
        lines = []
        for pos, doc in enumerate(self.docs, start=1):
            body = " ".join(sorted(doc.terms))
            lines.append(body if doc.doc_id == pos else f"{doc.doc_id}\t{body}")
        return "\n".join(lines) + "\n"


@dataclass
class TermStats:
    count: dict
    n_docs: int


@dataclass
class FrequencyPartition:
    zeta: Fraction
    threshold: Fraction
    frequent: tuple
    infrequent: tuple
    rank: dict
    count: dict

    @property
    def order(self) -> tuple:
        """The full sorted term sequence (frequent terms first)."""
        return self.frequent + self.infrequent

    def is_frequent(self, term) -> bool:
        r = self.rank.get(term)
        return r is not None and r < len(self.frequent)


def _parse_lines(text: str):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EmptyCorpus("input contains no documents")
    for lineno, raw in enumerate(lines, start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        m = _EXPLICIT_ID.match(line)
        if m:
            doc_id = int(m.group(1))
            if doc_id < 1:
                raise MalformedDocument(lineno, "document id must be positive")
            body = m.group(2)
        else:
            doc_id = lineno
            body = line
        tokens = [t for t in _WS.split(body) if t]
        if not tokens:
            raise MalformedDocument(lineno)
        yield lineno, doc_id, tokens


def load_corpus(source) -> Corpus:
    """Read a corpus from a path or an open text file.

    One document per line, whitespace-separated tokens. A line of the form
    ``<id>\\t<tokens>`` sets the document id explicitly; otherwise the id is
    the 1-based line number.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            return parse_corpus(fh.read())
    if hasattr(source, "read"):
        return parse_corpus(source.read())
    raise TypeError(f"cannot read corpus from {type(source).__name__}")


def parse_corpus(text: str) -> Corpus:
    docs = []
    seen = set()
    last = 0
    for lineno, doc_id, tokens in _parse_lines(text):
        if doc_id in seen:
            raise DuplicateDocId(doc_id, lineno)
        if doc_id < last:
            raise MalformedDocument(lineno, f"document id {doc_id} is not increasing")
        seen.add(doc_id)
        last = doc_id
        docs.append(Document(doc_id, frozenset(tokens)))
    return Corpus(docs)


def compute_term_stats(corpus: Corpus) -> TermStats:
    if not corpus.docs:
        raise EmptyCorpus("corpus has no documents")
    count = Counter()
    for doc in corpus.docs:
        count.update(doc.terms)
    return TermStats(dict(count), len(corpus.docs))


def parse_zeta(value) -> Fraction:
    """Accept a fraction (``0.5``) or percent notation (``"50%"``).

    The result is exact so that the inclusive boundary ``count >= zeta * |D|``
    is not disturbed by binary rounding (``0.81 * 100`` is not 81.0 in floats).
    """
    try:
        if isinstance(value, Fraction):
            z = value
        elif isinstance(value, str):
            s = value.strip()
            z = Fraction(s[:-1]) / 100 if s.endswith("%") else Fraction(s)
        else:
            z = Fraction(repr(float(value)))
    except (ValueError, ZeroDivisionError):
        raise InvalidThreshold(f"not a threshold: {value!r}") from None
    if not 0 <= z <= 1:
        raise InvalidThreshold(f"zeta must lie in [0, 1], got {value!r}")
    return z


def partition_terms(stats: TermStats, zeta) -> FrequencyPartition:
    z = parse_zeta(zeta)
    threshold = z * stats.n_docs
    ordered = sorted(stats.count, key=lambda t: (-stats.count[t], t))
    n_freq = sum(1 for t in ordered if stats.count[t] >= threshold)
    rank = {t: i for i, t in enumerate(ordered)}
    return FrequencyPartition(
        zeta=z,
        threshold=threshold,
        frequent=tuple(ordered[:n_freq]),
        infrequent=tuple(ordered[n_freq:]),
        rank=rank,
        count=dict(stats.count),
    )


def sort_corpus(corpus: Corpus, partition: FrequencyPartition) -> list:
    rank = partition.rank
    out = []
    for doc in corpus.docs:
        try:
            terms = tuple(sorted(doc.terms, key=rank.__getitem__))
        except KeyError as exc:
            raise InternalInconsistency(
                f"term {exc.args[0]!r} of document {doc.doc_id} is not in the partition"
            ) from None
        out.append(SortedDocument(doc.doc_id, terms))
    return out


def choose_zeta(stats: TermStats, n_frequent: int) -> Fraction:
    """Largest threshold that leaves at least ``n_frequent`` frequent terms."""
    counts = sorted(stats.count.values(), reverse=True)
    if not counts:
        raise EmptyCorpus("no terms")
    k = min(max(n_frequent, 1), len(counts))
    return Fraction(counts[k - 1], stats.n_docs)
