"""Prefix tree over count-sorted documents, with pre/post-order node codes.

Every non-root internal node carries exactly one frequent term. The
infrequent tail of a document lands in a single "bucket" leaf hanging off the
node reached by the document's frequent prefix; a node has at most one bucket.

Nodes live in parallel lists indexed by a dense node id (root is 0), so deep
paths never hit the recursion limit.
"""
from __future__ import annotations

from typing import NamedTuple

from .corpus import FrequencyPartition
from .errors import EmptyCorpus, RankOrderViolation

ROOT = 0


class NodeCode(NamedTuple):
    pre: int
    post: int


def ancestor_of(a, d) -> bool:
    """True iff the node coded ``a`` is a proper ancestor of the node coded ``d``."""
    return a[0] < d[0] and a[1] > d[1]


class PTree:
    def __init__(self):
        self.labels = [[]]            # node -> terms in insertion order
        self.records = [{}]           # node -> {term: [doc ids]}
        self.parent = [None]
        self.children = [[]]          # node -> child ids in creation order
        self.is_bucket = [False]
        self._child_by_term = [{}]    # frequent-term children only
        self._bucket = [None]         # node -> its bucket child, if any
        self.pre = None
        self.post = None
        self.partition = None
        self.n_docs = 0

    def __len__(self):
        return len(self.labels)

    @property
    def root(self) -> int:
        return ROOT

    @property
    def encoded(self) -> bool:
        return self.pre is not None and len(self.pre) == len(self.labels)

    def code(self, node) -> NodeCode:
        return NodeCode(self.pre[node], self.post[node])

    def _new_node(self, parent, bucket):
        nid = len(self.labels)
        self.labels.append([])
        self.records.append({})
        self.parent.append(parent)
        self.children.append([])
        self.is_bucket.append(bucket)
        self._child_by_term.append({})
        self._bucket.append(None)
        self.children[parent].append(nid)
        self.pre = self.post = None
        return nid

    def child_for(self, node, term):
        return self._child_by_term[node].get(term)

    def bucket_of(self, node):
        return self._bucket[node]

    def insert_document(self, doc, partition: FrequencyPartition):
        """Insert one rank-sorted document (see ``sort_corpus``)."""
        rank = partition.rank
        n_freq = len(partition.frequent)
        doc_id = doc.doc_id
        self.partition = partition
        self.n_docs += 1
        node = ROOT
        terms = doc.terms
        i = 0
        n = len(terms)
        while i < n and rank[terms[i]] < n_freq:
            t = terms[i]
            child = self._child_by_term[node].get(t)
            if child is None:
                child = self._new_node(node, bucket=False)
                self._child_by_term[node][t] = child
                self.labels[child].append(t)
                self.records[child][t] = [doc_id]
            else:
                self.records[child][t].append(doc_id)
            node = child
            i += 1
        if i == n:
            return
        bucket = self._bucket[node]
        if bucket is None:
            bucket = self._new_node(node, bucket=True)
            self._bucket[node] = bucket
        recs = self.records[bucket]
        for t in terms[i:]:
            if rank[t] < n_freq:
                raise RankOrderViolation(
                    f"document {doc_id}: frequent term {t!r} follows an infrequent term"
                )
            ids = recs.get(t)
            if ids is None:
                self.labels[bucket].append(t)
                recs[t] = [doc_id]
            else:
                ids.append(doc_id)

    def assign_codes(self):
        """Number nodes by preorder and postorder visit, root included, from 0."""
        n = len(self.labels)
        pre = [0] * n
        post = [0] * n
        pre_i = post_i = 0
        stack = [(ROOT, 0)]
        children = self.children
        while stack:
            node, k = stack.pop()
            if k == 0:
                pre[node] = pre_i
                pre_i += 1
            kids = children[node]
            if k < len(kids):
                stack.append((node, k + 1))
                stack.append((kids[k], 0))
            else:
                post[node] = post_i
                post_i += 1
        self.pre = pre
        self.post = post

    def preorder(self):
        """Yield node ids in preorder (children in creation order)."""
        stack = [ROOT]
        children = self.children
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(children[node]))

    def depth(self, node) -> int:
        d = 0
        while self.parent[node] is not None:
            node = self.parent[node]
            d += 1
        return d

    def dump(self) -> str:
        """Deterministic text rendering: one node per line in preorder."""
        lines = []
        for node in self.preorder():
            d = self.depth(node)
            code = f"<{self.pre[node]},{self.post[node]}>" if self.encoded else "<?,?>"
            if node == ROOT:
                lines.append(f"{d} {code} Root")
                continue
            recs = " ".join(
                f"{t}:[{','.join(map(str, self.records[node][t]))}]"
                for t in self.labels[node]
            )
            kind = "bucket" if self.is_bucket[node] else "node"
            lines.append(f"{d} {code} {kind} {{{','.join(self.labels[node])}}} {recs}")
        return "\n".join(lines) + "\n"


def build_ptree(sorted_docs, partition: FrequencyPartition) -> PTree:
    """Insert every document and assign node codes."""
    if not sorted_docs:
        raise EmptyCorpus("no documents to insert")
    tree = PTree()
    for doc in sorted_docs:
        tree.insert_document(doc, partition)
    tree.assign_codes()
    return tree
