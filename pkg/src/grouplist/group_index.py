"""Per-term group-lists extracted from an encoded prefix tree."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .corpus import Corpus, FrequencyPartition, compute_term_stats, partition_terms, sort_corpus
from .errors import MissingCodes
from .ptree import NodeCode, PTree, build_ptree


class GroupTuple(NamedTuple):
    pre: int
    post: int
    dids: tuple

    @property
    def code(self) -> NodeCode:
        return NodeCode(self.pre, self.post)


@dataclass
class GroupIndex:
    partition: FrequencyPartition
    lists: dict
    n_docs: int

    def group_list(self, term) -> list:
        return self.lists.get(term, [])

    def __contains__(self, term):
        return term in self.lists

    def n_tuples(self, terms=None) -> int:
        if terms is None:
            terms = self.lists
        return sum(len(self.lists[t]) for t in terms)

    def int_count(self) -> int:
        """Integers held under the raw encoding: pre, post and every doc id."""
        return sum(2 + len(tp.dids) for gl in self.lists.values() for tp in gl)

    def postings(self, term) -> list:
        return sorted(d for tp in self.lists.get(term, ()) for d in tp.dids)

    def dump(self) -> str:
        """One line per term in rank order: ``term (pre,post):[ids] ...``."""
        lines = []
        for t in self.partition.order:
            body = " ".join(
                f"({tp.pre},{tp.post}):[{','.join(map(str, tp.dids))}]"
                for tp in self.lists.get(t, ())
            )
            lines.append(f"{t} {body}".rstrip())
        return "\n".join(lines) + "\n"


def generate_group_lists(tree: PTree) -> GroupIndex:
    if not tree.encoded:
        raise MissingCodes("assign_codes must run before group-lists are generated")
    lists = {t: [] for t in tree.partition.order} if tree.partition else {}
    pre, post = tree.pre, tree.post
    for node in tree.preorder():
        recs = tree.records[node]
        for t in tree.labels[node]:
            lists.setdefault(t, []).append(GroupTuple(pre[node], post[node], tuple(recs[t])))
    return GroupIndex(tree.partition, lists, tree.n_docs)


def build_group_index(corpus: Corpus, zeta) -> tuple:
    """Run the whole construction pipeline; returns ``(GroupIndex, PTree)``."""
    part = partition_terms(compute_term_stats(corpus), zeta)
    tree = build_ptree(sort_corpus(corpus, part), part)
    return generate_group_lists(tree), tree
