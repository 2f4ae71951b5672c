"""Group-list index: a prefix-tree alternative to the inverted index."""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    Document,
    FrequencyPartition,
    SortedDocument,
    TermStats,
    choose_zeta,
    compute_term_stats,
    load_corpus,
    parse_corpus,
    parse_zeta,
    partition_terms,
    sort_corpus,
)
from .errors import *  # noqa: F401,F403
from .group_index import GroupIndex, GroupTuple, build_group_index, generate_group_lists
from .inverted import InvertedIndex, build_inverted, intersect_postings, union_postings
from .ptree import NodeCode, PTree, ancestor_of, build_ptree
from .query import (
    Query,
    band_query,
    bor_query,
    grouplist_query,
    inverted_query,
    join_frequent,
    join_infrequent,
    oracle_scan,
    split_query,
)
from .storage import load_index, save_index
