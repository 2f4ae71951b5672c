import sys
import random

import pytest

from grouplist import Corpus, build_group_index, build_inverted, parse_corpus

# The running example: ten documents over terms a..i.
EXAMPLE_DOCS = {
    1: {"a", "c"},
    2: {"b", "c", "e", "g", "h"},
    3: {"a", "b", "c", "e", "h"},
    4: {"b", "e"},
    5: {"a", "c", "d", "f", "i"},
    6: {"b", "c", "e", "h"},
    7: {"b", "e", "i"},
    8: {"a", "b", "c", "e", "f", "h"},
    9: {"a", "b", "c", "d", "e", "f"},
    10: {"d", "f"},
}

EXAMPLE_TEXT = "".join(" ".join(sorted(EXAMPLE_DOCS[i])) + "\n" for i in range(1, 11))

# The same documents with terms in count-descending order.
EXAMPLE_SORTED = {
    1: ("c", "a"),
    2: ("b", "c", "e", "h", "g"),
    3: ("b", "c", "e", "a", "h"),
    4: ("b", "e"),
    5: ("c", "a", "f", "d", "i"),
    6: ("b", "c", "e", "h"),
    7: ("b", "e", "i"),
    8: ("b", "c", "e", "a", "f", "h"),
    9: ("b", "c", "e", "a", "f", "d"),
    10: ("f", "d"),
}

# Expected group-lists: term -> [((pre, post), did_set), ...]
EXAMPLE_GROUP_LISTS = {
    "b": [((4, 10), (2, 3, 4, 6, 7, 8, 9))],
    "c": [((1, 2), (1, 5)), ((5, 7), (2, 3, 6, 8, 9))],
    "e": [((6, 6), (2, 3, 6, 8, 9)), ((10, 9), (4, 7))],
    "a": [((2, 1), (1, 5)), ((8, 5), (3, 8, 9))],
    "f": [((3, 0), (5,)), ((9, 4), (8, 9)), ((12, 11), (10,))],
    "h": [((7, 3), (2, 6)), ((9, 4), (3, 8))],
    "d": [((3, 0), (5,)), ((9, 4), (9,)), ((12, 11), (10,))],
    "i": [((3, 0), (5,)), ((11, 8), (7,))],
    "g": [((7, 3), (2,))],
}

# Expected inverted lists.
EXAMPLE_INVERTED = {
    "b": [2, 3, 4, 6, 7, 8, 9],
    "c": [1, 2, 3, 5, 6, 8, 9],
    "e": [2, 3, 4, 6, 7, 8, 9],
    "a": [1, 3, 5, 8, 9],
    "f": [5, 8, 9, 10],
    "h": [2, 3, 6, 8],
    "d": [5, 9, 10],
    "i": [5, 7],
    "g": [2],
}


def brute(docs, terms, op="AND"):
    """Independent oracle straight off a {id: set} mapping."""
    want = set(terms)
    if op == "AND":
        return sorted(i for i, ts in docs.items() if want <= ts)
    return sorted(i for i, ts in docs.items() if want & ts)


def as_pairs(group_list):
    return [((tp.pre, tp.post), tuple(tp.dids)) for tp in group_list]


@pytest.fixture
def example_corpus():
    return parse_corpus(EXAMPLE_TEXT)


@pytest.fixture
def example(example_corpus):
    gi, tree = build_group_index(example_corpus, 0.5)
    return gi, tree, build_inverted(example_corpus)


def random_corpus(rng: random.Random, max_docs=40, max_vocab=12) -> Corpus:
    """Small corpus with uneven term popularity so both term classes show up."""
    n_vocab = rng.randint(1, max_vocab)
    vocab = [chr(ord("a") + i) for i in range(n_vocab)]
    weights = [rng.random() ** 2 for _ in vocab]
    docs = []
    for _ in range(rng.randint(1, max_docs)):
        terms = {t for t, w in zip(vocab, weights) if rng.random() < w}
        if not terms:
            terms = {rng.choice(vocab)}
        docs.append(terms)
    return Corpus.from_documents(docs)


def random_zeta(rng: random.Random, corpus: Corpus):
    """Uniform in [0, 1], or sometimes exactly on a count boundary."""
    if rng.random() < 0.3:
        counts = {}
        for d in corpus.docs:
            for t in d.terms:
                counts[t] = counts.get(t, 0) + 1
        from fractions import Fraction

        return Fraction(rng.choice(list(counts.values())), len(corpus.docs))
    return rng.random()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip("."))):
            terminalreporter.write_line(line)
