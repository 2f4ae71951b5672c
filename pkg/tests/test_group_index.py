import random

import pytest

from conftest import EXAMPLE_GROUP_LISTS, EXAMPLE_INVERTED, as_pairs, random_corpus
from grouplist import (
    IndexFormatError,
    IndexVersionError,
    IndexWriteError,
    MissingCodes,
    PTree,
    build_group_index,
    build_inverted,
    generate_group_lists,
    load_index,
    save_index,
)
from grouplist.storage import decode_index, encode_index
from invariants import check_index


def test_example_group_lists(example):
    gi, _, _ = example
    assert {t: as_pairs(gl) for t, gl in gi.lists.items()} == EXAMPLE_GROUP_LISTS


@pytest.mark.parametrize("term, n", [("b", 1), ("f", 3), ("g", 1), ("d", 3)])
def test_tuple_counts(example, term, n):
    gi, _, _ = example
    assert len(gi.group_list(term)) == n


def test_union_of_did_sets_is_inverted_list(example):
    gi, _, inv = example
    for t, ids in EXAMPLE_INVERTED.items():
        assert gi.postings(t) == ids == inv.postings[t]
    assert check_index(gi, inv) == []


def test_unencoded_tree_rejected():
    with pytest.raises(MissingCodes):
        generate_group_lists(PTree())


def test_root_only_tree_gives_empty_lists():
    tree = PTree()
    tree.assign_codes()
    assert generate_group_lists(tree).lists == {}


def test_footprint_identity(example):
    gi, _, inv = example
    assert gi.n_tuples() == 18
    assert inv.int_count() == sum([5, 7, 7, 3, 7, 4, 1, 4, 2]) == 40
    assert gi.int_count() == inv.int_count() + 2 * 18


def test_dump_format(example):
    gi, _, _ = example
    lines = gi.dump().splitlines()
    assert lines[0] == "b (4,10):[2,3,4,6,7,8,9]"
    assert lines[1] == "c (1,2):[1,5] (5,7):[2,3,6,8,9]"
    assert lines[-1] == "g (7,3):[2]"


# persistence


def test_round_trip_example(tmp_path, example):
    gi, _, inv = example
    p = tmp_path / "ex.glix"
    save_index(gi, inv, p)
    gi2, inv2 = load_index(p)
    assert {t: as_pairs(gl) for t, gl in gi2.lists.items()} == EXAMPLE_GROUP_LISTS
    assert inv2.postings == EXAMPLE_INVERTED
    assert gi2.partition == gi.partition
    assert gi2.n_docs == 10
    p2 = tmp_path / "ex2.glix"
    save_index(gi2, inv2, p2)
    assert p.read_bytes() == p2.read_bytes()


@pytest.mark.parametrize("seed", range(20))
def test_round_trip_random(seed):
    rng = random.Random(seed)
    corpus = random_corpus(rng)
    gi, _ = build_group_index(corpus, rng.random())
    inv = build_inverted(corpus)
    blob = encode_index(gi, inv)
    gi2, inv2 = decode_index(blob)
    assert gi2 == gi
    assert inv2 == inv
    assert encode_index(gi2, inv2) == blob


def test_unicode_terms_round_trip(tmp_path):
    from grouplist import Corpus

    corpus = Corpus.from_documents([["naïve", "日本"], ["日本"]])
    gi, _ = build_group_index(corpus, 0.5)
    inv = build_inverted(corpus)
    gi2, inv2 = decode_index(encode_index(gi, inv))
    assert gi2 == gi and inv2 == inv


def test_empty_path_is_write_error(example):
    gi, _, inv = example
    with pytest.raises(IndexWriteError):
        save_index(gi, inv, "")


def test_unwritable_path(tmp_path, example):
    gi, _, inv = example
    with pytest.raises(IndexWriteError):
        save_index(gi, inv, tmp_path / "missing-dir" / "x.glix")


def test_bad_magic(tmp_path):
    p = tmp_path / "bad"
    p.write_bytes(b"NOPE\x01" + b"\0" * 40)
    with pytest.raises(IndexFormatError):
        load_index(p)


def test_version_mismatch(example):
    gi, _, inv = example
    blob = bytearray(encode_index(gi, inv))
    blob[4] = 99
    with pytest.raises(IndexVersionError):
        decode_index(bytes(blob))


@pytest.mark.parametrize("cut", [1, 5, 20, 60, -1, -4, -5])
def test_truncated(example, cut):
    gi, _, inv = example
    blob = encode_index(gi, inv)
    with pytest.raises(IndexFormatError):
        decode_index(blob[:cut])


def test_bit_flip_detected(example):
    gi, _, inv = example
    blob = bytearray(encode_index(gi, inv))
    blob[len(blob) // 2] ^= 0x10
    with pytest.raises(IndexFormatError):
        decode_index(bytes(blob))
