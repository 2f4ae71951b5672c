"""Binary container holding a group-list index and its inverted twin.

Layout (all integers little-endian, unsigned)::

    magic "GLIX" | version u8
    n_docs u64 | zeta numerator u64 | zeta denominator u64
    n_terms u32 | n_frequent u32
    n_terms x (utf8 length u32, utf8 bytes, count u32)        rank order
    n_terms x (n_tuples u32, n_tuples x (pre u32, post u32, len u32, ids u32*len))
    n_terms x (len u32, ids u32*len)
    crc32 of everything above u32
"""
from __future__ import annotations

import struct
import sys
import zlib
from array import array
from fractions import Fraction

from .corpus import FrequencyPartition
from .errors import IndexFormatError, IndexVersionError, IndexWriteError
from .group_index import GroupIndex, GroupTuple
from .inverted import InvertedIndex

MAGIC = b"GLIX"
VERSION = 1

_HEAD = struct.Struct("<4sBQQQII")
_U32 = struct.Struct("<I")


def _u32_array(values=()):
    a = array("I", values)
    if a.itemsize != 4:  # pragma: no cover - platform dependent
        a = array("L", values)
    return a


def _le_bytes(a) -> bytes:
    if sys.byteorder == "big":  # pragma: no cover
        a = array(a.typecode, a)
        a.byteswap()
    return a.tobytes()


def encode_index(gindex: GroupIndex, inverted: InvertedIndex) -> bytes:
    part = gindex.partition
    zeta = Fraction(part.zeta)
    order = part.order
    chunks = [
        _HEAD.pack(
            MAGIC, VERSION, gindex.n_docs, zeta.numerator, zeta.denominator,
            len(order), len(part.frequent),
        )
    ]
    for t in order:
        raw = t.encode("utf-8")
        chunks.append(_U32.pack(len(raw)))
        chunks.append(raw)
        chunks.append(_U32.pack(part.count[t]))
    ints = _u32_array()
    for t in order:
        gl = gindex.lists.get(t, ())
        ints.append(len(gl))
        for tp in gl:
            ints.append(tp.pre)
            ints.append(tp.post)
            ints.append(len(tp.dids))
            ints.extend(tp.dids)
    for t in order:
        ids = inverted.postings.get(t, ())
        ints.append(len(ids))
        ints.extend(ids)
    chunks.append(_le_bytes(ints))
    body = b"".join(chunks)
    return body + _U32.pack(zlib.crc32(body))


def save_index(gindex: GroupIndex, inverted: InvertedIndex, path) -> None:
    if not path:
        raise IndexWriteError("no output path given")
    try:
        data = encode_index(gindex, inverted)
    except (OverflowError, struct.error) as exc:
        raise IndexWriteError(f"index does not fit the u32 container: {exc}") from exc
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IndexWriteError(f"cannot write {path}: {exc}") from exc


def decode_index(data: bytes):
    if len(data) < len(MAGIC) + 1 or data[:4] != MAGIC:
        raise IndexFormatError("not a group-list index (bad magic)")
    if data[4] != VERSION:
        raise IndexVersionError(f"unsupported index version {data[4]} (expected {VERSION})")
    if len(data) < _HEAD.size + 4:
        raise IndexFormatError("truncated header")
    body, crc = data[:-4], _U32.unpack_from(data, len(data) - 4)[0]
    if zlib.crc32(body) != crc:
        raise IndexFormatError("checksum mismatch (corrupt or truncated file)")

    try:
        _, _, n_docs, znum, zden, n_terms, n_freq = _HEAD.unpack_from(body, 0)
        off = _HEAD.size
        order, count = [], {}
        for _ in range(n_terms):
            (n,) = _U32.unpack_from(body, off)
            off += 4
            term = body[off:off + n].decode("utf-8")
            off += n
            (c,) = _U32.unpack_from(body, off)
            off += 4
            order.append(term)
            count[term] = c
        rest = body[off:]
        if len(rest) % 4:
            raise IndexFormatError("misaligned integer section")
        ints = _u32_array()
        ints.frombytes(rest)
        if sys.byteorder == "big":  # pragma: no cover
            ints.byteswap()
        ints = ints.tolist()
        pos = 0
        lists = {}
        for t in order:
            n_tp = ints[pos]
            pos += 1
            gl = []
            for _ in range(n_tp):
                pre, post, k = ints[pos], ints[pos + 1], ints[pos + 2]
                pos += 3
                gl.append(GroupTuple(pre, post, tuple(ints[pos:pos + k])))
                pos += k
            lists[t] = gl
        postings = {}
        for t in order:
            k = ints[pos]
            pos += 1
            postings[t] = ints[pos:pos + k]
            pos += k
    except (IndexError, struct.error, UnicodeDecodeError, ZeroDivisionError) as exc:
        raise IndexFormatError(f"malformed index body: {exc}") from exc
    if pos != len(ints):
        raise IndexFormatError("trailing data after inverted lists")
    if zden == 0 or n_freq > n_terms:
        raise IndexFormatError("inconsistent partition header")

    zeta = Fraction(znum, zden)
    part = FrequencyPartition(
        zeta=zeta,
        threshold=zeta * n_docs,
        frequent=tuple(order[:n_freq]),
        infrequent=tuple(order[n_freq:]),
        rank={t: i for i, t in enumerate(order)},
        count=count,
    )
    return GroupIndex(part, lists, n_docs), InvertedIndex(postings, n_docs)


def load_index(path):
    """Returns ``(GroupIndex, InvertedIndex)``."""
    with open(path, "rb") as fh:
        return decode_index(fh.read())
