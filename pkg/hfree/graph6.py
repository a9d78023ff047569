#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
graph6 codec, bit-compatible with the nauty format for 0 <= n <= 62.

The header byte is n + 63. The upper triangle is read column by column,
(0,1),(0,2),(1,2),(0,3),..., packed into 6-bit groups, each stored + 63,
with the last group zero-padded.
"""

from hfree.exceptions import (
    CapacityError,
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
)
from hfree.graph import Graph, column_pairs

# Largest n with a single-byte header.
GRAPH6_MAX_VERTICES = 62

_OPTIONAL_HEADER = '>>graph6<<'


def parse_graph6(text):
    """
    Decode a graph6 string.

    Args:
        text (str): graph6 text; surrounding whitespace and an optional
            '>>graph6<<' prefix are ignored

    Returns:
        Graph: The decoded graph

    Raises:
        Graph6HeaderError: If the header byte is missing or invalid
        CapacityError: If the header announces more than 62 vertices
        Graph6LengthError: If the body length does not match the header
        Graph6CharacterError: If a body byte is outside 63..126
        Graph6PaddingError: If padding bits are not zero
    """
    data = text.strip()
    if data.startswith(_OPTIONAL_HEADER):
        data = data[len(_OPTIONAL_HEADER):]
    if not data:
        raise Graph6HeaderError("Empty graph6 string")

    header = ord(data[0])
    if header == 126:
        raise CapacityError(f"graph6 header announces more than {GRAPH6_MAX_VERTICES} vertices")
    if header < 63 or header > 126:
        raise Graph6HeaderError(f"Invalid graph6 header byte {data[0]!r}")
    n = header - 63

    pairs = column_pairs(n)
    expected = (len(pairs) + 5) // 6
    body = data[1:]
    if len(body) != expected:
        raise Graph6LengthError(
            f"graph6 body for n={n} must have {expected} bytes, got {len(body)}"
        )

    bits = 0
    for position, char in enumerate(body):
        value = ord(char) - 63
        if value < 0 or value > 63:
            raise Graph6CharacterError(f"Invalid graph6 byte {char!r} at offset {position + 1}")
        bits = (bits << 6) | value

    padding = expected * 6 - len(pairs)
    if bits & ((1 << padding) - 1):
        raise Graph6PaddingError(f"Nonzero padding bits in graph6 string {text.strip()!r}")
    bits >>= padding

    rows = [0] * n
    total = len(pairs)
    for index, (u, v) in enumerate(pairs):
        if bits >> (total - 1 - index) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph._unchecked(n, rows)


def encode_graph6(g):
    """
    Encode a graph as graph6 text (no header prefix, no newline).

    Args:
        g (Graph): Graph with at most 62 vertices

    Returns:
        str: graph6 text

    Raises:
        CapacityError: If g has more than 62 vertices
    """
    if g.n > GRAPH6_MAX_VERTICES:
        raise CapacityError(f"graph6 encoding supports at most {GRAPH6_MAX_VERTICES} vertices, got {g.n}")
    chars = [chr(g.n + 63)]
    group = 0
    filled = 0
    for u, v in column_pairs(g.n):
        group = (group << 1) | (g.rows[u] >> v & 1)
        filled += 1
        if filled == 6:
            chars.append(chr(group + 63))
            group = 0
            filled = 0
    if filled:
        chars.append(chr((group << (6 - filled)) + 63))
    return ''.join(chars)
