"""Hot loops: batched Garside normal forms and cut-graph centraliser ranks.

Word encoding: ``1 = a``, ``2 = b``, ``-1 = a^-1``, ``-2 = b^-1``; rows are
padded on the right and carry their length separately.

A proper simple element of A(m) is an alternating word of length
``1..m-1``, stored as ``(start, length)`` with ``start`` 0 for ``a`` and 1
for ``b``. Its only right descent is its last letter and its only left
descent its first, so a factor sequence is left-greedy exactly when each
factor starts with the letter the previous one ends with.
"""

from __future__ import annotations

import numpy as np

from ._accel import jit


@jit
def nf_batch(words, lengths, m):
    n_words = words.shape[0]
    cap = max(1, words.shape[1] * (m - 1))
    out_k = np.zeros(n_words, dtype=np.int64)
    out_start = np.zeros((n_words, cap), dtype=np.int8)
    out_len = np.zeros((n_words, cap), dtype=np.int16)
    out_n = np.zeros(n_words, dtype=np.int64)
    odd = m % 2 == 1

    for w in range(n_words):
        start = out_start[w]
        flen = out_len[w]
        k = 0
        nf = 0
        for i in range(lengths[w]):
            c = words[w, i]
            if c > 0:
                first = c - 1
                count = 1
            else:
                # x^-1 = Delta^-1 . (Delta x^-1); move Delta^-1 to the front
                x = -c - 1
                k -= 1
                if odd:
                    for j in range(nf):
                        start[j] = 1 - start[j]
                first = x if odd else 1 - x
                count = m - 1
            t = first
            for _ in range(count):
                if nf == 0:
                    start[0] = t
                    flen[0] = 1
                    nf = 1
                else:
                    s = start[nf - 1]
                    ln = flen[nf - 1]
                    last = s if ln % 2 == 1 else 1 - s
                    if last == t:
                        start[nf] = t
                        flen[nf] = 1
                        nf += 1
                    elif ln + 1 == m:
                        # factor became Delta: push it to the front
                        nf -= 1
                        k += 1
                        if odd:
                            for j in range(nf):
                                start[j] = 1 - start[j]
                    else:
                        flen[nf - 1] = ln + 1
                t = 1 - t
        out_k[w] = k
        out_n[w] = nf
    return out_k, out_start, out_len, out_n


@jit
def _find(parent, i):
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        nxt = parent[i]
        parent[i] = root
        i = nxt
    return root


@jit
def centraliser_ranks(n_vertices, eu, ev, even):
    """Free rank ``|E| + cycle rank`` of each vertex's cut-graph component.

    Stub vertices for even edges are numbered from ``n_vertices`` upwards.
    """
    n_even = 0
    for i in range(eu.shape[0]):
        if even[i]:
            n_even += 1
    total = n_vertices + 2 * n_even
    parent = np.arange(total)
    stub = n_vertices
    for i in range(eu.shape[0]):
        if even[i]:
            ra = _find(parent, eu[i])
            rb = _find(parent, stub)
            parent[rb] = ra
            ra = _find(parent, ev[i])
            rb = _find(parent, stub + 1)
            parent[rb] = ra
            stub += 2
        else:
            ra = _find(parent, eu[i])
            rb = _find(parent, ev[i])
            if ra != rb:
                parent[rb] = ra
    n_edges = np.zeros(total, dtype=np.int64)
    n_verts = np.zeros(total, dtype=np.int64)
    for v in range(total):
        n_verts[_find(parent, v)] += 1
    for i in range(eu.shape[0]):
        n_edges[_find(parent, eu[i])] += 1
        if even[i]:
            n_edges[_find(parent, ev[i])] += 1
    ranks = np.zeros(n_vertices, dtype=np.int64)
    for v in range(n_vertices):
        r = _find(parent, v)
        e = n_edges[r]
        ranks[v] = e + (e - n_verts[r] + 1)
    return ranks


@jit
def centraliser_ranks_batch(n_vertices, edge_offsets, eu, ev, even):
    """`centraliser_ranks` over many graphs packed end to end.

    Graph ``g`` owns edges ``edge_offsets[g]:edge_offsets[g + 1]`` and
    vertices ``0..n_vertices[g]-1``; the result is flat, graph after graph.
    """
    n_graphs = n_vertices.shape[0]
    total = 0
    for g in range(n_graphs):
        total += n_vertices[g]
    out = np.zeros(total, dtype=np.int64)
    pos = 0
    for g in range(n_graphs):
        lo = edge_offsets[g]
        hi = edge_offsets[g + 1]
        r = centraliser_ranks(n_vertices[g], eu[lo:hi], ev[lo:hi], even[lo:hi])
        for v in range(n_vertices[g]):
            out[pos + v] = r[v]
        pos += n_vertices[g]
    return out
