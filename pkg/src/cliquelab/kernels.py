"""Compiled greedy colouring kernels over a boolean adjacency matrix.

Both kernels take the scan as an int64 array of vertex indices and leave the
vertex-to-colour assignment in caller-provided buffers. Colours are 1-based.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def colour_and_sort(adj, cands, n_cands, sorted_cands, colours):
    """First-fit colour ``cands`` in scan order, then sort them by colour.

    The counting sort is stable, so each class keeps its scan order. Returns the
    number of colours used.
    """
    if n_cands == 0:
        return 0

    temp_colours = np.zeros(n_cands, dtype=np.int64)
    max_colour = 0

    for i in range(n_cands):
        v = cands[i]
        used = np.zeros(n_cands + 1, dtype=np.bool_)
        for j in range(i):
            if adj[v, cands[j]]:
                used[temp_colours[j]] = True
        c = 1
        while used[c]:
            c += 1
        temp_colours[i] = c
        if c > max_colour:
            max_colour = c

    count = np.zeros(max_colour + 2, dtype=np.int64)
    for i in range(n_cands):
        count[temp_colours[i] + 1] += 1
    for i in range(1, max_colour + 2):
        count[i] += count[i - 1]

    for i in range(n_cands):
        c = temp_colours[i]
        pos = count[c]
        sorted_cands[pos] = cands[i]
        colours[pos] = c
        count[c] += 1

    return max_colour


@njit(cache=True, nogil=True)
def sweep_colour(adj, cands, n_cands, colours):
    """Open one class at a time and sweep the uncoloured scan into it.

    ``colours[i]`` receives the class of ``cands[i]``. Returns the number of
    classes and the number of vertex-against-class checks made.
    """
    for i in range(n_cands):
        colours[i] = 0

    remaining = n_cands
    c = 0
    checks = 0
    while remaining > 0:
        c += 1
        for i in range(n_cands):
            if colours[i] != 0:
                continue
            checks += 1
            fits = True
            for j in range(i):
                if colours[j] == c and adj[cands[i], cands[j]]:
                    fits = False
                    break
            if fits:
                colours[i] = c
                remaining -= 1

    return c, checks
