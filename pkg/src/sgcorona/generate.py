"""Random signed graph generators for the verification harness.

Everything takes an explicit random.Random so runs are reproducible
from a seed.  The circulant builders cover the structured families:
per-edge signs give a regular graph, per-offset signs additionally
make the canonical marking constant, hence an eigenvector of the
adjacency matrix.
"""

from __future__ import annotations

import random

from .core import SignedGraph, new_signed_graph, switch

__all__ = [
    "random_signed_graph",
    "random_balanced_graph",
    "random_regular_circulant",
    "random_offset_circulant",
    "random_star",
    "random_switching",
    "random_permutation",
]


def random_signed_graph(rng: random.Random, n: int,
                        p: float = 0.5) -> SignedGraph:
    """Each of the n(n-1)/2 possible edges present with probability p,
    signs fair coin."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice((1, -1))))
    return new_signed_graph(n, edges)


def random_balanced_graph(rng: random.Random, n: int,
                          p: float = 0.5) -> SignedGraph:
    """Random graph whose signs come from node potentials
    s(uv) = t(u) t(v), which makes every cycle positive."""
    t = [rng.choice((1, -1)) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, t[u] * t[v]))
    return new_signed_graph(n, edges)


def _circulant_edges(n: int, offsets):
    ed = {}
    for s, sign_of in offsets:
        for u in range(n):
            v = (u + s) % n
            if u == v:
                continue
            key = (min(u, v), max(u, v))
            if key not in ed:
                ed[key] = sign_of()
    return [(u, v, s) for (u, v), s in ed.items()]


def random_regular_circulant(rng: random.Random, n: int,
                             keep: float = 0.7) -> SignedGraph:
    """Circulant graph (so regular) with independent edge signs."""
    offs = [(s, lambda: rng.choice((1, -1)))
            for s in range(1, n // 2 + 1) if rng.random() < keep]
    return new_signed_graph(n, _circulant_edges(n, offs))


def random_offset_circulant(rng: random.Random, n: int,
                            keep: float = 0.7) -> SignedGraph:
    """Circulant graph with one sign per offset class.  Every node then
    has the same negative degree, the canonical marking is constant,
    and the net degree is an adjacency eigenvalue on that marking."""
    offs = []
    for s in range(1, n // 2 + 1):
        if rng.random() < keep:
            sg = rng.choice((1, -1))
            offs.append((s, lambda sg=sg: sg))
    return new_signed_graph(n, _circulant_edges(n, offs))


def random_star(rng: random.Random, legs: int) -> SignedGraph:
    """Star with the given number of legs, node 0 at the center,
    independent leg signs."""
    if legs < 1:
        raise ValueError("star needs at least one leg")
    return new_signed_graph(legs + 1, [(0, i, rng.choice((1, -1)))
                                       for i in range(1, legs + 1)])


def random_switching(rng: random.Random, g: SignedGraph) -> SignedGraph:
    """Switch g at a random node subset."""
    s = [rng.choice((1, -1)) for _ in range(g.n)]
    return switch(g, s)


def random_permutation(rng: random.Random, n: int):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
