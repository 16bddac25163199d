"""Splitting C^{k-1}_g -> C^k_g -> C^{k+1}_g into minimal direct summands.

A minimal subcomplex is a connected component of the tripartite graph whose
edges are the nonzero entries of the two differential matrices.  Components
are the finest splitting compatible with the monomial bases: every nonzero
matrix entry stays inside one block.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra
from .cochain import Monomial, differential_matrix, generate_monomials
from .linalg import SparseMatrix

KM1, K, KP1 = 0, 1, 2


@dataclass
class Subcomplex:
    seed: Monomial
    layers: tuple[list[int], list[int], list[int]]
    monomials: tuple[list[Monomial], list[Monomial], list[Monomial]]
    d_in: SparseMatrix
    d_out: SparseMatrix

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(len(x) for x in self.layers)


@dataclass
class InteractionGraph:
    """Adjacency of the three layers; layer sizes come from the matrix shapes."""

    bases: tuple[Sequence[Monomial], Sequence[Monomial], Sequence[Monomial]]
    d_in: SparseMatrix
    d_out: SparseMatrix
    k_to_km1: list[list[int]]
    km1_to_k: list[list[int]]
    k_to_kp1: list[list[int]]
    kp1_to_k: list[list[int]]

    @property
    def sizes(self):
        return (self.d_in.ncols, self.d_in.nrows, self.d_out.nrows)

    @property
    def n_edges(self) -> int:
        return sum(len(x) for x in self.k_to_km1) + sum(len(x) for x in self.k_to_kp1)

    def neighbours(self, layer: int, i: int):
        if layer == K:
            for j in self.k_to_km1[i]:
                yield KM1, j
            for j in self.k_to_kp1[i]:
                yield KP1, j
        elif layer == KM1:
            for j in self.km1_to_k[i]:
                yield K, j
        else:
            for j in self.kp1_to_k[i]:
                yield K, j


def interaction_graph(d_km1: SparseMatrix, d_k: SparseMatrix, bases=None) -> InteractionGraph:
    """Graph from d^{k-1} (C^k x C^{k-1}) and d^k (C^{k+1} x C^k)."""
    if d_km1.nrows != d_k.ncols:
        raise ValueError(f"incompatible shapes {d_km1.shape} and {d_k.shape}")
    n_km1, n_k, n_kp1 = d_km1.ncols, d_km1.nrows, d_k.nrows
    k_to_km1 = [sorted(row) for row in d_km1.rows]
    km1_to_k = [[] for _ in range(n_km1)]
    for i, row in enumerate(k_to_km1):
        for j in row:
            km1_to_k[j].append(i)
    kp1_to_k = [sorted(row) for row in d_k.rows]
    k_to_kp1 = [[] for _ in range(n_k)]
    for i, row in enumerate(kp1_to_k):
        for j in row:
            k_to_kp1[j].append(i)
    if bases is None:
        bases = (list(range(n_km1)), list(range(n_k)), list(range(n_kp1)))
    return InteractionGraph(bases, d_km1, d_k, k_to_km1, km1_to_k, k_to_kp1, kp1_to_k)


def construct_subcomplex(seed: int | Monomial, graph: InteractionGraph,
                         consumed: set[int] | None = None) -> Subcomplex:
    """Connected component of the layer-k monomial ``seed``."""
    if not isinstance(seed, int):
        seed = list(graph.bases[K]).index(tuple(seed))
    if consumed is not None and seed in consumed:
        raise ValueError(f"seed {graph.bases[K][seed]} already belongs to a subcomplex")
    seen = [set(), {seed}, set()]
    queue = deque([(K, seed)])
    while queue:
        node = queue.popleft()
        for layer, j in graph.neighbours(*node):
            if j not in seen[layer]:
                seen[layer].add(j)
                queue.append((layer, j))
    layers = tuple(sorted(s) for s in seen)
    monos = tuple([graph.bases[t][i] for i in layers[t]] for t in range(3))
    d_in = graph.d_in.submatrix(layers[K], layers[KM1])
    d_out = graph.d_out.submatrix(layers[KP1], layers[K])
    if consumed is not None:
        consumed.update(layers[K])
    return Subcomplex(graph.bases[K][seed], layers, monos, d_in, d_out)


def partition(graph: InteractionGraph) -> list[Subcomplex]:
    """Seed from the lowest unconsumed layer-k monomial until layer k is exhausted."""
    consumed: set[int] = set()
    out = []
    for seed in range(graph.sizes[K]):
        if seed not in consumed:
            out.append(construct_subcomplex(seed, graph, consumed))
    return out


def partition_complex(alg: Algebra, k: int, g: int) -> list[Subcomplex]:
    bases = (
        generate_monomials(alg, k - 1, g) if k >= 1 else [],
        generate_monomials(alg, k, g),
        generate_monomials(alg, k + 1, g),
    )
    d_in = differential_matrix(alg, k - 1, g, bases[0], bases[1], complete=True) if k >= 1 \
        else SparseMatrix(len(bases[1]), 0)
    d_out = differential_matrix(alg, k, g, bases[1], bases[2], complete=True)
    return partition(interaction_graph(d_in, d_out, bases))


def check_block_diagonal(graph: InteractionGraph, parts: Sequence[Subcomplex]) -> bool:
    """Every nonzero entry of both full matrices lies inside one block."""
    owner_k = {}
    owner_km1 = {}
    owner_kp1 = {}
    for s, sub in enumerate(parts):
        for i in sub.layers[K]:
            if i in owner_k:
                return False
            owner_k[i] = s
        for i in sub.layers[KM1]:
            owner_km1[i] = s
        for i in sub.layers[KP1]:
            owner_kp1[i] = s
    if len(owner_k) != graph.sizes[K]:
        return False
    for i, row in enumerate(graph.d_in.rows):
        if any(owner_km1.get(j) != owner_k[i] for j in row):
            return False
    for i, row in enumerate(graph.d_out.rows):
        if any(owner_k[j] != owner_kp1.get(i) for j in row):
            return False
    return True
