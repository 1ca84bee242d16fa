"""Crystal graph of V(varpi_1) read off the action tables.

Every weight space of V is a line, so the E-arrows already form the crystal
graph: an i-edge j -> j' wherever E_i w_j is a nonzero multiple of w_j'.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .filtration import check_lambda
from .natmod import NatModule
from .rootdata import AffineWeight, CartanData, FiniteWeight, embed, finite_simple_root, fundamental_finite, is_dominant


@dataclass(frozen=True)
class CrystalGraph:
    cartan: CartanData
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, label)

    def out_edges(self, v: int) -> list[tuple[int, int]]:
        return [(t, i) for s, t, i in self.edges if s == v]

    def degree_ok(self) -> bool:
        """At most one outgoing and one incoming edge per label at each vertex."""
        outs = [(s, i) for s, _, i in self.edges]
        ins = [(t, i) for _, t, i in self.edges]
        return len(set(outs)) == len(outs) and len(set(ins)) == len(ins)

    def is_connected(self) -> bool:
        adj = {v: set() for v in self.vertices}
        for s, t, _ in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen = {self.vertices[0]}
        todo = deque(seen)
        while todo:
            v = todo.popleft()
            for w in adj[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == len(self.vertices)

    def is_single_cycle(self) -> bool:
        """One directed cycle through every vertex."""
        if len(self.edges) != len(self.vertices):
            return False
        succ = {}
        for s, t, _ in self.edges:
            if s in succ:
                return False
            succ[s] = t
        v, seen = self.vertices[0], set()
        while v not in seen:
            seen.add(v)
            if v not in succ:
                return False
            v = succ[v]
        return v == self.vertices[0] and len(seen) == len(self.vertices)

    def traversal_weights(self) -> dict[int, FiniteWeight]:
        """Weights recovered from wt(w_0) = varpi_1 by walking edges in both directions."""
        wt = {0: fundamental_finite(self.cartan, 1)}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for s, t, i in self.edges:
                a = finite_simple_root(self.cartan, i)
                if s == v and t not in wt:
                    wt[t] = wt[v] + a
                    todo.append(t)
                elif t == v and s not in wt:
                    wt[s] = wt[v] - a
                    todo.append(s)
        return wt

    def to_dot(self) -> str:
        name = f"{self.cartan.family}{self.cartan.rank}"
        lines = [f"digraph crystal_{name} {{"]
        for v in self.vertices:
            lines.append(f'  w{v} [label="w_{v}"];')
        for s, t, i in self.edges:
            lines.append(f'  w{s} -> w{t} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(m: NatModule) -> CrystalGraph:
    edges = tuple(sorted((s, t, i) for i, s, t in m.e_arrows()))
    return CrystalGraph(m.cartan, tuple(range(m.dim)), edges)


def lambda_dominant_count(m: NatModule, lam: AffineWeight) -> int:
    """Number of vertices whose weight keeps Lambda dominant (type B zero-weight rule applied)."""
    check_lambda(lam)
    g = crystal_graph(m)
    wts = g.traversal_weights()
    count = 0
    for v in g.vertices:
        mu = wts[v]
        if m.family == "B" and mu.is_zero() and lam.omega[m.rank] == 0:
            continue
        if is_dominant(lam + embed(m.cartan, mu)):
            count += 1
    return count
