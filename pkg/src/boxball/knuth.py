"""Knuth moves as classified adjacent transpositions, and Knuth class graphs."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .bbs import run_to_steady, configuration_array
from .core import Partition, Permutation, Tableau

MAX_CLASS_SIZE = 10**6


class ClassTooLarge(RuntimeError):
    pass


class MoveKind(enum.Enum):
    K1 = "K1"  # proper K1: witness on the left only
    K2 = "K2"  # proper K2: witness on the right only
    KB = "KB"


@dataclass(frozen=True)
class KnuthMoveLabel:
    position: int  # 0-based index of the left element of the swapped pair
    kind: MoveKind
    direction: str  # "+" turns xz into zx, "-" turns zx into xz

    def __str__(self) -> str:
        return f"{self.kind.value}{self.direction}"


def classify_swap(w: Sequence[int], i: int) -> KnuthMoveLabel | None:
    """Label of swapping positions i and i+1 of w, or None if it is not a Knuth move."""
    n = len(w)
    if not 0 <= i <= n - 2:
        raise IndexError(f"swap position {i} outside 0..{n - 2}")
    a, b = w[i], w[i + 1]
    x, z = min(a, b), max(a, b)
    left = i >= 1 and x < w[i - 1] < z
    right = i + 2 <= n - 1 and x < w[i + 2] < z
    if not (left or right):
        return None
    if left and right:
        kind = MoveKind.KB
    else:
        kind = MoveKind.K1 if left else MoveKind.K2
    return KnuthMoveLabel(i, kind, "+" if a < b else "-")


def swap(w: Sequence[int], i: int) -> Permutation:
    v = list(w)
    v[i], v[i + 1] = v[i + 1], v[i]
    return Permutation(v)


def knuth_neighbors(w: Sequence[int]) -> list[tuple[Permutation, KnuthMoveLabel]]:
    out = []
    for i in range(len(w) - 1):
        label = classify_swap(w, i)
        if label is not None:
            out.append((swap(w, i), label))
    return out


def descent_count(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def knuth_class(w: Sequence[int], cap: int = MAX_CLASS_SIZE) -> list[Permutation]:
    """Knuth equivalence class of w by breadth-first search, sorted."""
    w = Permutation(w)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v, _ in knuth_neighbors(u):
            if v not in seen:
                if len(seen) >= cap:
                    raise ClassTooLarge(f"Knuth class of {w} exceeds {cap} vertices")
                seen.add(v)
                queue.append(v)
    return sorted(seen)


@dataclass(frozen=True)
class Vertex:
    word: Permutation
    sd: Tableau
    time: int

    @property
    def shape(self) -> Partition:
        return self.sd.shape


@dataclass(frozen=True)
class Edge:
    """Undirected edge; `label.direction` is that of the move from `a`, the lexicographically smaller end."""

    a: Permutation
    b: Permutation
    label: KnuthMoveLabel


@dataclass
class KnuthClassGraph:
    root: Permutation
    vertices: list[Permutation]
    edges: list[Edge]
    _annotations: dict[Permutation, Vertex] = field(default_factory=dict, repr=False)

    def vertex(self, w: Sequence[int]) -> Vertex:
        """SD and steady-state time of w, computed on first use."""
        w = Permutation(w)
        if w not in self._annotations:
            t, s = run_to_steady(w)
            sd = Tableau(entries for _, entries in configuration_array(s).rows)
            self._annotations[w] = Vertex(w, sd, t)
        return self._annotations[w]

    def adjacency(self) -> dict[Permutation, list[tuple[Permutation, KnuthMoveLabel]]]:
        adj: dict[Permutation, list] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.a].append((e.b, e.label))
            flipped = KnuthMoveLabel(e.label.position, e.label.kind, "-" if e.label.direction == "+" else "+")
            adj[e.b].append((e.a, flipped))
        return adj

    def to_dot(self) -> str:
        lines = ["graph knuth_class {"]
        for w in self.vertices:
            v = self.vertex(w)
            shape = "(" + ",".join(map(str, v.shape)) + ")"
            lines.append(f'  "{w}" [label="{w}\\nt={v.time}\\nshape={shape}"];')
        for e in self.edges:
            lines.append(f'  "{e.a}" -- "{e.b}" [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "root": list(self.root),
            "vertices": [
                {
                    "word": list(w),
                    "sd": self.vertex(w).sd.to_json(),
                    "shape": list(self.vertex(w).shape),
                    "time": self.vertex(w).time,
                }
                for w in self.vertices
            ],
            "edges": [
                {"a": list(e.a), "b": list(e.b), "kind": e.label.kind.value,
                 "direction": e.label.direction, "position": e.label.position}
                for e in self.edges
            ],
        }


def knuth_class_graph(w: Sequence[int], cap: int = MAX_CLASS_SIZE) -> KnuthClassGraph:
    w = Permutation(w)
    vertices = knuth_class(w, cap)
    edges = []
    for u in vertices:
        for v, label in knuth_neighbors(u):
            # label is relative to u; keep each edge once, from its smaller end
            if u < v:
                edges.append(Edge(u, v, label))
    return KnuthClassGraph(w, vertices, edges)
