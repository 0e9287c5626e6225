"""Quivers, paths, parallel-path counting, and (truncated) path algebras.

Path composition is diagrammatic: a path (a_1, ..., a_n) requires
target(a_i) = source(a_{i+1}), and p*q traverses p first.
"""

from __future__ import annotations

import json

from .fields import Field
from .algebra import Algebra

PATH_LENGTH_BOUND = 32


class Quiver:
    __slots__ = ("vertex_count", "arrows")

    def __init__(self, vertex_count: int, arrows):
        if vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        arrows = [(int(s), int(t)) for s, t in arrows]
        for s, t in arrows:
            if not (0 <= s < vertex_count and 0 <= t < vertex_count):
                raise ValueError(f"arrow ({s},{t}) out of range")
        self.vertex_count = vertex_count
        self.arrows = arrows

    def __repr__(self) -> str:
        return f"Quiver({self.vertex_count} vertices, arrows {self.arrows})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and other.vertex_count == self.vertex_count
            and other.arrows == self.arrows
        )

    def arrows_from(self, v: int) -> list:
        return [i for i, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v: int) -> list:
        return [i for i, (_, t) in enumerate(self.arrows) if t == v]

    def to_doc(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "arrows": [[s, t] for s, t in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), separators=(",", ":"))

    @classmethod
    def from_doc(cls, doc: dict) -> "Quiver":
        return cls(doc["vertex_count"], doc["arrows"])

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        return cls.from_doc(json.loads(text))


class Path:
    """A composable arrow sequence; empty paths sit at base_vertex."""

    __slots__ = ("quiver", "arrow_indices", "base_vertex")

    def __init__(self, quiver: Quiver, arrow_indices, base_vertex: int = None):
        self.quiver = quiver
        self.arrow_indices = tuple(arrow_indices)
        if not self.arrow_indices:
            if base_vertex is None:
                raise ValueError("an empty path needs a base vertex")
            self.base_vertex = base_vertex
        else:
            for a, b in zip(self.arrow_indices, self.arrow_indices[1:]):
                if quiver.arrows[a][1] != quiver.arrows[b][0]:
                    raise ValueError("arrows do not compose")
            self.base_vertex = quiver.arrows[self.arrow_indices[0]][0]

    @property
    def length(self) -> int:
        return len(self.arrow_indices)

    @property
    def source(self) -> int:
        if not self.arrow_indices:
            return self.base_vertex
        return self.quiver.arrows[self.arrow_indices[0]][0]

    @property
    def target(self) -> int:
        if not self.arrow_indices:
            return self.base_vertex
        return self.quiver.arrows[self.arrow_indices[-1]][1]

    def key(self) -> tuple:
        return (self.arrow_indices, self.base_vertex if not self.arrow_indices else None)

    def __eq__(self, other) -> bool:
        return isinstance(other, Path) and other.key() == self.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if not self.arrow_indices:
            return f"Path(vertex {self.base_vertex})"
        return f"Path({'.'.join(str(i) for i in self.arrow_indices)})"


def paths_of_length(q: Quiver, n: int, bound: int = None) -> list:
    """All length-n paths in lexicographic arrow order."""
    if n < 0:
        raise ValueError("negative path length")
    limit = PATH_LENGTH_BOUND if bound is None else bound
    if n > limit:
        raise ValueError(f"path length {n} exceeds bound {limit}")
    if n == 0:
        return [Path(q, (), v) for v in range(q.vertex_count)]
    out_by_vertex = [q.arrows_from(v) for v in range(q.vertex_count)]
    paths = []

    def extend(prefix: list, at: int, remaining: int) -> None:
        if remaining == 0:
            paths.append(Path(q, tuple(prefix)))
            return
        for a in out_by_vertex[at]:
            prefix.append(a)
            extend(prefix, q.arrows[a][1], remaining - 1)
            prefix.pop()

    for a in range(len(q.arrows)):
        extend([a], q.arrows[a][1], n - 1)
    return paths


def parallel_pairs(q: Quiver, n: int, m: int, bound: int = None) -> list:
    """All pairs (x, y) in Q_n x Q_m sharing source and target."""
    xs = paths_of_length(q, n, bound=bound)
    ys = paths_of_length(q, m, bound=bound)
    by_ends = {}
    for y in ys:
        by_ends.setdefault((y.source, y.target), []).append(y)
    pairs = []
    for x in xs:
        for y in by_ends.get((x.source, x.target), ()):
            pairs.append((x, y))
    return pairs


def parallel_count(q: Quiver, n: int, m: int) -> int:
    return len(parallel_pairs(q, n, m))


def is_crown(q: Quiver):
    """c when the quiver is a single oriented c-cycle (a loop is c = 1)."""
    c = q.vertex_count
    if len(q.arrows) != c:
        return None
    succ = {}
    for s, t in q.arrows:
        if s in succ:
            return None
        succ[s] = t
    if len(succ) != c:
        return None
    seen = 1
    v = succ[0]
    while v != 0:
        seen += 1
        if seen > c:
            return None
        v = succ[v]
    return c if seen == c else None


def is_connected(q: Quiver) -> bool:
    neighbours = [[] for _ in range(q.vertex_count)]
    for s, t in q.arrows:
        neighbours[s].append(t)
        neighbours[t].append(s)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in neighbours[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == q.vertex_count


def has_oriented_cycle(q: Quiver) -> bool:
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * q.vertex_count
    out = [q.arrows_from(v) for v in range(q.vertex_count)]

    def visit(v: int) -> bool:
        color[v] = GREY
        for a in out[v]:
            w = q.arrows[a][1]
            if color[w] == GREY:
                return True
            if color[w] == WHITE and visit(w):
                return True
        color[v] = BLACK
        return False

    return any(color[v] == WHITE and visit(v) for v in range(q.vertex_count))


def longest_path_length(q: Quiver) -> int:
    """Longest path length in an acyclic quiver."""
    if has_oriented_cycle(q):
        raise ValueError("quiver has an oriented cycle")
    n = 0
    while paths_of_length(q, n + 1):
        n += 1
    return n


def truncated_path_algebra(q: Quiver, field: Field) -> Algebra:
    """kQ modulo all paths of length >= 2; dim = |Q0| + |Q1|."""
    f = field
    nv = q.vertex_count
    na = len(q.arrows)
    d = nv + na
    labels = [f"e{v}" for v in range(nv)] + [f"a{i}" for i in range(na)]
    table = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for v in range(nv):
        table[v][v][v] = f.one
    for i, (s, t) in enumerate(q.arrows):
        table[s][nv + i][nv + i] = f.one  # e_s * a = a
        table[nv + i][t][nv + i] = f.one  # a * e_t = a
    unit = [f.one] * nv + [f.zero] * na
    return Algebra(f, labels, table, unit, check=True)


def path_algebra_acyclic(q: Quiver, field: Field) -> Algebra:
    """Full path algebra, basis all paths; only for acyclic quivers."""
    if has_oriented_cycle(q):
        raise ValueError("path algebra is infinite-dimensional: oriented cycle present")
    f = field
    paths = []
    n = 0
    while True:
        layer = paths_of_length(q, n)
        if n > 0 and not layer:
            break
        paths.extend(layer)
        n += 1
    index = {p: i for i, p in enumerate(paths)}
    d = len(paths)

    def label(p: Path) -> str:
        if p.length == 0:
            return f"e{p.base_vertex}"
        return "*".join(f"a{i}" for i in p.arrow_indices)

    table = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for i, p in enumerate(paths):
        for j, r in enumerate(paths):
            if p.target != r.source:
                continue
            combined = p.arrow_indices + r.arrow_indices
            if combined:
                prod = Path(q, combined)
            else:
                prod = Path(q, (), p.base_vertex)
            table[i][j][index[prod]] = f.one
    unit = [f.one if p.length == 0 else f.zero for p in paths]
    return Algebra(f, [label(p) for p in paths], table, unit, check=True)


def standard_quiver(name: str, c: int = None) -> Quiver:
    """Fixed layouts: roundtrip, qtilde, four_points, loop, kronecker, crown(c)."""
    if name.startswith("crown(") and name.endswith(")"):
        c = int(name[6:-1])
        name = "crown"
    if name == "roundtrip":
        return Quiver(2, [(0, 1), (1, 0)])
    if name == "qtilde":
        return Quiver(3, [(1, 2)])
    if name == "four_points":
        return Quiver(4, [])
    if name == "loop":
        return Quiver(1, [(0, 0)])
    if name == "kronecker":
        return Quiver(2, [(0, 1), (0, 1)])
    if name == "crown":
        if c is None or c < 1:
            raise ValueError("crown(c) requires c >= 1")
        return Quiver(c, [(i, (i + 1) % c) for i in range(c)])
    raise ValueError(f"unknown standard quiver {name!r}")
