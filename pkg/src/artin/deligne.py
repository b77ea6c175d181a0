"""Truncated Deligne complex of a single-edge presentation graph.

Vertices are left cosets g.P for P in {1, <a>, <b>, A(m)}; every g and
s in {a, b} give the triangle (g, g<s>, A(m)). The complex is not locally
finite, so the ball is truncated by word length: it holds every coset with a
representative of length <= L.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .dihedral import A, B, DihedralWord, nf_keys
from .graph import SimpleGraph, connected_components

MAX_LENGTH = 8
PARABOLICS = {0: ("",), 1: ("a", "b"), 2: ("ab",)}
_LETTER = {"a": A, "b": B}


class DeligneError(ValueError):
    pass


def _exponents(letters) -> tuple[int, int]:
    ea = sum(1 if x == A else -1 for x in letters if abs(x) == A)
    eb = sum(1 if x == B else -1 for x in letters if abs(x) == B)
    return ea, eb


def _inverse(letters) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def _generator_power_exponent(m: int, letters, s: str) -> int | None:
    """The j with word = s^j forced by exponent sums, or None."""
    ea, eb = _exponents(letters)
    if m % 2:
        return ea + eb
    return (ea if eb == 0 else None) if s == "a" else (eb if ea == 0 else None)


def in_cyclic_subgroup(m: int, letters, s: str) -> bool:
    """Whether the word lies in <s>."""
    j = _generator_power_exponent(m, letters, s)
    if j is None:
        return False
    g = _LETTER[s]
    power = (g,) * j if j >= 0 else (-g,) * -j
    k1, k2 = nf_keys(m, [tuple(letters), power])
    return k1 == k2


@dataclass(frozen=True, eq=False)
class CosetVertex:
    """The coset ``representative . <parabolic>``.

    Equality is coset equality, so vertices from different balls compare
    correctly.
    """

    m: int
    rank: int
    parabolic: str
    representative: tuple[int, ...]
    _key: tuple = field(default=None, repr=False)

    def __post_init__(self):
        if self.parabolic not in PARABOLICS.get(self.rank, ()):
            raise DeligneError(f"rank {self.rank} does not match parabolic {self.parabolic!r}")
        if self.rank == 0:
            key = nf_keys(self.m, [self.representative])[0]
        elif self.rank == 1:
            # g s g^-1 is constant on g<s> and separates cosets up to the centre
            g = self.representative
            key = nf_keys(self.m, [g + (_LETTER[self.parabolic],) + _inverse(g)])[0]
        else:
            key = ()
        object.__setattr__(self, "_key", (self.rank, self.parabolic, key))

    def __hash__(self) -> int:
        return hash(self._key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CosetVertex):
            return NotImplemented
        if self.m != other.m or self._key != other._key:
            return False
        if self.rank != 1:
            return True
        return in_cyclic_subgroup(self.m, _inverse(other.representative) + self.representative, self.parabolic)

    @property
    def word(self) -> DihedralWord:
        return DihedralWord(self.m, self.representative)

    @property
    def label(self) -> str:
        rep = self.word.compact() or "1"
        if self.rank == 0:
            return rep
        if self.rank == 1:
            return f"{rep}<{self.parabolic}>"
        return "A_ab"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "parabolic": self.parabolic, "rep": str(self.word), "label": self.label}


def simplex_angles(m: int) -> dict[int, float]:
    """Euclidean corner angles by vertex rank (pi/(2m) at the rank-2 corner)."""
    return {0: math.pi / 2 - math.pi / (2 * m), 1: math.pi / 2, 2: math.pi / (2 * m)}


@dataclass
class DeligneBall:
    m: int
    length: int
    vertices: list[CosetVertex]
    triangles: list[tuple[int, int, int]]  # (rank-0, rank-1, rank-2) vertex indices
    index: dict[CosetVertex, int] = field(repr=False)

    @property
    def angles(self) -> dict[int, float]:
        return simplex_angles(self.m)

    def edges(self) -> list[tuple[int, int]]:
        out = set()
        for x, y, z in self.triangles:
            out |= {(min(p, q), max(p, q)) for p, q in ((x, y), (x, z), (y, z))}
        return sorted(out)

    def of_rank(self, rank: int) -> list[CosetVertex]:
        return [v for v in self.vertices if v.rank == rank]

    def __contains__(self, v: CosetVertex) -> bool:
        return v in self.index


def ball_elements(m: int, L: int) -> list[tuple[int, ...]]:
    """One geodesic word per element of length <= L, shortest first."""
    seen = {nf_keys(m, [()])[0]}
    elements: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(L):
        cands = [w + (x,) for w in frontier for x in (A, B, -A, -B) if not w or w[-1] != -x]
        fresh = []
        for w, key in zip(cands, nf_keys(m, cands)):
            if key not in seen:
                seen.add(key)
                fresh.append(w)
        elements += fresh
        frontier = fresh
    return elements


def build_ball(m: int, L: int) -> DeligneBall:
    if m < 3:
        raise DeligneError("label must be at least 3")
    if not 0 <= L <= MAX_LENGTH:
        raise DeligneError(f"truncation length must be in 0..{MAX_LENGTH}")
    elements = ball_elements(m, L)
    vertices: list[CosetVertex] = []
    index: dict[CosetVertex, int] = {}

    def add(v: CosetVertex) -> int:
        i = index.get(v)
        if i is None:
            i = index[v] = len(vertices)
            vertices.append(v)
        return i

    top = CosetVertex(m, 2, "ab", ())
    rank0 = [add(CosetVertex(m, 0, "", g)) for g in elements]
    rank1 = {s: [add(CosetVertex(m, 1, s, g)) for g in elements] for s in ("a", "b")}
    i_top = add(top)
    triangles = [(rank0[k], rank1[s][k], i_top) for k in range(len(elements)) for s in ("a", "b")]
    return DeligneBall(m, L, vertices, triangles, index)


@dataclass
class StandardTreeSlice:
    generator: str
    vertices: list[int]
    edges: list[tuple[int, int]]

    def is_tree(self) -> bool:
        if not self.vertices:
            return False
        n_comp = len(connected_components(SimpleGraph(tuple(self.vertices), tuple(self.edges))))
        return n_comp == 1 and len(self.edges) == len(self.vertices) - 1


def fixes(v: CosetVertex, s: str, n: int = 1) -> bool:
    """Whether s^n . v = v."""
    if n == 0:
        raise DeligneError("exponent must be non-zero")
    if v.rank == 0:
        return False
    if v.rank == 2:
        return True
    g = v.representative
    t = _LETTER[s]
    power = (t,) * n if n > 0 else (-t,) * -n
    return in_cyclic_subgroup(v.m, _inverse(g) + power + g, v.parabolic)


def fixed_slice(B: DeligneBall, s: str, n: int = 1) -> StandardTreeSlice:
    if s not in _LETTER:
        raise DeligneError(f"{s!r} is not a generator of the edge")
    if n == 0:
        raise DeligneError("exponent must be non-zero")
    keep = [i for i, v in enumerate(B.vertices) if fixes(v, s, n)]
    kept = set(keep)
    edges = [(p, q) for p, q in B.edges() if p in kept and q in kept]
    return StandardTreeSlice(s, keep, edges)


def slice_intersection(B: DeligneBall) -> list[CosetVertex]:
    fa = set(fixed_slice(B, "a").vertices)
    fb = set(fixed_slice(B, "b").vertices)
    return [B.vertices[i] for i in sorted(fa & fb)]


_RANK_COLOURS = {0: "lightgrey", 1: "lightblue", 2: "gold"}


def export_complex(B: DeligneBall, fmt: str = "dot", highlight: StandardTreeSlice | None = None) -> str:
    hl = set(highlight.edges) if highlight is not None else set()
    if fmt == "dot":
        lines = [f"graph deligne_m{B.m}_L{B.length} {{"]
        for i, v in enumerate(B.vertices):
            lines.append(
                f'  n{i} [label="{v.label}", rank={v.rank}, rep="{v.word.compact()}", '
                f'style=filled, fillcolor={_RANK_COLOURS[v.rank]}];'
            )
        for p, q in B.edges():
            attr = " [color=red, penwidth=2]" if (p, q) in hl else ""
            lines.append(f"  n{p} -- n{q}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        edges = B.edges()
        doc = {
            "m": B.m,
            "length": B.length,
            "vertices": [{"id": i, **v.to_dict()} for i, v in enumerate(B.vertices)],
            "edges": [list(e) for e in edges],
            "triangles": [list(t) for t in B.triangles],
            "angles": {str(r): a for r, a in B.angles.items()},
            "highlight": {
                "generator": highlight.generator if highlight else None,
                "edges": [list(e) for e in edges if e in hl],
            },
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise DeligneError(f"unknown export format {fmt!r}")
