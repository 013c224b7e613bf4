"""Labeled 4-valent fat graphs: rotation system plus half-edge matching.

Half-edge layout: if the graph has ``k > 0`` external legs, half-edges
``0 .. k-1`` sit on a boundary vertex whose rotation cycle is
``(0 1 ... k-1)``.  For ``k = 4`` the legs are NW, NE, SE, SW in that
cyclic order.  Internal vertex ``i`` owns ``k + 4i .. k + 4i + 3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

NW, NE, SE, SW = 0, 1, 2, 3

CHANNELS = {
    # legs that must end up on the same side of a 2-edge cut
    "horizontal": ((NW, SW), (NE, SE)),
    "vertical": ((NW, NE), (SW, SE)),
}


def standard_rotation(n_vertices: int, n_external: int) -> tuple[int, ...]:
    rot = []
    k = n_external
    for h in range(k):
        rot.append((h + 1) % k)
    for v in range(n_vertices):
        base = k + 4 * v
        rot.extend(base + (i + 1) % 4 for i in range(4))
    return tuple(rot)


@dataclass(frozen=True)
class FatGraph:
    n_vertices: int
    n_external: int
    rotation: tuple[int, ...]
    matching: tuple[int, ...]
    vertex_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        H = len(self.rotation)
        if len(self.matching) != H:
            raise ValueError("rotation and matching sizes differ")
        if self.n_external not in (0, 2, 4):
            raise ValueError("n_external must be 0, 2 or 4")
        for h, m in enumerate(self.matching):
            if m == h or not 0 <= m < H or self.matching[m] != h:
                raise ValueError("matching is not a fixed-point-free involution")
        # vertex ids from rotation cycles; the boundary (if any) gets id -1
        vertex_of = [None] * H
        next_id = 0
        for h in range(H):
            if vertex_of[h] is not None:
                continue
            cycle = [h]
            x = self.rotation[h]
            while x != h:
                cycle.append(x)
                x = self.rotation[x]
            if self.n_external and 0 in cycle:
                if len(cycle) != self.n_external:
                    raise ValueError("boundary cycle has wrong length")
                vid = -1
            else:
                if len(cycle) != 4:
                    raise ValueError("internal vertices must be 4-valent")
                vid = next_id
                next_id += 1
            for y in cycle:
                vertex_of[y] = vid
        if next_id != self.n_vertices:
            raise ValueError("vertex count does not match rotation")
        object.__setattr__(self, "vertex_of", tuple(vertex_of))

    @classmethod
    def from_matching(cls, n_vertices: int, n_external: int, matching: Sequence[int]) -> FatGraph:
        return cls(n_vertices, n_external, standard_rotation(n_vertices, n_external), tuple(matching))

    @property
    def n_half_edges(self) -> int:
        return len(self.rotation)

    def faces(self) -> list[list[int]]:
        """Cycles of ``rotation . matching``."""
        seen = [False] * self.n_half_edges
        out = []
        for h in range(self.n_half_edges):
            if seen[h]:
                continue
            cycle = []
            x = h
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.rotation[self.matching[x]]
            out.append(cycle)
        return out

    def _components(self, skip_boundary: bool = False) -> list[set[int]]:
        vertices = list(range(self.n_vertices))
        if self.n_external and not skip_boundary:
            vertices.append(-1)
        parent = {v: v for v in vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for h, m in enumerate(self.matching):
            a, b = self.vertex_of[h], self.vertex_of[m]
            if a not in parent or b not in parent:
                continue
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        comps: dict[int, set[int]] = {}
        for v in vertices:
            comps.setdefault(find(v), set()).add(v)
        return list(comps.values())

    def euler_characteristic(self) -> int:
        V = self.n_vertices + (1 if self.n_external else 0)
        E = self.n_half_edges // 2
        return V - E + len(self.faces())

    def genus(self) -> int:
        c = len(self._components())
        return (2 * c - self.euler_characteristic()) // 2

    def is_connected(self) -> bool:
        return len(self._components()) == 1

    def is_internally_connected(self) -> bool:
        """Connected after deleting the boundary vertex."""
        return self.n_vertices > 0 and len(self._components(skip_boundary=True)) == 1

    def has_leg_pairing(self) -> bool:
        return any(self.vertex_of[self.matching[h]] == -1 for h in range(self.n_external))

    def crossing(self, subset: frozenset[int] | set[int]) -> int:
        """Number of half-edges on ``subset`` matched to half-edges off it (legs count)."""
        count = 0
        for h, m in enumerate(self.matching):
            if self.vertex_of[h] in subset and self.vertex_of[m] not in subset:
                count += 1
        return count

    def _subsets(self):
        for r in range(1, self.n_vertices + 1):
            for s in combinations(range(self.n_vertices), r):
                yield frozenset(s)

    def has_self_energy(self) -> bool:
        """Some set of internal vertices is attached to the rest by exactly two lines."""
        everything = frozenset(range(self.n_vertices))
        for S in self._subsets():
            if self.n_external == 2 and S == everything:
                continue
            if self.crossing(S) == 2:
                return True
        return False

    def leg_end(self, leg: int) -> int:
        return self.vertex_of[self.matching[leg]]

    def is_2pi_channel(self, channel: str) -> bool:
        """No cut of at most two internal lines separates the legs as the channel pairs them."""
        if self.n_external != 4:
            raise ValueError("channels are defined for 4-leg diagrams")
        side_a, side_b = CHANNELS[channel]
        ends_a = {self.leg_end(h) for h in side_a}
        ends_b = {self.leg_end(h) for h in side_b}
        if self.has_leg_pairing():
            return False
        if ends_a & ends_b:
            return True
        for S in self._subsets():
            if ends_a <= S and not (ends_b & S):
                internal_cut = self.crossing(S) - 2
                if internal_cut <= 2:
                    return False
        return True
