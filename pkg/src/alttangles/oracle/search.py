"""Backtracking enumeration of planar Wick pairings.

The matching is built one edge at a time, always pairing the smallest
unmatched half-edge.  Unmatched half-edges are treated as dangling legs, so
the partial graph has well-defined faces: joining two legs on the same face
splits it (genus unchanged), joining legs on different faces of one
component merges them (genus + 1, pruned), and joining two components keeps
the genus.  A component that runs out of legs before it contains every
vertex can never become connected and is pruned as well.

Two labelings are supported.  ``labeled`` enumerates every matching of the
fully labeled half-edges.  ``canonical`` numbers vertices in order of
discovery from a root and enters each new vertex at its half-edge 0, which
yields exactly one labeling per rooted map.
"""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .fatgraph import FatGraph, standard_rotation

LeafFn = Callable[[tuple[int, ...]], int]


@dataclass(frozen=True)
class SearchConfig:
    n_vertices: int
    n_external: int = 0
    canonical: bool = True
    forbid_self_loops: bool = False
    forbid_leg_pairs: bool = False


class PairingSearch:
    def __init__(self, config: SearchConfig, leaf: LeafFn | None = None):
        self.config = config
        n, k = config.n_vertices, config.n_external
        self.k = k
        self.H = k + 4 * n
        self.rot = standard_rotation(n, k)
        offset = 1 if k else 0
        self.nv = n + offset
        self.vert = [0] * k + [offset + h // 4 for h in range(4 * n)]
        self.first = ([0] if k else []) + [k + 4 * i for i in range(n)]
        self.leaf = leaf
        self.match = [-1] * self.H
        self.comp = list(range(self.nv))
        self.members = [[v] for v in range(self.nv)]
        self.legs = [k if (k and v == 0) else 4 for v in range(self.nv)]
        self.discovered = 1 if config.canonical else self.nv
        self.leaves = 0

    # -- helpers ----------------------------------------------------------
    def _same_face(self, a: int, b: int) -> bool:
        match, rot = self.match, self.rot
        h = a
        while True:
            m = match[h]
            h = rot[m if m >= 0 else h]
            if h == b:
                return True
            if h == a:
                return False

    def candidates(self, a: int) -> list[tuple[int, int]]:
        """``(b, discovered_after)`` pairs for the half-edge ``a``."""
        out = []
        d = self.discovered
        limit = self.first[d] if d < self.nv else self.H
        for b in range(a + 1, limit):
            if self.match[b] < 0:
                out.append((b, d))
        if d < self.nv:
            out.append((self.first[d], d + 1))
        cfg = self.config
        va = self.vert[a]
        keep = []
        for b, nd in out:
            vb = self.vert[b]
            if va == vb:
                if self.k and va == 0:
                    if cfg.forbid_leg_pairs:
                        continue
                elif cfg.forbid_self_loops:
                    continue
            elif cfg.forbid_leg_pairs and self.k and va == 0 and vb == 0:
                continue
            keep.append((b, nd))
        return keep

    # -- search -------------------------------------------------------------
    def _try(self, a: int, b: int, new_discovered: int) -> int:
        """Add edge ``a-b`` if admissible, recurse, undo; returns the leaf count."""
        comp, legs, members = self.comp, self.legs, self.members
        ca, cb = comp[self.vert[a]], comp[self.vert[b]]
        total = 0
        old_disc = self.discovered
        if ca == cb:
            if not self._same_face(a, b):
                return 0
            legs[ca] -= 2
            if not (legs[ca] == 0 and len(members[ca]) < self.nv):
                self.match[a], self.match[b] = b, a
                self.discovered = new_discovered
                total = self._descend(a + 1)
                self.discovered = old_disc
                self.match[a] = self.match[b] = -1
            legs[ca] += 2
            return total
        new_legs = legs[ca] + legs[cb] - 2
        moved = members[cb]
        if new_legs == 0 and len(members[ca]) + len(moved) < self.nv:
            return 0
        old_la, old_lb = legs[ca], legs[cb]
        for v in moved:
            comp[v] = ca
        members[ca] = members[ca] + moved
        members[cb] = []
        legs[ca], legs[cb] = new_legs, 0
        self.match[a], self.match[b] = b, a
        self.discovered = new_discovered
        total = self._descend(a + 1)
        self.discovered = old_disc
        self.match[a] = self.match[b] = -1
        legs[ca], legs[cb] = old_la, old_lb
        members[cb] = moved
        members[ca] = members[ca][: len(members[ca]) - len(moved)]
        for v in moved:
            comp[v] = cb
        return total

    def _descend(self, a: int) -> int:
        match = self.match
        while a < self.H and match[a] >= 0:
            a += 1
        if a == self.H:
            self.leaves += 1
            return self.leaf(tuple(match)) if self.leaf else 1
        total = 0
        for b, nd in self.candidates(a):
            total += self._try(a, b, nd)
        return total

    def root_choices(self) -> list[tuple[int, int]]:
        return self.candidates(0) if self.H else []

    def run(self, only: list[int] | None = None) -> int:
        """Count accepted leaves; ``only`` restricts to some first-edge choices (by index)."""
        if self.H == 0:
            return 1
        choices = self.root_choices()
        total = 0
        for i, (b, nd) in enumerate(choices):
            if only is not None and i not in only:
                continue
            total += self._try(0, b, nd)
        return total


def _branch_task(args) -> int:
    config, leaf, index = args
    return PairingSearch(config, leaf).run(only=[index])


def count_pairings(config: SearchConfig, leaf: LeafFn | None = None, workers: int = 1) -> int:
    """Number of accepted complete matchings; parallel runs split on the first edge."""
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * (config.n_vertices + 4) + 100))
    if workers <= 1:
        return PairingSearch(config, leaf).run()
    n_choices = len(PairingSearch(config, leaf).root_choices())
    tasks = [(config, leaf, i) for i in range(n_choices)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_branch_task, tasks))


def to_fatgraph(config: SearchConfig, matching: tuple[int, ...]) -> FatGraph:
    return FatGraph.from_matching(config.n_vertices, config.n_external, matching)
