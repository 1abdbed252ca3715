"""Mixed-domination checking and redomination accounting.

A set S of vertices and edges mixed-dominates the graph when every element
outside S is adjacent or incident to a member of S; equivalently, every
element's closed mixed neighborhood meets S. The redomination number of an
element counts how many times it is dominated beyond the first:
rd_S(x) = |N[x] cap S| - 1. Summed over the whole universe of a cubic
P(n,k) this telescopes to 7|S| - 5n whenever S dominates, which is the
accounting identity the size formulas rest on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .elements import ElementSet, _as_id
from .petersen import NEIGHBORHOOD_SIZE, PetersenGraph


@dataclass(frozen=True)
class DominationReport:
    """Outcome of a domination check.

    rd_per_element[x] is |N[x] cap S| - 1; it is -1 exactly on uncovered
    elements. rd_total sums it over the whole universe.
    """

    is_dominating: bool
    uncovered: ElementSet
    rd_per_element: np.ndarray
    rd_total: int

    def rd_of(self, item) -> int:
        return int(self.rd_per_element[_as_id(item, self.uncovered.n)])


def verify(graph: PetersenGraph, members: ElementSet) -> DominationReport:
    """Check whether ``members`` mixed-dominates the graph and report coverage."""
    counts = _kernels.coverage_counts(graph.nbrs, members.mask)
    rd = counts.astype(np.int64) - 1
    uncovered = ElementSet.from_mask(graph.n, counts == 0)
    return DominationReport(
        is_dominating=len(uncovered) == 0,
        uncovered=uncovered,
        rd_per_element=rd,
        rd_total=int(rd.sum()),
    )


def redomination(graph: PetersenGraph, members: ElementSet, over: ElementSet) -> int:
    """Total redomination of ``members`` summed over the elements of ``over``.

    Negative contributions from undominated elements are reported as-is.
    """
    counts = _kernels.coverage_counts(graph.nbrs, members.mask)
    return int((counts[over.ids()] - 1).sum())


def naive_lower_bound(n: int) -> int:
    """Smallest integer strictly above 5n/7.

    Every element dominates exactly 7 of the 5n elements, so any dominating
    set has size at least 5n/7; zero total redomination is impossible, so
    the bound is strict.
    """
    return 5 * n // 7 + 1


def gamma_from_rd(n: int, rd_total: int) -> Fraction:
    """Dominating-set size implied by a total redomination: (5n + rd) / 7.

    Returns an exact rational; a non-integral value certifies that no
    dominating set with that redomination total exists.
    """
    return Fraction(5 * n + rd_total, NEIGHBORHOOD_SIZE)


def greedy_complete(graph: PetersenGraph, partial: ElementSet) -> ElementSet:
    """Extend ``partial`` to a dominating set, one element at a time.

    Each step adds the element covering the most still-uncovered elements,
    ties broken by smallest canonical id; a dominating input is returned
    unchanged.
    """
    cover = _kernels.cover_from_members(graph.nbrs, partial.ids())
    added = _kernels.greedy_fill(graph.nbrs, cover)
    out = partial.copy()
    for e in added:
        out.add(int(e))
    return out
