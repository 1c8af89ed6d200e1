"""Finite topologies on the nonzero-sh point set and their invariants.

Two topologies are built from the same family ``{v_of(i)}``:

* the SH-topology takes those sets as its *closed* sets;
* the W-topology takes them as a *base of opens*.

Both are materialized as explicit closed-set families so that every
separation, isolation and derivative question is a finite scan over the
stored sets.  The Cantor-Bendixson filtration peels isolated points (in
the subspace sense) until nothing is left; on finite spaces this always
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .hollow import ShAnalysis


class AxiomViolation(Exception):
    """The builder produced a family that is not a topology (a bug, not data)."""


def _canonical(sets) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(s) for s in sets), key=lambda s: (len(s), sorted(s))))


class FiniteTopology:
    """A topology on a finite point set, stored by its closed sets."""

    def __init__(self, points, closed_sets):
        self.points: frozenset[int] = frozenset(points)
        self.closed_sets: frozenset[frozenset[int]] = frozenset(
            frozenset(c) for c in closed_sets
        )

    def axiom_violations(self) -> list[str]:
        """Closed-set axioms checked on the stored family, as messages."""
        out = []
        pts = self.points
        fam = self.closed_sets
        for c in fam:
            if not c <= pts:
                out.append(f"closed set {sorted(c)} not within the point set")
        if frozenset() not in fam:
            out.append("empty set is not closed")
        if pts not in fam:
            out.append("point set itself is not closed")
        for c1, c2 in combinations(fam, 2):
            if c1 | c2 not in fam:
                out.append(f"union {sorted(c1 | c2)} of closed sets is not closed")
            if c1 & c2 not in fam:
                out.append(f"intersection {sorted(c1 & c2)} of closed sets is not closed")
        return out

    @cached_property
    def open_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(self.points - c for c in self.closed_sets)

    def is_open(self, s) -> bool:
        return frozenset(s) in self.open_sets

    def is_closed(self, s) -> bool:
        return frozenset(s) in self.closed_sets

    def closure(self, s) -> frozenset[int]:
        """Intersection of all closed supersets (the whole space if none)."""
        s = frozenset(s)
        out = self.points
        for c in self.closed_sets:
            if s <= c:
                out = out & c
        return out

    @cached_property
    def _minimal_open(self) -> dict[int, frozenset[int]]:
        # smallest open neighborhood of each point; finite intersections of
        # opens are open, so this is itself open
        out = {}
        for x in self.points:
            acc = self.points
            for o in self.open_sets:
                if x in o:
                    acc = acc & o
            out[x] = acc
        return out

    # -- separation ----------------------------------------------------------

    def is_t0(self) -> bool:
        """Distinct points have distinct closures."""
        seen = {}
        for x in self.points:
            cl = self.closure({x})
            if cl in seen:
                return False
            seen[cl] = x
        return True

    def is_t1(self) -> bool:
        """Every singleton is closed."""
        return all(frozenset({x}) in self.closed_sets for x in self.points)

    def is_hausdorff(self) -> bool:
        """Distinct points have disjoint open neighborhoods."""
        opens = self.open_sets
        for x, y in combinations(sorted(self.points), 2):
            if not any(
                x in u and y in v and not u & v
                for u in opens
                for v in opens
            ):
                return False
        return True

    # -- isolation and derivatives --------------------------------------------

    def minimal_open_of(self, x: int) -> frozenset[int]:
        """Smallest open neighborhood of a point (always open when finite)."""
        return self._minimal_open[x]

    def isolated_points(self, s) -> frozenset[int]:
        """Points x of s with an open G such that G ∩ s = {x}.

        Uses each point's minimal open neighborhood, which exists in any
        finite topology and is computed from the stored family.
        """
        s = frozenset(s)
        mo = self._minimal_open
        return frozenset(x for x in s if mo[x] & s == {x})

    def derived_set(self, s) -> frozenset[int]:
        """Limit points of s within s (subspace sense): s minus its isolated points."""
        s = frozenset(s)
        return s - self.isolated_points(s)

    def cantor_bendixson(self) -> "CBFiltration":
        """Iterate the derivative from the full point set until empty."""
        levels = [self.points]
        strata = []
        while levels[-1]:
            nxt = self.derived_set(levels[-1])
            strata.append(levels[-1] - nxt)
            levels.append(nxt)
        return CBFiltration(tuple(strata), tuple(levels), len(levels) - 1)

    # -- misc ------------------------------------------------------------------

    def is_indiscrete(self) -> bool:
        return self.closed_sets == frozenset({frozenset(), self.points})

    def canonical_closed(self) -> tuple[frozenset[int], ...]:
        return _canonical(self.closed_sets)

    def __repr__(self) -> str:
        fam = [sorted(c) for c in self.canonical_closed()]
        return f"FiniteTopology(points={sorted(self.points)}, closed={fam})"


@dataclass(frozen=True)
class CBFiltration:
    """Descending derivative levels, the strata removed at each step, and
    the number of steps needed to empty the space."""

    strata: tuple[frozenset[int], ...]
    levels: tuple[frozenset[int], ...]
    derived_dimension: int


def sh_topology(sh: ShAnalysis) -> FiniteTopology:
    """Topology whose closed sets are exactly the v_of(i).

    The family is closed under union and intersection because
    v(i) ∪ v(j) = v(i v j) and v(i) ∩ v(j) = v(i ∧ j); the builder
    re-verifies the axioms anyway and raises AxiomViolation on a bug.
    """
    closed = {sh.v_of(i) for i in range(sh.lattice.n)}
    top = FiniteTopology(sh.x_points, closed)
    problems = top.axiom_violations()
    if problems:
        raise AxiomViolation("; ".join(problems))
    return top


def w_topology(sh: ShAnalysis) -> FiniteTopology:
    """Topology generated by {v_of(i)} as a base of open sets.

    The base is intersection-closed, so closing it under unions (plus the
    empty union) yields the full open family; stored via complements for
    uniformity with the SH-topology.
    """
    base = {sh.v_of(i) for i in range(sh.lattice.n)}
    opens = set(base)
    opens.add(frozenset())
    grew = True
    while grew:
        grew = False
        for a, b in combinations(sorted(opens, key=lambda s: (len(s), sorted(s))), 2):
            u = a | b
            if u not in opens:
                opens.add(u)
                grew = True
    return FiniteTopology(sh.x_points, {sh.x_points - o for o in opens})


def w_base(sh: ShAnalysis) -> frozenset[frozenset[int]]:
    """The generating base {v_of(i)} of the W-topology."""
    return frozenset(sh.v_of(i) for i in range(sh.lattice.n))
