"""Strongly hollow elements and the V / underline calculus.

An element ``l`` is strongly hollow (sh) when ``l <= a v b`` forces
``l <= a`` or ``l <= b``; on an ideal lattice this says the ideal cannot
be covered by a sum of two ideals without sitting inside one of them.
The bottom is always sh.  The point set ``X`` collects the nonzero sh
elements; ``v_of(i)`` is the part of ``X`` below ``i`` and ``underline(i)``
its join.

Detection is a brute-force pair scan straight from the definition: it is
the package's single source of truth, and every non-sh verdict keeps a
witness pair for reporting.
"""

from __future__ import annotations

from functools import cached_property

from .lattice import FiniteLattice


def is_strongly_hollow(lat: FiniteLattice, l: int) -> bool:
    """Pair scan: l <= a v b implies l <= a or l <= b, over all pairs."""
    return _scan(lat, l) is None


def _scan(lat: FiniteLattice, l: int) -> tuple[int, int] | None:
    # returns the first (a, b) breaking the sh condition, or None
    n = lat.n
    for a in range(n):
        if lat.le(l, a):
            continue
        for b in range(a + 1, n):
            if lat.le(l, lat.join(a, b)) and not lat.le(l, b):
                return (a, b)
    return None


class ShAnalysis:
    """Per-element sh flags for one lattice, with failure witnesses."""

    def __init__(self, lattice: FiniteLattice):
        self.lattice = lattice
        flags = []
        witnesses: dict[int, tuple[int, int]] = {}
        for l in range(lattice.n):
            w = _scan(lattice, l)
            flags.append(w is None)
            if w is not None:
                witnesses[l] = w
        self.sh_flags: tuple[bool, ...] = tuple(flags)
        self.witnesses = witnesses
        self.x_points: frozenset[int] = frozenset(
            e for e in range(lattice.n) if flags[e] and e != lattice.bottom
        )

    @cached_property
    def sh_elements(self) -> frozenset[int]:
        """All sh elements, bottom included."""
        return self.x_points | {self.lattice.bottom}

    def v_of(self, i: int) -> frozenset[int]:
        """Nonzero sh elements below i (a closed set of the SH-topology)."""
        return frozenset(x for x in self.x_points if self.lattice.le(x, i))

    def underline(self, i: int) -> int:
        """Join of v_of(i); bottom when no nonzero sh element lies below."""
        return self.lattice.join_all(self.v_of(i))

    def is_semi_sh(self, i: int) -> bool:
        """i equals the join of the sh elements below it."""
        return self.underline(i) == i

    @cached_property
    def semi_sh_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.lattice.n) if self.is_semi_sh(i))

    def is_sh_ring(self) -> bool:
        """Top itself is sh: no two proper elements join to the top."""
        return self.sh_flags[self.lattice.top]

    def is_semi_sh_ring(self) -> bool:
        """Top is the join of all sh elements.

        Implied by is_sh_ring, not conversely; the two notions are kept
        separate on purpose.
        """
        return self.underline(self.lattice.top) == self.lattice.top

    def x_labels(self) -> list[str]:
        lab = self.lattice.labels
        return sorted((lab[x] for x in self.x_points))


def sh_set(lat: FiniteLattice) -> ShAnalysis:
    """Flag every element of the lattice by the brute-force definition."""
    return ShAnalysis(lat)
