"""Finite bounded lattices with precomputed join/meet tables.

Elements are dense integer indices ``0..n-1``.  The order relation is kept
as per-element bitmasks, which makes every comparison, bound scan and
subset query a couple of integer operations.  Values are immutable after
validation and safe to share between threads.

Conventions used throughout the package:

* the join over an empty collection is ``bottom``,
* the meet over an empty collection is ``top``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator


class LatticeError(Exception):
    """Base class for everything this module can raise."""


@dataclass(frozen=True)
class Violation:
    """One structural defect found while validating a candidate order.

    ``kind`` is one of: ``not-a-partial-order``, ``no-bottom``, ``no-top``,
    ``no-unique-join``, ``no-unique-meet``, ``bad-index``.  ``where`` holds
    the element indices involved (witnesses).
    """

    kind: str
    where: tuple[int, ...] = ()
    note: str = ""

    def __str__(self) -> str:
        loc = ",".join(str(i) for i in self.where)
        return f"{self.kind}({loc})" + (f": {self.note}" if self.note else "")


class LatticeValidationError(LatticeError):
    """Raised when a candidate relation is not a bounded lattice."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:6])
        more = len(self.violations) - 6
        if more > 0:
            shown += f"; and {more} more"
        super().__init__(f"not a bounded lattice: {shown}")


class LatticeDocumentError(LatticeError):
    """Raised for malformed JSON lattice documents (schema, not axioms)."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A validated finite bounded lattice.

    Do not call the constructor directly; go through :func:`validate` (or a
    generator frontend), which checks the order axioms and precomputes the
    join/meet tables.
    """

    def __init__(
        self,
        n: int,
        up: tuple[int, ...],
        down: tuple[int, ...],
        joins: tuple[tuple[int, ...], ...],
        meets: tuple[tuple[int, ...], ...],
        bottom: int,
        top: int,
        labels: tuple[str, ...],
    ):
        self.n = n
        self._up = up      # up[a] = bitmask of {b : a <= b}
        self._down = down  # down[a] = bitmask of {b : b <= a}
        self._joins = joins
        self._meets = meets
        self.bottom = bottom
        self.top = top
        self.labels = labels

    # -- order and bound queries -------------------------------------------

    def le(self, a: int, b: int) -> bool:
        """True iff a <= b."""
        return bool(self._up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le(a, b)

    def join(self, a: int, b: int) -> int:
        return self._joins[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meets[a][b]

    def join_all(self, elems: Iterable[int]) -> int:
        """Join of a finite collection; bottom for the empty one."""
        out = self.bottom
        for e in elems:
            out = self._joins[out][e]
        return out

    def meet_all(self, elems: Iterable[int]) -> int:
        """Meet of a finite collection; top for the empty one."""
        out = self.top
        for e in elems:
            out = self._meets[out][e]
        return out

    def down_set(self, a: int) -> frozenset[int]:
        """All elements <= a."""
        return frozenset(_bits(self._down[a]))

    def up_set(self, a: int) -> frozenset[int]:
        return frozenset(_bits(self._up[a]))

    # -- structure ----------------------------------------------------------

    @cached_property
    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges (a, b) with b covering a, sorted."""
        out = []
        for a in range(self.n):
            for b in _bits(self._up[a] & ~(1 << a)):
                between = self._up[a] & self._down[b] & ~(1 << a) & ~(1 << b)
                if between == 0:
                    out.append((a, b))
        return tuple(sorted(out))

    @cached_property
    def atoms(self) -> frozenset[int]:
        return frozenset(b for a, b in self.cover_pairs if a == self.bottom)

    @cached_property
    def coatoms(self) -> frozenset[int]:
        """Maximal proper elements (model maximal ideals)."""
        return frozenset(a for a, b in self.cover_pairs if b == self.top)

    @cached_property
    def is_distributive(self) -> bool:
        """x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples."""
        rng = range(self.n)
        meets, joins = self._meets, self._joins
        for x in rng:
            mx = meets[x]
            for y in rng:
                for z in rng:
                    if mx[joins[y][z]] != joins[mx[y]][mx[z]]:
                        return False
        return True

    @cached_property
    def is_modular(self) -> bool:
        """a <= c implies a ∨ (b ∧ c) = (a ∨ b) ∧ c for all triples."""
        rng = range(self.n)
        meets, joins = self._meets, self._joins
        for a in rng:
            for c in _bits(self._up[a]):
                for b in rng:
                    if joins[a][meets[b][c]] != meets[joins[a][b]][c]:
                        return False
        return True

    def minimal_elements(self, members: Iterable[int]) -> frozenset[int]:
        """Members with no strictly smaller member; empty in -> empty out."""
        ms = frozenset(members)
        mask = 0
        for m in ms:
            mask |= 1 << m
        return frozenset(m for m in ms if self._down[m] & mask == 1 << m)

    def maximal_elements(self, members: Iterable[int]) -> frozenset[int]:
        ms = frozenset(members)
        mask = 0
        for m in ms:
            mask |= 1 << m
        return frozenset(m for m in ms if self._up[m] & mask == 1 << m)

    def longest_chain_length(self, members: Iterable[int]) -> int:
        """Largest k with a chain x_1 < ... < x_k inside ``members``."""
        ms = sorted(frozenset(members), key=lambda e: self._down[e].bit_count())
        best: dict[int, int] = {}
        for e in ms:
            below = self._down[e]
            best[e] = 1 + max((best[f] for f in best if f != e and below >> f & 1), default=0)
        return max(best.values(), default=0)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteLattice)
            and self.n == other.n
            and self._down == other._down
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self._down, self.labels))

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, covers={list(self.cover_pairs)!r})"

    def label_of(self, e: int) -> str:
        return self.labels[e]

    def relabel(self, labels: Iterable[str]) -> FiniteLattice:
        labels = tuple(labels)
        if len(labels) != self.n:
            raise ValueError(f"need {self.n} labels, got {len(labels)}")
        return FiniteLattice(self.n, self._up, self._down, self._joins,
                             self._meets, self.bottom, self.top, labels)


def validate(
    n: int,
    pairs: Iterable[tuple[int, int]],
    relation: str = "covers",
    labels: Iterable[str] | None = None,
) -> FiniteLattice:
    """Check a candidate order and build the lattice, or raise.

    ``pairs`` lists (a, b) meaning a <= b.  With ``relation="covers"`` the
    reflexive-transitive closure is computed first; with ``relation="le"``
    the pairs are taken as the full order (reflexivity is implied,
    transitivity is checked and reported).

    Raises :class:`LatticeValidationError` carrying every violation found:
    non-transitive or cyclic pairs, missing bottom/top, and every pair of
    elements without a unique join or meet.
    """
    if relation not in ("covers", "le"):
        raise ValueError(f"relation must be 'covers' or 'le', got {relation!r}")
    if n < 1:
        raise LatticeValidationError([Violation("bad-index", (n,), "size must be >= 1")])

    pairs = list(pairs)
    bad = [p for p in pairs for i in p if not 0 <= i < n]
    if bad:
        raise LatticeValidationError(
            [Violation("bad-index", p, f"indices must be in 0..{n - 1}") for p in bad]
        )

    up = [1 << i for i in range(n)]
    for a, b in pairs:
        up[a] |= 1 << b

    violations: list[Violation] = []
    if relation == "covers":
        _transitive_close(up, n)
    else:
        closed = list(up)
        _transitive_close(closed, n)
        if closed != up:
            for i in range(n):
                for j in _bits(closed[i] & ~up[i]):
                    k = next(
                        (m for m in _bits(up[i]) if m != i and up[m] >> j & 1), None
                    )
                    where = (i, k, j) if k is not None else (i, j)
                    violations.append(
                        Violation("not-a-partial-order", where,
                                  "transitivity fails: related through intermediates only")
                    )
            raise LatticeValidationError(violations)

    for a in range(n):
        for b in _bits(up[a] & ~(1 << a)):
            if up[b] >> a & 1:
                violations.append(
                    Violation("not-a-partial-order", (a, b), "antisymmetry fails (cycle)")
                )
    if violations:
        raise LatticeValidationError(violations)

    full = (1 << n) - 1
    down = [0] * n
    for a in range(n):
        for b in _bits(up[a]):
            down[b] |= 1 << a

    bottoms = [i for i in range(n) if up[i] == full]
    tops = [i for i in range(n) if down[i] == full]
    if not bottoms:
        violations.append(Violation("no-bottom"))
    if not tops:
        violations.append(Violation("no-top"))

    joins = [[0] * n for _ in range(n)]
    meets = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            ub = up[a] & up[b]
            least = [c for c in _bits(ub) if down[c] & ub == 1 << c]
            if len(least) == 1:
                joins[a][b] = joins[b][a] = least[0]
            else:
                violations.append(Violation("no-unique-join", (a, b), f"candidates {least}"))
            lb = down[a] & down[b]
            greatest = [c for c in _bits(lb) if up[c] & lb == 1 << c]
            if len(greatest) == 1:
                meets[a][b] = meets[b][a] = greatest[0]
            else:
                violations.append(Violation("no-unique-meet", (a, b), f"candidates {greatest}"))

    if violations:
        raise LatticeValidationError(violations)

    lab = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    if len(lab) != n:
        raise LatticeValidationError(
            [Violation("bad-index", (len(lab),), f"need {n} labels")]
        )
    return FiniteLattice(
        n,
        tuple(up),
        tuple(down),
        tuple(tuple(r) for r in joins),
        tuple(tuple(r) for r in meets),
        bottoms[0],
        tops[0],
        lab,
    )


def _transitive_close(up: list[int], n: int) -> None:
    for k in range(n):
        uk = up[k]
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= uk


# -- JSON lattice documents --------------------------------------------------
#
# { "n": int, "relation": "covers" | "le", "pairs": [[i, j], ...],
#   "labels": [str, ...]  (optional) }


def to_doc(lat: FiniteLattice) -> dict:
    """Serialize as a covers-relation JSON document (smallest faithful form)."""
    return {
        "n": lat.n,
        "relation": "covers",
        "pairs": [list(p) for p in lat.cover_pairs],
        "labels": list(lat.labels),
    }


def from_doc(doc: dict) -> FiniteLattice:
    """Validate a JSON lattice document and build the lattice."""
    if not isinstance(doc, dict):
        raise LatticeDocumentError("lattice document must be a JSON object")
    try:
        n = doc["n"]
        pairs = doc["pairs"]
    except (KeyError, TypeError) as exc:
        raise LatticeDocumentError(f"missing required key: {exc}") from exc
    relation = doc.get("relation", "covers")
    if relation not in ("covers", "le"):
        raise LatticeDocumentError(f"relation must be 'covers' or 'le', got {relation!r}")
    if not isinstance(n, int) or not isinstance(pairs, list):
        raise LatticeDocumentError("'n' must be an int and 'pairs' a list")
    try:
        tuples = [(int(a), int(b)) for a, b in pairs]
    except (TypeError, ValueError) as exc:
        raise LatticeDocumentError("pairs must be [i, j] index pairs") from exc
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)
    ):
        raise LatticeDocumentError("labels must be a list of strings")
    return validate(n, tuples, relation=relation, labels=labels)


def load_doc(path: str) -> FiniteLattice:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise LatticeDocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise LatticeDocumentError(f"{path} is not valid JSON: {exc}") from exc
    return from_doc(doc)


def dump_doc(lat: FiniteLattice, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_doc(lat), fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- isomorphism --------------------------------------------------------------


def _refined_profiles(lat: FiniteLattice) -> list[tuple]:
    # 1-WL style refinement over the cover digraph, seeded with down/up counts
    prof: list[tuple] = [
        (lat._down[i].bit_count(), lat._up[i].bit_count()) for i in range(lat.n)
    ]
    lowers: list[list[int]] = [[] for _ in range(lat.n)]
    uppers: list[list[int]] = [[] for _ in range(lat.n)]
    for a, b in lat.cover_pairs:
        uppers[a].append(b)
        lowers[b].append(a)
    for _ in range(lat.n):
        nxt = [
            (prof[i], tuple(sorted(prof[j] for j in lowers[i])),
             tuple(sorted(prof[j] for j in uppers[i])))
            for i in range(lat.n)
        ]
        if len(set(nxt)) == len(set(prof)):
            break
        prof = nxt
    return prof


_CANON_PERM_CAP = 1_000_000


def canonical_key(lat: FiniteLattice) -> tuple:
    """A label-independent key: equal keys iff isomorphic lattices.

    Brute-forces permutations inside profile classes; refuses when the
    symmetry class product exceeds a safety cap (never at desk scale).
    """
    prof = _refined_profiles(lat)
    order = sorted(range(lat.n), key=lambda i: (prof[i], i))
    classes: list[list[int]] = []
    for i in order:
        if classes and prof[classes[-1][0]] == prof[i]:
            classes[-1].append(i)
        else:
            classes.append([i])

    total = 1
    for c in classes:
        for k in range(2, len(c) + 1):
            total *= k
        if total > _CANON_PERM_CAP:
            raise LatticeError(f"canonical form needs > {_CANON_PERM_CAP} permutations")

    best: tuple | None = None
    for combo in _product_permutations(classes):
        pos = [0] * lat.n
        for new_index, old in enumerate(combo):
            pos[old] = new_index
        key = tuple(
            sorted((pos[a], pos[b]) for a, b in lat.cover_pairs)
        )
        if best is None or key < best:
            best = key
    assert best is not None
    return (lat.n, best)


def _product_permutations(classes: list[list[int]]) -> Iterator[list[int]]:
    if not classes:
        yield []
        return
    head, rest = classes[0], classes[1:]
    for perm in permutations(head):
        for tail in _product_permutations(rest):
            yield list(perm) + tail


def is_isomorphic(a: FiniteLattice, b: FiniteLattice) -> bool:
    if a.n != b.n:
        return False
    if sorted(_refined_profiles(a)) != sorted(_refined_profiles(b)):
        return False
    return canonical_key(a) == canonical_key(b)
