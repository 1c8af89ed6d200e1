"""Lattice sources: ring-family frontends, named fixtures, enumeration.

Frontends build the ideal lattice of concrete ring families (``Z_n``,
finite products); the enumerator streams every bounded lattice on up to
``ENUM_MAX`` elements for exhaustive verification runs; the random
generator gives seeded variety (explicitly non-uniform).
"""

from __future__ import annotations

import random
from itertools import permutations

from .lattice import FiniteLattice, LatticeValidationError, canonical_key, load_doc, validate

ENUM_MAX = 7     # documented exhaustive-enumeration bound
ZN_MAX = 10**6   # cap for the Z_n frontend (divisors by trial division)


class SpecParseError(ValueError):
    """A lattice spec string or document that cannot be interpreted."""


class GenerationError(RuntimeError):
    """Random generation gave up after the bounded number of rejection rounds."""


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def ideal_lattice_zn(n: int) -> FiniteLattice:
    """Ideal lattice of Z_n on divisor generators, labeled "(d)".

    (d1) <= (d2) iff d2 | d1; join is the gcd of generators, meet the lcm;
    bottom is (n) (the zero ideal) and top is (1) (the whole ring).
    """
    if n < 2:
        raise SpecParseError(f"zn requires n >= 2, got {n}")
    if n > ZN_MAX:
        raise SpecParseError(f"zn frontend capped at n <= {ZN_MAX}, got {n}")
    divs = divisors(n)
    index = {d: i for i, d in enumerate(divs)}
    # (m) <= (d) iff d | m
    pairs = [(index[m], index[d]) for d in divs for m in divs if d != m and m % d == 0]
    return validate(len(divs), pairs, relation="le",
                    labels=[f"({d})" for d in divs])


def chain(k: int) -> FiniteLattice:
    """The k-element chain 0 < 1 < ... < k-1."""
    if k < 1:
        raise SpecParseError(f"chain requires k >= 1, got {k}")
    return validate(k, [(i, i + 1) for i in range(k - 1)],
                    labels=[f"c{i}" for i in range(k)])


_NAMED_COVERS = {
    # diamond: three incomparable atoms under a common top
    "m3": (5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
           ["0", "a", "b", "c", "1"]),
    # pentagon: atoms a, b; c sits strictly between a and the top
    "n5": (5, [(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)],
           ["0", "a", "c", "b", "1"]),
    # boolean square
    "b2": (4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["0", "a", "b", "1"]),
}


def named_lattice(name: str) -> FiniteLattice:
    try:
        n, covers, labels = _NAMED_COVERS[name.lower()]
    except KeyError:
        raise SpecParseError(f"unknown named lattice {name!r}") from None
    return validate(n, covers, labels=labels)


def product(factors: list[FiniteLattice]) -> FiniteLattice:
    """Componentwise product; models the ideal lattice of a product ring."""
    if len(factors) < 2:
        raise SpecParseError("product requires at least 2 factors")
    sizes = [f.n for f in factors]
    total = 1
    for s in sizes:
        total *= s
    if total > 4096:
        raise SpecParseError(f"product size {total} too large")

    def unrank(i: int) -> list[int]:
        out = []
        for s in reversed(sizes):
            out.append(i % s)
            i //= s
        return out[::-1]

    coords = [unrank(i) for i in range(total)]
    pairs = []
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            if i != j and all(f.le(a, b) for f, a, b in zip(factors, ci, cj)):
                pairs.append((i, j))
    labels = [
        "(" + ",".join(f.label_of(c) for f, c in zip(factors, ci)) + ")"
        for ci in coords
    ]
    return validate(total, pairs, relation="le", labels=labels)


# -- exhaustive enumeration ----------------------------------------------------
#
# Lattices are generated in "natural" labelings (every label order is a linear
# extension, so 0 is the bottom and n-1 the top).  Each prefix of such a
# labeling is a meet-semilattice, which prunes the search hard.  Non-distinct
# mode expands every natural lattice to all of its relabelings, so the stream
# still covers every labeled bounded lattice of each size.


def _natural_lattices(n: int):
    """Yield down-mask tuples of all natural-labeled n-element lattices."""
    if n == 1:
        yield (1,)
        return

    def ideals(down: list[int], k: int) -> list[int]:
        # all down-closed subsets of the poset on 0..k-1 that contain 0
        out = [1]  # {0}
        for e in range(1, k):
            need = down[e] & ~(1 << e)
            out += [m | 1 << e for m in out if m & need == need]
        return sorted(out)

    def extend(down: list[int]):
        k = len(down)
        if k == n - 1:
            # the last element must be the top
            full = (1 << n) - 1
            cand = down + [full]
            if _meets_ok(cand, n - 1):
                yield tuple(cand)
            return
        for ideal in ideals(down, k):
            cand = down + [ideal | 1 << k]
            if _meets_ok(cand, k):
                yield from extend(cand)

    yield from extend([1])


def _meets_ok(down: list[int], k: int) -> bool:
    # unique greatest lower bound for the new element k against all others
    dk = down[k]
    for j in range(k):
        lb = dk & down[j]
        greatest = 0
        for c in range(k, -1, -1):
            if lb >> c & 1:
                if down[c] & lb == lb:
                    greatest = 1
                break
        if not greatest:
            return False
    return True


def _lattice_from_down(down: tuple[int, ...]) -> FiniteLattice:
    n = len(down)
    pairs = [(i, j) for j in range(n) for i in range(n) if i != j and down[j] >> i & 1]
    return validate(n, pairs, relation="le")


def _relabelings(down: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(down)
    seen = set()
    for perm in permutations(range(n)):
        new = [0] * n
        for old_j in range(n):
            m = 0
            for old_i in range(n):
                if down[old_j] >> old_i & 1:
                    m |= 1 << perm[old_i]
            new[perm[old_j]] = m
        seen.add(tuple(new))
    return sorted(seen)


def enumerate_lattices(max_size: int, distinct: bool = True):
    """Stream every bounded lattice with at most ``max_size`` elements.

    With ``distinct=True`` one representative per isomorphism class is
    yielded; otherwise every labeled copy.  Deterministic order: by size,
    then by the down-set encoding of the relation.
    """
    if max_size < 1:
        raise SpecParseError(f"max_size must be >= 1, got {max_size}")
    if max_size > ENUM_MAX:
        raise SpecParseError(
            f"exhaustive enumeration is only supported up to {ENUM_MAX} elements "
            f"(asked for {max_size})"
        )
    for n in range(1, max_size + 1):
        naturals = sorted(_natural_lattices(n))
        if distinct:
            seen = set()
            for down in naturals:
                lat = _lattice_from_down(down)
                key = canonical_key(lat)
                if key not in seen:
                    seen.add(key)
                    yield lat
        else:
            all_label = set()
            for down in naturals:
                all_label.update(_relabelings(down))
            for down in sorted(all_label):
                yield _lattice_from_down(down)


# -- random generation ---------------------------------------------------------


def random_lattice(size: int, seed: int, max_rounds: int = 500) -> FiniteLattice:
    """A seeded pseudo-random bounded lattice (non-uniform by construction).

    Builds a random natural-labeled poset by cover insertion, forces a top,
    and rejects candidates whose meets are not unique.  Deterministic for a
    fixed (size, seed).
    """
    if size < 1:
        raise SpecParseError(f"size must be >= 1, got {size}")
    if size == 1:
        return chain(1)
    rng = random.Random(f"lattice:{size}:{seed}")
    for _ in range(max_rounds):
        down = [1]
        for k in range(1, size - 1):
            want = 1 if k == 1 or rng.random() < 0.6 else 2
            covers = rng.sample(range(k), min(want, k))
            mask = 1 << k
            for c in covers:
                mask |= down[c]
            down.append(mask)
        down.append((1 << size) - 1)
        pairs = [
            (i, j)
            for j in range(size)
            for i in range(size)
            if i != j and down[j] >> i & 1
        ]
        try:
            return validate(size, pairs, relation="le")
        except LatticeValidationError:
            continue
    raise GenerationError(
        f"no valid lattice of size {size} after {max_rounds} rounds (seed {seed})"
    )


# -- spec strings ---------------------------------------------------------------
#
# Grammar: "zn:12" | "chain:4" | "m3" | "n5" | "b2" | "prod(a,b,...)" | "file:path"


def parse_spec(spec: str) -> FiniteLattice:
    """Build the lattice a spec string denotes; raise SpecParseError otherwise."""
    s = spec.strip()
    if not s:
        raise SpecParseError("empty lattice spec")
    low = s.lower()
    if low in _NAMED_COVERS:
        return named_lattice(low)
    if low.startswith("zn:"):
        return ideal_lattice_zn(_int_arg(s, s[3:]))
    if low.startswith("chain:"):
        return chain(_int_arg(s, s[6:]))
    if s.startswith("file:"):
        path = s[5:]
        if not path:
            raise SpecParseError("file: needs a path")
        try:
            return load_doc(path)
        except LatticeValidationError:
            raise
        except Exception as exc:
            raise SpecParseError(f"cannot load {path}: {exc}") from exc
    if low.startswith("prod(") and s.endswith(")"):
        inner = s[5:-1]
        parts = _split_args(inner)
        if len(parts) < 2:
            raise SpecParseError(f"prod needs >= 2 factors: {spec!r}")
        return product([parse_spec(p) for p in parts])
    raise SpecParseError(f"cannot parse lattice spec {spec!r}")


def _int_arg(spec: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecParseError(f"bad integer in spec {spec!r}") from None


def _split_args(inner: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced parens in {inner!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise SpecParseError(f"unbalanced parens in {inner!r}")
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def expand_spec_ranges(spec: str) -> list[str]:
    """Expand "zn:2..60" style ranges into individual specs."""
    s = spec.strip()
    low = s.lower()
    for prefix in ("zn:", "chain:"):
        if low.startswith(prefix) and ".." in s:
            lo_txt, _, hi_txt = s[len(prefix):].partition("..")
            lo, hi = _int_arg(s, lo_txt), _int_arg(s, hi_txt)
            if hi < lo:
                raise SpecParseError(f"empty range in {spec!r}")
            return [f"{prefix}{k}" for k in range(lo, hi + 1)]
    return [s]
