"""Registry-driven verification of the order/topology claims.

Every testable claim the package implements is registered once, with a
topic key, a hypothesis class (``any``, ``modular``, ``distributive``) and
a checker.  A corpus run executes each claim on every lattice matching its
hypothesis; outside the hypothesis a claim is either skipped or, for the
claims marked so, still evaluated and tallied as an observation (never a
failure).  Failing claims keep the smallest counterexample lattice as a
replayable JSON document.

Infinite descending-chain statements have no finite content and are noted,
not tested (see ``UNTESTED_NOTES``).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import generators
from .dimensions import AnalysisBundle, dclk_dimension_oracle
from .hollow import is_strongly_hollow
from .lattice import FiniteLattice, LatticeValidationError, to_doc, validate
from .topology import AxiomViolation, w_base

SUBSET_EXHAUSTIVE_MAX = 12   # enumerate all subsets of X up to this size
SUBSET_SAMPLES = 1000        # sampled subsets beyond it
FAMILY_EXHAUSTIVE_MAX = 12   # all triples of lattice elements up to this size
FAMILY_SAMPLES = 300

UNTESTED_NOTES = (
    "descending chains of finite sums of pairwise non-comparable sh elements: "
    "an infinite-chain statement, vacuously true on every finite instance",
)


class ClaimActuallyPasses(Exception):
    """minimize_witness was handed a lattice that is not a counterexample."""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: str | None = None


class ClaimContext(AnalysisBundle):
    """AnalysisBundle plus the deterministic subset/family pools claims share."""

    def __init__(self, lattice: FiniteLattice, spec: str = "explicit", seed: int = 0):
        super().__init__(lattice, spec)
        self.seed = seed
        self._subsets: tuple[frozenset[int], ...] | None = None
        self._families: tuple[tuple[int, ...], ...] | None = None

    def label(self, e: int) -> str:
        return self.lattice.labels[e]

    def set_label(self, s) -> str:
        return "{" + ", ".join(sorted(self.label(e) for e in s)) + "}"

    @property
    def subsets(self) -> tuple[frozenset[int], ...]:
        """All subsets of X when small, else a seeded sample (with {} and X)."""
        if self._subsets is None:
            xs = sorted(self.sh.x_points)
            if len(xs) <= SUBSET_EXHAUSTIVE_MAX:
                pool = [
                    frozenset(x for b, x in enumerate(xs) if m >> b & 1)
                    for m in range(1 << len(xs))
                ]
            else:
                rng = random.Random(f"subsets:{self.seed}:{self.spec}")
                pool = [frozenset(), frozenset(xs)]
                for _ in range(SUBSET_SAMPLES):
                    pool.append(frozenset(x for x in xs if rng.random() < 0.5))
            self._subsets = tuple(pool)
        return self._subsets

    @property
    def families(self) -> tuple[tuple[int, ...], ...]:
        """Nonempty element families: singletons, pairs, a triple sweep, all."""
        if self._families is None:
            n = self.lattice.n
            fams: list[tuple[int, ...]] = [(i,) for i in range(n)]
            fams += [(i, j) for i in range(n) for j in range(i, n)]
            if n <= FAMILY_EXHAUSTIVE_MAX:
                fams += [
                    (i, j, k)
                    for i in range(n)
                    for j in range(i + 1, n)
                    for k in range(j + 1, n)
                ]
            else:
                rng = random.Random(f"families:{self.seed}:{self.spec}")
                fams += [
                    tuple(rng.sample(range(n), 3)) for _ in range(FAMILY_SAMPLES)
                ]
            fams.append(tuple(range(n)))
            self._families = tuple(fams)
        return self._families


@dataclass(frozen=True)
class Claim:
    id: str
    topic: str
    statement: str
    hypothesis: str  # "any" | "modular" | "distributive"
    check: Callable[[ClaimContext], CheckResult]
    observe_outside: bool = False


def hypothesis_matches(claim: Claim, lat: FiniteLattice) -> bool:
    if claim.hypothesis == "any":
        return True
    if claim.hypothesis == "modular":
        return lat.is_modular
    if claim.hypothesis == "distributive":
        return lat.is_distributive
    raise ValueError(f"unknown hypothesis class {claim.hypothesis!r}")


def run_claim(claim: Claim, ctx: ClaimContext) -> CheckResult:
    """Run one checker defensively: an exception is a failure, not a crash."""
    try:
        return claim.check(ctx)
    except AxiomViolation as exc:
        return CheckResult(False, f"axiom violation: {exc}")
    except Exception as exc:  # noqa: BLE001 - a broken checker must not kill the run
        return CheckResult(False, f"checker raised {type(exc).__name__}: {exc}")


# ---------------------------------------------------------------------------
# checkers


def _fail(msg: str) -> CheckResult:
    return CheckResult(False, msg)


_OK = CheckResult(True)


def _check_sh_definition(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    if not sh.sh_flags[lat.bottom]:
        return _fail("bottom not flagged strongly hollow")
    for l in range(lat.n):
        fresh = is_strongly_hollow(lat, l)
        if fresh != sh.sh_flags[l]:
            return _fail(f"cached flag for {ctx.label(l)} disagrees with a fresh scan")
        if not sh.sh_flags[l]:
            a, b = sh.witnesses[l]
            good = (
                lat.le(l, lat.join(a, b))
                and not lat.le(l, a)
                and not lat.le(l, b)
            )
            if not good:
                return _fail(f"recorded witness for {ctx.label(l)} is not a counterexample")
    return _OK


def _check_underline_kernel(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    under = [sh.underline(i) for i in range(lat.n)]
    for i in range(lat.n):
        if not lat.le(under[i], i):
            return _fail(f"underline({ctx.label(i)}) not below the element")
        if under[under[i]] != under[i]:
            return _fail(f"underline not idempotent at {ctx.label(i)}")
        if sh.is_semi_sh(i) != (under[i] == i):
            return _fail(f"semi-sh flag disagrees with fixpoint at {ctx.label(i)}")
        for j in range(lat.n):
            if lat.le(i, j) and not lat.le(under[i], under[j]):
                return _fail(f"underline not monotone on {ctx.label(i)} <= {ctx.label(j)}")
    if sh.is_sh_ring() and not sh.is_semi_sh_ring():
        return _fail("sh-ring does not imply semi-sh-ring here")
    if sh.is_semi_sh_ring() != (under[lat.top] == lat.top):
        return _fail("semi-sh-ring flag disagrees with underline(top)")
    return _OK


def _check_y_filtration(ctx: ClaimContext) -> CheckResult:
    lat, sh, yf = ctx.lattice, ctx.sh, ctx.yf
    expected0 = frozenset({lat.bottom}) | lat.minimal_elements(sh.x_points)
    if yf.levels[0] != expected0:
        return _fail(f"Y_0 is {ctx.set_label(yf.levels[0])}, expected {ctx.set_label(expected0)}")
    for a, b in zip(yf.levels, yf.levels[1:]):
        if not a < b:
            return _fail("levels do not strictly increase before stabilizing")
    if yf.levels[-1] != sh.sh_elements:
        return _fail("filtration did not stabilize at the full sh set")
    if (yf.dimension == -1) != (not sh.x_points):
        return _fail("dimension -1 must mean no nonzero sh element")
    if sh.x_points and yf.dimension != len(yf.levels) - 1:
        return _fail("dimension is not the stabilization index")
    return _OK


def _check_dclk_oracle(ctx: ClaimContext) -> CheckResult:
    got, want = ctx.yf.dimension, dclk_dimension_oracle(ctx.sh)
    if got != want:
        return _fail(f"filtration dimension {got} != chain oracle {want}")
    return _OK


def _check_coatom_meet(ctx: ClaimContext) -> CheckResult:
    lat = ctx.lattice
    if lat.meet_all(lat.coatoms) != lat.bottom:
        return _OK  # hypothesis of the implication not met
    if ctx.dclk_dim > 0:
        return _fail(
            f"coatoms meet to bottom but dclk dimension is {ctx.dclk_dim}"
        )
    return _OK


def _check_dclk_exists(ctx: ClaimContext) -> CheckResult:
    yf = ctx.yf
    if yf.levels and all(ctx.lattice.bottom in lv for lv in yf.levels) and yf.dimension >= -1:
        return _OK
    return _fail("filtration malformed")


def _check_v_empty(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    for i in range(lat.n):
        has_below = any(lat.le(x, i) for x in sh.x_points)
        if (not sh.v_of(i)) != (not has_below):
            return _fail(f"v({ctx.label(i)}) emptiness disagrees with the order scan")
    return _OK


def _check_v_singleton(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    minimal = lat.minimal_elements(sh.x_points)
    for i in range(lat.n):
        if (sh.v_of(i) == {i}) != (i in minimal):
            return _fail(f"v({ctx.label(i)}) singleton test disagrees with minimality")
    return _OK


def _check_v_full(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    for i in range(lat.n):
        contains_all = all(lat.le(x, i) for x in sh.x_points)
        if (sh.v_of(i) == sh.x_points) != contains_all:
            return _fail(f"v({ctx.label(i)}) fullness disagrees with containment")
    if sh.v_of(lat.top) != sh.x_points:
        return _fail("v(top) is not the whole point set")
    return _OK


def _check_v_join(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    v = [sh.v_of(i) for i in range(lat.n)]
    for i in range(lat.n):
        for j in range(i, lat.n):
            if v[lat.join(i, j)] != v[i] | v[j]:
                return _fail(f"v({ctx.label(i)} v {ctx.label(j)}) != union of parts")
    return _OK


def _check_v_meet_family(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    v = [sh.v_of(i) for i in range(lat.n)]
    for fam in ctx.families:
        inter = sh.x_points
        for f in fam:
            inter = inter & v[f]
        if v[lat.meet_all(fam)] != inter:
            labs = ", ".join(ctx.label(f) for f in fam)
            return _fail(f"v(meet of [{labs}]) != intersection of parts")
    # empty family: meet over nothing is top, intersection over nothing is X
    if v[lat.meet_all(())] != sh.x_points:
        return _fail("empty-family convention broken: v(top) != X")
    return _OK


def _check_v_underline(ctx: ClaimContext) -> CheckResult:
    sh = ctx.sh
    for i in range(ctx.lattice.n):
        if sh.v_of(sh.underline(i)) != sh.v_of(i):
            return _fail(f"v(underline({ctx.label(i)})) != v({ctx.label(i)})")
    return _OK


def _check_semi_sh_fixpoint(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    # joins of arbitrary sh subsets = join-closure of the sh elements
    reachable = {lat.bottom}
    frontier = [lat.bottom]
    while frontier:
        e = frontier.pop()
        for s in sh.sh_elements:
            j = lat.join(e, s)
            if j not in reachable:
                reachable.add(j)
                frontier.append(j)
    for i in range(lat.n):
        if sh.is_semi_sh(i) != (i in reachable):
            return _fail(
                f"{ctx.label(i)}: fixpoint test disagrees with being a join of sh elements"
            )
    return _OK


def _check_v_equal_underline(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    v = [sh.v_of(i) for i in range(lat.n)]
    under = [sh.underline(i) for i in range(lat.n)]
    for i in range(lat.n):
        for j in range(i + 1, lat.n):
            if v[i] == v[j] and under[i] != under[j]:
                return _fail(
                    f"v({ctx.label(i)}) == v({ctx.label(j)}) but underlines differ"
                )
    return _OK


def _check_underline_meet(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    under = [sh.underline(i) for i in range(lat.n)]
    for fam in ctx.families:
        lhs = under[lat.meet_all(fam)]
        rhs = lat.meet_all(under[f] for f in fam)
        if lhs != rhs:
            labs = ", ".join(ctx.label(f) for f in fam)
            return _fail(
                f"underline(meet of [{labs}]) = {ctx.label(lhs)}"
                f" != meet of underlines = {ctx.label(rhs)}"
            )
    return _OK


def _check_closed_axioms(ctx: ClaimContext) -> CheckResult:
    problems = ctx.shtop.axiom_violations()
    if problems:
        return _fail("; ".join(problems))
    return _OK


def _check_trivial_singleton(ctx: ClaimContext) -> CheckResult:
    x = ctx.sh.x_points
    if not x:
        return _OK  # equivalence read under a nonempty point set
    if ctx.shtop.is_indiscrete() != (len(x) == 1):
        return _fail(f"indiscrete test disagrees with |X| == 1 (|X| = {len(x)})")
    return _OK


def _check_t0(ctx: ClaimContext) -> CheckResult:
    if not ctx.shtop.is_t0():
        return _fail("SH-topology is not T0")
    return _OK


def _check_t1_antichain(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    antichain = lat.minimal_elements(sh.x_points) == sh.x_points
    if ctx.shtop.is_t1() != antichain:
        return _fail("SH-topology T1 disagrees with all-points-minimal")
    if ctx.wtop.is_t1() != antichain:
        return _fail("W-topology T1 disagrees with all-points-minimal")
    return _OK


def _check_hausdorff_cover(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    if not ctx.shtop.is_hausdorff():
        return _OK
    x = sorted(sh.x_points)
    v = [sh.v_of(i) for i in range(lat.n)]
    for a in range(len(x)):
        for b in range(a + 1, len(x)):
            p, q = x[a], x[b]
            found = any(
                p not in v[i1] and q not in v[i2] and v[i1] | v[i2] == sh.x_points
                for i1 in range(lat.n)
                for i2 in range(lat.n)
            )
            if not found:
                return _fail(
                    f"hausdorff, but no covering closed pair separates "
                    f"{ctx.label(p)} and {ctx.label(q)}"
                )
    return _OK


def _check_semi_sh_order_iso(ctx: ClaimContext) -> CheckResult:
    lat, sh = ctx.lattice, ctx.sh
    semis = sh.semi_sh_elements
    image = {i: sh.v_of(i) for i in semis}
    if len(set(image.values())) != len(semis):
        return _fail("v is not injective on semi-sh elements")
    if set(image.values()) != set(ctx.shtop.closed_sets):
        return _fail("v image on semi-sh elements is not the closed-set family")
    for i in semis:
        for j in semis:
            if lat.le(i, j) != (image[i] <= image[j]):
                return _fail(
                    f"order mismatch between {ctx.label(i)}, {ctx.label(j)} and their v sets"
                )
    return _OK


def _check_w_base(ctx: ClaimContext) -> CheckResult:
    sh = ctx.sh
    base = w_base(sh)
    union = frozenset().union(*base) if base else frozenset()
    if union != sh.x_points:
        return _fail("base does not cover the point set")
    base_set = set(base)
    for b1 in base:
        for b2 in base:
            if b1 & b2 not in base_set:
                return _fail("base is not intersection-closed")
    opens = ctx.wtop.open_sets
    for b in base:
        if b not in opens:
            return _fail("a base set is not open in the generated topology")
    for g in opens:
        pieces = [b for b in base if b <= g]
        union = frozenset().union(*pieces) if pieces else frozenset()
        if union != g:
            return _fail(f"open {ctx.set_label(g)} is not a union of base sets")
    return _OK


def _check_isolated_minimal(ctx: ClaimContext) -> CheckResult:
    lat, wtop = ctx.lattice, ctx.wtop
    for s in ctx.subsets:
        if wtop.isolated_points(s) != lat.minimal_elements(s):
            return _fail(
                f"isolated points of {ctx.set_label(s)} differ from its minimal elements"
            )
    return _OK


def _check_isolated_open(ctx: ClaimContext) -> CheckResult:
    wtop = ctx.wtop
    for s in ctx.subsets:
        iso = wtop.isolated_points(s)
        g = frozenset().union(*(wtop.minimal_open_of(x) for x in iso)) if iso else frozenset()
        if not wtop.is_open(g) or g & s != iso:
            return _fail(f"isolated set of {ctx.set_label(s)} is not open in the subspace")
    return _OK


def _check_scattered(ctx: ClaimContext) -> CheckResult:
    wtop = ctx.wtop
    for s in ctx.subsets:
        if s and not wtop.isolated_points(s):
            return _fail(f"nonempty subset {ctx.set_label(s)} has no isolated point")
    return _OK


def _check_derived_exists(ctx: ClaimContext) -> CheckResult:
    cb, x = ctx.cb, ctx.sh.x_points
    if cb.levels[0] != x or cb.levels[-1]:
        return _fail("filtration does not start at X or does not reach empty")
    for a, b in zip(cb.levels, cb.levels[1:]):
        if not b < a:
            return _fail("derivative levels do not strictly decrease")
    if cb.derived_dimension != len(cb.strata):
        return _fail("derived dimension is not the number of strata")
    seen: set[int] = set()
    for s in cb.strata:
        if seen & s:
            return _fail("strata are not pairwise disjoint")
        seen |= s
    if seen != set(x):
        return _fail("strata do not partition the point set")
    return _OK


def _check_levels_closed(ctx: ClaimContext) -> CheckResult:
    for i, lv in enumerate(ctx.cb.levels):
        if not ctx.wtop.is_closed(lv):
            return _fail(f"derivative level {i} is not closed in the W-topology")
    return _OK


def _check_strata_match(ctx: ClaimContext) -> CheckResult:
    lat, yf, cb = ctx.lattice, ctx.yf, ctx.cb
    for alpha in range(yf.dimension + 1):
        want = set(yf.levels[alpha]) - {lat.bottom}
        got: set[int] = set()
        for beta in range(min(alpha + 1, len(cb.strata))):
            got |= cb.strata[beta]
        if want != got:
            return _fail(
                f"Y_{alpha} minus bottom is {ctx.set_label(want)}, "
                f"strata union is {ctx.set_label(got)}"
            )
    return _OK


def _check_dimension_gap(ctx: ClaimContext) -> CheckResult:
    dclk, derived = ctx.dclk_dim, ctx.derived_dim
    if not dclk <= derived <= dclk + 1:
        return _fail(f"derived {derived} outside [dclk, dclk+1] = [{dclk}, {dclk + 1}]")
    if derived != dclk + 1:
        return _fail(f"derived {derived} != dclk + 1 = {dclk + 1}")
    return _OK


# ---------------------------------------------------------------------------
# registry

TOPICS: tuple[str, ...] = (
    "sh-definition",
    "semi-sh-definition",
    "dclk-definition",
    "coatom-meet-proposition",
    "dcc-gives-dimension",
    "v-underline-lemma",
    "closed-set-axioms",
    "trivial-remark",
    "separation-lemma",
    "quasicompact-proposition",
    "w-base",
    "isolated-minimal-lemma",
    "isolated-open-corollary",
    "scattered-lemma",
    "derived-dimension-exists",
    "cb-levels-closed",
    "strata-proposition",
    "dimension-gap-theorem",
)

REGISTRY: tuple[Claim, ...] = (
    Claim("sh-definition-witnesses", "sh-definition",
          "bottom is sh; flags match a fresh pair scan; non-sh witnesses are genuine",
          "any", _check_sh_definition),
    Claim("underline-kernel", "semi-sh-definition",
          "underline is a monotone idempotent kernel; semi-sh = fixpoint; "
          "sh-ring implies semi-sh-ring",
          "any", _check_underline_kernel),
    Claim("y-filtration-base", "dclk-definition",
          "Y_0 = bottom + minimal nonzero sh; levels strictly increase to the sh set",
          "any", _check_y_filtration),
    Claim("dclk-oracle-agreement", "dclk-definition",
          "filtration index equals longest sh-chain length minus one",
          "any", _check_dclk_oracle),
    Claim("coatom-meet-dimension", "coatom-meet-proposition",
          "coatoms meeting to bottom force dclk dimension <= 0",
          "modular", _check_coatom_meet, observe_outside=True),
    Claim("dclk-exists", "dcc-gives-dimension",
          "the dimension filtration terminates on every finite instance",
          "any", _check_dclk_exists),
    Claim("v-empty-iff-no-sh-below", "v-underline-lemma",
          "v(i) empty iff no nonzero sh element lies below i",
          "any", _check_v_empty),
    Claim("v-singleton-iff-minimal", "v-underline-lemma",
          "v(i) = {i} iff i is a minimal nonzero sh element",
          "any", _check_v_singleton),
    Claim("v-full-iff-contains-all", "v-underline-lemma",
          "v(i) = X iff i contains every sh element",
          "any", _check_v_full),
    Claim("v-join-union", "v-underline-lemma",
          "v(i v j) = v(i) | v(j)",
          "any", _check_v_join),
    Claim("v-meet-intersection", "v-underline-lemma",
          "v(meet of a family) = intersection of the v sets",
          "any", _check_v_meet_family),
    Claim("v-underline-fixpoint", "v-underline-lemma",
          "v(underline(i)) = v(i)",
          "any", _check_v_underline),
    Claim("semi-sh-fixpoint", "v-underline-lemma",
          "i = underline(i) iff i is a join of sh elements",
          "any", _check_semi_sh_fixpoint),
    Claim("v-equal-implies-underline-equal", "v-underline-lemma",
          "v(i) = v(j) implies underline(i) = underline(j)",
          "any", _check_v_equal_underline),
    Claim("underline-meet-distributes", "v-underline-lemma",
          "underline(meet of a nonempty family) = meet of the underlines",
          "distributive", _check_underline_meet, observe_outside=True),
    Claim("sh-closed-set-axioms", "closed-set-axioms",
          "the family {v(i)} satisfies the closed-set axioms",
          "any", _check_closed_axioms),
    Claim("trivial-iff-singleton", "trivial-remark",
          "the SH-topology is indiscrete iff X has exactly one point",
          "any", _check_trivial_singleton),
    Claim("sh-t0", "separation-lemma",
          "the SH-topology is T0",
          "any", _check_t0),
    Claim("t1-iff-antichain", "separation-lemma",
          "T1 (in either topology) iff every nonzero sh element is minimal",
          "any", _check_t1_antichain),
    Claim("hausdorff-cover-pair", "separation-lemma",
          "hausdorff forces a covering pair of closed sets avoiding any two points",
          "any", _check_hausdorff_cover),
    Claim("semi-sh-closed-order-iso", "quasicompact-proposition",
          "i -> v(i) is an order isomorphism from semi-sh elements onto closed sets",
          "any", _check_semi_sh_order_iso),
    Claim("w-base-generates", "w-base",
          "{v(i)} covers X, is intersection-closed, and generates the W-opens by union",
          "any", _check_w_base),
    Claim("isolated-iff-minimal", "isolated-minimal-lemma",
          "isolated points of any subset (W-topology) are exactly its minimal elements",
          "any", _check_isolated_minimal),
    Claim("isolated-set-open", "isolated-open-corollary",
          "the isolated points of any subset form a subspace-open set",
          "any", _check_isolated_open),
    Claim("nonempty-has-isolated", "scattered-lemma",
          "every nonempty subset has an isolated point (finite scatteredness)",
          "any", _check_scattered),
    Claim("derived-dimension-exists", "derived-dimension-exists",
          "the derivative filtration strictly decreases to empty and counts its strata",
          "any", _check_derived_exists),
    Claim("cb-levels-closed", "cb-levels-closed",
          "every derivative level is closed in the W-topology",
          "any", _check_levels_closed),
    Claim("strata-match-y-levels", "strata-proposition",
          "Y_alpha minus bottom equals the union of strata S_0..S_alpha",
          "any", _check_strata_match),
    Claim("dimension-gap", "dimension-gap-theorem",
          "derived dimension = dclk dimension + 1 (never a nonzero limit stage here)",
          "distributive", _check_dimension_gap, observe_outside=True),
)


def get_claim(claim: str | Claim) -> Claim:
    if isinstance(claim, Claim):
        return claim
    for c in REGISTRY:
        if c.id == claim:
            return c
    raise KeyError(f"no claim registered under {claim!r}")


def registry_problems() -> list[str]:
    """Self-test: unique ids, known topics, every topic covered."""
    out = []
    ids = [c.id for c in REGISTRY]
    if len(set(ids)) != len(ids):
        out.append("duplicate claim ids")
    if len(set(TOPICS)) != len(TOPICS):
        out.append("duplicate topics")
    used = {c.topic for c in REGISTRY}
    for t in TOPICS:
        if t not in used:
            out.append(f"topic {t} has no claim")
    for c in REGISTRY:
        if c.topic not in TOPICS:
            out.append(f"claim {c.id} uses unknown topic {c.topic}")
        if c.hypothesis not in ("any", "modular", "distributive"):
            out.append(f"claim {c.id} has unknown hypothesis {c.hypothesis}")
    return out


# ---------------------------------------------------------------------------
# corpus runs


@dataclass(frozen=True)
class CorpusConfig:
    """What to run the suite on; fully determines the run."""

    exhaustive_max: int | None = 5
    specs: tuple[str, ...] = ()
    random_count: int = 0
    random_size: int = 8
    seed: int = 0
    distinct: bool = True

    def describe(self) -> dict:
        return {
            "exhaustive_max": self.exhaustive_max,
            "specs": list(self.specs),
            "random_count": self.random_count,
            "random_size": self.random_size,
            "seed": self.seed,
            "distinct": self.distinct,
        }


def build_corpus(config: CorpusConfig) -> Iterator[tuple[str, FiniteLattice]]:
    if config.exhaustive_max:
        counters: dict[int, int] = {}
        for lat in generators.enumerate_lattices(config.exhaustive_max, config.distinct):
            k = counters.get(lat.n, 0)
            counters[lat.n] = k + 1
            yield f"enum:n={lat.n}#{k}", lat
    for spec in config.specs:
        yield spec, generators.parse_spec(spec)
    for i in range(config.random_count):
        seed_i = config.seed * 7919 + i
        yield (
            f"random:size={config.random_size},seed={seed_i}",
            generators.random_lattice(config.random_size, seed_i),
        )


@dataclass
class ClaimTally:
    claim_id: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    observed_checked: int = 0
    observed_holds: int = 0
    observed_fails: int = 0


@dataclass
class Witness:
    claim_id: str
    corpus_id: str
    n: int
    detail: str
    doc: dict


@dataclass
class VerificationRun:
    config: CorpusConfig
    lattice_count: int
    tallies: dict[str, ClaimTally]
    witnesses: dict[str, Witness] = field(default_factory=dict)

    @property
    def asserted_failures(self) -> int:
        return sum(t.failed for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.asserted_failures == 0

    def to_json_dict(self) -> dict:
        corpus = self.config.describe()
        corpus["lattices"] = self.lattice_count
        claims = []
        for c in REGISTRY:
            t = self.tallies[c.id]
            w = self.witnesses.get(c.id)
            claims.append({
                "id": c.id,
                "topic": c.topic,
                "statement": c.statement,
                "hypothesis": c.hypothesis,
                "checked": t.checked,
                "passed": t.passed,
                "failed": t.failed,
                "skipped": t.skipped,
                "observed": {
                    "checked": t.observed_checked,
                    "holds": t.observed_holds,
                    "fails": t.observed_fails,
                },
                "witness": None if w is None else {
                    "corpus_id": w.corpus_id,
                    "n": w.n,
                    "detail": w.detail,
                    "lattice": w.doc,
                },
            })
        return {
            "corpus": corpus,
            "claims": claims,
            "asserted_failures": self.asserted_failures,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        head = self.config.describe()
        lines = [
            f"corpus: lattices={self.lattice_count} exhaustive<={head['exhaustive_max']} "
            f"specs={len(head['specs'])} random={head['random_count']} seed={head['seed']}",
            "",
            f"{'claim':<34}{'hyp':<14}{'checked':>8}{'pass':>7}{'fail':>7}"
            f"{'skip':>7}{'obs+':>7}{'obs-':>7}",
        ]
        for c in REGISTRY:
            t = self.tallies[c.id]
            lines.append(
                f"{c.id:<34}{c.hypothesis:<14}{t.checked:>8}{t.passed:>7}{t.failed:>7}"
                f"{t.skipped:>7}{t.observed_holds:>7}{t.observed_fails:>7}"
            )
        lines.append("")
        for c in REGISTRY:
            w = self.witnesses.get(c.id)
            if w is not None:
                lines.append(f"FAIL {c.id} on {w.corpus_id} (n={w.n}): {w.detail}")
        lines.append(f"result: {'OK' if self.ok else 'ASSERTED CLAIM FAILURES'}")
        return "\n".join(lines)


def run_suite(config: CorpusConfig) -> VerificationRun:
    """Execute every registered claim over the corpus the config describes."""
    problems = registry_problems()
    if problems:
        raise RuntimeError("claim registry is inconsistent: " + "; ".join(problems))
    tallies = {c.id: ClaimTally(c.id) for c in REGISTRY}
    witnesses: dict[str, Witness] = {}
    count = 0
    for corpus_id, lat in build_corpus(config):
        count += 1
        ctx = ClaimContext(lat, spec=corpus_id, seed=config.seed)
        for claim in REGISTRY:
            t = tallies[claim.id]
            if hypothesis_matches(claim, lat):
                res = run_claim(claim, ctx)
                t.checked += 1
                if res.ok:
                    t.passed += 1
                else:
                    t.failed += 1
                    old = witnesses.get(claim.id)
                    if old is None or lat.n < old.n:
                        witnesses[claim.id] = Witness(
                            claim.id, corpus_id, lat.n, res.witness or "", to_doc(lat)
                        )
            elif claim.observe_outside:
                res = run_claim(claim, ctx)
                t.observed_checked += 1
                if res.ok:
                    t.observed_holds += 1
                else:
                    t.observed_fails += 1
            else:
                t.skipped += 1
    return VerificationRun(config, count, tallies, witnesses)


def verdicts_for(bundle: AnalysisBundle) -> tuple[list[dict], list[dict]]:
    """Per-claim verdicts for a single lattice (used by analysis reports)."""
    ctx = ClaimContext(bundle.lattice, spec=bundle.spec, seed=0)
    # reuse anything the bundle already computed
    ctx._sh, ctx._shtop, ctx._wtop = bundle._sh, bundle._shtop, bundle._wtop
    ctx._cb, ctx._yf = bundle._cb, bundle._yf
    verdicts: list[dict] = []
    observations: list[dict] = []
    for claim in REGISTRY:
        if hypothesis_matches(claim, ctx.lattice):
            res = run_claim(claim, ctx)
            entry = {"claim": claim.id, "status": "pass" if res.ok else "fail"}
            if res.witness:
                entry["witness"] = res.witness
            verdicts.append(entry)
        elif claim.observe_outside:
            res = run_claim(claim, ctx)
            verdicts.append({"claim": claim.id, "status": "observed"})
            observations.append({
                "claim": claim.id,
                "hypothesis": claim.hypothesis,
                "holds": res.ok,
                **({"witness": res.witness} if res.witness else {}),
            })
        else:
            verdicts.append({"claim": claim.id, "status": "skipped"})
    return verdicts, observations


# ---------------------------------------------------------------------------
# witness minimization


def minimize_witness(lat: FiniteLattice, claim: str | Claim) -> FiniteLattice:
    """Greedily drop elements while the claim keeps failing.

    Candidate sublattices are induced suborders that still validate as
    bounded lattices.  Claims that are skipped outside their hypothesis
    class stay inside it during minimization; observe-outside claims are
    minimized on the raw check, so an observed counterexample shrinks to a
    smaller lattice that still fails it.  Raises ClaimActuallyPasses when
    the input is not a counterexample.
    """
    claim = get_claim(claim)

    def fails(l: FiniteLattice) -> bool:
        if not (claim.observe_outside or hypothesis_matches(claim, l)):
            return False
        return not run_claim(claim, ClaimContext(l, spec="minimize", seed=0)).ok

    if not fails(lat):
        raise ClaimActuallyPasses(claim.id)

    improved = True
    while improved:
        improved = False
        for e in range(lat.n):
            cand = _drop_element(lat, e)
            if cand is not None and fails(cand):
                lat = cand
                improved = True
                break
    return lat


def _drop_element(lat: FiniteLattice, e: int) -> FiniteLattice | None:
    if lat.n <= 1:
        return None
    keep = [i for i in range(lat.n) if i != e]
    renum = {old: new for new, old in enumerate(keep)}
    pairs = [
        (renum[a], renum[b])
        for a in keep
        for b in keep
        if a != b and lat.le(a, b)
    ]
    try:
        return validate(len(keep), pairs, relation="le",
                        labels=[lat.labels[i] for i in keep])
    except LatticeValidationError:
        return None
