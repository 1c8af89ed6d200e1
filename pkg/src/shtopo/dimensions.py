"""Dual-classical Krull dimension and the end-to-end analysis report.

The Y-filtration stratifies the sh elements: an element enters level
``alpha`` once every sh element strictly below it entered an earlier
level, starting from ``Y_-1 = {bottom}``.  Its stabilization index is the
dual-classical Krull dimension (``-1`` when bottom is the only sh
element).  On finite posets this equals longest-chain-length minus one,
which the package keeps as an independent oracle.

``analyze`` chains generators -> sh analysis -> topologies -> dimensions
-> claim verdicts into one serializable report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import generators
from .hollow import ShAnalysis, sh_set
from .lattice import FiniteLattice
from .topology import CBFiltration, FiniteTopology, sh_topology, w_topology


@dataclass(frozen=True)
class YFiltration:
    """Ascending levels Y_0 ⊆ Y_1 ⊆ ... over the sh elements (bottom included
    in every level) and the stabilization index."""

    levels: tuple[frozenset[int], ...]
    dimension: int


def y_filtration(sh: ShAnalysis) -> YFiltration:
    """Level-by-level fixpoint over the sh elements.

    Y_0 collects bottom and the minimal nonzero sh elements; each later
    level admits the elements whose strictly-smaller sh elements all sit in
    the previous one.  Dimension is the first index whose level is all of
    the sh set, or -1 when there is nothing beyond bottom.
    """
    lat = sh.lattice
    y = sh.sh_elements
    prev = frozenset({lat.bottom})
    levels: list[frozenset[int]] = []
    while True:
        cur = frozenset(
            l for l in y
            if all(m in prev for m in y if m != l and lat.lt(m, l))
        )
        levels.append(cur)
        if cur == y:
            break
        prev = cur
    dimension = -1 if not sh.x_points else len(levels) - 1
    return YFiltration(tuple(levels), dimension)


def dclk_dimension_oracle(sh: ShAnalysis) -> int:
    """Longest chain of nonzero sh elements, minus one (-1 when empty).

    Independent of the filtration; on finite posets the two must agree.
    """
    return sh.lattice.longest_chain_length(sh.x_points) - 1


@dataclass
class DimensionReport:
    """Everything the pipeline knows about one lattice."""

    spec: str
    n: int
    labels: tuple[str, ...]
    sh_count: int
    x_points: list[str]
    dclk_dim: int
    derived_dim: int
    distributive: bool
    modular: bool
    sh_ring: bool
    semi_sh_ring: bool
    y_levels: list[list[str]]
    strata: list[list[str]]
    non_sh_witnesses: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    observations: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec,
            "n": self.n,
            "labels": list(self.labels),
            "sh_count": self.sh_count,
            "x_points": self.x_points,
            "dclk_dim": self.dclk_dim,
            "derived_dim": self.derived_dim,
            "distributive": self.distributive,
            "modular": self.modular,
            "sh_ring": self.sh_ring,
            "semi_sh_ring": self.semi_sh_ring,
            "y_levels": self.y_levels,
            "strata": self.strata,
            "non_sh_witnesses": self.non_sh_witnesses,
            "verdicts": self.verdicts,
            "observations": self.observations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        yes = lambda b: "yes" if b else "no"
        lines = [
            f"lattice      : {self.spec}",
            f"elements     : {self.n}",
            f"distributive : {yes(self.distributive)}   modular: {yes(self.modular)}",
            f"sh-ring      : {yes(self.sh_ring)}   semi-sh-ring: {yes(self.semi_sh_ring)}",
            f"X (nonzero sh): {{{', '.join(self.x_points)}}}  ({self.sh_count} sh incl. bottom)",
            f"dclk dim     : {self.dclk_dim}",
            f"derived dim  : {self.derived_dim}  (W-topology Cantor-Bendixson)",
        ]
        for i, s in enumerate(self.strata):
            lines.append(f"  S_{i} = {{{', '.join(s)}}}")
        for i, lv in enumerate(self.y_levels):
            lines.append(f"  Y_{i} = {{{', '.join(lv)}}}")
        for w in self.non_sh_witnesses:
            a, b = w["pair"]
            lines.append(
                f"  not sh: {w['element']} sits inside {a} v {b} but inside neither"
            )
        counts: dict[str, int] = {}
        for v in self.verdicts:
            counts[v["status"]] = counts.get(v["status"], 0) + 1
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        lines.append(f"claims       : {summary}")
        for v in self.verdicts:
            if v["status"] == "fail":
                lines.append(f"  FAIL {v['claim']}: {v.get('witness', '')}")
        for o in self.observations:
            lines.append(
                f"  observed outside hypothesis ({o['hypothesis']}): "
                f"{o['claim']} -> {'holds' if o['holds'] else 'fails'}"
            )
        return "\n".join(lines)


class AnalysisBundle:
    """Shared intermediate results for one lattice (lazy, cached)."""

    def __init__(self, lattice: FiniteLattice, spec: str = "explicit"):
        self.lattice = lattice
        self.spec = spec
        self._sh: ShAnalysis | None = None
        self._shtop: FiniteTopology | None = None
        self._wtop: FiniteTopology | None = None
        self._cb: CBFiltration | None = None
        self._yf: YFiltration | None = None

    @property
    def sh(self) -> ShAnalysis:
        if self._sh is None:
            self._sh = sh_set(self.lattice)
        return self._sh

    @property
    def shtop(self) -> FiniteTopology:
        if self._shtop is None:
            self._shtop = sh_topology(self.sh)
        return self._shtop

    @property
    def wtop(self) -> FiniteTopology:
        if self._wtop is None:
            self._wtop = w_topology(self.sh)
        return self._wtop

    @property
    def cb(self) -> CBFiltration:
        if self._cb is None:
            self._cb = self.wtop.cantor_bendixson()
        return self._cb

    @property
    def yf(self) -> YFiltration:
        if self._yf is None:
            self._yf = y_filtration(self.sh)
        return self._yf

    @property
    def dclk_dim(self) -> int:
        return self.yf.dimension

    @property
    def derived_dim(self) -> int:
        return self.cb.derived_dimension


def analyze(
    spec: str | FiniteLattice | AnalysisBundle, with_verdicts: bool = True
) -> DimensionReport:
    """Run the full pipeline on a spec string, a lattice, or a prepared bundle."""
    if isinstance(spec, AnalysisBundle):
        bundle = spec
    elif isinstance(spec, FiniteLattice):
        bundle = AnalysisBundle(spec)
    else:
        bundle = AnalysisBundle(generators.parse_spec(spec), spec=spec)
    lat, sh = bundle.lattice, bundle.sh
    labels = lat.labels

    def names(els) -> list[str]:
        return sorted(labels[e] for e in els)

    report = DimensionReport(
        spec=bundle.spec,
        n=lat.n,
        labels=labels,
        sh_count=len(sh.sh_elements),
        x_points=names(sh.x_points),
        dclk_dim=bundle.dclk_dim,
        derived_dim=bundle.derived_dim,
        distributive=lat.is_distributive,
        modular=lat.is_modular,
        sh_ring=sh.is_sh_ring(),
        semi_sh_ring=sh.is_semi_sh_ring(),
        y_levels=[names(lv) for lv in bundle.yf.levels],
        strata=[names(s) for s in bundle.cb.strata],
        non_sh_witnesses=[
            {"element": labels[e], "pair": [labels[a], labels[b]]}
            for e, (a, b) in sorted(sh.witnesses.items(), key=lambda kv: labels[kv[0]])
        ],
    )
    if with_verdicts:
        from . import verify  # deferred: verify builds on this module

        report.verdicts, report.observations = verify.verdicts_for(bundle)
    return report
