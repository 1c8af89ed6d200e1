"""Hasse/strata/topology rendering: DOT text and matplotlib figures.

DOT output draws only cover edges (the transitive reduction); sh elements
are drawn with a double border, strata get one fill color per level.
Image paths (.png/.svg/.pdf) go through matplotlib with the same layout
conventions; everything is deterministic.
"""

from __future__ import annotations

from .dimensions import AnalysisBundle
from .lattice import FiniteLattice

_STRATUM_COLORS = (
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
    "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3",
)

IMAGE_SUFFIXES = (".png", ".svg", ".pdf")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _stratum_of(bundle: AnalysisBundle) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, s in enumerate(bundle.cb.strata):
        for e in s:
            out[e] = i
    return out


def hasse_dot(bundle: AnalysisBundle, with_strata: bool = False) -> str:
    """DOT digraph of the lattice order; edges point from lower to upper."""
    lat = bundle.lattice
    sh = bundle.sh
    strata = _stratum_of(bundle) if with_strata else {}
    lines = [
        "digraph hasse {",
        "  rankdir=BT;",
        "  node [shape=box, style=filled, fillcolor=white];",
        f"  label={_quote(bundle.spec + (' (strata)' if with_strata else ''))};",
    ]
    if with_strata and not bundle.cb.strata:
        lines.append(f"  comment={_quote('no strata: empty point set')};")
    for e in range(lat.n):
        attrs = [f"label={_quote(lat.label_of(e))}"]
        if sh.sh_flags[e]:
            attrs.append("peripheries=2")
        if e in strata:
            color = _STRATUM_COLORS[strata[e] % len(_STRATUM_COLORS)]
            attrs.append(f"fillcolor={_quote(color)}")
            attrs.append(f"xlabel={_quote('S_' + str(strata[e]))}")
        lines.append(f"  n{e} [{', '.join(attrs)}];")
    for a, b in lat.cover_pairs:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def topology_dot(bundle: AnalysisBundle) -> str:
    """DOT inclusion diagram of the SH-topology's closed sets."""
    lat = bundle.lattice
    fam = bundle.shtop.canonical_closed()
    names = [
        "{" + ",".join(sorted(lat.label_of(e) for e in c)) + "}" for c in fam
    ]
    lines = [
        "digraph closed_sets {",
        "  rankdir=BT;",
        "  node [shape=ellipse];",
        f"  label={_quote(bundle.spec + ' SH-closed sets')};",
    ]
    for i, name in enumerate(names):
        lines.append(f"  c{i} [label={_quote(name)}];")
    for i, ci in enumerate(fam):
        for j, cj in enumerate(fam):
            if i != j and ci < cj:
                if not any(ci < fam[k] < cj for k in range(len(fam))):
                    lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layout(lat: FiniteLattice) -> dict[int, tuple[float, float]]:
    # y = height (longest chain from bottom), x = even spread within a level
    height = {}
    order = sorted(range(lat.n), key=lambda e: len(lat.down_set(e)))
    for e in order:
        below = [height[f] for f in lat.down_set(e) if f != e and f in height]
        height[e] = 1 + max(below, default=-1)
    ranks: dict[int, list[int]] = {}
    for e in range(lat.n):
        ranks.setdefault(height[e], []).append(e)
    pos = {}
    for h, row in ranks.items():
        row.sort()
        for i, e in enumerate(row):
            pos[e] = (i - (len(row) - 1) / 2.0, float(h))
    return pos


def render_hasse_figure(bundle: AnalysisBundle, path: str, with_strata: bool = True) -> None:
    """Draw the Hasse diagram to an image file (Agg backend, no display)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lat = bundle.lattice
    sh = bundle.sh
    strata = _stratum_of(bundle) if with_strata else {}
    pos = _layout(lat)

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for a, b in lat.cover_pairs:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        ax.plot([xa, xb], [ya, yb], color="0.6", lw=1.0, zorder=1)
    for e in range(lat.n):
        x, y = pos[e]
        if e in strata:
            color = _STRATUM_COLORS[strata[e] % len(_STRATUM_COLORS)]
        elif sh.sh_flags[e]:
            color = "#dddddd"
        else:
            color = "white"
        ax.scatter([x], [y], s=640, facecolor=color, edgecolor="black",
                   linewidths=2.0 if sh.sh_flags[e] else 0.8, zorder=2)
        label = lat.label_of(e)
        if e in strata:
            label += f"\nS{strata[e]}"
        ax.annotate(label, (x, y), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_title(bundle.spec)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
