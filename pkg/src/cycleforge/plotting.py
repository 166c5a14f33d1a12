"""Static SVG phase portraits.  Output is byte-stable for identical input."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams["svg.hashsalt"] = "cycleforge"

_TAG_STYLE = {
    "HyperbolicSaddle": ("x", "tab:gray"),
    "StableFocus": ("o", "tab:blue"),
    "StableNode": ("s", "tab:blue"),
    "UnstableFocus": ("o", "tab:red"),
    "UnstableNode": ("s", "tab:red"),
    "WeakFocusOrCenter": ("D", "tab:purple"),
    "Degenerate": ("^", "black"),
}


def phase_portrait(path: str | Path, cycles: Iterable = (), trajectories: Iterable = (),
                   equilibria: Iterable[tuple] = (), title: str = "") -> Path:
    """Write an SVG with cycles (solid: stable, dashed: unstable), trajectories and equilibria.

    ``equilibria`` holds ``(x, y, tag)`` triples.
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 5))
    for tr in trajectories:
        ax.plot(tr.x, tr.y, lw=0.6, color="0.6")
    for c in cycles:
        style = "-" if c.stability == "Stable" else "--"
        color = "tab:green" if c.stability == "Stable" else "tab:orange"
        ax.plot(c.curve[:, 0], c.curve[:, 1], style, lw=1.4, color=color,
                label=f"{c.stability.lower()} cycle, T={c.period:.3f}")
    for x, y, tag in equilibria:
        marker, color = _TAG_STYLE.get(tag, ("*", "black"))
        ax.plot([x], [y], marker, color=color, ms=6, label=f"{tag} ({x:.3g}, {y:.3g})")
    ax.set_xlabel("x (prey)")
    ax.set_ylabel("y (predator)")
    if title:
        ax.set_title(title)
    handles, labels = ax.get_legend_handles_labels()
    if handles:
        ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})
    plt.close(fig)
    return path
