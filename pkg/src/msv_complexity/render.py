"""ASCII and TikZ pictures of a permutation's diagrams, in matrix coordinates."""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import CellSet, bundle
from .graph_cone import graph_of
from .perm_core import Permutation

__all__ = ["LAYERS", "RenderSpec", "render", "render_ascii", "render_tikz"]

LAYERS = (
    "dots",
    "lasers",
    "opposite_rothe",
    "essential",
    "dominant",
    "southwest",
    "l",
    "l_prime",
    "graph",
)

# highest priority first; a cell shows the first layer that contains it
_ASCII_MARKS = {
    "dots": "●",
    "essential": "E",
    "dominant": "D",
    "opposite_rothe": "#",
    "l_prime": "P",
    "l": "L",
    "southwest": "s",
}
_PRIORITY = ("dots", "essential", "dominant", "opposite_rothe", "l_prime", "l", "southwest")

_TIKZ_FILLS = {
    "southwest": "green!15",
    "l": "orange!25",
    "l_prime": "yellow!40",
    "opposite_rothe": "cyan!20",
    "dominant": "blue!30",
    "essential": "red!30",
}
_FILL_ORDER = ("southwest", "l", "l_prime", "opposite_rothe", "dominant", "essential")


@dataclass(frozen=True)
class RenderSpec:
    target: str = "ascii"
    show: tuple[str, ...] = ("dots", "lasers", "opposite_rothe")
    cell_labels: bool = False

    def __post_init__(self):
        if self.target not in ("ascii", "tikz"):
            raise ValueError(f"unknown render target {self.target!r}")
        if not self.show:
            raise ValueError("select at least one layer")
        bad = [s for s in self.show if s not in LAYERS]
        if bad:
            raise ValueError(f"unknown layers {bad}; choose from {', '.join(LAYERS)}")


def _layer_sets(w: Permutation, show) -> dict[str, CellSet]:
    b = bundle(w)
    n = w.n
    sets = {
        "dots": CellSet.from_cells(n, ((x, j) for j, x in enumerate(w.word, start=1))),
        "opposite_rothe": b.opposite_rothe,
        "essential": b.essential,
        "dominant": b.dominant,
        "southwest": b.southwest,
        "l": b.l_diagram,
        "l_prime": b.l_prime,
    }
    return {k: v for k, v in sets.items() if k in show}


def _laser_marks(w: Permutation) -> dict[tuple[int, int], str]:
    marks: dict[tuple[int, int], set[str]] = {}
    n = w.n
    for j, r in enumerate(w.word, start=1):
        for i in range(1, r):
            marks.setdefault((i, j), set()).add("|")
        for c in range(j + 1, n + 1):
            marks.setdefault((r, c), set()).add("-")
    return {cell: "+" if len(m) == 2 else m.pop() for cell, m in marks.items()}


def _graph_lines(w: Permutation) -> list[str]:
    g = graph_of(bundle(w).l_diagram)
    lines = [f"G({w.one_line()}): rows {list(g.rows)}, cols {[f'{c}̄' for c in g.cols]}"]
    lines += [f"  {a} -> {b}̄" for a, b in g.edges]
    return lines


def render_ascii(w: Permutation, spec: RenderSpec) -> str:
    n = w.n
    layers = _layer_sets(w, spec.show)
    lasers = _laser_marks(w) if "lasers" in spec.show else {}
    width = len(str(n))
    out = []
    grid_layers = [s for s in spec.show if s != "graph"]
    if grid_layers:
        out.append(" " * (width + 1) + " ".join(str(c % 10) for c in range(1, n + 1)))
        for i in range(1, n + 1):
            cells = []
            for j in range(1, n + 1):
                mark = "."
                for name in _PRIORITY:
                    if name in layers and (i, j) in layers[name]:
                        mark = _ASCII_MARKS[name]
                        break
                else:
                    mark = lasers.get((i, j), ".")
                cells.append(mark)
            out.append(f"{i:>{width}} " + " ".join(cells))
        legend = [f"{_ASCII_MARKS[k]}={k}" for k in _PRIORITY if k in layers]
        if lasers:
            legend.append("|-+=lasers")
        out.append("legend: " + " ".join(legend))
        if spec.cell_labels:
            for name in _PRIORITY:
                if name in layers and name != "dots":
                    out.append(f"{name}: {layers[name].cells()}")
    if "graph" in spec.show:
        out.extend(_graph_lines(w))
    return "\n".join(out) + "\n"


def _fmt(x: float) -> str:
    return f"{x:g}"


def render_tikz(w: Permutation, spec: RenderSpec, unit: float = 0.5) -> str:
    """A standalone LaTeX document with one tikzpicture."""
    n = w.n
    layers = _layer_sets(w, spec.show)
    side = n * unit

    def box(i, j):
        x0, y0 = (j - 1) * unit, (n - i) * unit
        return f"({_fmt(x0)}, {_fmt(y0)}) rectangle ({_fmt(x0 + unit)}, {_fmt(y0 + unit)})"

    def centre(i, j):
        return f"({_fmt((j - 0.5) * unit)}, {_fmt((n - i + 0.5) * unit)})"

    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[scale=1.3]",
    ]
    for name in _FILL_ORDER:
        if name in layers and layers[name]:
            lines.append(f"\\fill[{_TIKZ_FILLS[name]}]")
            lines += [f"  {box(i, j)}" for i, j in layers[name]]
            lines[-1] += ";"
    lines.append(f"\\draw[step={_fmt(unit)}] (0,0) grid ({_fmt(side)},{_fmt(side)});")
    if spec.cell_labels:
        shaded = set()
        for name in _FILL_ORDER:
            if name in layers:
                shaded.update(layers[name])
        for i, j in sorted(shaded):
            lines.append(f"\\node at {centre(i, j)} {{\\scriptsize $({i},{j})$}};")
    if "dots" in spec.show or "lasers" in spec.show:
        lines.append(r"\draw[draw=red]")
        for j, i in enumerate(w.word, start=1):
            x = _fmt((j - 0.5) * unit)
            y = _fmt((n - i + 0.5) * unit)
            dot = r"node {$\bullet$}" if "dots" in spec.show else ""
            if "lasers" in spec.show:
                lines.append(f"  ({x}, {_fmt(side)}) -- ({x}, {y}) {dot} -- ({_fmt(side)}, {y})")
            else:
                lines.append(f"  ({x}, {y}) {dot}")
        lines[-1] += ";"
    if "graph" in spec.show:
        g = graph_of(bundle(w).l_diagram)
        gx = side + 1.0
        for k, a in enumerate(g.rows):
            lines.append(f"\\node[circle,draw,inner sep=1pt] (r{a}) at ({_fmt(gx)}, {_fmt(side - k * unit)}) {{${a}$}};")
        for k, b in enumerate(g.cols):
            lines.append(
                f"\\node[circle,draw,inner sep=1pt] (c{b}) at ({_fmt(gx + 2)}, {_fmt(side - k * unit)}) {{$\\overline{{{b}}}$}};"
            )
        for a, b in g.edges:
            lines.append(f"\\draw[->] (r{a}) -- (c{b});")
    lines += [r"\end{tikzpicture}", r"\end{document}"]
    return "\n".join(lines) + "\n"


def render(w: Permutation, spec: RenderSpec) -> str:
    if spec.target == "tikz":
        return render_tikz(w, spec)
    return render_ascii(w, spec)
