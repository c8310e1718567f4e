"""ASCII and SVG pictures of shapes.

SVG output is byte-deterministic: coordinates are integers and element
order follows the canonical encoding of the shape.
"""
from __future__ import annotations

from .model import ArcTree, Family, PlanarTree, StaircaseTiling, ensure_valid

CELL = 24
PAD = 8


# ------------------------------------------------------------------- ascii


def ascii_tiling(s: StaircaseTiling) -> str:
    n = s.n
    if n == 0:
        return ""
    owner = {}
    for k, rect in enumerate(s.rects):
        for r in range(rect.r1, rect.r2 + 1):
            for c in range(rect.c1, rect.c2 + 1):
                owner[(r, c)] = k
    grid = [[" "] * (4 * n + 1) for _ in range(2 * n + 1)]

    def hline(y, x):
        grid[y][x] = "+"
        grid[y][x + 1:x + 4] = ["-"] * 3
        grid[y][x + 4] = "+"

    def vline(y, x):
        grid[y][x] = "+"
        grid[y + 1][x] = "|"
        grid[y + 2][x] = "+"

    for (r, c), k in owner.items():
        y, x = 2 * (r - 1), 4 * (c - 1)
        if owner.get((r - 1, c)) != k:
            hline(y, x)
        if owner.get((r + 1, c)) != k:
            hline(y + 2, x)
        if owner.get((r, c - 1)) != k:
            vline(y, x)
        if owner.get((r, c + 1)) != k:
            vline(y, x + 4)
    return "\n".join("".join(row).rstrip() for row in grid)


def ascii_tree(t) -> str:
    if t is None:
        return "~"
    lines = []

    def walk(node, depth, tag):
        lines.append("  " * depth + (f"{tag} " if tag else "") + "o")
        for child_tag, child in (("L", node.left), ("M", node.mid), ("R", node.right)):
            if child is not None:
                walk(child, depth + 1, child_tag)

    walk(t, 0, "")
    return "\n".join(lines)


def _arc_levels(a: ArcTree) -> list[int]:
    """Height of each arc: one more than the tallest arc strictly under it."""
    level = [0] * a.n
    for p in sorted(range(a.n), key=lambda p: a.rend[p] - p):
        inner = [level[q] for q in range(p + 1, a.rend[p])]
        level[p] = 1 + max(inner, default=0)
    return level


def ascii_arcs(a: ArcTree) -> str:
    n = a.n
    level = _arc_levels(a)
    top = max(level, default=0)
    width = 4 * n + 1
    rows = [[" "] * width for _ in range(top)]
    for p, q in enumerate(a.rend):
        y = top - level[p]
        x1, x2 = 4 * p + 1, 4 * q - 1
        rows[y][x1] = "+"
        rows[y][x2] = "+"
        for x in range(x1 + 1, x2):
            if rows[y][x] == " ":
                rows[y][x] = "-"
        for yy in range(y + 1, top):
            rows[yy][x1] = "|"
            rows[yy][x2] = "|"
    points = [" "] * width
    for p in range(n + 1):
        points[4 * p] = "o"
    return "\n".join("".join(row).rstrip() for row in rows + [points])


def ascii_binary(b) -> str:
    if b is None:
        return "."
    lines = []

    def walk(node, depth, tag):
        label = "." if node is None else "o"
        lines.append("  " * depth + (f"{tag} " if tag else "") + label)
        if node is not None:
            walk(node.left, depth + 1, "L")
            walk(node.right, depth + 1, "R")

    walk(b, 0, "")
    return "\n".join(lines)


def ascii_planar(p: PlanarTree) -> str:
    lines = []

    def walk(node, depth):
        lines.append("  " * depth + "o")
        for child in node.children:
            walk(child, depth + 1)

    walk(p, 0)
    return "\n".join(lines)


# --------------------------------------------------------------------- svg


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def svg_tiling(s: StaircaseTiling) -> str:
    n = max(s.n, 1)
    body = []
    for rect in s.rects:
        x = PAD + (rect.c1 - 1) * CELL
        y = PAD + (rect.r1 - 1) * CELL
        body.append(
            f'<rect x="{x}" y="{y}" width="{rect.width * CELL}" height="{rect.height * CELL}" '
            'fill="#dde6f0" stroke="black" stroke-width="2"/>'
        )
    side = 2 * PAD + n * CELL
    return _svg(side, side, body)


def _layout(children_of, root):
    """Leaves get consecutive x slots, parents sit over the middle of their children."""
    pos = {}
    counter = [0]

    def place(v, depth):
        kids = children_of(v)
        if not kids:
            x = counter[0]
            counter[0] += 2
        else:
            xs = [place(k, depth + 1) for k in kids]
            x = (xs[0] + xs[-1]) // 2
        pos[v] = (x, depth)
        return x

    place(root, 0)
    return pos


def _svg_tree(edges, pos) -> str:
    unit = CELL // 2
    width = 2 * PAD + unit * (max(x for x, _ in pos.values()) + 1)
    height = 2 * PAD + CELL * (max(d for _, d in pos.values()) + 1)
    body = []

    def xy(v):
        x, d = pos[v]
        return PAD + unit * x + unit // 2, PAD + CELL * d + CELL // 2

    for u, v in edges:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>')
    for v in pos:
        x, y = xy(v)
        body.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
    return _svg(width, height, body)


def svg_tree(t) -> str:
    if t is None:
        return _svg(2 * PAD, 2 * PAD, [])
    nodes = {}

    def index(node, key):
        nodes[key] = node
        for tag, child in (("L", node.left), ("M", node.mid), ("R", node.right)):
            if child is not None:
                index(child, key + tag)

    index(t, "r")

    def kids(v):
        return [v + tag for tag in "LMR" if v + tag in nodes]

    pos = {}
    counter = [0]

    def place(v, depth):
        ks = kids(v)
        if not ks:
            x = counter[0]
            counter[0] += 2
        elif len(ks) == 2:
            xs = [place(k, depth + 1) for k in ks]
            x = (xs[0] + xs[1]) // 2
        else:
            # a lone child leans the way its slot points
            x = place(ks[0], depth + 1) + {"L": 1, "M": 0, "R": -1}[ks[0][-1]]
        pos[v] = (x, depth)
        return x

    place("r", 0)
    lo = min(x for x, _ in pos.values())
    pos = {v: (x - lo, d) for v, (x, d) in pos.items()}
    edges = [(v, c) for v in nodes for c in kids(v)]
    return _svg_tree(edges, pos)


def svg_arcs(a: ArcTree) -> str:
    n = a.n
    width = 2 * PAD + CELL * max(n, 1)
    radius = CELL * max(n, 1) // 2
    base = PAD + radius + 4
    body = []
    for p, q in enumerate(a.rend):
        x1, x2 = PAD + CELL * p, PAD + CELL * q
        rr = (x2 - x1) // 2
        body.append(
            f'<path d="M {x1} {base} A {rr} {rr} 0 0 1 {x2} {base}" fill="none" '
            'stroke="black" stroke-width="2"/>'
        )
    for p in range(n + 1):
        body.append(f'<circle cx="{PAD + CELL * p}" cy="{base}" r="4" fill="black"/>')
    return _svg(width, base + PAD, body)


def svg_binary(b) -> str:
    nodes = {}

    def kids(v):
        node = nodes[v]
        if node is None:
            return []
        return [v + "0", v + "1"]

    def index(node, key):
        nodes[key] = node
        if node is not None:
            index(node.left, key + "0")
            index(node.right, key + "1")

    index(b, "r")
    pos = _layout(kids, "r")
    edges = [(v, c) for v in nodes for c in kids(v)]
    return _svg_tree(edges, pos)


def svg_planar(p: PlanarTree) -> str:
    nodes = {}

    def index(node, key):
        nodes[key] = node
        for i, c in enumerate(node.children):
            index(c, f"{key}.{i}")

    index(p, "r")

    def kids(v):
        return [f"{v}.{i}" for i in range(len(nodes[v].children))]

    pos = _layout(kids, "r")
    edges = [(v, c) for v in nodes for c in kids(v)]
    return _svg_tree(edges, pos)


_ASCII = {
    Family.T: ascii_tree,
    Family.S: ascii_tiling,
    Family.A: ascii_arcs,
    Family.B: ascii_binary,
    Family.P: ascii_planar,
}
_SVG = {
    Family.T: svg_tree,
    Family.S: svg_tiling,
    Family.A: svg_arcs,
    Family.B: svg_binary,
    Family.P: svg_planar,
}


def render(family, value, mode: str = "ascii") -> str:
    family = Family(family)
    ensure_valid(family, value)
    if mode == "ascii":
        return _ASCII[family](value)
    if mode == "svg":
        return _SVG[family](value)
    raise ValueError(f"unknown render mode {mode!r}")
