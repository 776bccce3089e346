import xml.etree.ElementTree as ET

from .core import Cnat, VertexRole

_LEAF = "◉"
_INTERNAL = "●"
_EMPTY = "·"
_HORIZONTAL = "─"
_VERTICAL = "│"
_CROSSING = "┼"

_LEAF_COLOUR = "#1f77b4"
_INTERNAL_COLOUR = "black"
_GRID_COLOUR = "#cccccc"


def _draw(canvas: list[list[str]], y: int, x: int, stroke: str) -> None:
    current = canvas[y][x]
    if current in (_HORIZONTAL, _VERTICAL) and current != stroke:
        canvas[y][x] = _CROSSING
    elif current != _CROSSING:
        canvas[y][x] = stroke


def render_ascii(cnat: Cnat) -> str:
    """Text drawing of a CNAT with its tree edges; leaves are shown as ◉."""
    size = 2 * cnat.n - 1
    canvas = [[_EMPTY if y % 2 == 0 and x % 2 == 0 else " " for x in range(size)]
              for y in range(size)]

    for child, par in cnat.parent.items():
        py, px = 2 * (par.row - 1), 2 * (par.col - 1)
        cy, cx = 2 * (child.row - 1), 2 * (child.col - 1)
        if py == cy:
            for x in range(px + 1, cx):
                _draw(canvas, py, x, _HORIZONTAL)
        else:
            for y in range(py + 1, cy):
                _draw(canvas, y, px, _VERTICAL)

    for cell, role in cnat.roles.items():
        canvas[2 * (cell.row - 1)][2 * (cell.col - 1)] = _LEAF if role is VertexRole.LEAF else _INTERNAL

    return "\n".join("".join(line).rstrip() for line in canvas)


def render_svg(cnat: Cnat, cell_size: int = 40) -> str:
    """Static SVG drawing: light grid, tree edges, black internal vertices, blue leaves."""
    n = cnat.n
    size = n * cell_size
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(size),
        "height": str(size),
        "viewBox": f"0 0 {size} {size}",
    })

    for i in range(n + 1):
        offset = str(i * cell_size)
        ET.SubElement(svg, "line", x1=offset, y1="0", x2=offset, y2=str(size), stroke=_GRID_COLOUR)
        ET.SubElement(svg, "line", x1="0", y1=offset, x2=str(size), y2=offset, stroke=_GRID_COLOUR)

    def centre(cell) -> tuple[str, str]:
        return str((cell.col - 0.5) * cell_size), str((cell.row - 0.5) * cell_size)

    for child, par in sorted(cnat.parent.items()):
        (x1, y1), (x2, y2) = centre(par), centre(child)
        ET.SubElement(svg, "line", {"stroke-width": "2"},
                      x1=x1, y1=y1, x2=x2, y2=y2, stroke=_INTERNAL_COLOUR)

    for cell in sorted(cnat.dots):
        cx, cy = centre(cell)
        leaf = cnat.roles[cell] is VertexRole.LEAF
        ET.SubElement(svg, "circle", cx=cx, cy=cy, r=str(cell_size * 0.2),
                      fill=_LEAF_COLOUR if leaf else _INTERNAL_COLOUR)

    return ET.tostring(svg, encoding="unicode")
