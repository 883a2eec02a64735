"""Static SVG picture of the coupling-plane fan.

Self-contained markup, no scripts or external assets; output is a pure
function of the fan so renders are byte-identical across runs.
"""

from __future__ import annotations

import math

from .phases import Fan

#: fill per class (keyed by the smallest minimizing class of the sector)
_PALETTE = {
    1: "#a6cee3", 2: "#1f78b4", 3: "#b2df8a", 4: "#33a02c",
    5: "#fb9a99", 6: "#e31a1c", 7: "#fdbf6f", 8: "#ff7f00",
    9: "#cab2d6", 10: "#6a3d9a", 11: "#ffff99", 12: "#b15928",
}


def _unit(direction):
    dx, dy = direction
    h = math.hypot(dx, dy)
    return dx / h, dy / h


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _angle(direction) -> float:
    ux, uy = _unit(direction)
    return math.degrees(math.atan2(uy, ux)) % 360.0


def _classes(cs) -> str:
    return ",".join(str(c) for c in sorted(cs))


def render_fan(fan: Fan, size: int = 560) -> str:
    cx = cy = size / 2.0
    radius = size / 2.0 - 78.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
        '<style>text{font-family:monospace;font-size:12px;fill:#222}'
        '.axis{stroke:#999;stroke-width:1;stroke-dasharray:4 3}'
        '.ray{stroke:#333;stroke-width:1.4}</style>',
    ]

    def point(direction, r):
        ux, uy = _unit(direction)
        # SVG y grows downward, the coupling plane's y grows upward
        return cx + r * ux, cy - r * uy

    for sector in fan.sectors:
        x1, y1 = point(sector.start, radius)
        x2, y2 = point(sector.end, radius)
        span = (_angle(sector.end) - _angle(sector.start)) % 360.0
        large = 1 if span > 180.0 else 0
        color = _PALETTE[min(sector.interior_min)]
        parts.append(
            f'<path d="M {_fmt(cx)} {_fmt(cy)} L {_fmt(x1)} {_fmt(y1)} '
            f'A {_fmt(radius)} {_fmt(radius)} 0 {large} 0 '
            f'{_fmt(x2)} {_fmt(y2)} Z" fill="{color}" fill-opacity="0.55" '
            f'stroke="none"/>')

    parts.append(f'<line class="axis" x1="{_fmt(cx - radius)}" y1="{_fmt(cy)}" '
                 f'x2="{_fmt(cx + radius)}" y2="{_fmt(cy)}"/>')
    parts.append(f'<line class="axis" x1="{_fmt(cx)}" y1="{_fmt(cy - radius)}" '
                 f'x2="{_fmt(cx)}" y2="{_fmt(cy + radius)}"/>')

    for sector in fan.sectors:
        x1, y1 = point(sector.start, radius)
        parts.append(f'<line class="ray" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
                     f'x2="{_fmt(x1)}" y2="{_fmt(y1)}"/>')

    for sector in fan.sectors:
        # interior label at the sector's angular midpoint
        a0 = _angle(sector.start)
        span = (_angle(sector.end) - a0) % 360.0
        mid = math.radians(a0 + span / 2.0)
        lx = cx + 0.58 * radius * math.cos(mid)
        ly = cy - 0.58 * radius * math.sin(mid)
        parts.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" '
                     f'text-anchor="middle">{_classes(sector.interior_min)}'
                     '</text>')
        # boundary-ray label just outside the disc
        rx, ry = point(sector.start, radius + 14.0)
        anchor = "start" if rx >= cx else "end"
        dx, dy = sector.start
        parts.append(f'<text x="{_fmt(rx)}" y="{_fmt(ry)}" '
                     f'text-anchor="{anchor}">({dx},{dy}): '
                     f'{_classes(sector.start_ray_min)}</text>')

    parts.append(f'<text x="{_fmt(cx + radius + 6)}" y="{_fmt(cy - 6)}" '
                 'text-anchor="end">j1</text>')
    parts.append(f'<text x="{_fmt(cx + 8)}" y="{_fmt(cy - radius + 14)}" '
                 'text-anchor="start">j2</text>')
    parts.append(f'<text x="{_fmt(cx)}" y="22" text-anchor="middle">'
                 'minimizing ball classes by coupling direction</text>')
    parts.append(f'<text x="{_fmt(cx)}" y="{_fmt(size - 10)}" '
                 'text-anchor="middle">origin: all 12 classes tie</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
