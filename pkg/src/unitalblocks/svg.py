"""Minimal log-log scatter plot written directly as SVG."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

W, H, PAD = 640, 440, 60


def _ticks(lo: float, hi: float) -> list[int]:
    return list(range(math.floor(lo), math.ceil(hi) + 1))


def loglog_svg(points, lines=(), title: str = "", xlabel: str = "log2 n", ylabel: str = "log2 alpha") -> str:
    """Scatter of (x, y) with positive coordinates on log2 axes.

    ``lines`` holds (slope, intercept, label, colour) in log2 space.
    """
    pts = [(math.log2(x), math.log2(y)) for x, y in points if x > 0 and y > 0]
    if not pts:
        raise ValueError("nothing to plot")
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1 = min(xs) - 0.5, max(xs) + 0.5
    y0, y1 = min(ys) - 0.5, max(ys) + 0.5
    for slope, icpt, _, _ in lines:
        y0 = min(y0, slope * x0 + icpt, slope * x1 + icpt)
        y1 = max(y1, slope * x0 + icpt, slope * x1 + icpt)

    def sx(x):
        return PAD + (x - x0) / (x1 - x0) * (W - 2 * PAD)

    def sy(y):
        return H - PAD - (y - y0) / (y1 - y0) * (H - 2 * PAD)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
           f'<rect width="{W}" height="{H}" fill="white"/>',
           f'<text x="{W / 2:.1f}" y="24" text-anchor="middle" font-size="15">{escape(title)}</text>',
           f'<line x1="{PAD}" y1="{H - PAD}" x2="{W - PAD}" y2="{H - PAD}" stroke="black"/>',
           f'<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{H - PAD}" stroke="black"/>']
    for t in _ticks(x0, x1):
        if x0 <= t <= x1:
            out.append(f'<text x="{sx(t):.1f}" y="{H - PAD + 16}" text-anchor="middle" font-size="11">{t}</text>')
    for t in _ticks(y0, y1):
        if y0 <= t <= y1:
            out.append(f'<text x="{PAD - 8}" y="{sy(t) + 4:.1f}" text-anchor="end" font-size="11">{t}</text>')
    out.append(f'<text x="{W / 2:.1f}" y="{H - 16}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>')
    out.append(f'<text x="16" y="{H / 2:.1f}" text-anchor="middle" font-size="12" '
               f'transform="rotate(-90 16 {H / 2:.1f})">{escape(ylabel)}</text>')
    for i, (slope, icpt, label, colour) in enumerate(lines):
        out.append(f'<line x1="{sx(x0):.1f}" y1="{sy(slope * x0 + icpt):.1f}" x2="{sx(x1):.1f}" '
                   f'y2="{sy(slope * x1 + icpt):.1f}" stroke="{colour}" stroke-dasharray="6 3"/>')
        out.append(f'<text x="{W - PAD}" y="{PAD + 14 * i:.1f}" text-anchor="end" font-size="11" '
                   f'fill="{colour}">{escape(label)}</text>')
    for x, y in pts:
        out.append(f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3.5" fill="#1f4e9c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
