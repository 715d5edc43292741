"""Minimal deterministic SVG emitters (no plotting dependency).

Fixed canvas sizes and styles; coordinates go through the shared float
formatter so identical inputs give identical bytes.
"""

from __future__ import annotations

import math

from .serialize import format_float as _f

CIRCLE_SIZE = 480
CURVE_W, CURVE_H = 640, 400
MARGIN = 40


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def unit_circle_svg(points_pi: list[float], arc: tuple[float, float] | None = None) -> str:
    """Unit circle with phase dots; ``points_pi`` are angles in units of pi.

    When ``arc`` = (u, v) in radians is given, the arcs [u, v] and its
    antipode are stroked as polylines on the circle.
    """
    c = CIRCLE_SIZE / 2
    radius = c - MARGIN
    body = [
        f'<rect width="{CIRCLE_SIZE}" height="{CIRCLE_SIZE}" fill="white"/>',
        f'<circle cx="{_f(c)}" cy="{_f(c)}" r="{_f(radius)}" fill="none" '
        f'stroke="#888" stroke-width="1"/>',
    ]
    if arc is not None:
        u, v = arc
        for offset in (0.0, math.pi):
            pts = []
            for k in range(101):
                theta = u + (v - u) * k / 100 + offset
                x = c + radius * math.cos(theta)
                y = c - radius * math.sin(theta)
                pts.append(f"{_f(x)},{_f(y)}")
            body.append(f'<polyline points="{" ".join(pts)}" fill="none" '
                        f'stroke="#d62728" stroke-width="5"/>')
    for t in points_pi:
        theta = math.pi * t
        x = c + radius * math.cos(theta)
        y = c - radius * math.sin(theta)
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="4" fill="#1f77b4"/>')
    return _svg(CIRCLE_SIZE, CIRCLE_SIZE, body)


def curve_svg(samples: list[tuple[float, float]]) -> str:
    """Polyline plot of (t, h) samples; non-finite h values are skipped."""
    finite = [(t, h) for t, h in samples if math.isfinite(h)]
    body = [f'<rect width="{CURVE_W}" height="{CURVE_H}" fill="white"/>']
    if finite:
        ts = [t for t, _ in finite]
        hs = [h for _, h in finite]
        t0, t1 = min(ts), max(ts)
        h0, h1 = min(hs), max(hs)
        if t1 == t0:
            t1 = t0 + 1.0
        if h1 == h0:
            h0, h1 = h0 - 1.0, h1 + 1.0
        w = CURVE_W - 2 * MARGIN
        hgt = CURVE_H - 2 * MARGIN
        pts = []
        for t, h in finite:
            x = MARGIN + w * (t - t0) / (t1 - t0)
            y = CURVE_H - MARGIN - hgt * (h - h0) / (h1 - h0)
            pts.append(f"{_f(x)},{_f(y)}")
        body.append(f'<rect x="{MARGIN}" y="{MARGIN}" width="{w}" height="{hgt}" '
                    f'fill="none" stroke="#888" stroke-width="1"/>')
        body.append(f'<polyline points="{" ".join(pts)}" fill="none" '
                    f'stroke="#1f77b4" stroke-width="2"/>')
    return _svg(CURVE_W, CURVE_H, body)
