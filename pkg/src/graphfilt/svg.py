"""Minimal self-contained SVG line plots (no plotting dependency).

Output is deterministic: fixed canvas geometry and fixed numeric formatting.
"""

import math

_W, _H = 720, 300
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 60, 15, 25, 35
_ATT_CLIP = 160.0  # infinite attenuation (transfer zeros) plots at this level


def _fmt(x):
    return "%.6g" % x


def _panel(lines, x, ys, title, y_label, y_top, y_offset):
    x_min, x_max = min(x), max(x)
    span_x = (x_max - x_min) or 1.0
    span_y = y_top or 1.0
    px = lambda v: _MARGIN_L + (v - x_min) / span_x * (_W - _MARGIN_L - _MARGIN_R)
    py = lambda v: y_offset + _MARGIN_T + (1.0 - v / span_y) * (_H - _MARGIN_T - _MARGIN_B)
    lines.append(
        f'<rect x="{_MARGIN_L}" y="{y_offset + _MARGIN_T}" '
        f'width="{_W - _MARGIN_L - _MARGIN_R}" height="{_H - _MARGIN_T - _MARGIN_B}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<text x="{_MARGIN_L}" y="{y_offset + _MARGIN_T - 8}" font-size="13">{title}</text>'
    )
    for i in range(5):
        xv = x_min + span_x * i / 4.0
        lines.append(
            f'<text x="{_fmt(px(xv))}" y="{y_offset + _H - _MARGIN_B + 16}" '
            f'font-size="11" text-anchor="middle">{_fmt(xv)}</text>'
        )
        yv = span_y * i / 4.0
        lines.append(
            f'<text x="{_MARGIN_L - 6}" y="{_fmt(py(yv) + 4)}" '
            f'font-size="11" text-anchor="end">{_fmt(yv)}</text>'
        )
    lines.append(
        f'<text x="12" y="{y_offset + _H // 2}" font-size="12" '
        f'transform="rotate(-90 12 {y_offset + _H // 2})" text-anchor="middle">{y_label}</text>'
    )
    pts = " ".join(f"{_fmt(px(a))},{_fmt(py(min(b, span_y)))}" for a, b in zip(x, ys))
    lines.append(f'<polyline points="{pts}" fill="none" stroke="#1f6fb2" stroke-width="1.5"/>')


def write_response_svg(path, lam, h, att_db):
    """Two stacked panels: H versus lambda and attenuation (dB) versus lambda."""
    att = [min(a, _ATT_CLIP) if math.isfinite(a) else _ATT_CLIP for a in att_db]
    h_top = max(1.0, max(h))
    att_top = max(1.0, max(att))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{2 * _H}" '
        f'viewBox="0 0 {_W} {2 * _H}" font-family="sans-serif">',
        f'<rect width="{_W}" height="{2 * _H}" fill="white"/>',
    ]
    _panel(lines, lam, h, "frequency response", "H", h_top, 0)
    _panel(lines, lam, att, "attenuation", "dB", att_top, _H)
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
