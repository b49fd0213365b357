"""Analysis report bundle: a JSON document plus standalone SVG charts.

Rendering is a pure function of the report content: no timestamps, no
hostnames, every numeric label formatted to six significant digits, so
identical analyses produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ConfigError

REPORT_SCHEMA = "tct-report/1"

CHART_KINDS = ("histogram", "heatmap", "bucket_curve", "coefficient_bars")


def _fmt(x: float) -> str:
    """Fixed 6-significant-digit number formatting for SVG output."""
    return f"{x:.6g}"


def _json_safe(value: Any) -> Any:
    """Recursively replace NaN/inf floats with None for strict JSON."""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if hasattr(value, "item") and callable(value.item) and not isinstance(value, (str, bytes)):
        try:
            return _json_safe(value.item())
        except (TypeError, ValueError):
            return value
    return value


@dataclass
class AnalysisReport:
    """Serializable container for every analysis result of one run."""

    seed: int | None = None
    selections: list[str] = field(default_factory=list)
    accounting: dict = field(default_factory=dict)
    distributions: dict | None = None
    correlations: dict | None = None
    outcome_correlations: list[dict] | None = None
    bucket_curves: list[dict] = field(default_factory=list)
    logistic: dict | None = None
    score_curve: dict | None = None
    forest: dict | None = None
    summary: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {
            "version": REPORT_SCHEMA,
            "seed": self.seed,
            "selections": self.selections,
            "accounting": self.accounting,
            "distributions": self.distributions,
            "correlations": self.correlations,
            "outcome_correlations": self.outcome_correlations,
            "bucket_curves": self.bucket_curves,
            "logistic": self.logistic,
            "score_curve": self.score_curve,
            "forest": self.forest,
            "summary": self.summary,
        }
        return _json_safe(doc)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def resolve(self, ref: str) -> Any:
        """Follow a slash-separated data reference into the report.

        Path segments may be dict keys (metric names can contain dots) or
        list indices, e.g. ``bucket_curves/0`` or ``distributions/text.DESWC``.
        """
        node: Any = self.to_dict()
        if not ref:
            raise ConfigError("empty data reference")
        for part in ref.split("/"):
            if isinstance(node, list):
                try:
                    node = node[int(part)]
                except (ValueError, IndexError):
                    raise ConfigError(f"dangling data reference {ref!r}") from None
            elif isinstance(node, dict) and part in node:
                node = node[part]
            else:
                raise ConfigError(f"dangling data reference {ref!r}")
        if node is None:
            raise ConfigError(f"dangling data reference {ref!r}")
        return node


@dataclass(frozen=True)
class ChartSpec:
    kind: str
    title: str
    data_ref: str
    width: int = 640
    height: int = 480

    def __post_init__(self):
        if self.kind not in CHART_KINDS:
            raise ConfigError(f"unknown chart kind {self.kind!r}")
        if self.width <= 0 or self.height <= 0:
            raise ConfigError("chart dimensions must be positive")


class _Svg:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts: list[str] = [
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        ]

    def rect(self, x, y, w, h, fill, stroke="none"):
        self.parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" '
            f'fill="{fill}" stroke="{stroke}"/>'
        )

    def line(self, x1, y1, x2, y2, stroke="#333333", width=1.0):
        self.parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
        )

    def circle(self, cx, cy, r, fill="#1f77b4"):
        self.parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="{fill}"/>')

    def polyline(self, points, stroke="#1f77b4", width=1.5):
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        self.parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
        )

    def text(self, x, y, content, size=11, anchor="start", color="#222222", rotate=None):
        transform = ""
        if rotate is not None:
            transform = f' transform="rotate({_fmt(rotate)} {_fmt(x)} {_fmt(y)})"'
        content = (
            str(content)
            .replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        )
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="sans-serif" '
            f'font-size="{size}" text-anchor="{anchor}" fill="{color}"{transform}>{content}</text>'
        )

    def render(self) -> str:
        return "\n".join(self.parts) + "\n</svg>\n"


def _heat_color(value: float | None) -> str:
    """Symmetric blue-white-red scale over [-1, 1]; gray for missing."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "#cccccc"
    v = max(-1.0, min(1.0, value))
    if v >= 0:
        other = round(255 * (1.0 - v))
        return f"#ff{other:02x}{other:02x}"
    other = round(255 * (1.0 + v))
    return f"#{other:02x}{other:02x}ff"


def _trim(label: str, limit: int = 18) -> str:
    return label if len(label) <= limit else label[: limit - 1] + "…"


def render_chart(spec: ChartSpec, report: AnalysisReport) -> str:
    """Render one chart to self-contained SVG text."""
    data = report.resolve(spec.data_ref)
    svg = _Svg(spec.width, spec.height)
    svg.text(spec.width / 2, 18, spec.title, size=14, anchor="middle")
    if spec.kind == "histogram":
        _render_histogram(svg, spec, data)
    elif spec.kind == "heatmap":
        _render_heatmap(svg, spec, data)
    elif spec.kind == "bucket_curve":
        _render_bucket_curve(svg, spec, data)
    else:
        _render_coefficient_bars(svg, spec, data)
    return svg.render()


def _plot_area(spec: ChartSpec, left=60, top=32, right=16, bottom=40):
    return left, top, spec.width - left - right, spec.height - top - bottom


def _render_histogram(svg: _Svg, spec: ChartSpec, data: dict) -> None:
    hist = data.get("histogram") if isinstance(data, dict) else None
    if not hist:
        raise ConfigError(f"no histogram data at {spec.data_ref!r}")
    counts = hist["counts"]
    edges = hist["bin_edges"]
    x0, y0, w, h = _plot_area(spec)
    peak = max(counts) or 1
    bar_w = w / len(counts)
    for i, count in enumerate(counts):
        bar_h = h * count / peak
        svg.rect(x0 + i * bar_w, y0 + h - bar_h, bar_w, bar_h, fill="#1f77b4", stroke="#ffffff")
    svg.line(x0, y0 + h, x0 + w, y0 + h)
    svg.line(x0, y0, x0, y0 + h)
    svg.text(x0, y0 + h + 16, _fmt(edges[0]))
    svg.text(x0 + w, y0 + h + 16, _fmt(edges[-1]), anchor="end")
    svg.text(x0 - 6, y0 + 10, _fmt(peak), anchor="end")
    svg.text(x0 - 6, y0 + h, "0", anchor="end")


def _render_heatmap(svg: _Svg, spec: ChartSpec, data: dict) -> None:
    if not isinstance(data, dict) or "columns" not in data or "matrix" not in data:
        raise ConfigError(f"no correlation data at {spec.data_ref!r}")
    columns = data["columns"]
    matrix = data["matrix"]
    if not columns:
        raise ConfigError("empty correlation matrix")
    left, top = 150, 120
    x0, y0 = left, top
    w = spec.width - left - 70
    h = spec.height - top - 20
    k = len(columns)
    cell_w = w / k
    cell_h = h / k
    for i in range(k):
        for j in range(k):
            svg.rect(
                x0 + j * cell_w, y0 + i * cell_h, cell_w, cell_h,
                fill=_heat_color(matrix[i][j]), stroke="#ffffff",
            )
    for i, name in enumerate(columns):
        svg.text(x0 - 6, y0 + (i + 0.65) * cell_h, _trim(name), size=9, anchor="end")
        svg.text(
            x0 + (i + 0.65) * cell_w, y0 - 8, _trim(name), size=9,
            anchor="start", rotate=-60,
        )
    # color legend: -1 .. 1
    legend_x = x0 + w + 14
    steps = 24
    for s in range(steps):
        v = 1.0 - 2.0 * s / (steps - 1)
        svg.rect(legend_x, y0 + s * h / steps, 14, h / steps + 0.5, fill=_heat_color(v))
    svg.text(legend_x + 18, y0 + 10, "1", size=9)
    svg.text(legend_x + 18, y0 + h / 2, "0", size=9)
    svg.text(legend_x + 18, y0 + h, "-1", size=9)


def _render_bucket_curve(svg: _Svg, spec: ChartSpec, data: dict) -> None:
    points = data.get("points") if isinstance(data, dict) else None
    if not points:
        raise ConfigError(f"no bucket points at {spec.data_ref!r}")
    x0, y0, w, h = _plot_area(spec)
    xs = [p["mean_metric"] for p in points]
    ys = [p["mean_outcome"] for p in points]
    ses = [p["outcome_se"] for p in points]
    x_min, x_max = min(xs), max(xs)
    y_low = min(y - s for y, s in zip(ys, ses))
    y_high = max(y + s for y, s in zip(ys, ses))
    if x_max == x_min:
        x_max = x_min + 1.0
    if y_high == y_low:
        y_high = y_low + 1.0
    pad = 0.05 * (y_high - y_low)
    y_low -= pad
    y_high += pad

    def px(x):
        return x0 + (x - x_min) / (x_max - x_min) * w

    def py(y):
        return y0 + h - (y - y_low) / (y_high - y_low) * h

    svg.line(x0, y0 + h, x0 + w, y0 + h)
    svg.line(x0, y0, x0, y0 + h)
    coords = [(px(x), py(y)) for x, y in zip(xs, ys)]
    svg.polyline(coords)
    for (cx, cy), y, se in zip(coords, ys, ses):
        svg.line(cx, py(y - se), cx, py(y + se), stroke="#1f77b4")
        svg.circle(cx, cy, 3.0)
    svg.text(x0, y0 + h + 16, _fmt(x_min))
    svg.text(x0 + w, y0 + h + 16, _fmt(x_max), anchor="end")
    svg.text(x0 - 6, y0 + 10, _fmt(y_high), anchor="end")
    svg.text(x0 - 6, y0 + h, _fmt(y_low), anchor="end")
    svg.text(x0 + w / 2, y0 + h + 32, data.get("metric", ""), anchor="middle")


def _render_coefficient_bars(svg: _Svg, spec: ChartSpec, data: dict) -> None:
    if isinstance(data, dict) and "coefficients" in data:
        pairs = list(zip(data["features"], data["coefficients"]))
    elif isinstance(data, dict) and "importances" in data:
        pairs = list(zip(data["features"], data["importances"]))
    else:
        raise ConfigError(f"no coefficient data at {spec.data_ref!r}")
    if not pairs:
        raise ConfigError("empty coefficient list: nothing to draw")
    pairs.sort(key=lambda p: (-abs(p[1]), p[0]))

    left = 190
    x0, y0 = left, 40
    w = spec.width - left - 60
    h = spec.height - y0 - 20
    magnitude = max(abs(v) for _, v in pairs) or 1.0
    center = x0 + w / 2
    scale = (w / 2) / magnitude
    bar_h = min(22.0, h / len(pairs))
    svg.line(center, y0 - 6, center, y0 + len(pairs) * bar_h + 6, stroke="#888888")
    for i, (name, value) in enumerate(pairs):
        y = y0 + i * bar_h
        color = "#d62728" if value < 0 else "#1f77b4"
        if value >= 0:
            svg.rect(center, y, value * scale, bar_h * 0.8, fill=color)
        else:
            svg.rect(center + value * scale, y, -value * scale, bar_h * 0.8, fill=color)
        svg.text(x0 - 6, y + bar_h * 0.62, _trim(name, 26), size=10, anchor="end")
        label_x = center + value * scale + (6 if value >= 0 else -6)
        svg.text(label_x, y + bar_h * 0.62, _fmt(value), size=9,
                 anchor="start" if value >= 0 else "end")


def chart_filename(spec: ChartSpec, index: int) -> str:
    slug = "".join(c if c.isalnum() or c in "-_" else "_" for c in spec.title.lower())
    slug = slug.strip("_") or spec.kind
    return f"chart_{index:02d}_{slug}.svg"


def write_report(
    report: AnalysisReport,
    charts: list[ChartSpec],
    out_dir: str | os.PathLike,
) -> dict:
    """Write report.json, one SVG per chart, and an index.html.

    Returns a manifest of written files with content hashes; identical
    report content always produces identical bytes.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files: list[tuple[str, str]] = []

    def write(name: str, content: str) -> None:
        data = content.encode("utf-8")
        (out / name).write_bytes(data)
        files.append((name, hashlib.sha256(data).hexdigest()))

    write("report.json", report.to_json())

    svg_names = []
    rendered = []
    for i, spec in enumerate(charts):
        svg = render_chart(spec, report)
        name = chart_filename(spec, i)
        write(name, svg)
        svg_names.append(name)
        rendered.append((spec.title, svg))

    html_parts = [
        "<!DOCTYPE html>",
        '<html><head><meta charset="utf-8"><title>Analysis report</title></head>',
        "<body>",
        "<h1>Analysis report</h1>",
    ]
    for title, svg in rendered:
        html_parts.append(f"<h2>{title}</h2>")
        html_parts.append("<div>")
        html_parts.append(svg.replace('<?xml version="1.0" encoding="UTF-8"?>\n', ""))
        html_parts.append("</div>")
    html_parts.append("</body></html>")
    write("index.html", "\n".join(html_parts) + "\n")

    return {
        "out_dir": str(out),
        "files": [{"path": name, "sha256": digest} for name, digest in files],
    }
