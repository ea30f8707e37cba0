"""Scene-file front end: parsing, query evaluation, SVG output."""

from .main import main
from .render import render_svg
from .report import dumps_report, run_queries
from .scene import Scene, parse_scene

__all__ = ["main", "parse_scene", "run_queries", "dumps_report", "render_svg", "Scene"]
