"""
From a scene file to a report and a drawing
===========================================

The bundled demo scene runs through the same code path as the
``liecycles run`` and ``liecycles render`` commands.
"""

import os

from liecycles.cli import dumps_report, parse_scene, render_svg, run_queries

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "..", "scenes", "demo.json"), encoding="utf-8") as fh:
    scene = parse_scene(fh.read())

report = run_queries(scene)
for entry in report["results"]:
    status = "ok" if entry["ok"] else entry["error"]["kind"]
    print(entry["query_index"], entry["kind"], status)

svg = render_svg(scene, report, "demo.svg")
print(len(dumps_report(report)), "bytes of report;", len(svg), "bytes of SVG written to demo.svg")
