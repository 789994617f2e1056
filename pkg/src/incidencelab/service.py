"""FastAPI service exposing the workbench operations.

Every response is an envelope {"report": ..., "wall_time_ms": ...}; the
report body itself is deterministic for a fixed request (seeds included in
the request), so clients that persist reports get byte-identical files on
re-runs.  Exact rationals travel as strings end to end.
"""

from __future__ import annotations

import time
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, configs
from .experiments import CapExceeded, EXPERIMENTS, run_experiment
from .fitting import fit_on_lines, fit_on_points, min_vanishing_degree, monomial_count
from .flecnode import admissible_charts, flecnode_polynomial, ruled_certificate
from .motions import motion_line, recover_pair
from .polyparse import PolyParseError, parse_poly, print_poly
from .serialize import (
    FORMAT_VERSION,
    decode_line3,
    decode_point2,
    decode_point3,
    encode_line3,
    encode_point2,
    encode_point3,
)

app = FastAPI(title="incidencelab", version=__version__)


class LinePayload(BaseModel):
    base: list[str]
    dir: list[str]


class ParseRequest(BaseModel):
    text: str


class FitRequest(BaseModel):
    points: Optional[list[list[str]]] = None
    lines: Optional[list[LinePayload]] = None
    degree: Optional[int] = None
    minimize: bool = False


class RuledCertRequest(BaseModel):
    poly: str
    lines: list[LinePayload] = Field(default_factory=list)
    irreducible: bool = False


class FlecnodeOpRequest(BaseModel):
    poly: str
    chart: Optional[int] = None


class MotionLinesRequest(BaseModel):
    points: list[list[str]]


class GenerateRequest(BaseModel):
    kind: str
    size: int
    seed: int = 0


class ExperimentRequest(BaseModel):
    params: dict = Field(default_factory=dict)
    seed: int = 0


def _envelope(build):
    start = time.perf_counter()
    try:
        report = build()
    except (PolyParseError, CapExceeded, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {"report": report, "wall_time_ms": (time.perf_counter() - start) * 1000.0}


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__, "format_version": FORMAT_VERSION}


@app.post("/parse-poly")
def parse_poly_endpoint(req: ParseRequest):
    def build():
        poly = parse_poly(req.text)
        return {
            "format_version": FORMAT_VERSION,
            "poly": print_poly(poly),
            "degree": poly.degree,
            "term_count": len(poly.terms),
        }

    return _envelope(build)


@app.post("/fit")
def fit_endpoint(req: FitRequest):
    def build():
        if (req.points is None) == (req.lines is None):
            raise ValueError("provide exactly one of points or lines")
        if req.points is not None:
            points = [decode_point3(p) for p in req.points]
            if req.minimize:
                degree, poly = min_vanishing_degree(points)
            else:
                if req.degree is None:
                    raise ValueError("degree required unless minimize is set")
                degree = req.degree
                poly = fit_on_points(points, degree)
            targets = len(set(points))
        else:
            if req.degree is None:
                raise ValueError("degree required for line fitting")
            lines = [decode_line3(l.model_dump()) for l in req.lines]
            degree = req.degree
            poly = fit_on_lines(lines, degree)
            targets = len(lines)
        return {
            "format_version": FORMAT_VERSION,
            "found": poly is not None,
            "poly": print_poly(poly) if poly is not None else None,
            "degree": poly.degree if poly is not None else None,
            "requested_degree": degree,
            "monomial_count": monomial_count(degree),
            "target_count": targets,
        }

    return _envelope(build)


@app.post("/flecnode")
def flecnode_endpoint(req: FlecnodeOpRequest):
    def build():
        poly = parse_poly(req.poly)
        charts = [req.chart] if req.chart else admissible_charts(poly)
        out = {}
        for chart in charts:
            res = flecnode_polynomial(poly, chart)
            out[str(chart)] = {
                "flec": None if res.flec.is_zero() else print_poly(res.flec),
                "flec_degree": res.degree,
                "raw_degree": res.raw.degree,
                "removed_factor": print_poly(res.removed_factor),
                "removed_power": res.removed_power,
            }
        return {
            "format_version": FORMAT_VERSION,
            "poly": print_poly(poly),
            "degree": poly.degree,
            "charts": out,
        }

    return _envelope(build)


@app.post("/ruled-cert")
def ruled_cert_endpoint(req: RuledCertRequest):
    def build():
        poly = parse_poly(req.poly)
        lines = [decode_line3(l.model_dump()) for l in req.lines]
        verdict = ruled_certificate(poly, lines, declared_irreducible=req.irreducible)
        return {
            "format_version": FORMAT_VERSION,
            "poly": print_poly(poly),
            "status": verdict.status,
            "line_count": verdict.line_count,
            "threshold": verdict.threshold,
            "chart_evidence": {str(k): v for k, v in sorted(verdict.chart_evidence.items())},
            "reason": verdict.reason,
        }

    return _envelope(build)


@app.post("/motion-lines")
def motion_lines_endpoint(req: MotionLinesRequest):
    def build():
        points = [decode_point2(p) for p in req.points]
        if len(set(points)) != len(points):
            raise ValueError("points must be distinct")
        out = []
        recovered = True
        for a in points:
            for b in points:
                ml = motion_line(a, b)
                ra, rb = recover_pair(ml.line)
                recovered = recovered and (ra, rb) == (a, b)
                out.append(
                    {
                        "a": encode_point2(a),
                        "b": encode_point2(b),
                        "line": encode_line3(ml.line),
                    }
                )
        return {
            "format_version": FORMAT_VERSION,
            "point_count": len(points),
            "line_count": len(out),
            "tags_recovered": recovered,
            "lines": out,
        }

    return _envelope(build)


@app.post("/generate")
def generate_endpoint(req: GenerateRequest):
    def build():
        config = configs.make_configuration(req.kind, req.size, req.seed)
        payload = {"format_version": FORMAT_VERSION, "kind": req.kind, "size": req.size,
                   "seed": req.seed}
        if "lines" in config:
            payload["lines"] = [encode_line3(l) for l in config["lines"]]
        if "points" in config:
            payload["points"] = [encode_point3(w) for w in config["points"]]
        if "planar_points" in config:
            payload["planar_points"] = [encode_point2(w) for w in config["planar_points"]]
        if "planar_lines" in config:
            payload["planar_lines"] = [
                {"a": str(l.coeffs[0]), "b": str(l.coeffs[1]), "c": str(l.coeffs[2])}
                for l in config["planar_lines"]
            ]
        return payload

    return _envelope(build)


@app.post("/experiments/{name}")
def experiment_endpoint(name: str, req: ExperimentRequest):
    return _envelope(lambda: run_experiment(name, req.params, req.seed))


@app.get("/experiments")
def list_experiments():
    return {"experiments": sorted(EXPERIMENTS)}
