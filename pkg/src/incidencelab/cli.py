"""Batch command-line client for the workbench service.

The CLI is a thin HTTP client.  By default it mounts the FastAPI app
in-process (no network, fully deterministic); --server points it at a
running instance instead.  Reports are written as canonical JSON (or CSV for
tabular sweeps); wall time goes to stderr, never into the report file, so
identical seeds produce identical output bytes.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

from .serialize import dump_json, read_json, rows_to_csv, svg_plot


def _post_inprocess(path, body):
    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://incidencelab.internal", timeout=600.0
        ) as client:
            return await client.post(path, json=body)

    return asyncio.run(go())


def _post(args, path, body):
    if args.server:
        try:
            with httpx.Client(base_url=args.server, timeout=600.0) as client:
                resp = client.post(path, json=body)
        except httpx.HTTPError as exc:
            print(f"error: cannot reach {args.server}: {exc}", file=sys.stderr)
            raise SystemExit(2)
    else:
        resp = _post_inprocess(path, body)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    return resp.json()


def _report_rows(report):
    """Rows for CSV output: a measured table when present, else key/value."""
    measured = report.get("measured", {})
    table = measured.get("table")
    if isinstance(table, list) and table and isinstance(table[0], dict):
        header = list(table[0].keys())
        return header, [[row[h] for h in header] for row in table]
    header = ["key", "value"]
    rows = []
    for key, value in measured.items():
        rows.append([key, value])
    for check in report.get("checks", []):
        rows.append([f"check:{check['name']}", check["passed"]])
    return header, rows


def _emit(args, report):
    if args.format == "csv":
        header, rows = _report_rows(report)
        text = rows_to_csv(header, rows)
    else:
        text = dump_json(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "svg", None):
        table = report.get("measured", {}).get("table")
        if not table or "size" not in table[0] or "ratio" not in table[0]:
            print("error: --svg needs a sweep report with size/ratio columns", file=sys.stderr)
            raise SystemExit(2)
        series = [{
            "label": "ratio",
            "points": [(float(r["size"]), float(r["ratio"])) for r in table],
        }]
        svg_plot(series, path=args.svg, title=report.get("experiment", ""))


def _finish(args, envelope):
    report = envelope["report"]
    _emit(args, report)
    status = ""
    if isinstance(report, dict) and "passed" in report:
        status = "PASS" if report["passed"] else "FAIL"
    print(
        f"[{report.get('experiment', args.command)}] {status} "
        f"wall_time_ms={envelope['wall_time_ms']:.1f}",
        file=sys.stderr,
    )
    if status == "FAIL":
        raise SystemExit(1)


def _load_lines_arg(path):
    return read_json(path)["lines"]


def _experiment_command(args, name, params):
    envelope = _post(args, f"/experiments/{name}", {"params": params, "seed": args.seed})
    _finish(args, envelope)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="incidencelab",
        description="Exact incidence-geometry workbench (thin client over the service)",
    )
    parser.add_argument("--server", default=None,
                        help="service URL; default runs the app in-process")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="experiment seed (default 0)")
    common.add_argument("--out", default=None, help="write the report to this path")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--svg", default=None, help="write a sweep plot to this path")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", parents=[common], help="fit a vanishing polynomial")
    p.add_argument("--points", help="JSON file with a points payload")
    p.add_argument("--lines", help="JSON file with a lines payload")
    p.add_argument("--degree", type=int)
    p.add_argument("--minimize", action="store_true", help="search the minimal degree")

    p = sub.add_parser("flecnode", parents=[common], help="flecnode experiment for a surface")
    p.add_argument("poly", help="polynomial in x, y, z (e.g. 'x^2+y^2-z^2-1')")
    p.add_argument("--irreducible", action="store_true",
                   help="declare the polynomial irreducible")

    p = sub.add_parser("ruled-cert", parents=[common], help="ruledness certificate")
    p.add_argument("poly")
    p.add_argument("--lines", help="JSON file with verified surface lines")
    p.add_argument("--irreducible", action="store_true")

    p = sub.add_parser("joints", parents=[common], help="joint counting experiment")
    p.add_argument("--kind", default="grid_joints")
    p.add_argument("--size", type=int, default=3)

    p = sub.add_parser("census", parents=[common], help="intersection census experiment")
    p.add_argument("--kind", default="grid_joints")
    p.add_argument("--size", type=int, default=2)

    p = sub.add_parser("szt", parents=[common], help="planar incidence sweep")
    p.add_argument("--max-size", type=int, default=6, dest="max_size")

    p = sub.add_parser("motion-lines", parents=[common], help="rigid-motion lines of a point set")
    p.add_argument("--points", required=True, help="JSON file with planar points")

    p = sub.add_parser("quadruples", parents=[common], help="distance-quadruple dictionary check")
    p.add_argument("--points", help="JSON file with planar points")
    p.add_argument("--n", type=int, default=6, help="random point count when no file given")

    p = sub.add_parser("degree-reduce", parents=[common], help="certified degree reduction")
    p.add_argument("--n1", type=int, default=60)
    p.add_argument("--n2", type=int, default=40)
    p.add_argument("--probability", default="1/4")
    p.add_argument("--cap", type=int, default=2)
    p.add_argument("--retries", type=int, default=5)

    p = sub.add_parser("partition", parents=[common], help="polynomial partition experiment")
    p.add_argument("--m", type=int, default=64)
    p.add_argument("--s", type=int, default=8)

    p = sub.add_parser("pk", parents=[common], help="rich-point dichotomy experiment")
    p.add_argument("--kind", default="grid_joints")
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--s", type=int, default=8)

    p = sub.add_parser("generate", parents=[common], help="emit a fixture configuration")
    p.add_argument("kind")
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("gk4", parents=[common], help="intersection-point count experiment")
    p.add_argument("--kind", default="gk2_config")
    p.add_argument("--size", type=int, default=3)

    p = sub.add_parser("distances", parents=[common], help="distinct distances experiment")
    p.add_argument("--size", type=int, default=4)

    args = parser.parse_args(argv)

    if args.command == "fit":
        body = {"degree": args.degree, "minimize": args.minimize}
        if args.points:
            body["points"] = read_json(args.points)["points"]
        if args.lines:
            body["lines"] = _load_lines_arg(args.lines)
        envelope = _post(args, "/fit", body)
        _emit(args, envelope["report"])
        print(f"[fit] wall_time_ms={envelope['wall_time_ms']:.1f}", file=sys.stderr)
    elif args.command == "flecnode":
        _experiment_command(args, "flecnode",
                            {"poly": args.poly, "irreducible": args.irreducible})
    elif args.command == "ruled-cert":
        body = {"poly": args.poly, "irreducible": args.irreducible}
        body["lines"] = _load_lines_arg(args.lines) if args.lines else []
        envelope = _post(args, "/ruled-cert", body)
        _emit(args, envelope["report"])
        print(f"[ruled-cert] {envelope['report']['status']} "
              f"wall_time_ms={envelope['wall_time_ms']:.1f}", file=sys.stderr)
    elif args.command == "joints":
        _experiment_command(args, "joints", {"kind": args.kind, "size": args.size})
    elif args.command == "census":
        _experiment_command(args, "census", {"kind": args.kind, "size": args.size})
    elif args.command == "szt":
        _experiment_command(args, "szt", {"max_size": args.max_size})
    elif args.command == "motion-lines":
        body = {"points": read_json(args.points)["points"]}
        envelope = _post(args, "/motion-lines", body)
        _emit(args, envelope["report"])
        print(f"[motion-lines] wall_time_ms={envelope['wall_time_ms']:.1f}", file=sys.stderr)
    elif args.command == "quadruples":
        params = {"n": args.n}
        if args.points:
            params = {"points": read_json(args.points)["points"]}
        _experiment_command(args, "quadruples", params)
    elif args.command == "degree-reduce":
        _experiment_command(
            args,
            "degree-reduce",
            {"n1": args.n1, "n2": args.n2, "probability": args.probability,
             "cap": args.cap, "retries": args.retries},
        )
    elif args.command == "partition":
        _experiment_command(args, "partition", {"m": args.m, "s": args.s})
    elif args.command == "pk":
        _experiment_command(
            args, "pk", {"kind": args.kind, "size": args.size, "k": args.k, "s": args.s}
        )
    elif args.command == "generate":
        envelope = _post(args, "/generate",
                         {"kind": args.kind, "size": args.size, "seed": args.seed})
        _emit(args, envelope["report"])
        print(f"[generate] wall_time_ms={envelope['wall_time_ms']:.1f}", file=sys.stderr)
    elif args.command == "gk4":
        _experiment_command(args, "gk4", {"kind": args.kind, "size": args.size})
    elif args.command == "distances":
        _experiment_command(args, "distances", {"size": args.size})
    return 0


if __name__ == "__main__":
    sys.exit(main())
