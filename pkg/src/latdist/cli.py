"""Command-line client for the latdist service.

Every subcommand sends one request to the HTTP service and renders the
response as CSV (one header row plus data rows) or JSON.  By default an
in-process instance of the service handles the request; pass --server
to talk to a running deployment instead.

Exit statuses: 0 success, 2 validation error, 3 capacity/overflow
error, 4 acceptance failure.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys

import click

EXIT_VALIDATION = 2
EXIT_CAPACITY = 3
EXIT_ACCEPT_FAIL = 4


class ServiceClient:
    """HTTP client; in-process ASGI transport unless a server URL is given."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        body = resp.json()
        if resp.status_code == 200:
            return body
        reason = body.get("reason") or json.dumps(body.get("detail", body))
        code = body.get("code", "validation" if resp.status_code in (400, 422) else "capacity")
        click.echo(f"error: {code}: {reason}", err=True)
        sys.exit(EXIT_VALIDATION if code == "validation" else EXIT_CAPACITY)


def _emit(ctx_obj: dict, header: list[str], rows: list[list], payload: dict) -> None:
    out = ctx_obj["output"]
    if ctx_obj["format"] == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    if out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w") as fh:
            fh.write(text)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; default runs in-process.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", default="-", show_default=True, help="Output path, '-' for stdout.")
@click.option(
    "--cache-dir",
    default=None,
    envvar="LATDIST_CACHE_DIR",
    help="Directory for sieve cache files (env LATDIST_CACHE_DIR).",
)
@click.option("--threads", default=1, show_default=True, help="Worker cap; results are identical for any value.")
@click.pass_context
def main(ctx, server, fmt, output, cache_dir, threads):
    """Exact distance statistics on integer lattices."""
    if cache_dir:
        os.environ["LATDIST_CACHE_DIR"] = cache_dir
    ctx.obj = {"client": ServiceClient(server), "format": fmt, "output": output, "threads": threads}


@main.command("square-stats")
@click.option("--side", type=int, required=True, help="Grid side m; reports the m*m lattice.")
@click.pass_obj
def square_stats(obj, side):
    """Distance classes and quadruple energy of the m x m grid.

    CSV columns: side,N,x,energy,csBound,gapRatio,energy_over_N3lnN,x_sqrtlnN_over_N
    """
    body = obj["client"].post("/v1/square-stats", {"side": side, "threads": obj["threads"]})
    s = body["stats"]
    row = [
        body["side"],
        body["n_points"],
        s["distinct"],
        s["energy"],
        repr(s["cs_bound_float"]),
        repr(s["gap_ratio"]),
        repr(body["energy_over_n3logn"]),
        repr(body["distinct_norm"]),
    ]
    _emit(obj, ["side", "N", "x", "energy", "csBound", "gapRatio", "energy_over_N3lnN", "x_sqrtlnN_over_N"], [row], body)


@main.command()
@click.option("--n", type=int, required=True, help="Points per axis; the configuration has 2n points.")
@click.pass_obj
def lshape(obj, n):
    """Distance statistics of the two-axis (L-shaped) configuration.

    CSV columns: n,points,D,trivialEnergy,energy,csBound,gapRatio,trivialEnergy_over_n3
    """
    body = obj["client"].post("/v1/lshape", {"n": n})
    row = [
        body["n"],
        body["point_count"],
        body["distinct"],
        body["trivial_energy"],
        body["energy"],
        repr(body["cs_bound_float"]),
        repr(body["gap_ratio"]),
        repr(body["trivial_energy_over_n3"]),
    ]
    _emit(
        obj,
        ["n", "points", "D", "trivialEnergy", "energy", "csBound", "gapRatio", "trivialEnergy_over_n3"],
        [row],
        body,
    )


RECT_HEADER = [
    "n", "alpha", "W", "H", "iMin", "sublattice", "D", "D_over_n",
    "excessSum", "S", "sumR", "sumD", "sumR2", "sumD2", "sumBinomR2", "sumBinomD2",
]


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", required=True, help="Exact rational p/q in (0, 1/2); floats rejected.")
@click.pass_obj
def rect(obj, n, alpha):
    """Rectangular-lattice report: distinct distances, identity sums, buckets.

    CSV columns: n,alpha,W,H,iMin,sublattice,D,D_over_n,excessSum,S,
    sumR,sumD,sumR2,sumD2,sumBinomR2,sumBinomD2
    """
    body = obj["client"].post("/v1/rect", {"n": n, "alpha": alpha})
    ids = body["identities"]
    row = [
        body["n"], body["alpha"], body["w"], body["h"], body["i_min"],
        body["sublattice_size"], body["distinct"], repr(body["distinct_over_n"]),
        body["excess_sum"], body["s_binom"],
        ids["sum_r"], ids["sum_d"], ids["sum_r2"], ids["sum_d2"],
        ids["sum_binom_r2"], ids["sum_binom_d2"],
    ]
    _emit(obj, RECT_HEADER, [row], body)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", required=True, help="Exact rational p/q in (0, 1/2).")
@click.pass_obj
def identities(obj, n, alpha):
    """The exact circle/hyperbola sum identities over the sublattice.

    CSV columns: n,alpha,sublattice,sumR,sumD,sumR2,sumD2,sumBinomR2,sumBinomD2
    """
    body = obj["client"].post("/v1/identities", {"n": n, "alpha": alpha})
    ids = body["identities"]
    row = [
        body["n"], body["alpha"], body["sublattice_size"],
        ids["sum_r"], ids["sum_d"], ids["sum_r2"], ids["sum_d2"],
        ids["sum_binom_r2"], ids["sum_binom_d2"],
    ]
    _emit(
        obj,
        ["n", "alpha", "sublattice", "sumR", "sumD", "sumR2", "sumD2", "sumBinomR2", "sumBinomD2"],
        [row],
        body,
    )


def _parse_checkpoints(text: str | None) -> list[int] | None:
    if not text:
        return None
    return [int(t) for t in text.split(",") if t.strip()]


@main.command()
@click.option("--limit", type=int, required=True)
@click.option("--checkpoints", default=None, help="Comma-separated k values; default is the limit itself.")
@click.pass_obj
def rhat(obj, limit, checkpoints):
    """Prefix second moment of r: rhat(k) and rhat(k)/(k ln k).

    CSV columns: k,rhat,ratio
    """
    body = obj["client"].post("/v1/rhat", {"limit": limit, "checkpoints": _parse_checkpoints(checkpoints)})
    rows = [[c["k"], c["rhat"], repr(c["ratio"])] for c in body["checkpoints"]]
    _emit(obj, ["k", "rhat", "ratio"], rows, body)


@main.command()
@click.option("--limit", type=int, required=True)
@click.option("--checkpoints", default=None, help="Comma-separated N values; default is the limit itself.")
@click.pass_obj
def landau(obj, limit, checkpoints):
    """Count of integers <= N that are sums of two squares.

    CSV columns: N,count,ratio  (ratio = count sqrt(ln N) / N)
    """
    body = obj["client"].post("/v1/landau", {"limit": limit, "checkpoints": _parse_checkpoints(checkpoints)})
    rows = [[c["limit"], c["count"], repr(c["ratio"])] for c in body["checkpoints"]]
    _emit(obj, ["N", "count", "ratio"], rows, body)


@main.command()
@click.option("--nmax", type=int, required=True)
@click.option("--beta", required=True, help="Exact rational p/q in (0, 1/2).")
@click.option("--per-n", is_flag=True, help="Emit one row per circle instead of the summary row.")
@click.pass_obj
def arcs(obj, nmax, beta, per_n):
    """Maximal lattice-point counts in arcs of length N^beta.

    CSV columns (per-n): N,points,maxCount,axisCount,runningMax,angularWidth,witnessStartAngle
    CSV columns (summary): Nmax,beta,scanned,overallMax
    """
    body = obj["client"].post("/v1/arcs", {"n_max": nmax, "beta": beta, "per_n": per_n})
    if per_n:
        header = ["N", "points", "maxCount", "axisCount", "runningMax", "angularWidth", "witnessStartAngle"]
        rows = [
            [r["n"], r["num_points"], r["max_count"], r["axis_count"], r["running_max"],
             repr(r["angular_width"]), repr(r["witness_start_angle"])]
            for r in body["rows"]
        ]
    else:
        header = ["Nmax", "beta", "scanned", "overallMax"]
        rows = [[body["n_max"], body["beta"], body["scanned"], body["overall_max"]]]
    _emit(obj, header, rows, body)


@main.command("oracle-check")
@click.pass_obj
def oracle_check(obj):
    """Cross-check every fast path against its brute-force oracle.

    CSV columns: name,scale,ok
    """
    body = obj["client"].post("/v1/oracle-check", {})
    rows = [[c["name"], c["scale"], c["ok"]] for c in body["checks"]]
    _emit(obj, ["name", "scale", "ok"], rows, body)
    if not body["all_ok"]:
        sys.exit(EXIT_ACCEPT_FAIL)


@main.command()
@click.option("--suite", type=click.Choice(["fast", "full"]), default="fast", show_default=True)
@click.pass_obj
def accept(obj, suite):
    """Run the acceptance criteria and print one pass/fail line each.

    CSV columns: id,name,passed,measured,seconds
    """
    body = obj["client"].post("/v1/accept", {"suite": suite})
    rows = [
        [c["id"], c["name"], "pass" if c["passed"] else "FAIL", c["measured"], f"{c['seconds']:.2f}"]
        for c in body["criteria"]
    ]
    _emit(obj, ["id", "name", "passed", "measured", "seconds"], rows, body)
    if not body["passed"]:
        failing = [str(c["id"]) for c in body["criteria"] if not c["passed"]]
        click.echo(f"acceptance failed: criteria {', '.join(failing)}", err=True)
        sys.exit(EXIT_ACCEPT_FAIL)


if __name__ == "__main__":
    main()
