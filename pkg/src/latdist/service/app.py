"""FastAPI service exposing the counting library.

Error contract: domain/validation problems return 422 with
{"code": "validation", "reason": ...}; capacity and overflow problems
return 507 with {"code": "capacity", "reason": ...}.  Clients map these
to process exit statuses 2 and 3.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import arcs, diststats, numth, rectlat
from ..errors import CapacityError, DomainError
from . import models

app = FastAPI(
    title="latdist",
    description="Exact distance statistics on integer lattices",
    version="0.1.0",
)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError):
    return JSONResponse(status_code=422, content={"code": "validation", "reason": str(exc)})


@app.exception_handler(CapacityError)
async def _capacity_error(request: Request, exc: CapacityError):
    return JSONResponse(status_code=507, content={"code": "capacity", "reason": str(exc)})


def _quad_model(stats: diststats.QuadrupleStats) -> models.QuadrupleStatsModel:
    return models.QuadrupleStatsModel(
        distinct=stats.distinct,
        total_ordered_pairs=stats.total_ordered_pairs,
        energy=str(stats.energy),
        cs_bound=f"{stats.cs_bound.numerator}/{stats.cs_bound.denominator}",
        cs_bound_float=float(stats.cs_bound),
        gap_ratio=stats.gap_ratio,
    )


@app.get("/")
def root():
    return {"service": "latdist", "endpoints": [r.path for r in app.routes if r.path.startswith("/v1")]}


@app.post("/v1/square-stats", response_model=models.SquareStatsResponse)
def square_stats(req: models.SquareStatsRequest) -> models.SquareStatsResponse:
    rep = diststats.square_lattice_report(req.side)
    return models.SquareStatsResponse(
        side=rep.side,
        n_points=rep.n_points,
        stats=_quad_model(rep.stats),
        energy_over_n3logn=rep.energy_over_n3logn,
        distinct_norm=rep.distinct_norm,
        gap_over_sqrtlog=rep.gap_over_sqrtlog,
    )


@app.post("/v1/lshape", response_model=models.LShapeResponse)
def lshape(req: models.LShapeRequest) -> models.LShapeResponse:
    rep = diststats.lshape_report(req.n)
    return models.LShapeResponse(
        n=rep.n,
        point_count=rep.point_count,
        distinct=rep.distinct,
        trivial_energy=str(rep.trivial_energy),
        energy=str(rep.energy),
        cs_bound=f"{rep.cs_bound.numerator}/{rep.cs_bound.denominator}",
        cs_bound_float=float(rep.cs_bound),
        gap_ratio=rep.gap_ratio,
        axis_pair_total=rep.axis_pair_total,
        cross_pair_total=rep.cross_pair_total,
        cross_integer_pairs=rep.cross_integer_pairs,
        trivial_energy_over_n3=rep.trivial_energy / rep.n**3,
    )


def _identity_model(rep: rectlat.IdentityReport) -> models.IdentityModel:
    return models.IdentityModel(
        sum_r=str(rep.sum_r),
        sum_d=str(rep.sum_d),
        sum_r2=str(rep.sum_r2),
        sum_d2=str(rep.sum_d2),
        sum_binom_r2=str(rep.sum_binom_r2),
        sum_binom_d2=str(rep.sum_binom_d2),
    )


@app.post("/v1/rect", response_model=models.RectResponse)
def rect(req: models.RectRequest) -> models.RectResponse:
    alpha = models.parse_rational(req.alpha)
    rep = rectlat.dalpha_report(req.n, alpha)
    return models.RectResponse(
        n=req.n,
        alpha=str(alpha),
        w=rep.spec.w,
        h=rep.spec.h,
        i_min=rep.spec.i_min,
        sublattice_size=rep.sublattice_size,
        distinct=rep.distinct,
        distinct_over_n=rep.distinct / req.n,
        excess_sum=str(rep.excess_sum),
        s_binom=str(rep.s_binom),
        per_interval=rep.per_interval,
        mk_histogram=rep.mk_histogram,
        identities=_identity_model(rep.identities),
    )


@app.post("/v1/identities", response_model=models.IdentitiesResponse)
def identities(req: models.IdentitiesRequest) -> models.IdentitiesResponse:
    alpha = models.parse_rational(req.alpha)
    spec = rectlat.build_spec(req.n, alpha)
    rep = rectlat.verify_identities(rectlat.rep_counts(spec))
    return models.IdentitiesResponse(
        n=req.n,
        alpha=str(alpha),
        sublattice_size=spec.sublattice_size,
        identities=_identity_model(rep),
    )


@app.post("/v1/rhat", response_model=models.RhatResponse)
def rhat(req: models.RhatRequest) -> models.RhatResponse:
    table = numth.rhat_table(req.limit)
    checkpoints = req.checkpoints or [req.limit]
    rows = []
    for k in sorted(set(checkpoints)):
        if not 2 <= k <= req.limit:
            raise DomainError(f"checkpoint {k} outside 2..{req.limit}")
        rows.append(models.RhatCheckpoint(k=k, rhat=str(int(table.rhat[k])), ratio=table.ratio(k)))
    return models.RhatResponse(limit=req.limit, checkpoints=rows)


@app.post("/v1/landau", response_model=models.LandauResponse)
def landau(req: models.LandauRequest) -> models.LandauResponse:
    checkpoints = sorted(set(req.checkpoints or [req.limit]))
    rows = []
    for lim in checkpoints:
        if not 1 <= lim <= req.limit:
            raise DomainError(f"checkpoint {lim} outside 1..{req.limit}")
        count = numth.landau_count(lim)
        ratio = numth.landau_ratio(lim, count) if lim >= 2 else float(count)
        rows.append(models.LandauCheckpoint(limit=lim, count=count, ratio=ratio))
    return models.LandauResponse(limit=req.limit, checkpoints=rows)


@app.post("/v1/arcs", response_model=models.ArcsResponse)
def arcs_scan(req: models.ArcsRequest) -> models.ArcsResponse:
    beta = models.parse_rational(req.beta)
    results = arcs.conjecture_scan(req.n_max, beta)
    rows = []
    if req.per_n:
        rows = [
            models.ArcRow(
                n=r.n,
                num_points=r.num_points,
                max_count=r.max_count,
                axis_count=r.axis_count,
                running_max=r.running_max,
                angular_width=r.angular_width,
                witness_start_angle=r.witness_start_angle,
            )
            for r in results
        ]
    overall = results[-1].running_max if results else 0
    return models.ArcsResponse(
        n_max=req.n_max, beta=str(beta), scanned=len(results), overall_max=overall, rows=rows
    )


@app.post("/v1/oracle-check", response_model=models.OracleCheckResponse)
def oracle_check() -> models.OracleCheckResponse:
    """Quick cross-checks of every fast path against its brute-force oracle."""
    checks = []

    sieve = numth.build_spf_sieve(5000)
    ok = all(numth.r_fast(k, sieve) == numth.r_bruteforce(k) for k in range(1, 2001))
    checks.append({"name": "r_fast vs r_bruteforce", "scale": "k <= 2000", "ok": ok})

    ok = True
    for w in range(2, 9):
        for h in range(1, 9):
            grid = [(x, y) for x in range(w) for y in range(h)]
            fast = diststats.histogram_rect_fast(w, h).as_dict()
            if fast != diststats.histogram_bruteforce(grid).as_dict():
                ok = False
    checks.append({"name": "histogram_rect_fast vs bruteforce", "scale": "W,H <= 8", "ok": ok})

    ok = True
    for pts in (
        [(x, y) for x in range(3) for y in range(3)],
        diststats.lshape_points(4),
        [(0, 0), (3, 4), (5, 0), (1, 7)],
    ):
        stats = diststats.quadruple_stats(diststats.histogram_bruteforce(pts))
        if diststats.quadruple_bruteforce(pts) != stats.energy:
            ok = False
    checks.append({"name": "quadruple energy vs 4-tuple enumeration", "scale": "<= 16 points", "ok": ok})

    ok = True
    for n in range(2, 400):
        cp = arcs.circle_points(n)
        if not cp.points:
            continue
        for beta in (Fraction(1, 6), Fraction(2, 5)):
            res = arcs.max_arc_count(n, beta, cp)
            if res.max_count != arcs.brute_arc_count(cp.points, cp.angles, res.angular_width, n):
                ok = False
    checks.append({"name": "arc sweep vs window oracle", "scale": "N < 400", "ok": ok})

    return models.OracleCheckResponse(checks=checks, all_ok=all(c["ok"] for c in checks))


@app.post("/v1/accept", response_model=models.AcceptResponse)
def accept(req: models.AcceptRequest) -> models.AcceptResponse:
    from .. import acceptance

    results = acceptance.run_suite(req.suite)
    return models.AcceptResponse(
        suite=req.suite,
        passed=all(r.passed for r in results),
        criteria=[
            models.CriterionModel(
                id=r.id, name=r.name, passed=r.passed, measured=r.measured, seconds=r.seconds
            )
            for r in results
        ],
    )
