"""FastAPI service exposing the exact-arithmetic ensemble computations."""

from __future__ import annotations

import math
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from ..exact import AlgebraicScalar, GaussianRational
from ..ensemble import (
    HKind,
    HSpec,
    l_submatrix,
    pf_closed_form,
    pfaffian,
)
from ..kernel import Window, kernel_K
from ..lattice import HalfInt, SplitConfig, is_confL
from ..measures import (
    JackParams,
    SingularParameterError,
    mixed_z_measure,
    per_degree_mass,
    plancherel_n,
    poisson_plancherel,
    z_measure_n,
)
from ..partitions import partitions_of, partitions_up_to
from ..sampling import (
    RNG_ALGORITHM,
    FixedSizeSampler,
    NonPositiveMeasureError,
    make_rng,
    mixed_z_sampler,
    plancherel_table,
    z_measure_table,
)
from ..verify import run_suite
from . import models

app = FastAPI(title="pfensembles", version="0.1.0")


def _parse_gr(text, name):
    if text is None:
        raise HTTPException(status_code=422, detail=f"missing parameter {name}")
    try:
        return GaussianRational.parse(text)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _parse_fraction(text, name):
    if text is None:
        raise HTTPException(status_code=422, detail=f"missing parameter {name}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=422, detail=f"bad {name}: {exc}")


def _spec_from(req) -> HSpec:
    try:
        if req.kind == "plancherel":
            return HSpec.plancherel(_parse_fraction(req.eta, "eta"))
        z = _parse_gr(req.z, "z")
        zp = _parse_gr(req.zprime, "zprime")
        xi = _parse_fraction(req.xi, "xi")
        if req.kind == "z_theta2":
            return HSpec.z_theta2(z, zp, xi)
        return HSpec.z_half(z, zp, xi)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _float_pair(value) -> tuple:
    c = value.to_complex()
    return c.real, c.imag


@app.post("/measure", response_model=models.MeasureResponse)
def measure(req: models.MeasureRequest) -> models.MeasureResponse:
    theta = _parse_fraction(req.theta, "theta")
    if req.n is None and req.max_size is None:
        raise HTTPException(status_code=422, detail="set either n or max_size")
    rows = []
    if req.family == "plancherel":
        if req.eta is not None:
            eta = _parse_fraction(req.eta, "eta")
            for lam in partitions_up_to(req.max_size if req.max_size is not None else req.n):
                tv = poisson_plancherel(lam, theta, eta)
                fre, fim = _float_pair(tv)
                rows.append(
                    models.MeasureRow(
                        partition=lam.to_json_obj(),
                        exact=tv.to_json_obj(),
                        value_float_re=fre,
                        value_float_im=fim,
                    )
                )
        else:
            if req.n is None:
                raise HTTPException(status_code=422, detail="plancherel table needs n or eta")
            for lam in partitions_of(req.n):
                v = plancherel_n(lam, theta)
                rows.append(
                    models.MeasureRow(
                        partition=lam.to_json_obj(),
                        exact={"value": str(v)},
                        value_float_re=float(v),
                        value_float_im=0.0,
                    )
                )
        return models.MeasureResponse(rows=rows)

    z = _parse_gr(req.z, "z")
    zp = _parse_gr(req.zprime, "zprime")
    params = JackParams(z, zp, theta)
    if req.xi is not None:
        xi = _parse_fraction(req.xi, "xi")
        for lam in partitions_up_to(req.max_size if req.max_size is not None else req.n):
            tv = mixed_z_measure(lam, params, xi)
            fre, fim = _float_pair(tv)
            rows.append(
                models.MeasureRow(
                    partition=lam.to_json_obj(),
                    exact=tv.to_json_obj(),
                    value_float_re=fre,
                    value_float_im=fim,
                )
            )
    else:
        if req.n is None:
            raise HTTPException(status_code=422, detail="fixed-size z table needs n")
        if req.n == 0:
            return models.MeasureResponse(
                rows=[
                    models.MeasureRow(
                        partition=[], exact={"value": "1"},
                        value_float_re=1.0, value_float_im=0.0,
                    )
                ]
            )
        for lam in partitions_of(req.n):
            try:
                v = z_measure_n(lam, params)
            except SingularParameterError as exc:
                rows.append(
                    models.MeasureRow(partition=lam.to_json_obj(), error=str(exc))
                )
                continue
            c = v.to_complex()
            rows.append(
                models.MeasureRow(
                    partition=lam.to_json_obj(),
                    exact={"value": str(v)},
                    value_float_re=c.real,
                    value_float_im=c.imag,
                )
            )
    return models.MeasureResponse(rows=rows)


@app.post("/verify", response_model=models.VerifyResponse)
def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    kwargs = {}
    if req.suite == "normalization" and req.max_n is not None:
        kwargs["max_n"] = req.max_n
    if req.suite in ("symmetry", "frobenius", "pfaffian", "theorems") and req.max_size is not None:
        kwargs["max_size"] = req.max_size
    if req.suite == "kernel" and req.radius is not None:
        kwargs["radius_twice"] = req.radius
    report = run_suite(req.suite, **kwargs)
    return models.VerifyResponse(
        suite=report["suite"],
        passed=report["passed"],
        checks=[models.VerifyCheck(**c) for c in report["checks"]],
    )


@app.post("/ensemble/pf", response_model=models.EnsemblePfResponse)
def ensemble_pf(req: models.EnsemblePfRequest) -> models.EnsemblePfResponse:
    spec = _spec_from(req)
    try:
        config = SplitConfig.from_json_obj({"minus": req.minus, "plus": req.plus})
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    pf = pfaffian(l_submatrix(spec, config))
    cf = pf_closed_form(spec, config)
    return models.EnsemblePfResponse(
        config=config.to_json_obj(),
        pfaffian=pf.to_json_obj(),
        closed_form=cf.to_json_obj(),
        equal=pf == cf,
        in_confL=is_confL(config),
    )


@app.post("/kernel", response_model=models.KernelResponse)
def kernel(req: models.KernelRequest) -> models.KernelResponse:
    spec = _spec_from(req)
    try:
        w = Window(HalfInt(req.radius))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    if len(w) > 12:
        raise HTTPException(status_code=422, detail="window too large for the exact path")
    K = kernel_K(spec, w)
    pts = w.points
    entries = []
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            block = []
            for a in range(2):
                row = []
                for b in range(2):
                    c = K.rows[2 * i + a][2 * j + b].to_complex()
                    row.append([c.real, c.imag])
                block.append(row)
            entries.append(models.KernelEntry(x=x.twice, y=y.twice, block=block))
    return models.KernelResponse(radius=req.radius, entries=entries)


@app.post("/sample", response_model=models.SampleResponse)
def sample(req: models.SampleRequest) -> models.SampleResponse:
    theta = _parse_fraction(req.theta, "theta")
    rng = make_rng(req.seed)
    tail = None
    try:
        if req.family == "plancherel":
            if req.n is None:
                raise HTTPException(status_code=422, detail="plancherel sampling needs n")
            sampler = FixedSizeSampler(plancherel_table(req.n, theta))
            samples = [sampler.sample(rng) for _ in range(req.count)]
        else:
            z = _parse_gr(req.z, "z")
            zp = _parse_gr(req.zprime, "zprime")
            params = JackParams(z, zp, theta)
            if req.xi is not None:
                xi = _parse_fraction(req.xi, "xi")
                sampler = mixed_z_sampler(params, xi, req.max_size)
                tail = sampler.tail_mass_float()
                samples = [sampler.sample(rng) for _ in range(req.count)]
            else:
                if req.n is None:
                    raise HTTPException(status_code=422, detail="fixed-size sampling needs n")
                sampler = FixedSizeSampler(z_measure_table(req.n, params))
                samples = [sampler.sample(rng) for _ in range(req.count)]
    except NonPositiveMeasureError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return models.SampleResponse(
        rng=RNG_ALGORITHM,
        seed=req.seed,
        samples=[s.to_json_obj() for s in samples],
        tail_mass_float=tail,
    )


@app.post("/convergence", response_model=models.ConvergenceResponse)
def convergence(req: models.ConvergenceRequest) -> models.ConvergenceResponse:
    spec = _spec_from(req)
    degrees = []
    partial = AlgebraicScalar.zero(spec.base)
    for n in range(req.max_size + 1):
        degree_sum = AlgebraicScalar.zero(spec.base)
        for lam in partitions_of(n):
            degree_sum = degree_sum + pfaffian(l_submatrix(spec, spec.embed(lam)))
        partial = partial + degree_sum
        if spec.kind is HKind.PLANCHEREL:
            expected = GaussianRational(
                spec.eta**n / math.factorial(n)
            )
        else:
            params = JackParams(spec.z, spec.zprime,
                                Fraction(2) if spec.kind is HKind.Z_THETA2 else Fraction(1, 2))
            expected = per_degree_mass(params, spec.xi, n)
        expected_scalar = AlgebraicScalar.from_value(expected, spec.base)
        degrees.append(
            models.ConvergenceDegree(
                degree=n,
                partial_sum=partial.to_json_obj(),
                expected_mass_part=str(expected),
                residual_ok=degree_sum == expected_scalar,
            )
        )
    if spec.kind is HKind.PLANCHEREL:
        closed = math.exp(float(spec.eta))
    else:
        t = (spec.z * spec.zprime / (Fraction(2) if spec.kind is HKind.Z_THETA2 else Fraction(1, 2)))
        closed = (float(1 - spec.xi) ** (-t.to_complex())).real
    pf_float = partial.to_complex().real
    return models.ConvergenceResponse(
        degrees=degrees,
        closed_form_float=closed,
        partial_float=pf_float,
        residual_float=abs(closed - pf_float),
    )
