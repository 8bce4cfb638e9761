"""Thin command-line client for the pfensembles service.

Commands run against a remote server when --server is given, otherwise
against the service mounted in-process. Exit codes: 0 success / all
identities pass, 1 identity failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click
import httpx


class _Client:
    """HTTP client bound either to a remote server or the in-process app."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=300.0)
        else:
            from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 422:
            detail = resp.json().get("detail", resp.text)
            raise click.UsageError(f"{detail}")
        resp.raise_for_status()
        return resp.json()


def _emit(data: dict, fmt: str, csv_rows=None, csv_header=None):
    if fmt == "json" or csv_rows is None:
        click.echo(json.dumps(data, indent=2))
        return
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(csv_header)
    writer.writerows(csv_rows)
    click.echo(buf.getvalue().rstrip("\n"))


server_option = click.option("--server", default=None, help="Base URL of a running service; defaults to in-process execution.")
format_option = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")


@click.group()
def main():
    """Exact measures on partitions and their Pfaffian ensembles."""


@main.command()
@click.option("--family", type=click.Choice(["z", "plancherel"]), default="z")
@click.option("--theta", default="2", help='Deformation parameter, e.g. "2" or "1/2".')
@click.option("--z", "z", default=None, help='Parameter z as "p/q" or "p/q+r/si".')
@click.option("--zprime", default=None)
@click.option("--xi", default=None, help="Mixing parameter in (0,1); selects the mixed measure.")
@click.option("--eta", default=None, help="Poisson intensity; selects the poissonized Plancherel measure.")
@click.option("--n", type=int, default=None, help="Fixed diagram size.")
@click.option("--max-size", type=int, default=None, help="Table over all diagrams up to this size.")
@server_option
@format_option
def measure(family, theta, z, zprime, xi, eta, n, max_size, server, fmt):
    """Tabulate a measure over diagrams (exact value and float)."""
    payload = {
        "family": family, "theta": theta, "z": z, "zprime": zprime,
        "xi": xi, "eta": eta, "n": n, "max_size": max_size,
    }
    data = _Client(server).post("/measure", payload)
    rows = [
        (
            json.dumps(r["partition"]),
            json.dumps(r["exact"]) if r.get("exact") else r.get("error", ""),
            r.get("value_float_re"),
            r.get("value_float_im"),
        )
        for r in data["rows"]
    ]
    _emit(data, fmt, rows, ["partition", "exact", "float_re", "float_im"])


@main.command()
@click.option("--suite", required=True,
              type=click.Choice(["normalization", "symmetry", "frobenius",
                                 "pfaffian", "theorems", "kernel"]))
@click.option("--max-n", type=int, default=None)
@click.option("--max-size", type=int, default=None)
@click.option("--radius", type=int, default=None, help="Window radius as 2x (kernel suite).")
@server_option
@format_option
def verify(suite, max_n, max_size, radius, server, fmt):
    """Run an identity-verification suite; exit code 1 on any failure."""
    payload = {"suite": suite, "max_n": max_n, "max_size": max_size, "radius": radius}
    data = _Client(server).post("/verify", payload)
    rows = [(c["name"], c["passed"], c["detail"]) for c in data["checks"]]
    _emit(data, fmt, rows, ["check", "passed", "detail"])
    if not data["passed"]:
        sys.exit(1)


def _spec_options(fn):
    fn = click.option("--kind", required=True,
                      type=click.Choice(["z_theta2", "z_half", "plancherel"]))(fn)
    fn = click.option("--z", default=None)(fn)
    fn = click.option("--zprime", default=None)(fn)
    fn = click.option("--xi", default=None)(fn)
    fn = click.option("--eta", default=None)(fn)
    return fn


@main.command()
@_spec_options
@click.option("--minus", default="", help="Comma-separated 2x encodings of negative points.")
@click.option("--plus", default="", help="Comma-separated 2x encodings of positive points.")
@server_option
@format_option
def ensemble(kind, z, zprime, xi, eta, minus, plus, server, fmt):
    """Pfaffian of L(X|X) for one configuration, against the closed form."""

    def parse_points(text):
        return [int(v) for v in text.split(",") if v.strip()]

    payload = {
        "kind": kind, "z": z, "zprime": zprime, "xi": xi, "eta": eta,
        "minus": parse_points(minus), "plus": parse_points(plus),
    }
    data = _Client(server).post("/ensemble/pf", payload)
    _emit(data, fmt)
    if not data["equal"]:
        sys.exit(1)


@main.command()
@_spec_options
@click.option("--radius", type=int, required=True, help="Window radius as 2x.")
@server_option
@format_option
def kernel(kind, z, zprime, xi, eta, radius, server, fmt):
    """Correlation-kernel entries on a finite window (floats, exact origin)."""
    payload = {"kind": kind, "z": z, "zprime": zprime, "xi": xi, "eta": eta,
               "radius": radius}
    data = _Client(server).post("/kernel", payload)
    rows = [
        (
            e["x"], e["y"],
            e["block"][0][0][0], e["block"][0][0][1],
            e["block"][0][1][0], e["block"][0][1][1],
            e["block"][1][0][0], e["block"][1][0][1],
            e["block"][1][1][0], e["block"][1][1][1],
            e["exact"],
        )
        for e in data["entries"]
    ]
    _emit(data, fmt, rows,
          ["x", "y", "k11_re", "k11_im", "k12_re", "k12_im",
           "k21_re", "k21_im", "k22_re", "k22_im", "exact"])


@main.command()
@click.option("--family", type=click.Choice(["z", "plancherel"]), default="plancherel")
@click.option("--theta", default="2")
@click.option("--z", default=None)
@click.option("--zprime", default=None)
@click.option("--xi", default=None)
@click.option("--n", type=int, default=None)
@click.option("--max-size", type=int, default=12)
@click.option("--count", type=int, default=1)
@click.option("--seed", type=int, default=0)
@server_option
@format_option
def sample(family, theta, z, zprime, xi, n, max_size, count, seed, server, fmt):
    """Draw exact i.i.d. samples; deterministic under a fixed seed."""
    payload = {"family": family, "theta": theta, "z": z, "zprime": zprime,
               "xi": xi, "n": n, "max_size": max_size, "count": count, "seed": seed}
    data = _Client(server).post("/sample", payload)
    rows = [(json.dumps(s),) for s in data["samples"]]
    _emit(data, fmt, rows, ["partition"])


@main.command()
@_spec_options
@click.option("--max-size", type=int, default=10)
@server_option
@format_option
def convergence(kind, z, zprime, xi, eta, max_size, server, fmt):
    """Partial sums of the Pf(J+L) expansion against the closed form."""
    payload = {"kind": kind, "z": z, "zprime": zprime, "xi": xi, "eta": eta,
               "max_size": max_size}
    data = _Client(server).post("/convergence", payload)
    rows = [
        (d["degree"], d["expected_mass_part"], d["residual_ok"])
        for d in data["degrees"]
    ]
    _emit(data, fmt, rows, ["degree", "expected_mass_part", "residual_ok"])
    if not all(d["residual_ok"] for d in data["degrees"]):
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
