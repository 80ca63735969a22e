"""Command-line front end.

The CLI is a thin client of the analysis service: every subcommand builds a
request, sends it to the FastAPI app (in-process by default, or to a remote
server given with --server), and renders the response.  No mathematics
happens here.

Exit codes: 0 = all structural checks verified, 1 = a violation was found,
2 = input or parameter error.
"""

from __future__ import annotations

import json
import sys

import click

from .fileio import canonical_json

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class ServiceClient:
    """HTTP client for the service; in-process ASGI when no server is given."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            # The in-process test client import can warn about the ambient
            # httpx/starlette pairing; that noise is not ours to surface.
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        resp = self._client.post(path, json=payload)
        try:
            body = resp.json()
        except json.JSONDecodeError:
            body = {"detail": resp.text}
        return resp.status_code, body


def _fail_input(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def _read_algebra_doc(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        _fail_input(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        _fail_input(f"parse error in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _post_or_die(client: ServiceClient, path: str, payload: dict) -> dict:
    status, body = client.post(path, payload)
    if status != 200:
        detail = body.get("detail", body)
        _fail_input(f"{path} rejected: {detail}")
    return body


def _field_payload(field: str) -> dict:
    if field == "Q":
        return {"kind": "Q"}
    if field.startswith("Fp:"):
        try:
            return {"kind": "Fp", "p": int(field.split(":", 1)[1])}
        except ValueError:
            _fail_input(f"bad field spec {field!r}")
    _fail_input(f"bad field spec {field!r} (use Q or Fp:<prime>)")


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; in-process if omitted.")
@click.pass_context
def main(ctx, server):
    """Construct and analyze primitive axial algebras of Jordan type."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.argument("kind", type=click.Choice(["U", "Uprime", "exc3", "B", "FxF"], case_sensitive=False))
@click.option("--field", default="Q", help="Q or Fp:<prime>.")
@click.option("--n", type=int, default=None, help="Number of generators (U, Uprime).")
@click.option("--lambda", "lam", default=None, help="Eigenvalue parameter, e.g. 3 or 1/2.")
@click.option("--phi", default=None, help="Projection parameter for B.")
@click.option("--out", type=click.Path(), default=None, help="Output file (stdout if omitted).")
@click.pass_obj
def make(client, kind, field, n, lam, phi, out):
    """Build a model algebra and write its JSON document."""
    kind_canon = {"u": "U", "uprime": "Uprime", "exc3": "exc3", "b": "B", "fxf": "FxF"}[kind.lower()]
    payload = {"kind": kind_canon, "field": _field_payload(field)}
    if n is not None:
        payload["n"] = n
    if lam is not None:
        payload["lam"] = lam
    if phi is not None:
        payload["phi"] = phi
    body = _post_or_die(client, "/make", payload)
    text = canonical_json(body["algebra"])
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=False)
    sys.exit(EXIT_OK)


def _verdict_exit(verdict: str) -> int:
    return EXIT_OK if verdict == "ok" else EXIT_VIOLATION


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
@click.option("--max-depth", type=int, default=32)
@click.option("--max-axes", type=int, default=128)
@click.option("--idempotents", is_flag=True, help="Include the idempotent inventory.")
@click.pass_obj
def analyze(client, file, as_json, max_depth, max_axes, idempotents):
    """Run every structural check on an algebra file."""
    doc = _read_algebra_doc(file)
    payload = {
        "algebra": doc,
        "options": {"max_depth": max_depth, "max_axes": max_axes, "idempotents": idempotents},
    }
    body = _post_or_die(client, "/analyze", payload)
    if as_json:
        click.echo(canonical_json(body), nl=False)
    else:
        _render_analysis(body)
    sys.exit(_verdict_exit(body["verdict"]))


def _render_analysis(body: dict):
    rep = body["report"]
    alg = rep["algebra"]
    fieldtxt = "Q" if alg["field"]["kind"] == "Q" else f"F_{alg['field']['p']}"
    click.echo(f"algebra: dim {alg['dim']} over {fieldtxt}")
    ax = [e for e in rep["basis_elements"] if e["primitive_axis"]]
    names = ", ".join(f"{e['name']} {e['type']}" for e in ax)
    click.echo(f"axes: {len(ax)} of {len(rep['basis_elements'])} basis vectors verified"
               + (f" ({names})" if ax else ""))
    click.echo(f"flexible: {'yes' if rep['flexible']['ok'] else 'NO'}")
    if rep.get("closure"):
        c = rep["closure"]
        click.echo(
            f"closure: span {c['span_dim']}/{alg['dim']}"
            f"{' (spanning)' if c['spanning'] else ''}, {c['axes_found']} axes, "
            f"truncated={'yes' if c['truncated'] else 'no'}"
        )
    if rep.get("decomposition") and "components" in rep["decomposition"]:
        d = rep["decomposition"]
        click.echo(
            f"decomposition: {len(d['components'])} component(s), "
            f"pairwise products zero: {'yes' if d['pairwise_products_zero'] else 'NO'}"
        )
        for k, comp in enumerate(d["components"]):
            click.echo(f"  [{k}] {comp['size']} axes, {comp['type']}, subalgebra dim {comp['subalgebra_dim']}")
    fr = rep.get("frobenius")
    if fr:
        if fr.get("ok"):
            click.echo(f"frobenius: ok, radical dim {fr['radical_dim']}, all X' norms 1")
        else:
            click.echo(f"frobenius: FAILED ({fr.get('error')})")
    if rep.get("idempotents"):
        idem = rep["idempotents"]
        if "brute_force" in idem:
            click.echo(f"idempotents (brute force): {idem['brute_force']['count']}")
        if "formula" in idem and "count" in idem["formula"]:
            click.echo(f"idempotents (formula, case {idem['formula']['case']}): {idem['formula']['count']}")
        if "comparison" in idem:
            click.echo(f"idempotent oracle comparison: {idem['comparison']}")
    if body["violations"]:
        click.echo("violations:")
        for v in body["violations"]:
            click.echo(f"  [{v['check']}] {v['detail']}")
    click.echo(f"verdict: {body['verdict']}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def idempotents(client, file, as_json):
    """Enumerate idempotents, with provenance (formula case vs brute force)."""
    doc = _read_algebra_doc(file)
    body = _post_or_die(client, "/idempotents", {"algebra": doc})
    if as_json:
        click.echo(canonical_json(body), nl=False)
        sys.exit(EXIT_OK)
    rep = body["report"]
    if "formula" in rep and "case" in rep.get("formula", {}):
        f = rep["formula"]
        click.echo(f"case: {f['case']}")
        for e in f.get("explicit", []):
            click.echo(f"  {e}   [formula]")
        for desc in f.get("families", []):
            click.echo(f"  family: {desc}   [formula]")
        for e in f.get("samples", []):
            click.echo(f"  sample: {e}")
        if "count" in f:
            click.echo(f"formula total: {f['count']}")
    if "brute_force" in rep:
        click.echo(f"brute force total: {rep['brute_force']['count']}")
        for e in rep["brute_force"]["members"]:
            click.echo(f"  {e}   [brute force]")
    if "comparison" in rep:
        click.echo(f"comparison: {rep['comparison']}")
        sys.exit(EXIT_OK if rep["comparison"] == "equal" else EXIT_VIOLATION)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.option("--max-depth", type=int, default=32)
@click.option("--max-axes", type=int, default=128)
@click.pass_obj
def decompose(client, file, as_json, max_depth, max_axes):
    """Split an algebra along the components of its axial graph."""
    doc = _read_algebra_doc(file)
    body = _post_or_die(
        client, "/decompose", {"algebra": doc, "max_depth": max_depth, "max_axes": max_axes}
    )
    if as_json:
        click.echo(canonical_json(body), nl=False)
    else:
        click.echo(
            f"components: {len(body['components'])}, spanning: {body['spanning']}, "
            f"truncated: {body['truncated']}"
        )
        for k, comp in enumerate(body["components"]):
            click.echo(f"  [{k}] {comp['size']} axes, {comp['type']}, dim {comp['subalgebra_dim']}")
            if comp.get("z_ideal"):
                z = comp["z_ideal"]
                click.echo(
                    f"      Z ideal: dim {z['dim']}, square zero: {z['square_zero']}, "
                    f"quotient splits: {z['quotient_splits']}"
                )
        for meet in body["intersections"]:
            click.echo(
                f"  intersection {meet['components']}: dim {meet['dim']}, "
                f"annihilating: {meet['annihilating']}"
            )
    ok = body["pairwise_products_zero"] and all(m["annihilating"] for m in body["intersections"])
    sys.exit(EXIT_OK if ok else EXIT_VIOLATION)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.option("--max-depth", type=int, default=32)
@click.option("--max-axes", type=int, default=128)
@click.pass_obj
def frobenius(client, file, as_json, max_depth, max_axes):
    """Build the normalized Frobenius form and report Gram, norms, radical."""
    doc = _read_algebra_doc(file)
    status, body = client.post(
        "/frobenius", {"algebra": doc, "max_depth": max_depth, "max_axes": max_axes}
    )
    if status != 200:
        detail = body.get("detail", body)
        if isinstance(detail, str) and any(
            key in detail for key in ("Failure", "TheoremViolation", "FormError")
        ):
            click.echo(f"frobenius violation: {detail}", err=True)
            sys.exit(EXIT_VIOLATION)
        _fail_input(f"/frobenius rejected: {detail}")
    if as_json:
        click.echo(canonical_json(body), nl=False)
        sys.exit(EXIT_OK)
    click.echo("basis: " + ", ".join(body["basis"]))
    click.echo("gram:")
    for row in body["gram"]:
        click.echo("  [" + ", ".join(row) + "]")
    click.echo(f"radical dim: {body['radical_dim']}")
    for r in body["radical"]:
        click.echo(f"  radical: {r}")
    click.echo("norms: " + ", ".join(body["norms"]))
    for v in body["a0_verdicts"]:
        click.echo(f"A0(a)^2 check for {v['axis']}: {v['verdict']}")
    sys.exit(EXIT_OK)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--out", type=click.Path(), default=None, help="Write DOT here (stdout if omitted).")
@click.option("--max-depth", type=int, default=32)
@click.option("--max-axes", type=int, default=128)
@click.pass_obj
def graph(client, file, out, max_depth, max_axes):
    """Export the axial graph as DOT (bold edges are strong)."""
    doc = _read_algebra_doc(file)
    body = _post_or_die(
        client, "/graph", {"algebra": doc, "max_depth": max_depth, "max_axes": max_axes}
    )
    if out:
        with open(out, "w") as fh:
            fh.write(body["dot"] + "\n")
        click.echo(f"wrote {out} ({body['vertices']} vertices, {body['edges']} edges)")
    else:
        click.echo(body["dot"])
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the analysis service."""
    import uvicorn

    uvicorn.run("axialalg.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
