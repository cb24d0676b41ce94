"""Command-line interface: inspect algebras, run verification suites,
construct negation witnesses.

Exit codes are a stable contract: 0 all checks passed, 1 at least one
suite case failed, 2 configuration or parse problem, 3 element outside the
supported witness corpus.
"""

from __future__ import annotations

import json
import sys

import click

from .automorphisms import is_automorphism
from .chevalley import LieAlgebra
from .cyclotomic import CyclotomicField
from .elements import parse_element, parse_scalar
from .errors import (
    EnumerationTooLargeError,
    InvalidTypeError,
    LieautError,
    NotApplicableError,
    NotNormalFormError,
    ParseError,
    WeylTooLargeError,
)
from .rootsystem import (
    cartan,
    longest_element,
    opposite_involution,
    weyl_order,
)
from . import suites as suite_mod

SUITE_NAMES = ("jacobi", "opposite", "dkk", "scalari", "campo", "inversa", "closure")
_ALIASES = {"automorphism-closure": "closure"}


def _fail_config(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


@click.group()
def main():
    """Exact Lie-algebra construction and local-automorphism checks."""


@main.command()
@click.option("--type", "family", required=True, help="Family letter A..G.")
@click.option("--rank", type=int, required=True)
@click.option("--field-order", type=int, default=24, show_default=True)
@click.option("--max-weyl", type=int, default=10**6, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def info(family, rank, field_order, max_weyl, fmt):
    """Dimensions, Weyl data and the structure-constant digest of a type."""
    try:
        cm = cartan(family, rank)
        algebra = LieAlgebra(cm, CyclotomicField(field_order))
    except (InvalidTypeError, ValueError) as exc:
        _fail_config(str(exc))
    order = weyl_order(cm)
    payload = {
        "type": f"{cm.family}{cm.rank}",
        "dimension": algebra.dim,
        "positive_roots": len(algebra.roots.positive),
        "weyl_order": order,
        "constants_digest": algebra.constants_digest(),
    }
    if order <= max_weyl:
        w0 = longest_element(cm, max_weyl)
        theta = opposite_involution(cm, max_weyl)
        payload["longest_word"] = [i + 1 for i in w0.word]
        payload["opposite_involution"] = [i + 1 for i in theta]
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
        return
    click.echo(f"type               {payload['type']}")
    click.echo(f"dimension          {payload['dimension']}")
    click.echo(f"positive roots     {payload['positive_roots']}")
    click.echo(f"Weyl order         {payload['weyl_order']}")
    if "longest_word" in payload:
        word = "".join(f"s{i}" for i in payload["longest_word"])
        click.echo(f"longest element    {word or 'e'}")
        click.echo(
            "opposite involution "
            + " ".join(
                f"{i + 1}->{j}" for i, j in enumerate(payload["opposite_involution"])
            )
        )
    click.echo(f"constants digest   {payload['constants_digest']}")


@main.group()
def suite():
    """Verification suite runner."""


def _resolve_suites(names: str, rank: int, nroots: int, max_roots: int) -> list[str]:
    if names == "all":
        selected = [s for s in SUITE_NAMES]
        if rank < 2:
            selected.remove("campo")
        if 2 * nroots > max_roots:
            selected.remove("dkk")
        if rank > 4:
            selected.remove("inversa")
        return selected
    out = []
    for raw in names.split(","):
        name = _ALIASES.get(raw.strip(), raw.strip())
        if name not in SUITE_NAMES:
            _fail_config(f"unknown suite {raw.strip()!r}")
        out.append(name)
    if not out:
        _fail_config("at least one suite must be selected")
    return out


@suite.command("run")
@click.option("--type", "families", multiple=True, required=True)
@click.option("--rank", "ranks", type=int, multiple=True, required=True)
@click.option("--suites", "names", default="all", show_default=True)
@click.option("--field-order", type=int, default=24, show_default=True)
@click.option("--samples", default="1,-1,2,1/2,z", show_default=True,
              help="Comma-separated scalar samples for the line identities.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--max-weyl", type=int, default=10**6, show_default=True)
@click.option("--max-roots", type=int, default=24, show_default=True)
def suite_run(families, ranks, names, field_order, samples, out_path, fmt,
              max_weyl, max_roots):
    """Run the selected suites over the listed types."""
    if len(families) != len(ranks):
        _fail_config("each --type needs a matching --rank")
    try:
        field = CyclotomicField(field_order)
        sample_ks = [parse_scalar(tok, field) for tok in samples.split(",") if tok]
    except (ParseError, ValueError) as exc:
        _fail_config(str(exc))
    runs = []
    digests = {}
    for family, rank in zip(families, ranks):
        try:
            cm = cartan(family, rank)
            algebra = LieAlgebra(cm, field)
            selected = _resolve_suites(names, rank, len(algebra.roots.positive),
                                       max_roots)
            reports = []
            for name in selected:
                reports.append(_run_suite(name, algebra, sample_ks, max_roots))
        except (InvalidTypeError, NotApplicableError, WeylTooLargeError,
                EnumerationTooLargeError, ValueError) as exc:
            _fail_config(f"{family}{rank}: {exc}")
        digests[f"{cm.family}{cm.rank}"] = algebra.constants_digest()
        runs.append((cm, reports))
    total = sum(r.total for _, reports in runs for r in reports)
    passed = sum(r.passed for _, reports in runs for r in reports)
    envelope = {
        "config": {
            "types": [f"{cm.family}{cm.rank}" for cm, _ in runs],
            "field_order": field_order,
            "suites": names,
            "samples": samples,
        },
        "constants_digest": digests,
        "reports": [
            dict(r.to_dict(), type=f"{cm.family}{cm.rank}")
            for cm, reports in runs
            for r in reports
        ],
        "summary": {"total": total, "passed": passed},
    }
    rendered = json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(rendered)
    if fmt == "json":
        click.echo(rendered, nl=False)
    else:
        for cm, reports in runs:
            for r in reports:
                status = "pass" if r.all_passed() else "FAIL"
                click.echo(
                    f"{cm.family}{cm.rank:<3} {r.suite:<10} "
                    f"{r.passed}/{r.total} {status}"
                )
                if not r.all_passed():
                    for case in r.cases:
                        if not case.passed:
                            click.echo(f"    failed: {case.case_id} ({case.inputs})")
        click.echo(f"total {passed}/{total}")
    sys.exit(0 if passed == total else 1)


def _run_suite(name, algebra, sample_ks, max_roots):
    if name == "jacobi":
        return suite_mod.jacobi_suite(algebra)
    if name == "opposite":
        return suite_mod.opposite_suite(algebra.roots)
    if name == "dkk":
        return suite_mod.dkk_suite(algebra, limit=max_roots)
    if name == "scalari":
        return suite_mod.scalari_suite(algebra)
    if name == "campo":
        return suite_mod.campo_suite(algebra, sample_ks)
    if name == "inversa":
        return suite_mod.inversa_corpus_suite(algebra)
    if name == "closure":
        return suite_mod.closure_suite(algebra)
    raise AssertionError(name)


@main.command()
@click.option("--type", "family", required=True)
@click.option("--rank", type=int, required=True)
@click.option("--element", "spec", required=True,
              help="Element expression, e.g. 'h1+2h2 + e(a1)'.")
@click.option("--field-order", type=int, default=24, show_default=True)
def witness(family, rank, spec, field_order):
    """Construct and verify an automorphism sending the element to its
    negative; prints the trace, the matrix and the verification result."""
    try:
        algebra = LieAlgebra(cartan(family, rank), CyclotomicField(field_order))
    except (InvalidTypeError, ValueError) as exc:
        _fail_config(str(exc))
    try:
        x = parse_element(spec, algebra)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    try:
        wit = suite_mod.minus_witness(algebra, x)
    except NotNormalFormError as exc:
        click.echo(f"unsupported element: {exc}", err=True)
        sys.exit(3)
    except LieautError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    verified = wit.verify(algebra)
    payload = {
        "type": f"{family.upper()}{rank}",
        "element": str(x),
        "witness": wit.describe(),
        "matrix": [[str(v) for v in row] for row in wit.map.rows],
        "is_automorphism": is_automorphism(algebra, wit.map),
        "verified": verified,
    }
    click.echo(json.dumps(payload, sort_keys=True, indent=2))
    sys.exit(0 if verified else 1)


if __name__ == "__main__":
    main()
