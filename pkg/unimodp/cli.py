# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Command line front end
"""

import json
import logging
import sys
from functools import wraps
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence

import click

from .cgroup import c_correspond, c_d, c_param_classes, c_sweep, parse_c_param
from .config import ENV_OUTPUT_DIR, RunConfig
from .ffield import FieldTower
from .finituni import DEFAULT_BOUND, enumerate_group, validate_groups
from .hecke import validate_relations
from .langlands import (
    correspond,
    correspondence_checks,
    describe,
    no_stable_sweep,
    oracle_sweep,
    param_classes,
    parse_param,
    transfer,
)
from .reps import classify, packets, restrict_to_su
from .report import render, report_table, Table
from .types.core import Format, HalfTwist, prime_power, Variant
from .types.labels import PrincipalSeriesLabel
from .types.reports import Report

LOG = logging.getLogger(__name__)

# The statement each table reproduces, printed under its heading
SOURCES = {
    "classify": (
        "each irreducible mod-p representation of U(1,1) is exactly one of "
        "ω^k∘det, St ⊗ ω^k∘det, ind(μ_λ ω^r) with (r, λ) ≠ ((p−1)m, 1), "
        "or (ω^k∘det) ⊗ π_r"
    ),
    "packets": (
        "GU(1,1)-orbits: {π(k, r), π(k+r+1, p−1−r)} for supercuspidals, "
        "singletons otherwise"
    ),
    "principal": "ind(μ_λ ω^r) is irreducible and alone in its packet",
    "params": (
        "φ_{k,ℓ} ≅ φ_{ℓ,k}, ψ_{r,λ} ≅ ψ_{−pr,λ^{-1}}, φ_{k,k} ≅ ψ_{(1−p)k,−1}, "
        "and no other equivalences"
    ),
    "c_params": (
        "C-parameters: the L-parameter equivalences shifted by the central "
        "square root of ω₁, with d∘φ = ω₁"
    ),
    "correspond": (
        "regular φ_{k,ℓ} ↦ {π(ℓ, [k−ℓ−1]), π(k, [ℓ−k−1])}, "
        "ψ_{r,λ} ↦ the semisimplified principal series"
    ),
    "transfer": "ω^k ⊗ ω^ℓ on U(1)×U(1) transfers through ξ to the packet of φ_{k,ℓ}",
    "verify-hecke": (
        "e_r∗e_r = e_r, e_r∗e_s = 0 for r ≠ s, Σ e_r = T_1, and T_{n_s}, T_{n_s'} "
        "act on M_0, M_{q−1}, M_r by the supersingular table"
    ),
    "verify-groups": (
        "|U(1,1)(F_q)| = q(q+1)(q²−1), |SU(1,1)(F_q)| = q(q²−1), Γ = B ⊔ BsB, "
        "and the U-invariants of Sym^r are spanned by x^r"
    ),
    "verify-oracle": (
        "no parameter is stable, closed-form equivalence matches an explicit "
        "conjugating matrix, and regular φ_{k,ℓ} classes biject onto "
        "supercuspidal packets"
    ),
}


def config_options(fn: Callable) -> Callable:
    """Shared --p/--format/--output-dir options, folded into a RunConfig"""

    @click.option("--p", "p", type=int, default=3, show_default=True, help="odd prime")
    @click.option(
        "--lambda-ext",
        type=int,
        default=1,
        show_default=True,
        help="λ ranges over F_{p^K}^×",
    )
    @click.option(
        "--format",
        "fmt",
        type=click.Choice(Format.ALL),
        default=Format.JSON,
        show_default=True,
    )
    @click.option("--bound", type=int, default=DEFAULT_BOUND, show_default=True)
    @click.option(
        "--output-dir",
        type=click.Path(file_okay=False),
        envvar=ENV_OUTPUT_DIR,
        default=None,
        help=f"also write reports here [env: {ENV_OUTPUT_DIR}]",
    )
    @wraps(fn)
    def wrapper(
        p: int,
        lambda_ext: int,
        fmt: str,
        bound: int,
        output_dir: Optional[str],
        **kwargs: Any,
    ) -> Any:
        config = make_config(
            p=p, lambda_ext=lambda_ext, fmt=fmt, bound=bound, output_dir=output_dir
        )
        return fn(config, **kwargs)

    return wrapper


def make_config(**kwargs: Any) -> RunConfig:
    try:
        return RunConfig(**kwargs)
    except ValueError as e:
        raise click.UsageError(str(e)) from None


def enumerable(config: RunConfig) -> RunConfig:
    try:
        config.require_enumerable()
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    return config


def emit(config: RunConfig, command: str, table: Table) -> None:
    text = render(table, config.fmt)
    click.echo(text, nl=False)
    path = config.output_path(command)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        LOG.info("wrote %s", path)


def emit_report(
    config: RunConfig, command: str, report: Report, source: str
) -> None:
    emit(config, command, report_table(report, source))
    if not report.passed:
        for check in report.failures:
            click.secho(f"FAILED {check.name}: {check.detail}", fg="red", err=True)
        sys.exit(1)


def q_config(q: int, fmt: str, bound: int, output_dir: Optional[str]) -> RunConfig:
    try:
        p, f = prime_power(q)
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    config = make_config(p=int(p), f=f, fmt=fmt, bound=bound, output_dir=output_dir)
    return enumerable(config)


def q_options(fn: Callable) -> Callable:
    @click.option("--q", "q", type=int, required=True, help="residue field order p^f")
    @click.option(
        "--format",
        "fmt",
        type=click.Choice(Format.ALL),
        default=Format.JSON,
        show_default=True,
    )
    @click.option("--bound", type=int, default=DEFAULT_BOUND, show_default=True)
    @click.option(
        "--output-dir",
        type=click.Path(file_okay=False),
        envvar=ENV_OUTPUT_DIR,
        default=None,
    )
    @wraps(fn)
    def wrapper(
        q: int, fmt: str, bound: int, output_dir: Optional[str], **kwargs: Any
    ) -> Any:
        return fn(q_config(q, fmt, bound, output_dir), **kwargs)

    return wrapper


half_twist_option = click.option(
    "--half-twist",
    type=click.Choice(HalfTwist.ALL),
    default=HalfTwist.STANDARD,
    show_default=True,
)


@click.group()
@click.option("--debug", is_flag=True, help="log progress to stderr")
def main(debug: bool) -> None:
    """Mod-p representations and parameters of U(1,1)(Q_{p²}/Q_p)"""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command("classify")
@config_options
def classify_cmd(config: RunConfig) -> None:
    """List every irreducible representation label"""
    tower = config.tower(config.lambda_ext)
    rows = [
        (str(x), x, x.is_supercuspidal, str(restrict_to_su(tower, x)))
        for x in classify(tower, config.lambda_ext)
    ]
    size = config.p ** config.lambda_ext
    table = Table.build(
        title=f"irreducible mod-{config.p} representations of U(1,1)",
        source=f"{SOURCES['classify']} (λ over F_{size}^×)",
        columns=("name", "label", "supercuspidal", "su_restriction"),
        rows=rows,
    )
    emit(config, "classify", table)


@main.command("packets")
@config_options
def packets_cmd(config: RunConfig) -> None:
    """Partition the labels into GU(1,1)-orbits"""
    tower = config.tower(config.lambda_ext)
    rows: List[tuple] = []
    singletons: List[tuple] = []
    for x in packets(tower, config.lambda_ext):
        first = x.members[0]
        if isinstance(first, PrincipalSeriesLabel):
            singletons.append((str(x), x, first.r, first.lambda_))
        else:
            rows.append((str(x), x, len(x), first.is_supercuspidal))
    size = config.p ** config.lambda_ext
    principal = Table.build(
        title="principal-series singletons",
        source=f"{SOURCES['principal']} (λ over F_{size}^×)",
        columns=("name", "packet", "r", "lambda"),
        rows=singletons,
    )
    table = Table.build(
        title=f"L-packets of U(1,1), p={config.p}",
        source=SOURCES["packets"],
        columns=("name", "packet", "size", "supercuspidal"),
        rows=rows,
        sections=[principal],
    )
    emit(config, "packets", table)


@main.command("params")
@config_options
@click.option("--c-group", is_flag=True, help="list C-parameters instead")
@half_twist_option
def params_cmd(config: RunConfig, c_group: bool, half_twist: str) -> None:
    """List equivalence classes of parameters with their packets"""
    tower = config.tower(2)
    if c_group:
        rows = [
            (
                str(rep),
                rep,
                [str(x) for x in orbit],
                c_correspond(tower, rep),
                str(c_d(tower, rep, half_twist)),
            )
            for rep, orbit in c_param_classes(tower)
        ]
        columns = ("name", "param", "members", "packet", "d")
        title = f"C-parameters of U(1,1), p={config.p}"
        source = SOURCES["c_params"]
    else:
        rows = [
            (str(rep), rep, [str(x) for x in orbit], correspond(tower, rep))
            for rep, orbit in param_classes(tower)
        ]
        columns = ("name", "param", "members", "packet")
        title = f"L-parameters of U(1,1), p={config.p}"
        source = SOURCES["params"]
    table = Table.build(
        title=title,
        source=source,
        columns=columns,
        rows=rows,
    )
    emit(config, "params", table)


@main.command("correspond")
@config_options
@click.option("--param", "text", required=True, help='e.g. {"type":"endo","k":0,"l":1}')
def correspond_cmd(config: RunConfig, text: str) -> None:
    """The packet attached to one parameter"""
    tower = config.tower(2)
    try:
        if json.loads(text).get("type", "").startswith("c_"):
            param: Any = parse_c_param(tower, text)
            packet = c_correspond(tower, param)
            data = param.to_dict()
        else:
            param = parse_param(tower, text)
            packet = correspond(tower, param)
            data = describe(tower, param)
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise click.BadParameter(str(e), param_hint="--param") from None
    table = Table.build(
        title=f"correspondence, p={config.p}",
        source=SOURCES["correspond"],
        columns=("name", "param", "packet"),
        rows=[(str(param), data, packet)],
    )
    emit(config, "correspond", table)


@main.command("transfer")
@config_options
@click.option("--k", type=int, required=True)
@click.option("--l", "l", type=int, required=True)
def transfer_cmd(config: RunConfig, k: int, l: int) -> None:
    """Endoscopic transfer of ω^k ⊗ ω^ℓ"""
    tower = config.tower(2)
    packet = transfer(tower, k, l)
    table = Table.build(
        title=f"endoscopic transfer, p={config.p}",
        source=SOURCES["transfer"],
        columns=("k", "l", "packet"),
        rows=[(k % (config.p + 1), l % (config.p + 1), packet)],
    )
    emit(config, "transfer", table)


@main.group("verify")
def verify() -> None:
    """Check closed forms against brute-force oracles"""


@verify.command("hecke")
@q_options
def verify_hecke(config: RunConfig) -> None:
    report = validate_relations(config.q, bound=config.bound)
    emit_report(config, "verify-hecke", report, SOURCES["verify-hecke"])


@verify.command("groups")
@q_options
def verify_groups(config: RunConfig) -> None:
    report = validate_groups(config.q, bound=config.bound)
    emit_report(config, "verify-groups", report, SOURCES["verify-groups"])


@verify.command("oracle")
@config_options
@half_twist_option
def verify_oracle(config: RunConfig, half_twist: str) -> None:
    enumerable(config)
    tower = config.tower(2)
    report = oracle_sweep(tower)
    for extra in (
        no_stable_sweep(tower),
        correspondence_checks(tower),
        c_sweep(tower, half=half_twist),
    ):
        report = report.merge(extra)
    emit_report(config, "verify-oracle", report, SOURCES["verify-oracle"])


@main.command("dump-group")
@q_options
@click.option(
    "--variant", type=click.Choice(Variant.ALL), default=Variant.U, show_default=True
)
def dump_group(config: RunConfig, variant: str) -> None:
    """Enumerated group elements with subgroup markers, as json"""
    tower = FieldTower(config.p, config.f, config.f)
    table = enumerate_group(tower, variant, bound=config.bound)
    data = table.to_dict()
    text = json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
    click.echo(text, nl=False)
    if config.output_dir:
        path = Path(config.output_dir) / f"dump-group-{variant}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit status"""
    args: Optional[List[str]] = None if argv is None else list(argv)
    try:
        main.main(args=args, prog_name="unimodp", standalone_mode=True)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0
