"""Command-line interface.

Subcommands:

* ``scenario list`` - names of the built-in scenarios.
* ``run <name> [--gamma X] [--format text|json|svg] [--out PATH]`` - compute
  and render a built-in scenario's tensor (``<name>`` may also be a path to
  a scenario JSON file).
* ``tensor --pre FILE [--post FILE] [--format ...] [--out PATH]`` - tensor
  of custom states from single-state JSON files.
* ``evolve --family F --eps X [--eps2 X] [--phi X] --time T [--compare]`` -
  product-form or exact multiwise-interaction evolution with a phase report.
* ``realize --levels d --axes n`` - hypercube cell/basis table and diagonal.

Exit codes: 0 on success, 2 on usage errors, 1 on domain errors (the error
name is written to stderr).
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .dynamics import compare_states, exact_counterpart, phase_report, product_form
from .errors import WeakTensorError
from .realization import cell_to_basis, diagonal_cells
from .render import render_cube, render_grid
from .scenarios import SCENARIO_NAMES, Scenario, build_named, custom
from .schemefile import read_ket_file, read_scenario_file, render_document, scheme_document

_FAMILY_PARAMS = {
    "psit1": ("eps",),
    "E111": ("eps",),
    "Hamm2": ("eps", "eps2"),
    "GHZ2": ("phi",),
    "PsiGHZ11": ("phi", "eps"),
    "exact": ("eps",),
}

_REALIZE_TABLE_CAP = 4096


class _UsageError(Exception):
    pass


def _fmt(value: complex) -> str:
    return f"{value.real + 0.0:+.4f}"  # +0.0 folds IEEE -0.0 into +0.0


def _label_str(label, dims) -> str:
    joiner = "" if all(d <= 10 for d in dims) else ","
    return "|" + joiner.join(str(l) for l in label) + ">"


def _scenario_for(args) -> Scenario:
    name = args.name
    if name in SCENARIO_NAMES:
        if name == "hardy-gamma" and args.gamma is None:
            raise _UsageError("scenario hardy-gamma requires --gamma")
        return build_named(name, gamma=args.gamma, parties=args.parties, levels=args.levels)
    if os.path.exists(name):
        return read_scenario_file(name)
    raise _UsageError(
        f"unknown scenario {name!r}; expected one of {', '.join(SCENARIO_NAMES)} or a JSON file"
    )


def _emit(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out, "wb") as handle:
            handle.write(data)


def _render_scenario(scenario: Scenario, fmt: str, out: str | None) -> int:
    doc = scheme_document(scenario)
    if fmt == "text":
        tensor = doc.to_tensor()
        lines = [
            f"scenario: {doc.scenario}",
            f"kind: {doc.kind}",
            f"overlap: {doc.overlap.real + 0.0:+.4f}{doc.overlap.imag + 0.0:+.4f}i",
        ]
        if tensor.rank == 2:
            lines.append(render_grid(tensor, doc.labels).rstrip("\n"))
        elif tensor.rank == 3:
            lines.append(render_cube(tensor, doc.labels).rstrip("\n"))
        else:
            for label, value in zip(np.ndindex(*tensor.dims), tensor.components.reshape(-1)):
                lines.append(f"  {_label_str(label, tensor.dims)}  {_fmt(value)}")
        for axis, per_level in enumerate(doc.marginals):
            pairs = "  ".join(
                f"{lbl}={_fmt(v)}" for lbl, v in zip(doc.labels[axis], per_level)
            )
            lines.append(f"axis {axis} marginals: {pairs}")
        lines.append(f"total: {_fmt(doc.total)}")
        _emit(("\n".join(lines) + "\n").encode("utf-8"), out)
    else:
        _emit(render_document(doc, fmt), out)
    return 0


def _cmd_scenario(args) -> int:
    for name in SCENARIO_NAMES:
        print(name)
    return 0


def _cmd_run(args) -> int:
    return _render_scenario(_scenario_for(args), args.format, args.out)


def _cmd_tensor(args) -> int:
    pre = read_ket_file(args.pre)
    post = read_ket_file(args.post) if args.post else None
    return _render_scenario(custom(pre, post), args.format, args.out)


def _cmd_evolve(args) -> int:
    family = args.family
    for param in _FAMILY_PARAMS[family]:
        if getattr(args, param) is None:
            raise _UsageError(f"family {family} requires --{param}")
    params = {p: getattr(args, p) for p in ("eps", "eps2", "phi") if getattr(args, p) is not None}

    build = exact_counterpart if family == "exact" else product_form
    form_family = "psit1" if family == "exact" else family
    state = build(form_family, args.time, **params)
    reference = build(form_family, 0.0, **params)

    lines = [f"family: {family}", f"time: {args.time:g}"]
    lines.append("amplitudes:")
    for k in range(state.dim):
        value = state.amps[k]
        if abs(value) > 1e-12:
            label = _label_str(
                tuple(int(x) for x in np.unravel_index(k, state.dims)), state.dims
            )
            lines.append(f"  {label}  {value.real + 0.0:+.6f}{value.imag + 0.0:+.6f}i")
    lines.append("relative phases vs t=0:")
    for label, phase in phase_report(state, reference).items():
        lines.append(f"  {_label_str(label, state.dims)}  {phase:+.6f}")
    if args.compare:
        exact = exact_counterpart(form_family, args.time, **params)
        form = product_form(form_family, args.time, **params)
        report = compare_states(exact, form)
        lines.append("exact vs product form:")
        lines.append(f"  fidelity: {report.fidelity:.6f}")
        lines.append(f"  max component diff: {report.max_component_diff:.6f}")
    print("\n".join(lines))
    return 0


def _cmd_realize(args) -> int:
    levels, axes = args.levels, args.axes
    if levels < 2 or axes < 1:
        raise _UsageError(f"need --levels >= 2 and --axes >= 1, got {levels} and {axes}")
    if levels**axes > _REALIZE_TABLE_CAP:
        raise _UsageError(f"table of {levels}**{axes} cells exceeds the cap {_REALIZE_TABLE_CAP}")
    print("cell  basis")
    for cell in range(levels**axes):
        label = cell_to_basis(cell, levels, axes)
        print(f"{cell:>4}  ({','.join(str(d) for d in label)})")
    diag = diagonal_cells((levels,) * axes)
    print("diagonal cells: " + "  ".join("(" + ",".join(str(d) for d in l) + ")" for l in diag))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaktensor",
        description="Weak-value tensors of projector products for pre- and "
        "post-selected multi-qudit systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scenario = sub.add_parser("scenario", help="inspect built-in scenarios")
    scenario_sub = p_scenario.add_subparsers(dest="action", required=True)
    p_list = scenario_sub.add_parser("list", help="list scenario names")
    p_list.set_defaults(func=_cmd_scenario)

    p_run = sub.add_parser("run", help="compute and render a scenario tensor")
    p_run.add_argument("name", help="scenario name or path to a scenario JSON file")
    p_run.add_argument("--gamma", type=float, default=None, help="phase for hardy-gamma")
    p_run.add_argument("--parties", type=int, default=3, help="party count for ghz")
    p_run.add_argument("--levels", type=int, default=2, help="level count for ghz")
    p_run.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p_run.add_argument("--out", default=None, help="output path (default: stdout)")
    p_run.set_defaults(func=_cmd_run)

    p_tensor = sub.add_parser("tensor", help="tensor of custom states from JSON files")
    p_tensor.add_argument("--pre", required=True, help="pre-state JSON file")
    p_tensor.add_argument("--post", default=None, help="post-state JSON file")
    p_tensor.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p_tensor.add_argument("--out", default=None)
    p_tensor.set_defaults(func=_cmd_tensor)

    p_evolve = sub.add_parser("evolve", help="multiwise-interaction evolution")
    p_evolve.add_argument(
        "--family",
        required=True,
        choices=("psit1", "E111", "Hamm2", "GHZ2", "PsiGHZ11", "exact"),
        help="product-form family, or 'exact' for exact evolution of the "
        "two-EPR-pair system",
    )
    p_evolve.add_argument("--eps", type=float, default=None)
    p_evolve.add_argument("--eps2", type=float, default=None)
    p_evolve.add_argument("--phi", type=float, default=None)
    p_evolve.add_argument("--time", type=float, required=True)
    p_evolve.add_argument(
        "--compare", action="store_true", help="report exact vs product-form fidelity"
    )
    p_evolve.set_defaults(func=_cmd_evolve)

    p_realize = sub.add_parser("realize", help="hypercube cell/basis maps")
    p_realize.add_argument("--levels", type=int, required=True)
    p_realize.add_argument("--axes", type=int, required=True)
    p_realize.set_defaults(func=_cmd_realize)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WeakTensorError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
