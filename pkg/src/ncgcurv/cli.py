"""Command dispatch and deterministic result reports.

Every command takes a scenario file and emits a ResultDocument, as text or
JSON.  Serialization is byte-identical for a fixed scenario, seed and
package version: floats are printed with 17 significant digits and all key
orders are fixed.  Exit codes: 0 all checks passed, 1 some check failed,
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, harness
from .curvature import (
    SIGN_CONVENTION_NOTE,
    correspondence_curvature,
    correspondence_decomposition_residual,
    curvature_report,
    external_product_defect,
    external_product_defect_ungraded,
    validate_vertical,
    wac_diagnostic,
)
from .fgpmod import (
    InvariantViolation,
    product_operator,
    spectrum,
    validate_connection,
    validate_module,
)
from .forms import junk_space, one_form_space, two_form_space
from .glinalg import spectral_norm
from .scenario import Scenario, ScenarioError, parse_scenario
from .submersion import submersion_invariants, jacobi_residual
from .triple import Check, validate

__all__ = ["ResultDocument", "main", "run"]

COMMANDS = (
    "validate",
    "forms",
    "junk",
    "curvature",
    "correspondence",
    "external",
    "product-spectrum",
    "submersion",
    "selftest",
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

SUBMERSION_INDEX_NOTE = (
    "submersion index conventions: S_pi[a][b][i] and Omega[i][j][a] with "
    "a, b vertical and i, j horizontal, all 0-based, vertical frame first"
)


def _fmt_float(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".17g")


def _dumps(obj) -> str:
    """Deterministic JSON with fixed 17-significant-digit float formatting."""
    if isinstance(obj, (np.bool_, np.floating, np.integer)):
        obj = obj.item()
    if obj is None or isinstance(obj, (bool, str, int)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _matrix_payload(mat: np.ndarray) -> list:
    mat = np.asarray(mat, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def _tensor_payload(arr: np.ndarray) -> list:
    return np.asarray(arr, dtype=float).tolist()


def _check_payload(c: Check) -> dict:
    return {
        "name": c.name,
        "value": float(c.value),
        "op": c.op,
        "threshold": float(c.threshold),
        "passed": bool(c.passed),
    }


@dataclass
class ResultDocument:
    command: str
    scenario_digest: str
    seed: int
    version: str
    checks: list[Check] = field(default_factory=list)
    values: dict = field(default_factory=dict)
    matrices: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        doc = {
            "command": self.command,
            "scenario_digest": self.scenario_digest,
            "seed": self.seed,
            "version": self.version,
            "passed": self.passed,
            "checks": [_check_payload(c) for c in self.checks],
            "values": self.values,
            "notes": list(self.notes),
        }
        if self.matrices is not None:
            doc["matrices"] = self.matrices
        return doc

    def to_json(self) -> str:
        return _dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [
            f"command:  {self.command}",
            f"scenario: {self.scenario_digest}",
            f"seed:     {self.seed}   version: {self.version}",
        ]
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.checks:
            lines.append("checks:")
            lines.extend("  " + str(c) for c in self.checks)
        if self.values:
            lines.append("values:")
            for k, v in self.values.items():
                if isinstance(v, float):
                    lines.append(f"  {k} = {_fmt_float(v)}")
                else:
                    lines.append(f"  {k} = {_dumps(v)}")
        if self.matrices:
            lines.append("matrices:")
            for k, v in self.matrices.items():
                lines.append(f"  {k} = {_dumps(v)}")
        lines.append("result: " + ("all checks passed" if self.passed else "CHECK FAILURE"))
        return "\n".join(lines)


def _need(scen: Scenario, attr: str, command: str):
    value = getattr(scen, attr)
    if value is None:
        raise ScenarioError(f"{command}: scenario has no '{attr}' section")
    return value


def _cmd_validate(scen: Scenario, tol: float, rank_tol: float):
    checks = list(validate(scen.triple, tol, rank_tol).checks)
    values = {"n": scen.triple.n, "d": scen.triple.d}
    if scen.module is not None:
        checks += validate_module(scen.module, tol)
        values["m"] = scen.module.m
    if scen.connection is not None:
        checks += validate_connection(scen.module, scen.connection, tol)
    if scen.vertical is not None:
        checks += validate_vertical(scen.vertical, tol)
    if scen.triple2 is not None:
        checks += [Check("triple2." + c.name, c.value, c.threshold, c.op)
                   for c in validate(scen.triple2, tol, rank_tol).checks]
    return checks, values, None, []


def _orthonormality_defect(basis) -> float:
    worst = 0.0
    for i, b1 in enumerate(basis):
        for j, b2 in enumerate(basis):
            worst = max(worst, abs(np.vdot(b1, b2) - (1.0 if i == j else 0.0)))
    return worst


def _cmd_forms(scen: Scenario, tol: float, rank_tol: float):
    one = one_form_space(scen.triple, rank_tol)
    two = two_form_space(scen.triple, rank_tol)
    checks = [
        Check("one_form_basis_orthonormal", _orthonormality_defect(one.basis), 1e-10),
        Check("two_form_basis_orthonormal", _orthonormality_defect(two.basis), 1e-10),
    ]
    values = {"one_form_dim": one.dim, "two_form_dim": two.dim}
    return checks, values, None, []


def _cmd_junk(scen: Scenario, tol: float, rank_tol: float):
    one = one_form_space(scen.triple, rank_tol)
    two = two_form_space(scen.triple, rank_tol)
    junk = junk_space(scen.triple, rank_tol)
    member = max((two.membership(j) for j in junk.basis), default=0.0)
    checks = [Check("junk_inside_two_forms", member, tol)]
    values = {
        "one_form_dim": one.dim,
        "two_form_dim": two.dim,
        "junk_dim": junk.dim,
    }
    return checks, values, None, []


def _cmd_curvature(scen: Scenario, tol: float, rank_tol: float, emit: bool):
    module = _need(scen, "module", "curvature")
    junk = junk_space(scen.triple, rank_tol)
    report = curvature_report(module, scen.connection, junk=junk,
                              tol=tol, rank_tol=rank_tol)
    checks = [
        Check("route_residual", report.route_residual, tol),
        Check("curvature_even", report.evenness_residual, tol),
        Check("curvature_support", report.support_residual, tol),
    ]
    hermitian = scen.connection is None or scen.connection.hermitian
    if hermitian:
        checks.append(Check("curvature_symmetric", report.symmetry_residual, tol))
    values = {"norm": report.norm, "junk_dim": junk.dim}
    matrices = None
    if emit:
        matrices = {
            "curvature": _matrix_payload(report.R),
            "junk_canonical": _matrix_payload(report.junk_canonical),
        }
    return checks, values, matrices, [SIGN_CONVENTION_NOTE]


def _cmd_correspondence(scen: Scenario, tol: float, rank_tol: float, emit: bool):
    module = _need(scen, "module", "correspondence")
    vertical = _need(scen, "vertical", "correspondence")
    checks = list(validate_vertical(vertical, tol))
    corr = correspondence_curvature(module, scen.connection, vertical, tol)
    residual = correspondence_decomposition_residual(module, scen.connection,
                                                     vertical, tol)
    checks.append(Check("correspondence_decomposition", residual, tol))
    values = {
        "norm": spectral_norm(corr),
        "wac_diagnostic": wac_diagnostic(module, scen.connection, vertical, tol),
    }
    matrices = {"correspondence_curvature": _matrix_payload(corr)} if emit else None
    return checks, values, matrices, [SIGN_CONVENTION_NOTE]


def _cmd_external(scen: Scenario, tol: float, rank_tol: float, emit: bool):
    st2 = _need(scen, "triple2", "external")
    defect = external_product_defect(scen.triple, st2)
    control = external_product_defect_ungraded(scen.triple, st2)
    bound = (spectral_norm(scen.triple.dirac) + spectral_norm(st2.dirac)) ** 2
    defect_norm = spectral_norm(defect)
    checks = [Check("external_product_defect", defect_norm, 1e-12 * bound)]
    values = {
        "defect_norm": defect_norm,
        "bound": bound,
        "ungraded_control_norm": spectral_norm(control),
    }
    matrices = {"defect": _matrix_payload(defect)} if emit else None
    return checks, values, matrices, []


def _cmd_product_spectrum(scen: Scenario, tol: float, rank_tol: float):
    module = _need(scen, "module", "product-spectrum")
    op = product_operator(module, scen.connection, tol)
    checks = op.validate(tol)
    checks.append(Check("product_op_symmetric", op.symmetry_residual(), tol))
    eigs = spectrum(op, tol)
    values = {"rank": len(eigs), "spectrum": [float(v) for v in eigs]}
    return checks, values, None, []


def _cmd_submersion(scen: Scenario, tol: float, rank_tol: float):
    frame = _need(scen, "frame", "submersion")
    inv = submersion_invariants(frame)
    sym = float(np.max(np.abs(inv.S_pi - np.transpose(inv.S_pi, (1, 0, 2))))) \
        if inv.S_pi.size else 0.0
    antisym = float(np.max(np.abs(inv.Omega + np.transpose(inv.Omega, (1, 0, 2))))) \
        if inv.Omega.size else 0.0
    checks = [
        Check("second_fundamental_symmetric", sym, 1e-12),
        Check("fibration_curvature_antisymmetric", antisym, 1e-12),
    ]
    if scen.frame_is_canned:
        checks.append(Check("jacobi_identity", jacobi_residual(frame), 1e-12))
    values = {
        "dim_total": frame.dim_total,
        "dim_fiber": frame.dim_fiber,
        "jacobi_residual": jacobi_residual(frame),
        "second_fundamental_form": _tensor_payload(inv.S_pi),
        "mean_curvature": _tensor_payload(inv.k),
        "fibration_curvature": _tensor_payload(inv.Omega),
    }
    return checks, values, None, [SUBMERSION_INDEX_NOTE]


def run(command: str, scen: Scenario | None, tol: float | None = None,
        rank_tol: float | None = None, seed: int | None = None,
        emit_matrices: bool = False) -> ResultDocument:
    """Dispatch one command against a parsed scenario."""
    if command not in COMMANDS:
        raise ScenarioError(f"unknown command {command!r}")
    if command != "selftest" and scen is None:
        raise ScenarioError(f"{command}: a scenario file is required")

    if scen is not None:
        tol = scen.residual_tol if tol is None else tol
        rank_tol = scen.rank_tol if rank_tol is None else rank_tol
        seed = scen.seed if seed is None else seed
    tol = 1e-8 if tol is None else tol
    rank_tol = 1e-9 if rank_tol is None else rank_tol
    seed = 0 if seed is None else seed

    doc = ResultDocument(
        command=command,
        scenario_digest=scen.digest if scen is not None else "none",
        seed=seed,
        version=__version__,
    )
    try:
        if command == "validate":
            checks, values, matrices, notes = _cmd_validate(scen, tol, rank_tol)
        elif command == "forms":
            checks, values, matrices, notes = _cmd_forms(scen, tol, rank_tol)
        elif command == "junk":
            checks, values, matrices, notes = _cmd_junk(scen, tol, rank_tol)
        elif command == "curvature":
            checks, values, matrices, notes = _cmd_curvature(scen, tol, rank_tol,
                                                             emit_matrices)
        elif command == "correspondence":
            checks, values, matrices, notes = _cmd_correspondence(
                scen, tol, rank_tol, emit_matrices)
        elif command == "external":
            checks, values, matrices, notes = _cmd_external(scen, tol, rank_tol,
                                                            emit_matrices)
        elif command == "product-spectrum":
            checks, values, matrices, notes = _cmd_product_spectrum(scen, tol, rank_tol)
        elif command == "submersion":
            checks, values, matrices, notes = _cmd_submersion(scen, tol, rank_tol)
        else:  # selftest
            checks = harness.selftest(seed)
            values = {"seed": seed, "scenarios_per_family": 20}
            matrices, notes = None, []
    except InvariantViolation as exc:
        doc.checks.append(exc.check)
        doc.notes.append(f"aborted: {exc}")
        return doc

    doc.checks.extend(checks)
    doc.values.update(values)
    doc.matrices = matrices
    doc.notes.extend(notes)
    return doc


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ncgcurv",
        description="Curvature workbench for finite-dimensional spectral triples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name, help=f"run the {name} computation")
        if name == "selftest":
            cmd.add_argument("scenario", nargs="?", default=None,
                             help="optional scenario file (supplies the seed)")
        else:
            cmd.add_argument("scenario", help="scenario JSON file")
        cmd.add_argument("--tol", type=float, default=None,
                         help="residual tolerance (default 1e-8 or scenario value)")
        cmd.add_argument("--rank-tol", type=float, default=None,
                         help="rank threshold (default 1e-9 or scenario value)")
        cmd.add_argument("--seed", type=int, default=None,
                         help="seed override for randomized checks")
        cmd.add_argument("--emit-matrices", action="store_true",
                         help="include matrix payloads in the report")
        cmd.add_argument("--format", choices=("text", "json"), default="text")
    args = parser.parse_args(argv)

    try:
        scen = parse_scenario(args.scenario) if args.scenario is not None else None
        doc = run(args.command, scen, tol=args.tol, rank_tol=args.rank_tol,
                  seed=args.seed, emit_matrices=args.emit_matrices)
    except ScenarioError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(doc.to_json() if args.format == "json" else doc.to_text())
    return EXIT_OK if doc.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
