"""Scenario and report files.

Scenario files are JSON with explicit field names: one object per setting
(`{"bloch": [x, y, z]}` or `{"angle": t}`) plus an optional `state` that is
either a named state, an explicit 4x4 density matrix as row-major
`[re, im]` pairs, or null.  Report files wrap the typed payload together
with the tool version and an echo of the inputs.  Floats serialize through
`repr`, so every double round-trips exactly; the same holds for the CSV
sweep table.
"""

from __future__ import annotations

import json
from dataclasses import asdict

import numpy as np

from . import __version__
from .chsh import Report, Scenario
from .quantum import (
    BELL_STATE_NAMES,
    DensityMatrix,
    Observable,
    bell_state,
    maximally_mixed,
    observable_from_bloch,
)
from .sampler import PairCounts, RunResult, PAIR_LABELS
from .sweep import PlanarSettings, SweepResult, SweepRow

STATE_NAMES = BELL_STATE_NAMES + ("maximally_mixed",)
SWEEP_CSV_COLUMNS = ("phi", "comm_a_norm", "comm_b_norm", "max_s", "s_singlet")


class FormatError(Exception):
    """Malformed document structure (as opposed to invalid physics input)."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def observable_from_spec(spec, name: str) -> Observable:
    _require(isinstance(spec, dict), f"{name}: expected an object")
    if "bloch" in spec:
        vec = spec["bloch"]
        _require(
            isinstance(vec, (list, tuple)) and len(vec) == 3,
            f"{name}.bloch: expected three numbers",
        )
        try:
            return observable_from_bloch([float(c) for c in vec], label=name)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ValueError) and "unit length" in str(exc):
                raise ValueError(f"{name}.bloch: {exc}") from None
            raise FormatError(f"{name}.bloch: expected three numbers") from None
    if "angle" in spec:
        try:
            t = float(spec["angle"])
        except (TypeError, ValueError):
            raise FormatError(f"{name}.angle: expected a number") from None
        if not np.isfinite(t):
            raise ValueError(f"{name}.angle: must be finite, got {t!r}")
        return observable_from_bloch((np.sin(t), 0.0, np.cos(t)), label=name)
    raise FormatError(f"{name}: expected a 'bloch' or 'angle' field")


def state_from_spec(spec) -> DensityMatrix | None:
    if spec is None:
        return None
    if isinstance(spec, str):
        if spec == "maximally_mixed":
            return maximally_mixed(4)
        if spec in BELL_STATE_NAMES:
            return bell_state(spec)
        raise ValueError(
            f"state: unknown name {spec!r}; valid names: {', '.join(STATE_NAMES)}"
        )
    _require(isinstance(spec, dict) and "matrix" in spec, "state: expected a name or a 'matrix' object")
    rows = spec["matrix"]
    _require(isinstance(rows, list) and len(rows) == 4, "state.matrix: expected 4 rows")
    entries = np.zeros((4, 4), dtype=np.complex128)
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == 4, f"state.matrix[{i}]: expected 4 entries")
        for j, cell in enumerate(row):
            _require(
                isinstance(cell, (list, tuple)) and len(cell) == 2,
                f"state.matrix[{i}][{j}]: expected an [re, im] pair",
            )
            try:
                entries[i, j] = complex(float(cell[0]), float(cell[1]))
            except (TypeError, ValueError):
                raise FormatError(f"state.matrix[{i}][{j}]: expected numbers") from None
    try:
        return DensityMatrix(entries)
    except ValueError as exc:
        raise ValueError(f"state.matrix: {exc}") from None


def scenario_from_dict(doc) -> Scenario:
    _require(isinstance(doc, dict), "scenario: expected a JSON object")
    obs = {}
    for name in ("a1", "a2", "b1", "b2"):
        _require(name in doc, f"scenario: missing field {name!r}")
        obs[name] = observable_from_spec(doc[name], name)
    return Scenario(obs["a1"], obs["a2"], obs["b1"], obs["b2"], state=state_from_spec(doc.get("state")))


def parse_scenario(text: str) -> tuple[Scenario, dict]:
    """Parse scenario JSON; returns the scenario plus the raw echo dict."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return scenario_from_dict(doc), doc


def load_scenario(path) -> tuple[Scenario, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read())


# ---------------------------------------------------------------------------
# report payloads

def report_to_dict(r: Report) -> dict:
    return asdict(r)


def report_from_dict(d) -> Report:
    try:
        return Report(
            s_value=None if d["s_value"] is None else float(d["s_value"]),
            max_s_over_states=float(d["max_s_over_states"]),
            chsh_operator_norm=float(d["chsh_operator_norm"]),
            comm_a_norm=float(d["comm_a_norm"]),
            comm_b_norm=float(d["comm_b_norm"]),
            identity_residual=float(d["identity_residual"]),
            identity_sign=int(d["identity_sign"]),
            violates=bool(d["violates"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed analysis report: {exc}") from None


def run_result_to_dict(r: RunResult) -> dict:
    return {
        "seed": r.seed,
        "shots_per_pair": r.shots_per_pair,
        "counts": [
            {"pair": label, **asdict(c)} for label, c in zip(PAIR_LABELS, r.counts)
        ],
        "e_hat": list(r.e_hat),
        "s_hat": r.s_hat,
        "s_stderr": r.s_stderr,
    }


def run_result_from_dict(d) -> RunResult:
    try:
        counts = [
            PairCounts(pp=int(c["pp"]), pm=int(c["pm"]), mp=int(c["mp"]), mm=int(c["mm"]))
            for c in d["counts"]
        ]
        return RunResult(
            counts=counts,
            e_hat=[float(e) for e in d["e_hat"]],
            s_hat=float(d["s_hat"]),
            s_stderr=float(d["s_stderr"]),
            seed=int(d["seed"]),
            shots_per_pair=int(d["shots_per_pair"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed run result: {exc}") from None


def _settings_to_dict(ps: PlanarSettings) -> dict:
    return asdict(ps)


def _row_to_dict(row: SweepRow) -> dict:
    return {
        "phi": row.phi,
        "settings": _settings_to_dict(row.settings),
        "comm_a_norm": row.comm_a_norm,
        "comm_b_norm": row.comm_b_norm,
        "max_s": row.max_s,
        "s_singlet": row.s_singlet,
    }


def _row_from_dict(d) -> SweepRow:
    s = d["settings"]
    return SweepRow(
        phi=float(d["phi"]),
        settings=PlanarSettings(
            float(s["alpha1"]), float(s["alpha2"]), float(s["beta1"]), float(s["beta2"])
        ),
        comm_a_norm=float(d["comm_a_norm"]),
        comm_b_norm=float(d["comm_b_norm"]),
        max_s=float(d["max_s"]),
        s_singlet=float(d["s_singlet"]),
    )


def sweep_result_to_dict(r: SweepResult) -> dict:
    return {
        "phi_steps": r.phi_steps,
        "rows": [_row_to_dict(row) for row in r.rows],
        "best": _row_to_dict(r.best),
    }


def sweep_result_from_dict(d) -> SweepResult:
    try:
        return SweepResult(
            rows=[_row_from_dict(row) for row in d["rows"]],
            best=_row_from_dict(d["best"]),
            phi_steps=int(d["phi_steps"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed sweep result: {exc}") from None


def sweep_result_to_csv(r: SweepResult) -> str:
    lines = [",".join(SWEEP_CSV_COLUMNS)]
    for row in r.rows:
        lines.append(
            ",".join(
                repr(v)
                for v in (row.phi, row.comm_a_norm, row.comm_b_norm, row.max_s, row.s_singlet)
            )
        )
    return "\n".join(lines) + "\n"


def sweep_rows_from_csv(text: str) -> list[dict]:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    _require(bool(lines), "empty CSV")
    header = lines[0].split(",")
    _require(tuple(header) == SWEEP_CSV_COLUMNS, f"unexpected CSV header: {lines[0]!r}")
    out = []
    for ln in lines[1:]:
        cells = ln.split(",")
        _require(len(cells) == len(header), f"malformed CSV row: {ln!r}")
        out.append({k: float(v) for k, v in zip(header, cells)})
    return out


# ---------------------------------------------------------------------------
# document wrapper

def make_document(command: str, input_echo: dict, payload_key: str, payload: dict) -> dict:
    return {
        "tool": "chshlab",
        "version": __version__,
        "command": command,
        "input": input_echo,
        payload_key: payload,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    _require(isinstance(doc, dict) and "command" in doc, "missing 'command' field")
    return doc


def result_from_document(doc: dict):
    """Recover the typed payload of a report document."""
    command = doc["command"]
    if command == "analyze":
        return report_from_dict(doc["report"])
    if command == "simulate":
        return run_result_from_dict(doc["result"])
    if command == "sweep":
        return sweep_result_from_dict(doc["result"])
    raise FormatError(f"unknown report command {command!r}")
