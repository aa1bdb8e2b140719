"""Verification sweeps with machine-readable reports.

A suite run is configured by SuiteConfig, executes a chosen set of
checks over a chosen family of types, and returns one JSON-ready report:
metadata, the exact configuration, one record per individual check with
its parameters and an explicit counterexample on failure, and an
overall status.  Records are sorted canonically; the only
run-dependent fields are the timestamp and the per-record wall times.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from catx import __version__, linalg
from catx.charcalc import (
    STABILIZER_MODEL,
    FormalCharacter,
    order_axiom_records,
    verify_filtration,
)
from catx.errors import InputError, ResourceGuardError
from catx.incidence import (
    algebra_radical,
    all_subsets,
    build_incidence_algebra,
    cartan_and_ext,
    heredity_chain_check,
    krull_schmidt_decompose,
    regular_module,
)
from catx.rootsystem import build_root_system
from catx.weyl import enumerate_biclosed

CHECKS = ("biclosed", "filtration", "order-axioms", "algebra")
ITHETA_MODES = ("all-subsets", "full-only")
REPORT_SCHEMA_ID = "catx-report-1"

ALGEBRA_DIM_MAX = 6
ALGEBRA_CARTAN_MAX = 5
ALGEBRA_EXT_MAX = 4
ALGEBRA_HEREDITY_MAX = 4
ALGEBRA_SPLIT_MAX = 2

_TYPES_BY_RANK = {
    1: ("A1",),
    2: ("A2", "B2", "C2", "G2"),
    3: ("A3", "B3", "C3"),
    4: ("A4", "B4", "C4", "D4", "F4"),
    5: ("A5", "B5", "C5", "D5"),
    6: ("A6", "B6", "C6", "D6", "E6"),
}


def default_types(max_rank: int) -> tuple[str, ...]:
    out: list[str] = []
    for r in range(1, max_rank + 1):
        out.extend(_TYPES_BY_RANK.get(r, ()))
    return tuple(out)


@dataclass
class SuiteConfig:
    types: tuple[str, ...] = ()
    checks: tuple[str, ...] = CHECKS
    itheta_mode: str = "all-subsets"
    max_rank: int = 3
    seed: int = 1729
    sample_triples: int = 10000
    jprime_convention: str = "itheta-minus-j"
    theta_label: str = "theta"
    allow_large: bool = False

    def __post_init__(self) -> None:
        self.types = tuple(self.types)
        self.checks = tuple(self.checks)
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise InputError(f"unknown checks {sorted(unknown)}; known: {list(CHECKS)}")
        if not self.checks:
            raise InputError("at least one check is required")
        if self.itheta_mode not in ITHETA_MODES:
            raise InputError(
                f"unknown itheta mode {self.itheta_mode!r}; known: {list(ITHETA_MODES)}"
            )
        if self.max_rank < 1:
            raise InputError("max rank must be at least 1")
        if self.max_rank > 4 and not self.allow_large:
            raise ResourceGuardError(
                f"max rank {self.max_rank} needs allow_large (guard is 4)"
            )
        if not self.types:
            self.types = default_types(self.max_rank)
        for t in self.types:
            rs = build_root_system(t, allow_large=True)
            if rs.rank > self.max_rank:
                raise InputError(
                    f"type {t} has rank {rs.rank} above max rank {self.max_rank}"
                )


def _itheta_sets(rank: int, mode: str):
    if mode == "full-only":
        return [frozenset(range(1, rank + 1))]
    return list(all_subsets(rank))


def _timed(records: list[dict], producer) -> None:
    """Run the producer, then attach the wall-clock seconds of that call
    to every record it yielded."""
    t0 = time.perf_counter()
    batch = producer()
    dt = round(time.perf_counter() - t0, 6)
    for rec in batch:
        rec["wall_time_s"] = dt
        records.append(rec)


def _biclosed_records(cfg: SuiteConfig) -> list[dict]:
    records: list[dict] = []
    for t in cfg.types:
        def produce(t=t):
            rs = build_root_system(t, allow_large=cfg.allow_large)
            data = enumerate_biclosed(rs, allow_large=cfg.allow_large)
            order = rs.cartan_type.weyl_order()
            missing = [s for s, w in data if w is None]
            witnesses = [w for _, w in data if w is not None]
            passed = (
                not missing
                and len(data) == order
                and len(set(witnesses)) == len(data)
            )
            counterexample = None
            if missing:
                counterexample = {
                    "set_without_witness": sorted(map(list, missing[0]))
                }
            elif not passed:
                counterexample = {"n_biclosed": len(data), "weyl_order": order}
            return [
                {
                    "check": "biclosed",
                    "params": {"type": t, "n_positive_roots": len(rs.positive_roots)},
                    "passed": passed,
                    "counterexample": counterexample,
                }
            ]

        _timed(records, produce)
    return records


def _filtration_records(cfg: SuiteConfig) -> list[dict]:
    records: list[dict] = []
    for t in cfg.types:
        rs = build_root_system(t, allow_large=cfg.allow_large)
        for itheta in _itheta_sets(rs.rank, cfg.itheta_mode):
            theta = FormalCharacter(cfg.theta_label, itheta)
            _timed(
                records,
                lambda rs=rs, theta=theta: verify_filtration(
                    rs, theta, jprime_convention=cfg.jprime_convention
                ),
            )
    return records


def _order_records(cfg: SuiteConfig) -> list[dict]:
    records: list[dict] = []
    for t in cfg.types:
        rs = build_root_system(t, allow_large=cfg.allow_large)
        for itheta in _itheta_sets(rs.rank, cfg.itheta_mode):
            theta = FormalCharacter(cfg.theta_label, itheta)
            _timed(
                records,
                lambda rs=rs, theta=theta: order_axiom_records(
                    rs, theta, seed=cfg.seed, sample_triples=cfg.sample_triples
                ),
            )
    return records


def _algebra_records(cfg: SuiteConfig) -> list[dict]:
    records: list[dict] = []

    for n in range(ALGEBRA_DIM_MAX + 1):
        def produce_dim(n=n):
            a = build_incidence_algebra(n)
            _, series = algebra_radical(a)
            dim_ok = a.dim == 3**n
            series_ok = series[-1] == 0 and all(
                x > y for x, y in zip(series, series[1:])
            )
            passed = dim_ok and series_ok
            return [
                {
                    "check": "algebra-dimension",
                    "params": {"n": n},
                    "passed": passed,
                    "counterexample": None
                    if passed
                    else {"dim": a.dim, "radical_series": series},
                }
            ]

        _timed(records, produce_dim)

    for n in range(ALGEBRA_CARTAN_MAX + 1):
        def produce_cartan(n=n):
            a = build_incidence_algebra(n)
            cartan, ext1 = cartan_and_ext(a)
            det = linalg.det(cartan)
            contain_ok = all(
                cartan[i][j] == (1 if y <= z else 0)
                for i, y in enumerate(a.subsets)
                for j, z in enumerate(a.subsets)
            )
            covering = {
                p for p in a.basis if p[0] < p[1] and len(p[1] - p[0]) == 1
            }
            if n == 0:
                count_ok = not ext1
            elif n <= ALGEBRA_EXT_MAX:
                count_ok = len(ext1) == n * 2 ** (n - 1)
            else:
                count_ok = True
            ext_ok = set(ext1) == covering and count_ok
            passed = det == 1 and contain_ok and ext_ok
            return [
                {
                    "check": "algebra-cartan",
                    "params": {"n": n},
                    "passed": passed,
                    "counterexample": None
                    if passed
                    else {
                        "determinant": str(det),
                        "containment_matches": contain_ok,
                        "ext_count": len(ext1),
                    },
                }
            ]

        _timed(records, produce_cartan)

    for n in range(ALGEBRA_HEREDITY_MAX + 1):
        def produce_heredity(n=n):
            result = heredity_chain_check(build_incidence_algebra(n))
            return [
                {
                    "check": "algebra-heredity",
                    "params": {"n": n},
                    "passed": result["passed"],
                    "counterexample": None
                    if result["passed"]
                    else {"layers": result["layers"]},
                }
            ]

        _timed(records, produce_heredity)

    for n in range(1, ALGEBRA_SPLIT_MAX + 1):
        def produce_split(n=n):
            a = build_incidence_algebra(n)
            parts = krull_schmidt_decompose(a, regular_module(a), seed=cfg.seed)
            got = sorted(
                (m.total_dim, mult, cert) for m, mult, cert in parts
            )
            want = sorted((2 ** (n - len(y)), 1, True) for y in a.subsets)
            passed = got == want
            return [
                {
                    "check": "algebra-regular-split",
                    "params": {"n": n, "seed": cfg.seed},
                    "passed": passed,
                    "counterexample": None
                    if passed
                    else {"summands": [list(x) for x in got]},
                }
            ]

        _timed(records, produce_split)

    return records


_PRODUCERS = {
    "biclosed": _biclosed_records,
    "filtration": _filtration_records,
    "order-axioms": _order_records,
    "algebra": _algebra_records,
}


def run_suite(cfg: SuiteConfig) -> dict:
    records: list[dict] = []
    for check in CHECKS:
        if check in cfg.checks:
            records.extend(_PRODUCERS[check](cfg))
    records.sort(key=lambda r: (r["check"], json.dumps(r["params"], sort_keys=True)))
    return {
        "report_schema": REPORT_SCHEMA_ID,
        "tool_version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "stabilizer_model": STABILIZER_MODEL,
        "config": asdict(cfg) | {"types": list(cfg.types), "checks": list(cfg.checks)},
        "records": records,
        "overall_status": "pass" if all(r["passed"] for r in records) else "fail",
    }


def report_dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_to_csv(report: dict) -> str:
    """Flat one-row-per-record CSV view of a report."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "params", "passed", "counterexample", "wall_time_s"])
    for rec in report["records"]:
        writer.writerow(
            [
                rec["check"],
                json.dumps(rec["params"], sort_keys=True),
                "pass" if rec["passed"] else "fail",
                "" if rec["counterexample"] is None
                else json.dumps(rec["counterexample"], sort_keys=True),
                rec["wall_time_s"],
            ]
        )
    return buf.getvalue()
