"""Loading and validation of the Calabi-Yau case registry."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .series import qparse
from .toric import CYCase, node_count


@dataclass(frozen=True)
class RegistryCase:
    case: CYCase
    expected_Y: tuple[int, int, int]
    expected_alpha: int
    expected_p: int
    kz3_numerator: tuple
    kz3_denominator: tuple
    pf_max_zdeg: int
    series_order: int


class RegistryError(ValueError):
    pass


def _load_json(path: str | Path | None) -> dict:
    if path is None:
        with resources.files("grasscy.data").joinpath("cases.json").open() as fh:
            return json.load(fh)
    with open(path) as fh:
        return json.load(fh)


def registry_load(path: str | Path | None = None) -> dict[str, RegistryCase]:
    data = _load_json(path)
    out: dict[str, RegistryCase] = {}
    for rec in data["cases"]:
        case = CYCase(
            name=rec["name"],
            k=rec["k"],
            n=rec["n"],
            degrees=tuple(rec["degrees"]),
            strata_degrees=tuple(rec["strata_degrees"]),
            h11=rec["h11"],
            h21=rec["h21"],
            instantons=tuple(rec["instantons"]) if rec["instantons"] else None,
            notes=rec.get("notes", ""),
        )
        if rec["chi"] != 2 * (rec["h11"] - rec["h21"]):
            raise RegistryError(f"{case.name}: chi != 2(h11 - h21)")
        if rec["alpha"] != case.alpha:
            raise RegistryError(f"{case.name}: alpha != (k-1)(n-k-1)")
        if rec["p"] != node_count(case):
            raise RegistryError(f"{case.name}: node count disagrees with strata degrees")
        ey = tuple(rec["expected_Y"])
        if ey[2] != 2 * (ey[0] - ey[1]):
            raise RegistryError(f"{case.name}: chi(Y) != 2(h11(Y) - h21(Y))")
        out[case.name] = RegistryCase(
            case=case,
            expected_Y=ey,
            expected_alpha=rec["alpha"],
            expected_p=rec["p"],
            kz3_numerator=tuple(qparse(c) for c in rec["kz3_numerator"]),
            kz3_denominator=tuple(qparse(c) for c in rec["kz3_denominator"]),
            pf_max_zdeg=rec["pf_max_zdeg"],
            series_order=rec["series_order"],
        )
    return out
