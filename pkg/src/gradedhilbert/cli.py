"""Command-line front end.

Group specifications
--------------------
``--group`` takes a preset, a JSON object, or a path to a JSON file.

Presets::

    cyclic:N   dihedral:N   symmetric:N   product:SPEC+SPEC[+SPEC...]

JSON objects::

    {"kind": "cyclic", "n": 6}
    {"kind": "dihedral", "n": 4}          # order 2n
    {"kind": "symmetric", "n": 4}         # n <= 6
    {"kind": "product", "factors": [{...}, {...}]}
    {"kind": "table", "table": [[0, 1], [1, 0]], "labels": ["e", "a"]}

Element labels: cyclic groups use ``"0".."n-1"``; dihedral groups use
``"e", "r", "r^2", ..., "s", "r s", "r^2 s", ...``; symmetric groups use
1-based cycle notation (``"()"``, ``"(1 2)"``, ``"(1 2 3)"``, ...); products
use ``"(a,b)"``.

Dimensions
----------
``--dims`` takes inline JSON or a file path: an object mapping element labels
(or indices, as strings) to nonnegative integers.  Missing elements get 0.
A plain JSON list of length |G| is accepted too.

Report JSON
-----------
All integers are decimal strings.  Top-level fields::

    group        {"spec": str, "order": str, "labels": [str]}
    dims         {label: str}
    d            str
    series       {"num": [str], "den": [str]}        reduced, constant terms 1
    raw          {"p": [str], "r": [str], "q": [str]}
    expansion    [str]                                coefficients t^0..t^N
    components   {label: {"num": [...], "den": [...]}}   only with --check components
    generators   {"closed_form": {"num", "den"}, "prefix": [str], "count": str | null}
    verdict      {"finitely_generated": bool, "reason": str,
                  "outside_paper_theorems": bool, "support": [label],
                  "trivial_support_order": str | null}
    checks       {name: {"passed": bool, ...}}        one entry per enabled check
    timing_ms    number

Exit status: 0 when every enabled check passes, 2 when one fails, 1 on bad
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import groups as G
from .finite_generation import (
    Reason,
    classify_grading,
    generator_count_trivial,
    generator_series,
    generator_total,
    is_finitely_generated,
    trivial_grading_series,
)
from .grading import DimVector
from .hilbert import hilbert_components, hilbert_identity, verify_structure
from .oracle import compare_prefix, cross_check, tensor_dimensions
from .poly import ONE, IntPoly, RatFun, expand, format_poly, reduce

CHECKS = ("oracle", "structure", "fg", "components")
DEFAULT_CHECKS = ("oracle", "structure", "fg")


class InputError(ValueError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


# --- parsing ----------------------------------------------------------------


def _positive_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(where, f"expected an integer, got {value!r}")
    return value


def group_from_json(obj: Any, where: str = "group") -> G.Group:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError(where, 'expected an object with a "kind" field')
    kind = obj["kind"]
    try:
        if kind in ("cyclic", "dihedral", "symmetric"):
            if "n" not in obj:
                raise InputError(where, f'"{kind}" needs "n"')
            n = _positive_int(obj["n"], f"{where}.n")
            return {"cyclic": G.cyclic, "dihedral": G.dihedral, "symmetric": G.symmetric}[kind](n)
        if kind == "product":
            factors = obj.get("factors")
            if not isinstance(factors, list) or not factors:
                raise InputError(where, '"product" needs a nonempty "factors" list')
            parts = [group_from_json(f, f"{where}.factors[{i}]") for i, f in enumerate(factors)]
            out = parts[0]
            for h in parts[1:]:
                out = G.direct_product(out, h)
            return out
        if kind == "table":
            table = obj.get("table")
            if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
                raise InputError(where, '"table" must be a list of lists')
            return G.from_cayley_table(table, obj.get("labels"))
    except (G.NotAGroup, G.BoundExceeded, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(where, str(exc)) from exc
    raise InputError(where, f"unknown kind {kind!r}")


def parse_preset(text: str) -> dict:
    """``cyclic:4`` -> ``{"kind": "cyclic", "n": 4}``; ``product:a+b`` nests."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InputError("--group", f"cannot parse preset {text!r}")
    if kind == "product":
        return {"kind": "product", "factors": [parse_preset(p) for p in rest.split("+")]}
    if kind not in ("cyclic", "dihedral", "symmetric"):
        raise InputError("--group", f"unknown preset kind {kind!r}")
    try:
        n = int(rest)
    except ValueError:
        raise InputError("--group", f"preset {text!r} needs an integer parameter") from None
    return {"kind": kind, "n": n}


def _load_json_arg(text: str, where: str) -> Any:
    if os.path.isfile(text):
        with open(text) as fh:
            source = fh.read()
    else:
        source = text
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise InputError(where, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_group_arg(text: str) -> tuple[G.Group, Any]:
    if os.path.isfile(text) or text.lstrip().startswith("{"):
        spec = _load_json_arg(text, "--group")
    else:
        spec = parse_preset(text)
    return group_from_json(spec), spec


def dims_from_json(g: G.Group, obj: Any, where: str = "--dims") -> DimVector:
    if isinstance(obj, list):
        if len(obj) != g.order:
            raise InputError(where, f"list has {len(obj)} entries, group order is {g.order}")
        items = [(str(i), v) for i, v in enumerate(obj)]
        by_index = True
    elif isinstance(obj, dict):
        items = list(obj.items())
        by_index = False
    else:
        raise InputError(where, "expected an object mapping elements to dimensions")
    dims = [0] * g.order
    seen: dict[int, str] = {}
    for key, value in items:
        if by_index:
            idx = int(key)
        elif key in g.labels:
            idx = g.labels.index(key)
        else:
            try:
                idx = int(key)
            except ValueError:
                raise InputError(f"{where}[{key!r}]", "no element with this label") from None
            if not 0 <= idx < g.order:
                raise InputError(f"{where}[{key!r}]", f"index out of range 0..{g.order - 1}")
        if isinstance(value, str) and value.strip().isdigit():
            value = int(value)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InputError(f"{where}[{key!r}]", f"expected a nonnegative integer, got {value!r}")
        if idx in seen:
            raise InputError(f"{where}[{key!r}]", f"element already given as {seen[idx]!r}")
        seen[idx] = key
        dims[idx] = value
    return DimVector(tuple(dims))


@dataclass
class JobSpec:
    group: G.Group
    dims: DimVector
    expand_to: int = 30
    checks: tuple[str, ...] = DEFAULT_CHECKS
    group_spec: Any = None

    def __post_init__(self):
        if self.expand_to < 0:
            raise InputError("--expand", "must be >= 0")
        if len(self.dims) != self.group.order:
            raise InputError("--dims", f"{len(self.dims)} entries for a group of order {self.group.order}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise InputError("--check", f"unknown checks {sorted(unknown)}; choose from {', '.join(CHECKS)}")


@dataclass
class Report:
    data: dict = field(default_factory=dict)
    result: Any = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.data["checks"].values())

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 2

    def to_json(self, with_timing: bool = True) -> str:
        data = self.data if with_timing else {k: v for k, v in self.data.items() if k != "timing_ms"}
        return json.dumps(data, indent=2)


# --- running ----------------------------------------------------------------


def _strs(xs) -> list[str]:
    return [str(x) for x in xs]


def _fg_check(res, verdict, gens, expansion, n: int) -> dict:
    cls = classify_grading(res.dims)
    out: dict[str, Any] = {}
    if cls.trivial:
        r = verdict.trivial_support_order
        expected = trivial_grading_series(res.d, r)
        count = generator_count_trivial(res.d, r)
        g_expected = reduce(IntPoly([0] * r + [count]), ONE)
        out["trivial_closed_form"] = res.series == expected
        out["generator_count_matches"] = generator_total(gens) == count and gens.closed_form == g_expected
        out["verdict_matches_theorem"] = verdict.finitely_generated
    elif res.dims[0] > 0:
        out["verdict_matches_theorem"] = not verdict.finitely_generated
    # 1 / (1 - g) must re-expand to P
    back = reduce(gens.closed_form.den, gens.closed_form.den - gens.closed_form.num)
    out["generators_reexpand"] = expand(back, n) == expansion
    out["generators_nonnegative"] = all(c >= 0 for c in gens.coeffs)
    out["passed"] = all(out.values())
    return out


def run(job: JobSpec) -> Report:
    t0 = time.perf_counter()
    g, dims, n = job.group, job.dims, job.expand_to
    res = hilbert_identity(g, dims)
    expansion = expand(res.series, n)
    verdict = is_finitely_generated(res)
    gens = generator_series(res, n)
    total = generator_total(gens) if verdict.finitely_generated else None

    data: dict[str, Any] = {
        "group": {
            "spec": json.dumps(job.group_spec, sort_keys=True) if job.group_spec is not None else None,
            "order": str(g.order),
            "labels": list(g.labels),
        },
        "dims": {g.labels[i]: str(v) for i, v in enumerate(dims)},
        "d": str(res.d),
        "series": res.series.to_json(),
        "raw": {"p": res.p_raw.to_json(), "r": res.r_raw.to_json(), "q": res.q.to_json()},
        "expansion": _strs(expansion),
    }

    checks: dict[str, dict] = {}
    if "components" in job.checks:
        comps = hilbert_components(g, dims)
        data["components"] = {g.labels[x]: f.to_json() for x, f in enumerate(comps)}
        table = tensor_dimensions(g, dims, n)
        mismatches = {}
        for x, f in enumerate(comps):
            cc = compare_prefix(expand(f, n), table.column(x))
            if not cc:
                mismatches[g.labels[x]] = str(cc.first_mismatch)
        total_series = RatFun(IntPoly([0]), ONE)
        for f in comps:
            total_series = total_series + f
        partition = total_series == reduce(ONE, IntPoly([1, -res.d]))
        checks["components"] = {
            "passed": not mismatches and partition and comps[0] == res.series,
            "partition_identity": partition,
            "mismatches": mismatches,
        }

    data["generators"] = {
        "closed_form": gens.closed_form.to_json(),
        "prefix": _strs(gens.coeffs),
        "count": None if total is None else str(total),
    }
    data["verdict"] = {
        "finitely_generated": verdict.finitely_generated,
        "reason": verdict.reason.value,
        "outside_paper_theorems": verdict.outside_paper_theorems,
        "support": [g.labels[i] for i in verdict.support],
        "trivial_support_order": None
        if verdict.trivial_support_order is None
        else str(verdict.trivial_support_order),
    }

    if "oracle" in job.checks:
        cc = cross_check(res, tensor_dimensions(g, dims, n))
        checks["oracle"] = {
            "passed": cc.ok,
            "first_mismatch": None if cc.first_mismatch is None else str(cc.first_mismatch),
        }
    if "structure" in job.checks:
        if res.d > 0:
            checks["structure"] = {"applicable": True, **verify_structure(res).as_dict()}
        else:
            checks["structure"] = {"applicable": False, "passed": True}
    if "fg" in job.checks:
        checks["fg"] = _fg_check(res, verdict, gens, expansion, n)

    data["checks"] = {k: checks[k] for k in CHECKS if k in checks}
    data["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return Report(data, result=res)


# --- output -----------------------------------------------------------------


def _preview(xs: list[str], k: int = 12) -> str:
    head = ", ".join(xs[:k])
    return head + (", ..." if len(xs) > k else "")


def render_text(report: Report) -> str:
    d = report.data
    res = report.result
    lines = [f"group: order {d['group']['order']}"]
    nonzero = [f"{k}={v}" for k, v in d["dims"].items() if v != "0"]
    lines.append(f"dims: {', '.join(nonzero) or '(all zero)'}  (d = {d['d']})")
    lines.append(f"P(t) = {res.series}")
    if res.d > 0:
        lines.append(
            f"     = ({format_poly(res.p_normalized)}) / (({format_poly(IntPoly([1, -res.d]))}) * ({format_poly(res.q)}))"
        )
    lines.append(f"expansion: {_preview(d['expansion'])}")
    gens = d["generators"]
    g_form = RatFun.from_json(gens["closed_form"])
    lines.append(f"generators: g(t) = {g_form}")
    lines.append(f"  by degree: {_preview(gens['prefix'])}")
    if gens["count"] is not None:
        lines.append(f"  total: {gens['count']}")
    v = d["verdict"]
    verdict = "finitely generated" if v["finitely_generated"] else "not finitely generated"
    lines.append(f"verdict: {verdict} ({v['reason']})")
    if v["outside_paper_theorems"]:
        lines.append("  note: nontrivial grading with zero identity piece; decided by the 1/P criterion alone")
    if "components" in d:
        lines.append("components:")
        for label, f in d["components"].items():
            lines.append(f"  F[{label}] = {RatFun.from_json(f)}")
    if d["checks"]:
        status = ", ".join(f"{k} {'PASS' if c['passed'] else 'FAIL'}" for k, c in d["checks"].items())
        lines.append(f"checks: {status}")
    lines.append(f"time: {d['timing_ms']:.1f} ms")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gradedhilbert",
        description="Hilbert series and finite generation of the identity component "
        "of a free algebra graded by a finite group.",
    )
    p.add_argument("--group", required=True, help="preset (cyclic:N, dihedral:N, symmetric:N, product:A+B), JSON, or file")
    p.add_argument("--dims", required=True, help="JSON object {label-or-index: dim} or a file containing one")
    p.add_argument("--expand", type=int, default=30, metavar="N", help="series truncation degree (default 30)")
    p.add_argument(
        "--check",
        default=",".join(DEFAULT_CHECKS),
        help=f"comma-separated subset of {','.join(CHECKS)}, 'all' or 'none' (default {','.join(DEFAULT_CHECKS)})",
    )
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit status")
    return p


def parse_checks(text: str) -> tuple[str, ...]:
    text = text.strip()
    if text == "all":
        return CHECKS
    if text in ("", "none"):
        return ()
    return tuple(c.strip() for c in text.split(",") if c.strip())


def job_from_args(args: argparse.Namespace) -> JobSpec:
    g, spec = parse_group_arg(args.group)
    dims = dims_from_json(g, _load_json_arg(args.dims, "--dims"))
    return JobSpec(group=g, dims=dims, expand_to=args.expand, checks=parse_checks(args.check), group_spec=spec)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = job_from_args(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = run(job)
    if not args.quiet:
        print(report.to_json() if args.json else render_text(report))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
