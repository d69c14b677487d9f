"""Command-line frontend.

Parses problem files (or inline flags), dispatches to the library, and emits
deterministic reports: stable key order, no timestamps, the input hash and
library version echoed in every payload.  Exit codes: 0 ok, 1 property
failure, 2 validation error, 3 guard breach.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import __version__
from .classifier import (
    classify,
    construct_singular_witness,
    singular_summary,
)
from .enumeration import (
    POINT_GUARD,
    analyze_point,
    enumerate_subreps,
    fixed_points,
    singular_point_census,
)
from .errors import GuardExceededError, LindegError, ValidationError
from .linalg import QQ, Field, Matrix
from .orbits import (
    ORBIT_GUARD,
    ProjectionTuple,
    RankSequence,
    decomposition_of,
    enumerate_orbits,
    hasse_dot,
    strata_dot,
    strata_subsets,
    stratum_rank_targets,
)
from .representations import (
    Decomposition,
    DimVector,
    RankTable,
    RepMatrices,
    SubrepPoint,
    rank_profile,
)
from .verification import SUITES, run_suites

TOOL = "lindeg"


# ---------------------------------------------------------------- problem I/O


@dataclass
class Problem:
    m: int
    n: int
    d: tuple[int, ...] | None
    field: Field
    map_specs: tuple[dict, ...] | None
    ranks: RankTable | None
    zero_sets: tuple[frozenset[int], ...] | None
    sha256: str

    def dim_vector(self) -> DimVector:
        if self.d is None:
            raise ValidationError("this command needs the flag dimension vector d")
        return DimVector(self.m, self.d)

    def projection_tuple(self) -> ProjectionTuple | None:
        if self.zero_sets is not None:
            return ProjectionTuple(self.m, self.zero_sets)
        return None

    def matrices(self, field: Field | None = None) -> RepMatrices:
        f = field or self.field
        if self.zero_sets is not None:
            return ProjectionTuple(self.m, self.zero_sets).matrices(f)
        if self.map_specs is not None:
            maps = tuple(
                _build_map(f, self.m, spec, i) for i, spec in enumerate(self.map_specs)
            )
            return RepMatrices(f, (self.m,) * self.n, maps)
        raise ValidationError("this command needs explicit maps, not just a rank table")

    def rank_sequence(self) -> RankSequence:
        if self.ranks is not None:
            return RankSequence(self.m, self.ranks)
        if self.zero_sets is not None:
            return ProjectionTuple(self.m, self.zero_sets).rank_sequence()
        return RankSequence(self.m, rank_profile(self.matrices()))


def _parse_field(spec: Any) -> Field:
    if spec is None or spec in (0, "0", "Q", "QQ", "rationals"):
        return QQ
    if isinstance(spec, dict):
        return _parse_field(spec.get("prime", 0))
    if isinstance(spec, (int, str)):
        try:
            return Field(int(spec))
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"bad field spec {spec!r}: {exc}") from exc
    raise ValidationError(f"bad field spec {spec!r}")


def _build_map(field: Field, m: int, spec: Any, index: int) -> Matrix:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValidationError(f"map {index + 1}: spec must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "identity":
        return Matrix.identity(field, m)
    if kind == "zero":
        return Matrix.zeros(field, m, m)
    if kind == "projection":
        zero_indices = spec.get("zero_indices", [])
        idx = set(int(j) for j in zero_indices)
        if not idx <= set(range(1, m + 1)):
            raise ValidationError(
                f"map {index + 1}: zero_indices {sorted(idx)} not within 1..{m}"
            )
        return Matrix.projection(field, m, {j - 1 for j in idx})
    if kind == "matrix":
        entries = spec.get("entries")
        if (
            not isinstance(entries, list)
            or len(entries) != m
            or any(not isinstance(row, list) or len(row) != m for row in entries)
        ):
            raise ValidationError(f"map {index + 1}: entries must be an {m} x {m} array")
        try:
            return Matrix.from_rows(field, entries, ncols=m)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"map {index + 1}: bad entry: {exc}") from exc
    raise ValidationError(f"map {index + 1}: unknown kind {kind!r}")


def _zero_sets_from_specs(m: int, specs: Sequence[dict]) -> tuple[frozenset[int], ...] | None:
    """Recognize projection-only problems so they get combinatorial treatment."""
    sets = []
    for spec in specs:
        kind = spec.get("kind")
        if kind == "identity":
            sets.append(frozenset())
        elif kind == "zero":
            sets.append(frozenset(range(1, m + 1)))
        elif kind == "projection":
            sets.append(frozenset(int(j) for j in spec.get("zero_indices", [])))
        else:
            return None
    return tuple(sets)


def _parse_csv_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise ValidationError(f"bad {what} {text!r}: {exc}") from exc


def _parse_rank_rows(text: str) -> RankTable:
    rows = []
    for part in text.split(";"):
        rows.append(tuple(int(x) for x in part.split(",") if x.strip() != ""))
    try:
        return RankTable(len(rows), tuple(rows))
    except (ValueError, LindegError) as exc:
        raise ValidationError(f"bad rank table {text!r}: {exc}") from exc


def _parse_zero_sets(text: str) -> tuple[frozenset[int], ...]:
    sets = []
    for part in text.split(";"):
        part = part.strip()
        if part in ("", "-"):
            sets.append(frozenset())
        else:
            sets.append(frozenset(int(x) for x in part.split(",")))
    return tuple(sets)


def load_problem(args: argparse.Namespace) -> Problem:
    """Build a Problem from --input FILE or inline flags, hashing the input."""
    if getattr(args, "input", None):
        try:
            with open(args.input, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read input file: {exc}") from exc
        digest = hashlib.sha256(raw).hexdigest()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"input file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValidationError("input file must hold a JSON object")
        m = data.get("m")
        d = tuple(data["d"]) if data.get("d") is not None else None
        n_given = data.get("n")
        field = _parse_field(data.get("field"))
        map_specs = tuple(data["maps"]) if data.get("maps") is not None else None
        ranks = (
            RankTable(len(data["ranks"]), tuple(tuple(r) for r in data["ranks"]))
            if data.get("ranks") is not None
            else None
        )
        zero_sets = (
            tuple(frozenset(int(j) for j in s) for s in data["zero_sets"])
            if data.get("zero_sets") is not None
            else None
        )
    else:
        m = args.m
        d = _parse_csv_ints(args.d, "--d") if getattr(args, "d", None) else None
        n_given = getattr(args, "n", None)
        field = QQ
        map_specs = None
        ranks = _parse_rank_rows(args.ranks) if getattr(args, "ranks", None) else None
        zero_sets = (
            _parse_zero_sets(args.zero_sets) if getattr(args, "zero_sets", None) else None
        )
        canonical = {
            "m": m,
            "n": n_given,
            "d": list(d) if d else None,
            "ranks": [list(r) for r in ranks.rows] if ranks else None,
            "zero_sets": [sorted(s) for s in zero_sets] if zero_sets else None,
        }
        digest = hashlib.sha256(
            json.dumps(canonical, sort_keys=True, separators=(",", ":")).encode()
        ).hexdigest()

    if getattr(args, "prime", None):
        field = Field(args.prime)
    if not isinstance(m, int) or m < 1:
        raise ValidationError("m must be a positive integer (use --m or the 'm' field)")

    if map_specs is not None and zero_sets is None:
        zero_sets = _zero_sets_from_specs(m, map_specs)

    lengths = []
    if d is not None:
        lengths.append(len(d))
    if map_specs is not None:
        lengths.append(len(map_specs) + 1)
    if ranks is not None:
        lengths.append(ranks.n)
    if zero_sets is not None:
        lengths.append(len(zero_sets) + 1)
    if n_given is not None:
        lengths.append(int(n_given))
    if not lengths:
        raise ValidationError("cannot determine n: give d, n, maps, ranks, or zero sets")
    n = lengths[0]
    if any(x != n for x in lengths):
        raise ValidationError(f"inconsistent quiver lengths {sorted(set(lengths))}")
    if n < 1:
        raise ValidationError("need at least one vertex")
    if d is not None:
        DimVector(m, d)
    return Problem(m, n, d, field, map_specs, ranks, zero_sets, digest)


# ------------------------------------------------------------- serialization


def _entry_json(x) -> Any:
    return x if isinstance(x, int) else str(x)


def _decomposition_json(dec: Decomposition) -> list[dict]:
    return [
        {"start": iv.start, "end": iv.end, "mult": k} for iv, k in dec.items
    ]


def _table_json(table: RankTable) -> list[list[int]]:
    return [list(row) for row in table.rows]


def _model_json(model) -> dict | None:
    if model is None:
        return None
    return {
        "h": model.h,
        "module": _decomposition_json(model.module),
        "module_dims": list(model.module_dims),
        "sub_dims": list(model.sub_dims),
        "singular_dim": model.singular_dim,
        "singular_codim": model.singular_codim,
    }


def _singular_json(info) -> dict | None:
    if info is None:
        return None
    return {
        "kind": info.kind,
        "ambient_dim": info.ambient_dim,
        "codim_lower": info.codim_lower,
        "codim_upper": info.codim_upper,
        "singular_dim": info.singular_dim,
        "model": _model_json(info.model),
    }


def _point_json(point: SubrepPoint) -> dict:
    if point.is_coordinate:
        return {"coordinates": [list(s) for s in point.coordinates]}
    return {
        "bases": [
            [[_entry_json(x) for x in row] for row in space.basis]
            for space in point.spaces
        ]
    }


def _envelope(command: str, problem_hash: str | None) -> dict:
    return {
        "tool": TOOL,
        "version": __version__,
        "command": command,
        "input_sha256": problem_hash,
    }


def _as_text(payload: dict) -> str:
    lines: list[str] = []

    def walk(obj: dict, indent: int) -> None:
        pad = "  " * indent
        for k, v in obj.items():
            if isinstance(v, dict):
                lines.append(f"{pad}{k}:")
                walk(v, indent + 1)
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: {json.dumps(v)}")
            else:
                lines.append(f"{pad}{k}: {v}")

    walk(payload, 0)
    return "\n".join(lines) + "\n"


def _emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    return _as_text(payload)


# ------------------------------------------------------------------ commands


def cmd_classify(args: argparse.Namespace) -> tuple[str, int]:
    problem = load_problem(args)
    dv = problem.dim_vector()
    rs = problem.rank_sequence()
    report = classify(rs, dv)
    payload = {
        **_envelope("classify", problem.sha256),
        "m": dv.m,
        "n": dv.n,
        "d": list(dv.d),
        "edge_ranks": list(report.edge_ranks),
        "rank_table": _table_json(rs.table),
        "decomposition": _decomposition_json(report.decomposition),
        "stratum": list(report.stratum),
        "smooth": report.smooth,
        "irreducible": report.irreducible,
        "flat": report.flat,
        "flat_irreducible": report.flat_irreducible,
        "in_irreducible_locus": report.in_irreducible_locus,
        "well_behaved": report.well_behaved,
        "dimension": report.dimension,
        "normal": (
            {"value": True, "by": "theorem: irreducible implies normal"}
            if report.normal
            else None
        ),
        "regular_in_codim_2": (
            {"value": True, "by": "theorem: irreducible implies regular in codimension 2"}
            if report.regular_in_codim_2
            else None
        ),
        "singular": _singular_json(report.singular),
    }
    return _emit(payload, args.format), 0


def _orbit_flags(rs: RankSequence, dv: DimVector | None) -> dict:
    from .classifier import flat_flags, is_smooth

    if dv is None:
        return {}
    flags = flat_flags(rs, dv)
    return {
        "smooth": is_smooth(rs, dv),
        "flat": flags.flat,
        "flat_irreducible": flags.flat_irreducible,
    }


def cmd_orbits(args: argparse.Namespace) -> tuple[str, int]:
    if args.m is None or args.n is None:
        raise ValidationError("orbits needs --m and --n")
    dv = DimVector(args.m, _parse_csv_ints(args.d, "--d")) if args.d else None
    if dv is not None and dv.n != args.n:
        raise ValidationError(f"--d has length {dv.n}, expected n = {args.n}")
    orbits = enumerate_orbits(args.m, args.n, guard=args.guard)
    ordered = sorted(orbits, key=lambda rs: rs.table.entries_flat(), reverse=True)
    digest = hashlib.sha256(
        json.dumps(
            {"m": args.m, "n": args.n, "d": list(dv.d) if dv else None},
            sort_keys=True,
            separators=(",", ":"),
        ).encode()
    ).hexdigest()

    if args.format == "dot":
        def annotate(rs: RankSequence) -> str:
            flags = _orbit_flags(rs, dv)
            if not flags:
                return ""
            if flags["smooth"]:
                return "smooth"
            if flags["flat_irreducible"]:
                return "flat-irr"
            if flags["flat"]:
                return "flat"
            return ""

        return hasse_dot(ordered, annotate=annotate if dv else None), 0

    rows = []
    for rs in ordered:
        row = {
            "edge_ranks": list(rs.edge_ranks()),
            "rank_table": _table_json(rs.table),
            "decomposition": _decomposition_json(decomposition_of(rs)),
        }
        row.update(_orbit_flags(rs, dv))
        rows.append(row)
    payload = {
        **_envelope("orbits", digest),
        "m": args.m,
        "n": args.n,
        "d": list(dv.d) if dv else None,
        "count": len(rows),
        "orbits": rows,
    }
    if args.format == "json":
        return _emit(payload, "json"), 0
    lines = [
        f"tool: {TOOL}",
        f"version: {__version__}",
        f"input_sha256: {digest}",
        f"orbits for m={args.m}, n={args.n}: {len(rows)}",
    ]
    for row in rows:
        dec = Decomposition.from_multiplicities(
            args.n, {(x["start"], x["end"]): x["mult"] for x in row["decomposition"]}
        )
        text = f"  r={tuple(row['edge_ranks'])} table={row['rank_table']} dec={dec}"
        flags = [k for k in ("smooth", "flat", "flat_irreducible") if row.get(k)]
        if flags:
            text += "  [" + ",".join(flags) + "]"
        lines.append(text)
    return "\n".join(lines) + "\n", 0


def cmd_strata(args: argparse.Namespace) -> tuple[str, int]:
    if args.n is None:
        raise ValidationError("strata needs --n")
    dv = None
    if args.d:
        if args.m is None:
            raise ValidationError("strata with --d also needs --m")
        dv = DimVector(args.m, _parse_csv_ints(args.d, "--d"))
        if dv.n != args.n:
            raise ValidationError(f"--d has length {dv.n}, expected n = {args.n}")
    if args.format == "dot":
        return strata_dot(args.n), 0
    digest = hashlib.sha256(
        json.dumps(
            {"n": args.n, "m": args.m, "d": list(dv.d) if dv else None},
            sort_keys=True,
            separators=(",", ":"),
        ).encode()
    ).hexdigest()
    rows = []
    for I in strata_subsets(args.n):
        row: dict[str, Any] = {"edges": list(I)}
        if dv is not None:
            r1, r2 = stratum_rank_targets(I, dv)
            row["r1"] = _table_json(r1.table)
            row["r2"] = _table_json(r2.table)
        rows.append(row)
    payload = {
        **_envelope("strata", digest),
        "n": args.n,
        "m": args.m,
        "d": list(dv.d) if dv else None,
        "count": len(rows),
        "strata": rows,
    }
    if args.format == "json":
        return _emit(payload, "json"), 0
    lines = [
        f"tool: {TOOL}",
        f"version: {__version__}",
        f"input_sha256: {digest}",
        f"strata for n={args.n}: {len(rows)}",
    ]
    for row in rows:
        text = "  I={" + ",".join(str(i) for i in row["edges"]) + "}"
        if "r1" in row:
            text += f" r1={row['r1']} r2={row['r2']}"
        lines.append(text)
    return "\n".join(lines) + "\n", 0


def cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    problem = load_problem(args)
    dv = problem.dim_vector()
    if not problem.field.is_modular:
        raise ValidationError("enumeration needs a finite field: pass --prime or a prime field spec")
    rep = problem.matrices(problem.field)
    J = problem.projection_tuple()
    payload: dict[str, Any] = {
        **_envelope("enumerate", problem.sha256),
        "m": dv.m,
        "n": dv.n,
        "d": list(dv.d),
        "prime": problem.field.characteristic,
    }
    sample = []
    if args.census:
        census = singular_point_census(rep, dv, guard=args.guard)
        payload["points"] = census.total
        payload["census"] = {
            "total": census.total,
            "singular": census.singular,
            "smooth": census.smooth,
        }
        if args.limit:
            for i, point in enumerate(enumerate_subreps(rep, dv, guard=args.guard)):
                if i >= args.limit:
                    break
                sample.append(_point_json(point))
    else:
        count = 0
        for point in enumerate_subreps(rep, dv, guard=args.guard):
            if args.limit and count < args.limit:
                sample.append(_point_json(point))
            count += 1
        payload["points"] = count
        payload["census"] = None
    payload["fixed_points"] = len(fixed_points(J, dv)) if J is not None else None
    if args.limit:
        payload["sample_points"] = sample
    return _emit(payload, args.format), 0


def cmd_fixed_points(args: argparse.Namespace) -> tuple[str, int]:
    problem = load_problem(args)
    dv = problem.dim_vector()
    J = problem.projection_tuple()
    if J is None:
        raise ValidationError("fixed-points needs projection maps (zero sets)")
    pts = fixed_points(J, dv)
    payload = {
        **_envelope("fixed-points", problem.sha256),
        "m": dv.m,
        "n": dv.n,
        "d": list(dv.d),
        "zero_sets": [sorted(s) for s in J.zero_sets],
        "count": len(pts),
        "points": [[list(S) for S in chain] for chain in pts],
    }
    if args.format == "json":
        return _emit(payload, "json"), 0
    lines = [
        f"tool: {TOOL}",
        f"version: {__version__}",
        f"input_sha256: {problem.sha256}",
        f"fixed points: {len(pts)}",
    ]
    for chain in pts:
        lines.append(
            "  " + " <= ".join("{" + ",".join(str(x) for x in S) + "}" for S in chain)
        )
    return "\n".join(lines) + "\n", 0


def cmd_singular(args: argparse.Namespace) -> tuple[str, int]:
    problem = load_problem(args)
    dv = problem.dim_vector()
    rs = problem.rank_sequence()
    info = singular_summary(rs, dv)
    payload = {
        **_envelope("singular", problem.sha256),
        "m": dv.m,
        "n": dv.n,
        "d": list(dv.d),
        "edge_ranks": list(rs.edge_ranks()),
        "singular": _singular_json(info),
    }
    if args.witness:
        J = problem.projection_tuple()
        if J is None:
            raise ValidationError("--witness needs projection maps (zero sets)")
        point = construct_singular_witness(J, dv, field=problem.field)
        analysis = analyze_point(problem.matrices(problem.field), point)
        payload["witness"] = {
            **_point_json(point),
            "tangent_dim": analysis.tangent_dim,
            "ext": analysis.ext,
            "singular": analysis.singular,
        }
    return _emit(payload, args.format), 0


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    names = args.suite or None
    try:
        results = run_suites(names, seed=args.seed)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            **_envelope("verify", None),
            "seed": args.seed,
            "passed": ok,
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "checks": r.checks,
                    "failures": list(r.failures),
                }
                for r in results
            ],
        }
        return _emit(payload, "json"), 0 if ok else 1
    lines = [r.summary_line() for r in results]
    lines.append("all suites passed" if ok else "SUITE FAILURES")
    return "\n".join(lines) + "\n", 0 if ok else 1


# ---------------------------------------------------------------- entrypoint


def _add_problem_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--input", metavar="FILE", help="JSON problem file")
    sp.add_argument("--m", type=int, help="ambient dimension")
    sp.add_argument("--n", type=int, help="number of vertices")
    sp.add_argument("--d", help="comma-separated flag dimensions, e.g. 1,3,4")
    sp.add_argument("--prime", type=int, help="work over F_p instead of the rationals")
    sp.add_argument(
        "--ranks",
        help="rank table rows, semicolon-separated: 'R11,R12,...;R22,...;...'",
    )
    sp.add_argument(
        "--zero-sets",
        dest="zero_sets",
        help="killed 1-based coordinates per map, semicolon-separated ('-' for none)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="classify linear degenerations of partial flag varieties",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="full geometric classification of one orbit")
    _add_problem_flags(sp)
    sp.add_argument("--format", choices=["table", "json"], default="table")

    sp = sub.add_parser("orbits", help="enumerate all orbits for (m, n)")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", help="optional flag dimensions for annotations")
    sp.add_argument("--guard", type=int, default=ORBIT_GUARD)
    sp.add_argument("--format", choices=["table", "dot", "json"], default="table")

    sp = sub.add_parser("strata", help="the poset of strata (sets of zero maps)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--d", help="optional flag dimensions for rank targets")
    sp.add_argument("--format", choices=["table", "dot", "json"], default="table")

    sp = sub.add_parser("enumerate", help="count points over F_p, optionally with census")
    _add_problem_flags(sp)
    sp.add_argument("--census", action="store_true", help="count singular points too")
    sp.add_argument("--limit", type=int, default=0, help="include up to LIMIT sample points")
    sp.add_argument("--guard", type=int, default=POINT_GUARD)
    sp.add_argument("--format", choices=["table", "json"], default="table")

    sp = sub.add_parser("fixed-points", help="coordinate points of a projection tuple")
    _add_problem_flags(sp)
    sp.add_argument("--format", choices=["table", "json"], default="table")

    sp = sub.add_parser("singular", help="singular locus summary for one orbit")
    _add_problem_flags(sp)
    sp.add_argument("--witness", action="store_true", help="construct a singular point")
    sp.add_argument("--format", choices=["table", "json"], default="table")

    sp = sub.add_parser("verify", help="run the self-verification suites")
    sp.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="suite to run (repeatable; default: all)",
    )
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["table", "json"], default="table")

    return parser


HANDLERS: dict[str, Callable[[argparse.Namespace], tuple[str, int]]] = {
    "classify": cmd_classify,
    "orbits": cmd_orbits,
    "strata": cmd_strata,
    "enumerate": cmd_enumerate,
    "fixed-points": cmd_fixed_points,
    "singular": cmd_singular,
    "verify": cmd_verify,
}


def _error_object(exc: Exception) -> str:
    obj = {
        "tool": TOOL,
        "version": __version__,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    return json.dumps(obj, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = HANDLERS[args.command](args)
    except GuardExceededError as exc:
        sys.stderr.write(_error_object(exc))
        return 3
    except LindegError as exc:
        sys.stderr.write(_error_object(exc))
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
