"""
This module contains the command-line front end. Every subcommand reads its inputs from flags or
files, prints a JSON document (or plain text with --format text) on standard output, and logs on
standard error.

Exit codes:
    0: success, or a verified path.
    1: usage error or malformed input.
    2: failed precondition or failed verification.
    3: counterexamples found by a sweep.
"""

# ==================================================================================================
# --- Imports
# ==================================================================================================
# Standard library imports
import argparse
import json
import logging
import os
import sys
from typing import Any, Callable

# Local imports
from mukai_reduce.lattice import (
    DivisorClass,
    Kind,
    LatticeError,
    SurfaceClass,
    load_surface_from_path,
    preset,
)
from mukai_reduce.moves import MoveError, apply, move_from_dic
from mukai_reduce.mukai import (
    MukaiError,
    MukaiVector,
    Triple,
    TripleError,
    moduli_dims,
    pairing,
    square,
    triple_from_dic,
)
from mukai_reduce.oracles import (
    Gate,
    OracleError,
    SweepBounds,
    betti_table,
    classify,
    dimension_table,
    resolve_workers,
    sweep_numeri,
)
from mukai_reduce.planner import (
    PlannerError,
    find_coprime_twist,
    find_even_twist,
    path_from_dic,
    path_to_dic,
    reduce_to_canonical,
    verify_path,
)
from mukai_reduce.utils import dumps_json, load_configuration, nested_get
from mukai_reduce.walls import WallError, is_generic, is_suitable, same_chamber, walls_between

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2
EXIT_COUNTEREXAMPLES = 3

DOMAIN_ERRORS = (LatticeError, MukaiError, WallError, MoveError, PlannerError, OracleError)


# ==================================================================================================
# --- Errors
# ==================================================================================================
class UsageError(ValueError):
    """Raised on invalid arguments or malformed input files. The message names the field."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# ==================================================================================================
# --- Input helpers
# ==================================================================================================
def _json_value(value: str, field: str) -> Any:
    """Read a JSON document from a file path, or parse the value itself as JSON."""
    try:
        if os.path.isfile(value):
            with open(value, "r") as fid:
                return json.load(fid)
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise UsageError(
            f"{field}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    except OSError as e:
        raise UsageError(f"{field}: cannot read {value}: {e}") from e


def _surface(value: str) -> SurfaceClass:
    """A surface from a .toml/.yaml file or a preset name."""
    try:
        if os.path.isfile(value):
            return load_surface_from_path(value)
        return preset(value)
    except LatticeError as e:
        raise UsageError(f"surface ({e.condition}): {e}") from e


def _divisor(value: str, field: str) -> DivisorClass:
    """A divisor class from a JSON list "[1, 3]" or a comma-separated list "1,3"."""
    try:
        if value.strip().startswith("["):
            return DivisorClass(json.loads(value))
        return DivisorClass(int(x) for x in value.split(","))
    except (json.JSONDecodeError, TypeError, ValueError) as e:
        raise UsageError(f"{field}: cannot read a divisor class from {value!r}: {e}") from e


def _vector(value: str, field: str) -> MukaiVector:
    """A Mukai vector from {"v0", "v1", "v2"} or [v0, [coords], v2], inline or in a file."""
    data = _json_value(value, field)
    try:
        if isinstance(data, list) and len(data) == 3:
            return MukaiVector(int(data[0]), DivisorClass(data[1]), int(data[2]))
        if isinstance(data, dict):
            return MukaiVector.from_dic(data)
    except (MukaiError, TypeError, ValueError) as e:
        raise UsageError(f"{field}: {e}") from e
    raise UsageError(f"{field}: expected [v0, [v1...], v2] or an object with v0, v1, v2")


def _triple(value: str, allow_raw: bool = False) -> Triple:
    data = _json_value(value, "triple")
    if not isinstance(data, dict):
        raise UsageError("triple: expected an object with surface, v and H")
    try:
        return triple_from_dic(data, allow_raw=allow_raw)
    except TripleError:
        raise
    except (MukaiError, LatticeError) as e:
        raise UsageError(f"triple: {e}") from e


def _check_rank(S: SurfaceClass, *l_vectors: MukaiVector) -> None:
    for v in l_vectors:
        if len(v.v1) != S.ns_rank:
            raise UsageError(f"v: {v.v1.coords} does not have {S.ns_rank} coordinates")


# ==================================================================================================
# --- Subcommands
# ==================================================================================================
def _cmd_pair(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v, w = _vector(args.v, "v"), _vector(args.w, "w")
    _check_rank(S, v, w)
    return {"pairing": pairing(S, v, w)}, EXIT_OK


def _cmd_square(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v = _vector(args.v, "v")
    _check_rank(S, v)
    return {"square": square(S, v)}, EXIT_OK


def _cmd_dims(args: argparse.Namespace) -> tuple[Any, int]:
    dim_M, dim_K = moduli_dims(args.m, args.k, args.kind)
    return {"dim_M": dim_M, "dim_K": dim_K}, EXIT_OK


def _cmd_generic(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v = _vector(args.v, "v")
    _check_rank(S, v)
    generic, witness = is_generic(S, v, _divisor(args.H, "H"))
    return {"generic": generic, "witness": witness.to_dic() if witness else None}, EXIT_OK


def _cmd_walls(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v = _vector(args.v, "v")
    _check_rank(S, v)
    l_walls = walls_between(S, v, _divisor(args.H1, "H1"), _divisor(args.H2, "H2"))
    return {"walls": [wall.to_dic() for wall in l_walls]}, EXIT_OK


def _cmd_suitable(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v = _vector(args.v, "v")
    _check_rank(S, v)
    return {"suitability": is_suitable(S, v, _divisor(args.H, "H")).value}, EXIT_OK


def _cmd_chamber(args: argparse.Namespace) -> tuple[Any, int]:
    S = _surface(args.surface)
    v = _vector(args.v, "v")
    _check_rank(S, v)
    H1, H2 = _divisor(args.H1, "H1"), _divisor(args.H2, "H2")
    dic_result: dict[str, Any] = {"same_chamber": same_chamber(S, v, H1, H2)}
    if S.ns_rank == 2:
        dic_result["walls"] = [wall.to_dic() for wall in walls_between(S, v, H1, H2)]
    return dic_result, EXIT_OK


def _cmd_move(args: argparse.Namespace) -> tuple[Any, int]:
    t = _triple(args.triple, allow_raw=True)
    dic_move = _json_value(args.apply, "move")
    if not isinstance(dic_move, dict):
        raise UsageError("move: expected an object with a type")
    try:
        mv = move_from_dic(dic_move)
    except MoveError as e:
        raise UsageError(f"move: {e}") from e
    _, certificate = apply(t, mv)
    return certificate.to_dic(), EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> tuple[Any, int]:
    config = load_configuration(args.config)
    p = reduce_to_canonical(_triple(args.triple), config=config)
    dic_path = path_to_dic(p)
    if args.out is None:
        return dic_path, EXIT_OK
    with open(args.out, "w") as fid:
        fid.write(dumps_json(dic_path))
    logging.info(f"Path of {len(p)} moves written to {args.out}")
    return {"out": args.out, "length": len(p)}, EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> tuple[Any, int]:
    dic_path = _json_value(args.path, "path")
    if not isinstance(dic_path, dict):
        raise UsageError("path: expected an object with start, steps and end")
    try:
        p = path_from_dic(dic_path)
    except PlannerError as e:
        if e.check == "format":
            raise UsageError(f"path: {e}") from e
        raise
    report = verify_path(p)
    return report, EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_sweep_numeri(args: argparse.Namespace) -> tuple[Any, int]:
    config = load_configuration(args.config)
    bounds = SweepBounds(r_max=args.rmax, k_max=args.kmax, l_max=args.lmax, n_max=args.nmax)
    result = sweep_numeri(
        bounds,
        gate=args.gate,
        workers=resolve_workers(args.workers, config),
        chunk_size=int(nested_get(config, ["sweep", "chunk_size"])),
    )
    # The diagnostic gate reports data, it does not assert
    if result.counterexamples and result.gate is Gate.STRICT:
        return result, EXIT_COUNTEREXAMPLES
    return result, EXIT_OK


def _cmd_twist(args: argparse.Namespace) -> tuple[Any, int]:
    if args.mode == "even":
        return {"s": find_even_twist(args.r, args.k, args.N)}, EXIT_OK
    for name in ("n", "a", "l"):
        if getattr(args, name) is None:
            raise UsageError(f"twist: --{name} is required by the coprime search")
    return {"s": find_coprime_twist(args.r, args.n, args.a, args.l, args.N)}, EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> tuple[Any, int]:
    return classify(args.kind, args.m, args.k), EXIT_OK


def _cmd_table(args: argparse.Namespace) -> tuple[Any, int]:
    if args.betti:
        return betti_table(), EXIT_OK
    return dimension_table(args.m_max, args.k_max), EXIT_OK


# ==================================================================================================
# --- Parser
# ==================================================================================================
def _kind(value: str) -> Kind:
    try:
        return Kind.parse(value)
    except LatticeError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="mukai-reduce",
        description="Mukai lattice arithmetic, walls and certified reduction paths.",
    )
    parser.add_argument("--format", choices=["json", "text"], default=None)
    parser.add_argument("--config", default=None, help="User YAML configuration")
    parser.add_argument("--log-level", default="WARNING")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes of sweeps")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def _add(name: str, handler: Callable, description: str) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, help=description)
        subparser.set_defaults(handler=handler)
        return subparser

    p = _add("pair", _cmd_pair, "Mukai pairing of two vectors")
    p.add_argument("--surface", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)

    p = _add("square", _cmd_square, "Mukai square of a vector")
    p.add_argument("--surface", required=True)
    p.add_argument("--v", required=True)

    p = _add("dims", _cmd_dims, "Dimensions of M_v and K_v")
    p.add_argument("--kind", type=_kind, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    for name, handler, description in (
        ("generic", _cmd_generic, "Genericity of a polarization, with a witness wall"),
        ("suitable", _cmd_suitable, "Suitability of σ + tf on an elliptic surface"),
    ):
        p = _add(name, handler, description)
        p.add_argument("--surface", required=True)
        p.add_argument("--v", required=True)
        p.add_argument("--H", required=True)

    for name, handler, description in (
        ("walls", _cmd_walls, "Walls meeting the segment [H1, H2]"),
        ("chamber", _cmd_chamber, "Whether H1 and H2 lie in the same chamber"),
    ):
        p = _add(name, handler, description)
        p.add_argument("--surface", required=True)
        p.add_argument("--v", required=True)
        p.add_argument("--H1", required=True)
        p.add_argument("--H2", required=True)

    p = _add("move", _cmd_move, "Apply one move and print its certificate")
    p.add_argument("--triple", required=True)
    p.add_argument("--apply", required=True)

    p = _add("reduce", _cmd_reduce, "Reduce a triple to the canonical triple")
    p.add_argument("--triple", required=True)
    p.add_argument("--out", default=None)

    p = _add("verify", _cmd_verify, "Replay a path")
    p.add_argument("--path", required=True)

    p = _add("sweep-numeri", _cmd_sweep_numeri, "Exhaustive sweep of the dualization inequality")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--gate", choices=[gate.value for gate in Gate], default=Gate.STRICT.value)

    p = _add("twist", _cmd_twist, "Coprime or even twist search")
    p.add_argument("--mode", choices=["coprime", "even"], default="coprime")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--N", type=int, default=0)

    p = _add("classify", _cmd_classify, "Known facts on the moduli space")
    p.add_argument("--kind", type=_kind, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = _add("table", _cmd_table, "Dimension and codimension table")
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--betti", action="store_true", help="Print the second Betti numbers instead")

    return parser


# ==================================================================================================
# --- Output
# ==================================================================================================
def _render(result: Any, format_output: str) -> str:
    if format_output == "json":
        if hasattr(result, "to_dic"):
            result = result.to_dic()
        elif hasattr(result, "to_dict"):
            result = result.to_dict(orient="records")
        return dumps_json(result)
    if hasattr(result, "to_text"):
        return result.to_text()
    if hasattr(result, "to_string"):
        return result.to_string(index=False) + "\n"
    return "\n".join(f"{key}: {json.dumps(value)}" for key, value in result.items()) + "\n"


# ==================================================================================================
# --- Entry points
# ==================================================================================================
def run(argv: list[str] | None = None) -> int:
    """Parse argv, run the subcommand and print its result.

    Args:
        argv (list[str] | None, optional): The arguments. Defaults to sys.argv[1:].

    Returns:
        int: The exit code.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(message)s",
        force=True,
    )

    try:
        format_output = args.format or nested_get(
            load_configuration(args.config), ["output", "format"]
        )
        result, code = args.handler(args)
    except UsageError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as e:
        condition = getattr(e, "check", None) or getattr(e, "condition", None)
        print(f"failed [{condition}]: {e}", file=sys.stderr)
        return EXIT_FAILURE

    sys.stdout.write(_render(result, format_output))
    return code


def main() -> int:
    return run(sys.argv[1:])
