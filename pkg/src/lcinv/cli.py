"""``lcinv`` command line front end.

Exit status: 0 success / valid / equivalent, 1 invalid / not equivalent,
2 malformed input, 3 a budget was exceeded.  Data goes to stdout, messages
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .densecheck import DENSE_LIMIT, dense_check
from .errors import BudgetExceeded
from .gf2 import GF2Matrix
from .invariants import (
    ENUMERATION_BUDGET,
    FINGERPRINT_BUDGET,
    OmegaTuple,
    fingerprint,
    t_invariant,
    v_dim_invariant,
)
from .lcequiv import (
    BRUTE_FORCE_LIMIT,
    CONSTRUCTIVE_LIMIT,
    brute_force_check,
    constructive_check,
    fingerprint_check,
)
from .stabilizer import Stabilizer, StabilizerParseError, graph_state, random_stabilizer, validate

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

GRAPH_FAMILIES = ("random", "path", "cycle", "complete", "star", "empty")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    paths: list[Path] = field(default_factory=list)
    omega: str | None = None
    omega_file: Path | None = None
    r: int | None = None
    seed: int = 0
    fmt: str = "text"
    budget_enum: int = ENUMERATION_BUDGET
    budget_brute: int = BRUTE_FORCE_LIMIT
    budget_constructive: int = CONSTRUCTIVE_LIMIT
    budget_fingerprint: int = FINGERPRINT_BUDGET
    budget_dense: int = DENSE_LIMIT
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("budget_enum", "budget_brute", "budget_constructive",
                     "budget_fingerprint", "budget_dense"):
            if getattr(self, name) <= 0:
                raise InputError(f"--{name.replace('_', '-')} must be positive")

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        paths = [Path(p) for p in (getattr(ns, "paths", None) or [])]
        known = {"command", "paths", "omega", "omega_file", "r", "seed", "format",
                 "budget_enum", "budget_brute", "budget_constructive",
                 "budget_fingerprint", "budget_dense"}
        return cls(
            command=ns.command,
            paths=paths,
            omega=getattr(ns, "omega", None),
            omega_file=getattr(ns, "omega_file", None),
            r=getattr(ns, "r", None),
            seed=getattr(ns, "seed", 0) or 0,
            fmt=ns.format,
            budget_enum=ns.budget_enum,
            budget_brute=ns.budget_brute,
            budget_constructive=ns.budget_constructive,
            budget_fingerprint=ns.budget_fingerprint,
            budget_dense=ns.budget_dense,
            options={k: v for k, v in vars(ns).items() if k not in known},
        )


def _emit(cfg: RunConfig, text: str, obj: dict) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _read_stabilizer(path: Path, require_valid: bool = True) -> Stabilizer:
    try:
        S = Stabilizer.read(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except (StabilizerParseError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if require_valid:
        report = validate(S)
        if not report:
            raise InputError(f"{path}: {report}")
    return S


def _read_omega(cfg: RunConfig, n: int) -> OmegaTuple:
    if (cfg.omega is None) == (cfg.omega_file is None):
        raise InputError("give exactly one of --omega and --omega-file")
    if cfg.omega is not None:
        text = cfg.omega
    else:
        try:
            text = Path(cfg.omega_file).read_text()
        except OSError as exc:
            raise InputError(f"{cfg.omega_file}: {exc.strerror}") from None
    try:
        return OmegaTuple.parse(text, n)
    except (StabilizerParseError, ValueError) as exc:
        raise InputError(f"bad omega specification: {exc}") from None


def _omega_obj(omega: OmegaTuple) -> dict:
    return {"key": list(omega.key()), "text": str(omega)}


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(cfg: RunConfig) -> int:
    S = _read_stabilizer(cfg.paths[0], require_valid=False)
    report = validate(S)
    _emit(cfg, str(report), {
        "valid": report.ok,
        "n": report.n,
        "rank": report.rank,
        "anticommuting": [list(p) for p in report.anticommuting],
    })
    return EXIT_OK if report else EXIT_NO


def cmd_invariant(cfg: RunConfig) -> int:
    S = _read_stabilizer(cfg.paths[0])
    omega = _read_omega(cfg, S.n)
    kind = cfg.options["kind"]
    if kind == "T":
        value = t_invariant(S, omega, budget=cfg.budget_enum)
    else:
        value = v_dim_invariant(S, omega)
    _emit(cfg, str(value), {
        "n": S.n, "r": omega.r, "omega": _omega_obj(omega), "kind": kind, "value": value,
    })
    return EXIT_OK


def cmd_fingerprint(cfg: RunConfig) -> int:
    S = _read_stabilizer(cfg.paths[0])
    if cfg.r is None:
        raise InputError("--r is required")
    fp = fingerprint(S, cfg.r, budget=cfg.budget_fingerprint)
    data = fp.to_json() if cfg.fmt == "json" else fp.to_text()
    out = cfg.options.get("output")
    if out:
        Path(out).write_text(data)
    else:
        sys.stdout.write(data)
    return EXIT_OK


def cmd_equiv(cfg: RunConfig) -> int:
    S1 = _read_stabilizer(cfg.paths[0])
    S2 = _read_stabilizer(cfg.paths[1])
    if S1.n != S2.n:
        raise InputError(f"qubit counts differ: {S1.n} vs {S2.n}")
    method = cfg.options["method"]
    if method == "fingerprint":
        r = cfg.r if cfg.r is not None else 1
        cmp = fingerprint_check(S1, S2, r, budget=cfg.budget_fingerprint)
        text = cmp.label
        if cmp.witness is not None:
            text += f"\nwitness: {cmp.witness}"
        _emit(cfg, text, {
            "method": method, "verdict": cmp.label, "r": r, "conclusive": cmp.conclusive,
            "witness": _omega_obj(cmp.witness) if cmp.witness is not None else None,
        })
        return EXIT_OK if cmp.equal else EXIT_NO
    if method == "brute":
        Q = brute_force_check(S1, S2, limit=cfg.budget_brute)
    else:
        Q = constructive_check(S1, S2, limit=cfg.budget_constructive)
    verdict = "EQUIVALENT" if Q is not None else "NOT-EQUIVALENT"
    text = verdict + ("\n" + Q.to_text().rstrip("\n") if Q is not None else "")
    _emit(cfg, text, {
        "method": method,
        "verdict": verdict,
        "operation": [[a, b, c, d] for (a, b), (c, d) in Q.factors] if Q is not None else None,
    })
    return EXIT_OK if Q is not None else EXIT_NO


def _named_graph(family: str, n: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.uint8)
    if family == "path" or family == "cycle":
        for i in range(n - 1):
            a[i, i + 1] = a[i + 1, i] = 1
        if family == "cycle" and n > 2:
            a[0, n - 1] = a[n - 1, 0] = 1
    elif family == "complete":
        a[:] = 1
        np.fill_diagonal(a, 0)
    elif family == "star":
        a[0, 1:] = a[1:, 0] = 1
    return a


def cmd_generate(cfg: RunConfig) -> int:
    kind, n, count = cfg.options["kind"], cfg.options["n"], cfg.options["count"]
    family = cfg.options.get("graph", "random")
    if n < 1 or count < 1:
        raise InputError("--n and --count must be positive")
    if kind == "graph" and family != "random" and count != 1:
        raise InputError(f"graph family {family!r} is fixed; use --count 1")
    out_dir = Path(cfg.options["out_dir"])
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(cfg.seed)
    written = []
    for j in range(count):
        if kind == "random":
            S = random_stabilizer(n, int(rng.integers(2**32)))
        else:
            if family == "random":
                upper = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), 1)
                adj = upper + upper.T
            else:
                adj = _named_graph(family, n)
            S = graph_state(GF2Matrix.from_array(adj))
        name = f"{kind}_{family}_n{n}_{j:04d}.stab" if kind == "graph" else f"random_n{n}_{j:04d}.stab"
        path = out_dir / name
        S.write(path)
        written.append(str(path))
    _emit(cfg, "\n".join(written), {"files": written})
    return EXIT_OK


def cmd_dense_check(cfg: RunConfig) -> int:
    S = _read_stabilizer(cfg.paths[0])
    omega = _read_omega(cfg, S.n)
    report = dense_check(S, omega, limit=cfg.budget_dense)
    _emit(cfg, str(report), {
        "omega": _omega_obj(omega), "trace": report.trace,
        "v_count": report.v_count, "ratio": report.ratio,
    })
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "invariant": cmd_invariant,
    "fingerprint": cmd_fingerprint,
    "equiv": cmd_equiv,
    "generate": cmd_generate,
    "dense-check": cmd_dense_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget-enum", type=int, default=ENUMERATION_BUDGET,
                        help="largest r*n for tuple enumeration (default %(default)s)")
    common.add_argument("--budget-brute", type=int, default=BRUTE_FORCE_LIMIT,
                        help="largest n for brute-force search (default %(default)s)")
    common.add_argument("--budget-constructive", type=int, default=CONSTRUCTIVE_LIMIT,
                        help="largest n for constructive search (default %(default)s)")
    common.add_argument("--budget-fingerprint", type=int, default=FINGERPRINT_BUDGET,
                        help="most fingerprint entries (default %(default)s)")
    common.add_argument("--budget-dense", type=int, default=DENSE_LIMIT,
                        help="largest n for dense matrices (default %(default)s)")

    omega = argparse.ArgumentParser(add_help=False)
    omega.add_argument("--omega", help='e.g. "r=2; w1={1,2}; w2={2,3}; w12={1,3}"')
    omega.add_argument("--omega-file", type=Path)

    parser = argparse.ArgumentParser(prog="lcinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a stabilizer file")
    p.add_argument("paths", nargs=1, metavar="PATH")

    p = sub.add_parser("invariant", parents=[common, omega], help="evaluate one invariant")
    p.add_argument("paths", nargs=1, metavar="PATH")
    p.add_argument("--kind", choices=("T", "V"), default="V")

    p = sub.add_parser("fingerprint", parents=[common], help="all V invariants of one arity")
    p.add_argument("paths", nargs=1, metavar="PATH")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--output", "-o")

    p = sub.add_parser("equiv", parents=[common], help="decide local Clifford equivalence")
    p.add_argument("paths", nargs=2, metavar="PATH")
    p.add_argument("--method", choices=("brute", "constructive", "fingerprint"),
                   default="constructive")
    p.add_argument("--r", type=int)

    p = sub.add_parser("generate", parents=[common], help="write a corpus of stabilizer files")
    p.add_argument("--kind", choices=("graph", "random"), required=True)
    p.add_argument("--graph", choices=GRAPH_FAMILIES, default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir", required=True)

    p = sub.add_parser("dense-check", parents=[common, omega], help="dense r=2 trace check")
    p.add_argument("paths", nargs=1, metavar="PATH")
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"lcinv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"lcinv: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"lcinv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
