"""Command-line front end.

Commands: ``qchar`` (q-characters of affinization/KR specs), ``tensor``
(classify one tensor product), ``sweep`` (grid verification run driven by a
JSON config, JSON-lines output), ``factorize`` (rank-1 q-factorization) and
``transform`` (duality maps on monomials).

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 theorem violation.
All output is deterministic: terms are printed descending along the
loop-root order with lexicographic tie-breaks, and JSON is emitted with
sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InvalidInput, InvariantViolation
from .lweight import LMonomial, transform
from .minaff import (
    KRSpec,
    MinAffSpec,
    QChar,
    drinfeld_of_spec,
    kr_qchar_by_partitions,
    qchar,
    qchar_kr,
)
from .sl2fact import q_factorize
from .tensor import TensorReport, classify_variant, resonance_window

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3

_VARIANT_COMBOS = {
    "normal": ("inc", "last"),
    "a": ("dec", "first"),
    "b": ("inc", "first"),
    "c": ("dec", "last"),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"cannot parse weight vector {text!r}") from exc


def _parse_kr(n: int, text: str) -> KRSpec:
    try:
        node, r, k = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"cannot parse KR triple {text!r} (want node,r,k)") from exc
    return KRSpec(n, node, r, k)


def _parse_monomial(text: str) -> LMonomial:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"monomial is not valid JSON: {exc}") from exc
    try:
        return LMonomial.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"monomial JSON does not match the schema: {exc}") from exc


def _spec_from_args(args) -> MinAffSpec | KRSpec:
    if args.kr is not None and args.lam is not None:
        raise InvalidInput("give either --lambda or --kr, not both")
    if args.kr is not None:
        return _parse_kr(args.n, args.kr)
    if args.lam is None:
        raise InvalidInput("one of --lambda or --kr is required")
    return MinAffSpec(args.n, _parse_lambda(args.lam), args.direction, args.shift)


def _print_qchar(qc: QChar, header: list[str], full: bool, as_json: bool, extra: dict):
    if as_json:
        payload = dict(extra)
        payload["n"] = qc.n
        payload["terms"] = qc.to_json()
        print(_dumps(payload))
        return
    for line in header:
        print(line)
    print(f"terms: {qc.dimension}")
    dominants = qc.dominant_terms()
    print(f"dominant ({len(dominants)}):")
    for m, c in dominants:
        print(f"  {m}" + (f"  x{c}" if c != 1 else ""))
    if full:
        print("all terms:")
        for m, c in qc.sorted_terms():
            print(f"  {m}" + (f"  x{c}" if c != 1 else ""))


def cmd_qchar(args) -> int:
    spec = _spec_from_args(args)
    if isinstance(spec, KRSpec):
        if args.oracle == "partitions":
            if spec.node != spec.n:
                raise InvalidInput("the partition oracle applies to last-node KR modules")
            qc = kr_qchar_by_partitions(spec.n, spec.r, spec.k)
        else:
            qc = qchar_kr(spec)
        header = [f"kr: {_dumps(spec.to_json())}", f"drinfeld: {spec.drinfeld()}"]
        extra = {"kr": spec.to_json()}
    else:
        qc = qchar(spec)
        header = [f"spec: {_dumps(spec.to_json())}", f"drinfeld: {drinfeld_of_spec(spec)}"]
        extra = {"spec": spec.to_json()}
    _print_qchar(qc, header, args.full, args.json, extra)
    return EXIT_OK


def _print_report(rep: TensorReport, as_json: bool):
    if as_json:
        print(_dumps(rep.to_json()))
        return
    print(f"variant: {rep.variant}")
    print(f"lambda: {rep.lam}")
    if rep.tag.reducible:
        case = "i" if rep.tag.kind == "case_i" else "ii"
        print(f"verdict: reducible (case {case}, p={rep.tag.p}, k'={rep.tag.kprime})")
        print(f"lambda_prime: {rep.lambda_prime}")
    else:
        print("verdict: irreducible")
    chain = "chain" if rep.totally_ordered else "NOT totally ordered"
    print(f"D ({len(rep.D)} terms, {chain}):")
    for m, c in rep.D:
        print(f"  {m}" + (f"  x{c}" if c != 1 else ""))
    print("socle/head:")
    for order in ("V", "Vprime"):
        socle, head = rep.socle_head[order]
        print(f"  {order}: socle={socle}  head={head}")
    return


def cmd_tensor(args) -> int:
    spec = MinAffSpec(args.n, _parse_lambda(args.lam), args.direction, args.shift)
    kr = _parse_kr(args.n, args.kr)
    rep = classify_variant(spec, kr)
    _print_report(rep, args.json)
    return EXIT_OK


@dataclass(frozen=True)
class SweepConfig:
    """Grid description for a verification sweep; identical configs produce
    byte-identical JSON-lines output."""

    n_max: int
    lambda_sum_max: int
    k_max: int
    output: str
    r_window_pad: int = 2
    variants: tuple[str, ...] = ("normal",)
    parallelism: int = 1

    def __post_init__(self):
        for name in ("n_max", "lambda_sum_max", "k_max"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"{name} must be at least 1")
        if self.r_window_pad < 0:
            raise InvalidInput("r_window_pad must be nonnegative")
        if self.parallelism < 1:
            raise InvalidInput("parallelism must be at least 1")
        bad = [v for v in self.variants if v not in _VARIANT_COMBOS]
        if bad or not self.variants:
            raise InvalidInput(f"variants must be a nonempty subset of normal/a/b/c, got {self.variants}")

    @classmethod
    def from_json(cls, data: dict) -> "SweepConfig":
        known = {"n_max", "lambda_sum_max", "k_max", "output", "r_window_pad", "variants", "parallelism"}
        unknown = set(data) - known
        if unknown:
            raise InvalidInput(f"unknown sweep config keys: {sorted(unknown)}")
        try:
            return cls(
                n_max=int(data["n_max"]),
                lambda_sum_max=int(data["lambda_sum_max"]),
                k_max=int(data["k_max"]),
                output=str(data["output"]),
                r_window_pad=int(data.get("r_window_pad", 2)),
                variants=tuple(data.get("variants", ["normal"])),
                parallelism=int(data.get("parallelism", 1)),
            )
        except KeyError as exc:
            raise InvalidInput(f"sweep config is missing key {exc}") from exc


def _lambdas(n: int, sum_max: int):
    """All nonzero weight vectors of rank n with total at most sum_max, lex order."""

    def rec(prefix: tuple[int, ...], remaining: int):
        if len(prefix) == n:
            if any(prefix):
                yield prefix
            return
        for v in range(remaining + 1):
            yield from rec(prefix + (v,), remaining - v)

    yield from rec((), sum_max)


def sweep_grid(cfg: SweepConfig):
    """Deterministic enumeration of (spec, kr) pairs for the sweep."""
    for n in range(1, cfg.n_max + 1):
        for lam in _lambdas(n, cfg.lambda_sum_max):
            for variant in cfg.variants:
                direction, pos = _VARIANT_COMBOS[variant]
                node = 1 if pos == "first" else n
                spec = MinAffSpec(n, lam, direction, 0)
                for k in range(1, cfg.k_max + 1):
                    for r in resonance_window(spec, node, k, cfg.r_window_pad):
                        yield spec, KRSpec(n, node, r, k)


def _sweep_point(point: tuple[MinAffSpec, KRSpec]) -> str:
    spec, kr = point
    base = {"spec": spec.to_json(), "kr": kr.to_json()}
    try:
        rep = classify_variant(spec, kr)
    except InvariantViolation as exc:
        base["violation"] = str(exc)
        return _dumps(base)
    return _dumps({**base, "report": rep.to_json()})


def cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"config is not valid JSON: {exc}") from exc
    cfg = SweepConfig.from_json(data)
    parallelism = cfg.parallelism
    env = os.environ.get("QCHARLAB_THREADS")
    if env is not None:
        try:
            parallelism = int(env)
        except ValueError as exc:
            raise InvalidInput(f"QCHARLAB_THREADS must be an integer, got {env!r}") from exc
        if parallelism < 1:
            raise InvalidInput("QCHARLAB_THREADS must be at least 1")

    points = list(sweep_grid(cfg))
    if parallelism == 1:
        lines = [_sweep_point(pt) for pt in points]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            lines = list(pool.map(_sweep_point, points, chunksize=16))

    counts = {"irreducible": 0, "case_i": 0, "case_ii": 0, "violations": 0}
    try:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_INVALID
    for line in lines:
        rec = json.loads(line)
        if "violation" in rec:
            counts["violations"] += 1
        else:
            case = rec["report"]["case"]
            counts["irreducible" if case == "irred" else f"case_{case}"] += 1
    print(f"points: {len(lines)}")
    print(
        "irreducible: {irreducible}  case_i: {case_i}  case_ii: {case_ii}  "
        "violations: {violations}".format(**counts)
    )
    print(f"output: {cfg.output}")
    return EXIT_VIOLATION if counts["violations"] else EXIT_OK


def cmd_factorize(args) -> int:
    m = _parse_monomial(args.monomial)
    result = q_factorize(m)
    if args.json:
        print(_dumps(result.to_json()))
    else:
        print("strings: " + " ".join(f"({r},{k})" for r, k in result.strings))
    return EXIT_OK


def cmd_transform(args) -> int:
    m = _parse_monomial(args.monomial)
    out = transform(m, args.kind, args.t)
    if args.json:
        print(_dumps(out.to_json()))
    else:
        print(str(out))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="qcharlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p, kr_required: bool):
        p.add_argument("--n", type=int, required=True, help="rank of the diagram")
        p.add_argument("--lambda", dest="lam", default=None, help="weight vector, e.g. 1,0,2")
        p.add_argument("--dir", dest="direction", choices=("inc", "dec"), default="inc")
        p.add_argument("--shift", type=int, default=0, help="global spectral shift")
        p.add_argument(
            "--kr",
            default=None,
            required=kr_required,
            help="KR triple node,r,k",
        )

    p_qchar = sub.add_parser("qchar", help="compute a q-character")
    add_spec_args(p_qchar, kr_required=False)
    p_qchar.add_argument("--oracle", choices=("tableaux", "partitions"), default="tableaux")
    p_qchar.add_argument("--full", action="store_true", help="list every term")
    p_qchar.add_argument("--json", action="store_true")
    p_qchar.set_defaults(func=cmd_qchar)

    p_tensor = sub.add_parser("tensor", help="classify a tensor product")
    add_spec_args(p_tensor, kr_required=True)
    p_tensor.add_argument("--json", action="store_true")
    p_tensor.set_defaults(func=cmd_tensor)

    p_sweep = sub.add_parser("sweep", help="run a verification sweep from a JSON config")
    p_sweep.add_argument("--config", required=True, help="path to the sweep config JSON")
    p_sweep.set_defaults(func=cmd_sweep)

    p_fact = sub.add_parser("factorize", help="q-factorize a rank-1 dominant monomial")
    p_fact.add_argument("monomial", help='monomial JSON, e.g. {"n":1,"Y":[[1,0,1]]}')
    p_fact.add_argument("--json", action="store_true")
    p_fact.set_defaults(func=cmd_factorize)

    p_tr = sub.add_parser("transform", help="apply a duality map to a monomial")
    p_tr.add_argument("monomial", help="monomial JSON")
    p_tr.add_argument("--kind", required=True, choices=("star", "star_inv", "minus", "kappa", "tau"))
    p_tr.add_argument("--t", type=int, default=0, help="shift amount for tau")
    p_tr.add_argument("--json", action="store_true")
    p_tr.set_defaults(func=cmd_transform)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
