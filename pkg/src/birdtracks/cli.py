"""Command line front end.

Output is deterministic: the same configuration and seed produce
byte-identical output, and JSON payloads carry a "schema": "1" marker so
they can be re-parsed and compared as values.  Configuration problems
exit with code 2 and a machine-readable JSON error on stderr; failed
verification exits with code 1 the same way; success exits with 0.

BIRDTRACK_THREADS, when set, must be a positive integer.  Evaluation is
single-threaded, which respects any positive cap; a malformed value is
rejected as a configuration error.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import CHECKS, run_checks
from .coefficients import RadicalCoefficient, RationalFunction
from .diagrams import format_cycles, inner_product
from .epsilon import (
    lr_decomposition,
    shape_dimension,
    transient_singlet_params,
)
from .errors import BirdtrackError
from .numeric import correlator_matrix, sample_special_unitary
from .singlets import SOURCES, basis_states, gram_matrix, singlet_count, singlet_table
from .tracebasis import all_decompositions, normalized_trace_basis, raw_trace_states

SCHEMA = "1"

_FORMATS = {
    "basis": ("text", "json", "latex"),
    "gram": ("text", "json", "latex"),
    "singlets": ("text", "json", "latex"),
    "trace-basis": ("text", "json", "latex"),
    "lr": ("text", "json", "latex"),
    "transient": ("text", "json", "latex"),
    "eval": ("text", "json"),
    "verify": ("text", "json"),
    "correlator": ("text", "json"),
}


class ConfigError(Exception):
    """A bad flag value or combination, reported before any computation."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


@dataclass
class CommandConfig:
    """Validated invocation parameters for one command."""

    command: str
    k: int | None = None
    m: int | None = None
    n: int | None = None
    N: int | None = None
    source: str | None = None
    format: str = "text"
    seed: int = 0
    output: str | None = None
    normalized: bool = False
    checks: tuple[str, ...] = ()
    samples: int = 1
    tolerance: float = 1e-10

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandConfig":
        fields = {f for f in cls.__dataclass_fields__}
        data = {k: v for k, v in vars(args).items() if k in fields and v is not None}
        return cls(**data)

    def validate(self) -> None:
        if self.format not in _FORMATS[self.command]:
            raise ConfigError(
                f"format {self.format!r} is not available for "
                f"{self.command!r} (choose from "
                f"{', '.join(_FORMATS[self.command])})")
        if self.k is not None and self.k < 1:
            raise ConfigError("--k must be at least 1")
        if self.m is not None and self.m < 0:
            raise ConfigError("--m must be at least 0")
        if self.n is not None and self.n < 0:
            raise ConfigError("--n must be at least 0")
        if self.source is not None and self.source not in SOURCES:
            raise ConfigError(
                f"--source must be one of {', '.join(SOURCES)}")
        if self.command in ("lr", "transient", "correlator"):
            if self.N is None or self.N < 2:
                raise ConfigError("--N must be at least 2 for this command")
        if self.command == "lr" and (self.m or 0) + (self.n or 0) < 1:
            raise ConfigError("--m and --n cannot both be 0")
        elif self.N is not None and self.N < 1:
            raise ConfigError("--N must be at least 1")
        if self.command == "verify":
            known = {name for name, _ in CHECKS}
            unknown = [c for c in self.checks if c not in known]
            if unknown:
                raise ConfigError(
                    f"unknown checks: {', '.join(unknown)} "
                    f"(available: {', '.join(sorted(known))})")
        if self.samples < 1:
            raise ConfigError("--samples must be at least 1")
        if not self.tolerance > 0:
            raise ConfigError("--tolerance must be positive")


# -- rendering helpers --------------------------------------------------------


def _frac_latex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _poly_latex(coeffs) -> str:
    """Ascending coefficient sequence to a descending-power polynomial."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[power])
        if not c:
            continue
        if power == 0:
            terms.append(_frac_latex(c))
            continue
        base = "N" if power == 1 else f"N^{{{power}}}"
        if c == 1:
            terms.append(base)
        elif c == -1:
            terms.append(f"-{base}")
        else:
            terms.append(f"{_frac_latex(c)} {base}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def _rf_latex(r: RationalFunction) -> str:
    num = _poly_latex(r.num)
    if r.den == (Fraction(1),):
        return num
    return f"\\frac{{{num}}}{{{_poly_latex(r.den)}}}"


def _rad_latex(rc: RadicalCoefficient) -> str:
    if rc.is_zero():
        return "0"
    pieces = []
    for key in sorted(rc.terms):
        mult = _rf_latex(rc.terms[key])
        if list(key) == [1]:
            pieces.append(mult)
        else:
            pieces.append(f"{mult} \\sqrt{{{_poly_latex(key)}}}")
    return " + ".join(pieces)


def _eval_latex(values: dict[int, Fraction]) -> str:
    if not values:
        return "0"
    pieces = []
    for d in sorted(values):
        if d == 1:
            pieces.append(_frac_latex(values[d]))
        else:
            pieces.append(f"{_frac_latex(values[d])} \\sqrt{{{d}}}")
    return " + ".join(pieces)


def _eval_text(values: dict[int, Fraction]) -> str:
    if not values:
        return "0"
    pieces = []
    for d in sorted(values):
        if d == 1:
            pieces.append(str(values[d]))
        else:
            pieces.append(f"{values[d]}*sqrt({d})")
    return " + ".join(pieces)


def _value_json(rc: RadicalCoefficient, at: int | None):
    if at is None:
        return rc.to_json()
    return [[d, str(v)] for d, v in sorted(rc.eval_at(at).items())]


def _value_text(rc: RadicalCoefficient, at: int | None) -> str:
    if at is None:
        return repr(rc)
    return _eval_text(rc.eval_at(at))


def _element_rows(element):
    """(cycle text, coefficient) rows of an element, in stable order."""
    return [(format_cycles(diag.perm), element.terms[diag])
            for diag in sorted(element.terms, key=lambda d: d.perm)]


def _coefficient_table(element, caption: str) -> list[str]:
    lines = [f"% {caption}", "\\begin{tabular}{ll}",
             "cycles & coefficient \\\\", "\\hline"]
    for cycles, coeff in _element_rows(element):
        lines.append(f"${cycles}$ & ${_rad_latex(coeff)}$ \\\\")
    lines.append("\\end{tabular}")
    return lines


# -- commands -----------------------------------------------------------------


def _cmd_basis(cfg: CommandConfig):
    k = cfg.k
    source = cfg.source or "builtin"
    states = basis_states(k, source)
    labels = ([d.to_text() for d in all_decompositions(k)]
              if source == "trace" else [str(i) for i in range(len(states))])
    records = []
    text = [f"singlet basis for k={k}, source={source}: "
            f"{len(states)} state(s)"]
    latex = [f"% singlet basis, k={k}, source={source}"]
    for i, state in enumerate(states):
        norm = inner_product(state, state)
        record = {"index": i, "label": labels[i],
                  "squared_norm": norm.to_json(),
                  "element": state.to_json()}
        records.append(record)
        text.append(f"state {i} [{labels[i]}]: squared norm {norm!r}")
        text.append(f"  {state!r}")
        latex.extend(_coefficient_table(state, f"state {i} [{labels[i]}]"))
        latex.append(f"$\\langle {i}|{i}\\rangle = {_rad_latex(norm)}$")
    payload = {"schema": SCHEMA, "command": "basis", "k": k,
               "source": source, "count": len(states), "states": records}
    return payload, text, latex, None


def _cmd_gram(cfg: CommandConfig):
    k = cfg.k
    source = cfg.source or "builtin"
    states = basis_states(k, source)
    gram = gram_matrix(states)
    payload = {"schema": SCHEMA, "command": "gram", "k": k,
               "source": source,
               "entries": [[_value_json(e, cfg.N) for e in row]
                           for row in gram]}
    if cfg.N is not None:
        payload["N"] = cfg.N
    text = [f"gram matrix for k={k}, source={source}"
            + (f", N={cfg.N}" if cfg.N is not None else "")]
    for row in gram:
        text.append("  [" + ", ".join(_value_text(e, cfg.N) for e in row)
                    + "]")
    latex = ["\\begin{pmatrix}"]
    for row in gram:
        cells = (_eval_latex(e.eval_at(cfg.N)) if cfg.N is not None
                 else _rad_latex(e) for e in row)
        latex.append(" & ".join(cells) + " \\\\")
    latex.append("\\end{pmatrix}")
    return payload, text, latex, None


def _cmd_singlets(cfg: CommandConfig):
    k = cfg.k if cfg.k is not None else 3
    source = cfg.source or "builtin"
    table = singlet_table(k, source)
    size = len(table)
    payload = {"schema": SCHEMA, "command": "singlets", "k": k,
               "source": source, "size": size,
               "operators": [[op.to_json() for op in row] for row in table]}
    text = [f"singlet operator table for k={k}, source={source}: "
            f"{size} projectors, {size * size - size} transitions"]
    for i in range(size):
        for j in range(size):
            name = f"P{i + 1}" if i == j else f"T{i + 1}{j + 1}"
            text.append(
                f"{name:>5}  chi = {table[i][j].normalization!r}")
    latex = [f"% operator table, k={k}, source={source}",
             "\\begin{tabular}{c|" + "c" * size + "}",
             " & " + " & ".join(str(j + 1) for j in range(size)) + " \\\\",
             "\\hline"]
    for i in range(size):
        cells = [f"P_{{{i + 1}}}" if i == j else f"T_{{{i + 1}{j + 1}}}"
                 for j in range(size)]
        latex.append(f"{i + 1} & " + " & ".join(cells) + " \\\\")
    latex.append("\\end{tabular}")
    for i in range(size):
        for j in range(i, size):
            chi = _rad_latex(table[i][j].normalization)
            latex.append(f"$\\chi_{{{i + 1}{j + 1}}} = {chi}$")
    return payload, text, latex, None


def _cmd_trace_basis(cfg: CommandConfig):
    k = cfg.k if cfg.k is not None else 3
    if cfg.normalized:
        ops = normalized_trace_basis(k)
        records = [{"index": i, "normalization": op.normalization.to_json(),
                    "element": op.ket.to_json()}
                   for i, op in enumerate(ops)]
        payload = {"schema": SCHEMA, "command": "trace-basis", "k": k,
                   "normalized": True, "states": records}
        text = [f"normalized trace basis for k={k}: {len(ops)} state(s)"]
        latex = [f"% normalized trace basis, k={k}"]
        for i, op in enumerate(ops):
            text.append(f"state {i}: normalization "
                        f"{op.normalization!r}")
            text.append(f"  {op.ket!r}")
            latex.extend(_coefficient_table(op.ket, f"state {i}"))
            latex.append(f"$\\beta_{{{i}}} = "
                         f"{_rad_latex(op.normalization)}$")
        return payload, text, latex, None
    decs = all_decompositions(k)
    states = raw_trace_states(k)
    records = []
    text = [f"raw trace basis for k={k}: {len(states)} state(s)"]
    latex = [f"% raw trace basis, k={k}"]
    for i, (dec, state) in enumerate(zip(decs, states)):
        norm = inner_product(state, state)
        records.append({"index": i, "cycles": dec.to_text(),
                        "squared_norm": norm.to_json(),
                        "element": state.to_json()})
        text.append(f"state {i} [{dec.to_text()}]: squared norm {norm!r}")
        text.append(f"  {state!r}")
        latex.extend(_coefficient_table(state, f"state {i} [{dec.to_text()}]"))
        latex.append(f"$\\langle {i}|{i}\\rangle = {_rad_latex(norm)}$")
    payload = {"schema": SCHEMA, "command": "trace-basis", "k": k,
               "normalized": False, "states": records}
    return payload, text, latex, None


def _cmd_lr(cfg: CommandConfig):
    shapes = lr_decomposition(cfg.m, cfg.n, cfg.N)
    records = [{"shape": list(s.rows), "dimension": shape_dimension(s, cfg.N)}
               for s in shapes]
    total = sum(r["dimension"] for r in records)
    expected = cfg.N ** (cfg.m + cfg.n)
    payload = {"schema": SCHEMA, "command": "lr", "m": cfg.m, "n": cfg.n,
               "N": cfg.N, "shapes": records, "total_dimension": total,
               "expected_dimension": expected,
               "conserved": total == expected}
    text = [f"decomposition of {cfg.m} fundamental x {cfg.n} "
            f"antifundamental factors at N={cfg.N}: "
            f"{len(records)} shape(s)"]
    for r in records:
        text.append(f"  {r['shape']}  dimension {r['dimension']}")
    text.append(f"total dimension {total}, expected {expected}"
                + ("" if total == expected else "  MISMATCH"))
    latex = ["\\begin{tabular}{ll}", "shape & dimension \\\\", "\\hline"]
    for r in records:
        rows = ",".join(str(x) for x in r["shape"])
        latex.append(f"$[{rows}]$ & {r['dimension']} \\\\")
    latex.append("\\end{tabular}")
    latex.append(f"% total {total}, expected {expected}")
    fail = None if total == expected else "dimension count mismatch"
    return payload, text, latex, fail


def _cmd_transient(cfg: CommandConfig):
    params = transient_singlet_params(cfg.m, cfg.n, cfg.N)
    payload = {"schema": SCHEMA, "command": "transient", "m": cfg.m,
               "n": cfg.n, "N": cfg.N,
               "solutions": [p.to_json() for p in params]}
    text = [f"transient singlet parameters for m={cfg.m}, n={cfg.n}, "
            f"N={cfg.N}: {len(params)} solution(s)"]
    for p in params:
        text.append(f"  a={p.a} b={p.b} k={p.k} alpha={p.alpha}")
    latex = ["\\begin{tabular}{llll}", "$a$ & $b$ & $k$ & $\\alpha$ \\\\",
             "\\hline"]
    for p in params:
        latex.append(f"{p.a} & {p.b} & {p.k} & {p.alpha} \\\\")
    latex.append("\\end{tabular}")
    return payload, text, latex, None


def _cmd_eval(cfg: CommandConfig):
    source = cfg.source or "trace"
    count = singlet_count(cfg.k, cfg.N, source)
    payload = {"schema": SCHEMA, "command": "eval", "k": cfg.k, "N": cfg.N,
               "source": source, "count": count}
    text = [f"singlet count for k={cfg.k} at N={cfg.N} "
            f"({source} source): {count}"]
    return payload, text, None, None


def _cmd_verify(cfg: CommandConfig):
    results = run_checks(cfg.checks or None)
    passed = sum(1 for _, ok in results if ok)
    failed = len(results) - passed
    payload = {"schema": SCHEMA, "command": "verify",
               "results": [{"name": name, "passed": ok}
                           for name, ok in results],
               "passed": passed, "failed": failed}
    width = max(len(name) for name, _ in results)
    text = [f"{name:<{width}}  {'pass' if ok else 'FAIL'}"
            for name, ok in results]
    text.append(f"{passed} passed, {failed} failed")
    fail = None if failed == 0 else f"{failed} of {len(results)} checks failed"
    return payload, text, None, fail


def _cmd_correlator(cfg: CommandConfig):
    states = raw_trace_states(cfg.k)
    eye = np.eye(cfg.N, dtype=complex)
    base = correlator_matrix(states, [eye] * (2 * cfg.k), cfg.N)
    samples = []
    text = [f"correlator invariance for k={cfg.k} trace states at "
            f"N={cfg.N}"]
    worst = 0.0
    for s in range(cfg.samples):
        u = sample_special_unitary(cfg.N, cfg.seed + s)
        legs = [u] * cfg.k + [np.conj(u)] * cfg.k
        moved = correlator_matrix(states, legs, cfg.N)
        residual = float(np.max(np.abs(moved - base)))
        worst = max(worst, residual)
        samples.append({
            "seed": cfg.seed + s,
            "residual": residual,
            "matrix": [[[float(z.real), float(z.imag)] for z in row]
                       for row in moved],
        })
        text.append(f"  seed {cfg.seed + s}: residual {residual:.3e}")
    ok = worst <= cfg.tolerance
    payload = {"schema": SCHEMA, "command": "correlator", "k": cfg.k,
               "N": cfg.N, "seed": cfg.seed, "samples": samples,
               "max_residual": worst, "tolerance": cfg.tolerance,
               "passed": ok}
    text.append(f"max residual {worst:.3e}, tolerance "
                f"{cfg.tolerance:.1e}: {'pass' if ok else 'FAIL'}")
    fail = None if ok else f"residual {worst:.3e} exceeds tolerance"
    return payload, text, None, fail


_COMMANDS = {
    "basis": _cmd_basis,
    "gram": _cmd_gram,
    "singlets": _cmd_singlets,
    "trace-basis": _cmd_trace_basis,
    "lr": _cmd_lr,
    "transient": _cmd_transient,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "correlator": _cmd_correlator,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="birdtracks",
                     description="Singlet projectors for mixed tensor "
                                 "powers at symbolic N.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        for flag, options in flags.items():
            p.add_argument(f"--{flag}", **options)
        p.add_argument("--format", choices=_FORMATS[name], default="text")
        p.add_argument("--output", help="write the result to this path")
        return p

    intflag = {"type": int, "required": True}
    add("basis", "list the singlet basis states",
        k=intflag, source={"choices": SOURCES, "default": "builtin"})
    add("gram", "pairwise inner products of the basis states",
        k=intflag, source={"choices": SOURCES, "default": "builtin"},
        N={"type": int})
    add("singlets", "projector and transition operator table",
        k={"type": int, "default": 3},
        source={"choices": SOURCES, "default": "builtin"})
    add("trace-basis", "trace states, raw or orthogonalized",
        k={"type": int, "default": 3},
        normalized={"action": "store_true"})
    add("lr", "irreducible shapes of a mixed tensor power",
        m=intflag, n=intflag, N=intflag)
    add("transient", "parameters of rank-dependent extra singlets",
        m=intflag, n=intflag, N=intflag)
    add("eval", "singlet count at a concrete rank",
        k=intflag, N=intflag,
        source={"choices": SOURCES, "default": "trace"})
    add("verify", "run the library invariant suite",
        check={"action": "append", "dest": "checks", "metavar": "NAME",
               "help": "run only this named check (repeatable)"})
    add("correlator", "check sampled group elements fix the trace states",
        k=intflag, N=intflag, seed={"type": int, "default": 0},
        samples={"type": int, "default": 1},
        tolerance={"type": float, "default": 1e-10})
    return parser


def _thread_cap() -> int | None:
    raw = os.environ.get("BIRDTRACK_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ConfigError(
            f"BIRDTRACK_THREADS must be a positive integer, got {raw!r}")
    return value


def _emit_error(code: int, message: str) -> int:
    blob = {"schema": SCHEMA, "error": {"code": code, "message": message}}
    print(json.dumps(blob), file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        _thread_cap()
        args = build_parser().parse_args(argv)
        if isinstance(getattr(args, "checks", None), list):
            args.checks = tuple(args.checks)
        cfg = CommandConfig.from_args(args)
        cfg.validate()
        payload, text, latex, fail = _COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        return _emit_error(2, str(exc))
    except BirdtrackError as exc:
        return _emit_error(2, f"{type(exc).__name__}: {exc}")
    if cfg.format == "json":
        rendered = json.dumps(payload, indent=2)
    elif cfg.format == "latex":
        rendered = "\n".join(latex)
    else:
        rendered = "\n".join(text)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    else:
        print(rendered)
    if fail is not None:
        return _emit_error(1, fail)
    return 0


if __name__ == "__main__":
    sys.exit(main())
