"""Command-line entry point ``qdis``.

Exit codes: 0 success, 1 input or parse error, 2 unphysical state,
3 ideal-disentanglement precondition failed. ``QDIS_TOL`` overrides the
1e-9 state validation tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import channels, cloning, geometry, ideal, separability, statefile
from .errors import EtaOutOfRange, InvalidSpec, QdisError, StateInvariantError
from .linalg import DEFAULT_TOL, validate_state
from .states import Kind, StateSpec, make_state, parse_kind

EXIT_OK, EXIT_INPUT, EXIT_UNPHYSICAL, EXIT_NOT_IDEAL = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _tol() -> float:
    raw = os.environ.get("QDIS_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise CliError(f"QDIS_TOL={raw!r} is not a number", EXIT_INPUT) from None


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_INPUT) from None


def _load(path: str):
    try:
        m, label = statefile.read_matrix(path)
    except statefile.StateFileError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    try:
        return validate_state(m, _tol()), label
    except StateInvariantError as exc:
        raise CliError(f"{path}: unphysical state, {exc}", EXIT_UNPHYSICAL) from None


def _analysis(rho) -> dict:
    return {
        "bloch": geometry.decompose(rho).to_dict(),
        "profile": geometry.profile(rho).to_dict(),
        "separability": separability.ppt_verdict(rho).to_dict(),
    }


def cmd_gen(args) -> int:
    try:
        if args.spec:
            spec = StateSpec.parse(args.spec)
        else:
            kind = parse_kind(args.kind)
            param = {
                Kind.BELL: args.index,
                Kind.SCHMIDT: args.theta,
                Kind.WERNER: args.p,
            }.get(kind, args.seed)
            if param is None:
                raise InvalidSpec(f"{kind.value} needs its parameter flag")
            spec = StateSpec(kind, param)
    except InvalidSpec as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    rho = make_state(spec)
    _emit(statefile.state_to_json(rho, label=args.label or str(spec)), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    rho, label = _load(args.file)
    if args.format == "json":
        doc = {"file": args.file, "label": label, **_analysis(rho)}
        _emit(json.dumps(doc, indent=2) + "\n", None)
        return EXIT_OK
    d = geometry.decompose(rho)
    prof = geometry.profile(rho)
    ver = separability.ppt_verdict(rho)
    header = (
        [f"r{i}" for i in (1, 2, 3)]
        + [f"s{i}" for i in (1, 2, 3)]
        + [f"t{m}{n}" for m in (1, 2, 3) for n in (1, 2, 3)]
        + list(prof.CSV_HEADER)
        + list(ver.CSV_HEADER)
    )
    row = [float(x) for x in (*d.r, *d.s, *d.T.ravel())] + prof.csv_fields() + ver.csv_fields()
    _emit(_csv(header, [row]), None)
    return EXIT_OK


def cmd_channel(args) -> int:
    try:
        ka = channels.isotropic_kraus(args.eta1)
        kb = channels.isotropic_kraus(args.eta2)
    except EtaOutOfRange as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    rho, label = _load(args.file)
    out = channels.apply_local(rho, ka, kb)
    if args.out:
        note = f"{label or args.file} | isotropic({args.eta1!r}, {args.eta2!r})"
        _emit(statefile.state_to_json(out, label=note), args.out)
    doc = {
        "eta1": args.eta1,
        "eta2": args.eta2,
        "quality_factor": channels.quality_factor(args.eta1, args.eta2),
        "threshold_ok": channels.threshold_ok(args.eta1, args.eta2),
        "before": _analysis(rho),
        "after": _analysis(out),
    }
    _emit(json.dumps(doc, indent=2) + "\n", None)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.eta_steps < 2 or args.theta_steps < 2:
        raise CliError("--eta-steps and --theta-steps must be >= 2", EXIT_INPUT)
    rows = channels.threshold_sweep(args.eta_steps, args.theta_steps)
    body = _csv(
        channels.SweepRow.HEADER,
        [
            (r.eta1, r.eta2, r.product, r.worst_margin, r.ppt_all_theta, r.threshold_predict, r.agree)
            for r in rows
        ],
    )
    bad = channels.count_disagreements(rows)
    body += f"# disagreements_outside_band={bad}\n"
    _emit(body, args.out)
    if args.out:
        print(f"{len(rows)} rows, disagreements outside band: {bad}", file=sys.stderr)
    return EXIT_OK


def cmd_ideal(args) -> int:
    states = [_load(p)[0] for p in args.files]
    result = ideal.batch_ideal_check(states, args.tol)
    doc = {"files": args.files, **result.to_dict(args.tol)}
    if result.failing_pair is not None:
        i, j = result.failing_pair
        doc["failure"] = f"reduced states of {args.files[i]} and {args.files[j]} do not commute"
    _emit(json.dumps(doc, indent=2) + "\n", None)
    return EXIT_OK if result.commuting_family and result.all_ideal(args.tol) else EXIT_NOT_IDEAL


def cmd_cloning(args) -> int:
    if args.max_m < 1:
        raise CliError("--max-m must be >= 1", EXIT_INPUT)
    rows = cloning.cloning_table(args.max_m)
    text = _csv(
        cloning.CloningRow.HEADER,
        [(r.mode.value, r.M, r.eta, r.net_shrink, r.meets_threshold) for r in rows],
    )
    for mode in cloning.CloningMode:
        text += f"# min_copies {mode.value}={cloning.min_copies(mode)}\n"
    _emit(text, None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdis", description="Two-qubit disentanglement toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a named or random state")
    g.add_argument("--spec", help="kind:param, e.g. schmidt:0.5236 or pure:42")
    g.add_argument("--kind", default="bell", help="bell|schmidt|werner|pure|mixed|product")
    g.add_argument("--index", type=int, default=0, help="Bell index 0..3 (phi+, phi-, psi+, psi-)")
    g.add_argument("--theta", type=float, default=None)
    g.add_argument("--p", type=float, default=None)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--label")
    g.add_argument("--out", "-o")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="Bloch decomposition, correlation profile and PPT verdict")
    a.add_argument("file")
    a.add_argument("--format", choices=("csv", "json"), default="json")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("channel", help="apply isotropic channels on both qubits")
    c.add_argument("file")
    c.add_argument("--eta1", type=float, required=True)
    c.add_argument("--eta2", type=float, required=True)
    c.add_argument("--out", "-o")
    c.set_defaults(func=cmd_channel)

    s = sub.add_parser("sweep", help="numerical check of the eta1*eta2 <= 1/3 threshold")
    s.add_argument("--eta-steps", type=int, default=50)
    s.add_argument("--theta-steps", type=int, default=91)
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_sweep)

    i = sub.add_parser("ideal", help="dephasing disentangler over a family of states")
    i.add_argument("files", nargs="+")
    i.add_argument("--tol", type=float, default=ideal.IDEAL_TOL)
    i.set_defaults(func=cmd_ideal)

    k = sub.add_parser("cloning", help="cloner reduction factors and minimal copy numbers")
    k.add_argument("--max-m", type=int, default=6)
    k.set_defaults(func=cmd_cloning)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that code is reserved here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        print(f"qdis: {exc}", file=sys.stderr)
        return exc.code
    except QdisError as exc:
        print(f"qdis: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
