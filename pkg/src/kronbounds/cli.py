"""Command-line entry point: ``python -m kronbounds <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

import mpmath

from .bounds import DEFAULT_BUDGET, full_report
from .characters import character
from .errors import DomainError, ResourceLimitError
from .kronecker import DEFAULT_MAX_TERMS, kronecker, kronecker_alternating
from .partitions import Partition
from .qbinomial import delta, effective_gap_bound, gaussian_binomial
from .stability import stability_sequence
from .suites import SUITES, build_instances, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    partitions: list[str] = field(default_factory=list)
    method: str = "character"
    suite: str | None = None
    n: int | None = None
    lmax: int | None = None
    ell: int | None = None
    m: int | None = None
    k: int | None = None
    kmax: int = 3
    tmax: int = 3
    qoption: str | None = None
    format: str = "table"
    jobs: int = 1
    budget: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and every subcommand, so flags may appear anywhere
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=FORMATS, default=d("table"))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--budget", type=int, default=d(None))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kronbounds", parents=[_global_flags(False)],
                     description="Kronecker coefficients, bounds and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_global_flags(True)]

    kron = sub.add_parser("kron", parents=common, help="Kronecker coefficient g(lam, mu, nu)")
    kron.add_argument("partitions", nargs=3)
    kron.add_argument("--method", choices=("character", "alternating", "both"),
                      default="character")

    q = sub.add_parser("qbinom", parents=common, help="Gaussian binomial data for an l x m box")
    q.add_argument("ell", type=int)
    q.add_argument("m", type=int)
    group = q.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", action="store_true")
    group.add_argument("--delta", type=int, metavar="K")
    group.add_argument("--gapbound", type=int, metavar="K")

    st = sub.add_parser("stability", parents=common, help="G_k(t) for t = 0..tmax")
    st.add_argument("partitions", nargs=3)
    st.add_argument("--k", type=int, default=1)
    st.add_argument("--tmax", type=int, default=4)

    b = sub.add_parser("bounds", parents=common, help="every bound for one triple")
    b.add_argument("partitions", nargs=3)

    c = sub.add_parser("char", parents=common, help="character value chi^lam[alpha]")
    c.add_argument("partitions", nargs=2)

    v = sub.add_parser("verify", parents=common, help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--n", type=int)
    v.add_argument("--lmax", type=int)
    v.add_argument("--kmax", type=int, default=3)
    v.add_argument("--tmax", type=int, default=3)
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, format=ns.format, jobs=ns.jobs, budget=ns.budget)
    if cfg.jobs < 1:
        raise UsageError("--jobs must be positive")
    if ns.command in ("kron", "stability", "bounds", "char"):
        cfg.partitions = list(ns.partitions)
    if ns.command == "kron":
        cfg.method = ns.method
    elif ns.command == "stability":
        cfg.k, cfg.tmax = ns.k, ns.tmax
    elif ns.command == "qbinom":
        cfg.ell, cfg.m = ns.ell, ns.m
        if ns.poly:
            cfg.qoption = "poly"
        elif ns.delta is not None:
            cfg.qoption, cfg.k = "delta", ns.delta
        else:
            cfg.qoption, cfg.k = "gapbound", ns.gapbound
    elif ns.command == "verify":
        cfg.suite, cfg.n, cfg.lmax, cfg.kmax, cfg.tmax = ns.suite, ns.n, ns.lmax, ns.kmax, ns.tmax
    return cfg


def _emit(cfg: RunConfig, rows: list[dict], table: str, out) -> None:
    """Write ``rows`` as JSON/CSV, or the preformatted ``table`` text."""
    if cfg.format == "json":
        out.write(json.dumps(rows if len(rows) != 1 else rows[0], sort_keys=True) + "\n")
    elif cfg.format == "csv":
        buf = io.StringIO()
        names = list(rows[0]) if rows else []
        writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        out.write(table + "\n")


def _partitions(cfg: RunConfig) -> list[Partition]:
    return [Partition.parse(p) for p in cfg.partitions]


def cmd_kron(cfg: RunConfig, out) -> int:
    lam, mu, nu = _partitions(cfg)
    methods = ["character", "alternating"] if cfg.method == "both" else [cfg.method]
    values = {}
    for method in methods:
        if method == "character":
            values[method] = kronecker(lam, mu, nu)
        else:
            limit = cfg.budget if cfg.budget is not None else DEFAULT_MAX_TERMS
            values[method] = kronecker_alternating(lam, mu, nu, max_terms=limit)
    row = {"lambda": str(lam), "mu": str(mu), "nu": str(nu)}
    row.update({m: str(v) for m, v in values.items()})
    _emit(cfg, [row], ", ".join(str(v) for v in values.values()), out)
    return EXIT_OK if len(set(values.values())) == 1 else EXIT_FAIL


def cmd_qbinom(cfg: RunConfig, out) -> int:
    ell, m = cfg.ell, cfg.m
    if ell < 1 or m < 1:
        raise DomainError("box sides must be positive")
    row = {"l": str(ell), "m": str(m)}
    if cfg.qoption == "poly":
        coeffs = [str(c) for c in gaussian_binomial(ell, m)]
        row["coefficients"] = ",".join(coeffs)
        text = row["coefficients"]
    elif cfg.qoption == "delta":
        row["k"], row["delta"] = str(cfg.k), str(delta(ell, m, cfg.k))
        text = row["delta"]
    else:
        bound = effective_gap_bound(ell, m, cfg.k)
        d = delta(ell, m, cfg.k)
        margin = d - bound
        row.update(k=str(cfg.k), delta=str(d), bound=_real(bound), margin=_real(margin))
        text = f"delta {d} | bound {row['bound']} | margin {row['margin']}"
    _emit(cfg, [row], text, out)
    return EXIT_OK


def _real(x) -> str:
    return mpmath.nstr(x, 30)


def cmd_stability(cfg: RunConfig, out) -> int:
    lam, mu, nu = _partitions(cfg)
    if cfg.k < 1 or cfg.tmax < 0:
        raise DomainError("need k >= 1 and tmax >= 0")
    seq = stability_sequence(lam, mu, nu, cfg.k, cfg.tmax)
    stable = str(seq.stable_value) if seq.stabilized else "-"
    row = {"lambda": str(lam), "mu": str(mu), "nu": str(nu), "k": str(cfg.k),
           "values": " ".join(map(str, seq.values)), "onset": str(seq.onset),
           "stable": None if not seq.stabilized else stable}
    text = f"{row['values']} | onset {seq.onset} | stable {stable}"
    if cfg.format == "json":
        row["values"] = [str(v) for v in seq.values]
    _emit(cfg, [row], text, out)
    return EXIT_OK


def cmd_bounds(cfg: RunConfig, out) -> int:
    lam, mu, nu = _partitions(cfg)
    report = full_report(lam, mu, nu, budget=cfg.budget if cfg.budget is not None else DEFAULT_BUDGET)
    data = report.to_dict()
    if cfg.format == "json":
        out.write(report.to_json() + "\n")
    else:
        rows = [dict(triple=";".join(data["triple"]), true_g=data["true_g"], **e)
                for e in data["entries"]]
        lines = [f"g({', '.join(data['triple'])}) = {data['true_g'] if data['true_g'] is not None else '?'}"]
        for e in data["entries"]:
            mark = {True: "ok", False: "VIOLATED", None: "-"}[e["satisfied"]]
            state = "" if e["applicable"] else " (inapplicable)"
            lines.append(f"  {e['direction']:<5} {e['name']:<20} {e['value']}{state} {mark}")
        _emit(cfg, rows, "\n".join(lines), out)
    return EXIT_OK if report.consistent() else EXIT_FAIL


def cmd_char(cfg: RunConfig, out) -> int:
    lam, alpha = _partitions(cfg)
    value = character(lam, alpha)
    _emit(cfg, [{"lambda": str(lam), "alpha": str(alpha), "value": str(value)}], str(value), out)
    return EXIT_OK


def _run_suite(name: str, cfg: RunConfig):
    size = cfg.lmax if SUITES[name].option == "lmax" else cfg.n
    instances = build_instances(name, size, cfg.kmax, cfg.tmax)
    if cfg.jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(run_check, instances, chunksize=16))
    else:
        outcomes = [run_check(i) for i in instances]
    return instances, [o for o in outcomes if not o.ok]


def cmd_verify(cfg: RunConfig, out) -> int:
    names = sorted(SUITES) if cfg.suite == "all" else [cfg.suite]
    rows, lines = [], []
    status = EXIT_OK
    for name in names:
        instances, failures = _run_suite(name, cfg)
        witness = failures[0] if failures else None
        rows.append({
            "suite": name, "checked": str(len(instances)), "failed": str(len(failures)),
            "passed": not failures,
            "witness": witness.instance.label() if witness else None,
            "detail": witness.detail if witness else None,
        })
        if failures:
            status = EXIT_FAIL
            lines.append(f"{name}: FAIL {len(failures)}/{len(instances)}; "
                         f"minimal witness: {witness.instance.label()} ({witness.detail})")
        else:
            lines.append(f"{name}: ok {len(instances)} instances")
    _emit(cfg, rows, "\n".join(lines), out)
    return status


COMMANDS = {"kron": cmd_kron, "qbinom": cmd_qbinom, "stability": cmd_stability,
            "bounds": cmd_bounds, "char": cmd_char, "verify": cmd_verify}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        err.write(f"kronbounds: error: {exc}\n")
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg, out)
    except DomainError as exc:
        err.write(f"kronbounds: error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        err.write(f"kronbounds: resource limit: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
