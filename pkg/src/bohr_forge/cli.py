"""Command-line surface.

Every subcommand emits a single artifact (JSON by default, CSV or Markdown
for tabular reports) whose envelope records the full run configuration
including the seed, so identical configurations reproduce byte-identical
output. Exit codes: 0 success, 1 verification failure, 2 usage/configuration
error (including malformed JSON input and budget violations).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from . import experiments as exp
from .bohr import lift, unlift
from .constructions import (
    dirichlet_rudin_shapiro,
    flat_polynomial,
    flat_pullback,
    rudin_shapiro,
    rudin_shapiro_sup_bound,
)
from .errors import BohrForgeError
from .norms import sup_flow, sup_lower_grid, sup_upper_lipschitz
from .numtheory import factorize, primes_up_to
from .polys import DirichletPolynomial, MultiPolynomial
from .serialize import canonical_json, csv_table, markdown_table, poly_from_obj, poly_to_obj

_KNOWN_FIELDS = {
    "command", "input", "output", "fmt", "seed", "threads",
    "q", "d", "matrix", "i", "n", "limit", "dirichlet", "check",
    "points_per_dim", "refine_steps", "t_horizon", "samples", "trials",
    "method", "n_list", "y", "tighten", "index",
}


@dataclass
class RunConfig:
    """Validated run configuration; unknown fields are rejected."""

    command: str
    seed: int = 0
    threads: int = 1
    fmt: str = "json"
    extras: dict | None = None

    def __post_init__(self):
        unknown = set(self.extras or {}) - _KNOWN_FIELDS
        if unknown:
            raise BohrForgeError(f"unknown configuration fields: {sorted(unknown)}")
        if self.fmt not in ("json", "csv", "md"):
            raise BohrForgeError(f"format must be json, csv or md, got {self.fmt}")
        if self.threads < 1:
            raise BohrForgeError(f"threads must be positive, got {self.threads}")

    def to_obj(self) -> dict:
        obj = {"command": self.command, "seed": self.seed, "threads": self.threads, "format": self.fmt}
        for k, v in sorted((self.extras or {}).items()):
            obj[k] = v
        return obj


def _read_poly(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return poly_from_obj(json.loads(text))


def _emit(args, payload: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _config(args, **extras) -> RunConfig:
    return RunConfig(
        command=args.command,
        seed=getattr(args, "seed", 0),
        threads=args.threads,
        fmt=getattr(args, "fmt", "json"),
        extras=extras,
    )


def _report(args, config: RunConfig, result, rows_key: str | None = None, columns: list | None = None) -> str:
    if config.fmt == "json" or rows_key is None:
        return canonical_json({"config": config.to_obj(), "result": result})
    rows = result[rows_key]
    cols = columns or (list(rows[0]) if rows else [])
    if config.fmt == "csv":
        return csv_table(rows, cols)
    return markdown_table(rows, cols)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohr-forge", description=__doc__)
    default_threads = int(os.environ.get("BOHR_FORGE_THREADS", "1"))
    parser.add_argument("--threads", type=int, default=default_threads,
                        help="parallel width cap (env BOHR_FORGE_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", dest="fmt", choices=("json", "csv", "md"), default="json")
        p.add_argument("-o", "--output", default=None)
        return p

    p = add("primes", help="sieve all primes up to a limit")
    p.add_argument("--limit", type=int, required=True)

    p = add("factor", help="canonical prime factorization")
    p.add_argument("--n", type=int, required=True)

    p = add("lift", help="Dirichlet JSON -> multivariate JSON")
    p.add_argument("--input", default="-")

    p = add("unlift", help="multivariate JSON -> Dirichlet JSON")
    p.add_argument("--input", default="-")

    p = add("rudin-shapiro", help="the +-1 polynomial pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dirichlet", action="store_true", help="use prime shifts instead of z^(2^k)")

    p = add("generate", help="flat tuple component with its Dirichlet pull-back")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--matrix", choices=("hadamard", "schur"), required=True)
    p.add_argument("--i", dest="index", type=int, default=1)

    p = add("norms", help="sup-norm certificates for a polynomial JSON file")
    p.add_argument("--input", default="-")
    p.add_argument("--method", choices=("grid", "flow", "lipschitz"), required=True)
    p.add_argument("--points-per-dim", type=int, default=None)
    p.add_argument("--refine-steps", type=int, default=2)
    p.add_argument("--t-horizon", type=float, default=1e4)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = add("sidon-cert", help="Sidon-constant lower-bound certificate")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--matrix", choices=("hadamard", "schur"), required=True)
    p.add_argument("--tighten", action="store_true")
    p.add_argument("--points-per-dim", type=int, default=None)

    p = add("sidon-table", help="schedule rows for a list of N")
    p.add_argument("--N", dest="n_list", type=int, action="append", required=True)

    p = add("verify", help="inequality verification runs")
    p.add_argument("--check", choices=("bohr", "thm25", "partial-sums", "bohr-radius"), required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("corona-demo", help="half-plane floor vs lifted common zero")

    p = add("random-model", help="seeded Rademacher sup model")
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    return parser


_STANDARD_CONFIGS = [(q, d, "hadamard") for q in (2, 4, 8) for d in (1, 2, 3)] + [
    (q, d, "schur") for q in (2, 3, 5) for d in (1, 2, 3)
]


def _run(args) -> int:
    cmd = args.command

    if cmd == "primes":
        config = _config(args, limit=args.limit)
        table = primes_up_to(args.limit)
        result = {"limit": table.limit, "count": len(table), "primes": list(table.primes)}
        _emit(args, _report(args, config, result))
        return 0

    if cmd == "factor":
        config = _config(args, n=args.n)
        fac = factorize(args.n)
        result = {
            "n": fac.n,
            "factors": [[p, e] for p, e in fac.factors],
            "omega": fac.omega,
            "squarefree": fac.is_squarefree,
            "p_plus": fac.p_plus if fac.factors else None,
        }
        _emit(args, _report(args, config, result))
        return 0

    if cmd == "lift":
        _emit(args, canonical_json(poly_to_obj(lift(_read_poly(args.input)))))
        return 0

    if cmd == "unlift":
        _emit(args, canonical_json(poly_to_obj(unlift(_read_poly(args.input)))))
        return 0

    if cmd == "rudin-shapiro":
        config = _config(args, n=args.n, dirichlet=args.dirichlet)
        P, Q = (dirichlet_rudin_shapiro if args.dirichlet else rudin_shapiro)(args.n)
        result = {
            "n": args.n,
            "wiener": P.wiener_norm(),
            "declared_sup_upper": rudin_shapiro_sup_bound(args.n),
            "wiener_over_sup_bound": P.wiener_norm() / rudin_shapiro_sup_bound(args.n),
            "P": poly_to_obj(P),
            "Q": poly_to_obj(Q),
        }
        _emit(args, _report(args, config, result))
        return 0

    if cmd == "generate":
        config = _config(args, q=args.q, d=args.d, matrix=args.matrix, i=args.index)
        out = flat_pullback(flat_polynomial(args.q, args.d, args.matrix, args.index))
        result = out.to_obj()
        result["wiener"] = out.poly.wiener_norm()
        _emit(args, _report(args, config, result))
        return 0

    if cmd == "norms":
        config = _config(args, method=args.method, input=args.input, seed=args.seed,
                         points_per_dim=args.points_per_dim)
        poly = _read_poly(args.input)
        if args.method == "flow":
            if isinstance(poly, MultiPolynomial):
                poly = unlift(poly)
            cert = sup_flow(poly, T=args.t_horizon, samples=args.samples,
                            refine_steps=args.refine_steps)
        else:
            if isinstance(poly, DirichletPolynomial):
                poly = lift(poly)
            fn = sup_lower_grid if args.method == "grid" else sup_upper_lipschitz
            kwargs = {"points_per_dim": args.points_per_dim, "seed": args.seed, "threads": args.threads}
            if args.method == "grid":
                kwargs["refine_steps"] = args.refine_steps
                kwargs["samples"] = args.samples
            cert = fn(poly, **kwargs)
        _emit(args, _report(args, config, cert.to_obj()))
        return 0

    if cmd == "sidon-cert":
        config = _config(args, q=args.q, d=args.d, matrix=args.matrix, tighten=args.tighten)
        cert = exp.sidon_certificate(args.q, args.d, args.matrix, tighten=args.tighten,
                                     points_per_dim=args.points_per_dim)
        _emit(args, _report(args, config, cert.to_obj()))
        return 0

    if cmd == "sidon-table":
        config = _config(args, n_list=args.n_list)
        report = exp.schedule_report(args.n_list)
        _emit(args, _report(args, config, report, rows_key="rows",
                            columns=["N", "admissible", "d", "q", "bound", "reference",
                                     "lambda", "log_ratio", "log_ratio_inverse"]))
        return 0

    if cmd == "verify":
        config = _config(args, check=args.check, seed=args.seed)
        ok = True
        if args.check == "bohr" or args.check == "thm25":
            corpus = exp.flat_corpus(_STANDARD_CONFIGS)
            corpus.append(exp.CorpusEntry(
                label="2^-s+3^-s",
                poly=DirichletPolynomial.monomial(2) + DirichletPolynomial.monomial(3),
                sup_upper=_tight_pair_sup(),
                sup_method="lipschitz",
            ))
            report = exp.verify_bohr_inequalities(corpus)
            ok = report["passed"]
        elif args.check == "partial-sums":
            corpus = [
                exp.CorpusEntry(
                    label=f"dirichlet_rs({n})",
                    poly=dirichlet_rudin_shapiro(n)[0],
                    sup_upper=rudin_shapiro_sup_bound(n),
                )
                for n in range(1, 9)
            ]
            report = exp.partial_sum_constant(corpus, [2, 4, 8, 16])
            ok = all(r["ratio"] > 0 for r in report["rows"])
        else:  # bohr-radius
            report = exp.mobius_radius_report()
            ok = report["passed"]
        _emit(args, _report(args, config, report))
        return 0 if ok else 1

    if cmd == "corona-demo":
        config = _config(args)
        report = exp.corona_demo()
        _emit(args, _report(args, config, report))
        return 0 if report["passed"] else 1

    if cmd == "random-model":
        config = _config(args, y=args.y, d=args.d, trials=args.trials, seed=args.seed)
        report = exp.random_model(args.y, args.d, args.trials, args.seed)
        _emit(args, _report(args, config, report))
        return 0

    raise BohrForgeError(f"unhandled command {cmd!r}")


def _tight_pair_sup() -> float:
    pair = DirichletPolynomial.monomial(2) + DirichletPolynomial.monomial(3)
    cert = sup_upper_lipschitz(lift(pair), points_per_dim=512)
    return cert.upper


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        return _run(args)
    except json.JSONDecodeError as err:
        print(f"error: malformed JSON at line {err.lineno} column {err.colno}: {err.msg}", file=sys.stderr)
        return 2
    except (BohrForgeError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
