"""Desk-scale experiment runners.

Everything here reduces a quantitative claim to finite arithmetic: Sidon
lower-bound certificates from the flat generator, the N -> (d, q) parameter
schedule and its trend against sqrt(N) exp(-lambda(N)), the weighted-sum
exponent probe, a seeded Rademacher sup model, coefficient-sum inequalities
against certified sup bounds, partial-sum ratios, the two-function corona
counterexample, and the 1/3 radius check on truncated Moebius maps.

Empirical constants are reported as observed maxima over the stated corpus,
never as universal values; all randomness is seed-derived and recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bohr import lift
from .coeffs import ONE, Coefficient
from .constructions import flat_polynomial, flat_pullback
from .errors import DomainError, ResourceBudgetError
from .norms import flow_step, sup_flow, sup_lower_grid, sup_upper_lipschitz
from .numtheory import factorize, first_primes, primes_up_to
from .polys import DirichletPolynomial, MultiPolynomial

RANDOM_MODEL_SET_CAP = 10**5


def lambda_scale(x: float) -> float:
    """sqrt(log x * log log x); needs x > e."""
    lx = math.log(x)
    if lx <= 1.0:
        raise DomainError(f"lambda_scale needs log log x > 0, got x = {x}")
    return math.sqrt(lx * math.log(lx))


# ---------------------------------------------------------------------------
# Sidon certificates and the parameter schedule


@dataclass(frozen=True)
class SidonCertificate:
    """A witnessed lower bound for the Sidon constant of {log 1, ..., log N}.

    The pull-back polynomial exhibits the ratio wiener/sup_upper, which bounds
    S(Lambda_N) from below for every N >= n_min (the constant is a sup over a
    set that only grows with N).
    """

    q: int
    d: int
    matrix_kind: str
    n_min: int
    spectrum_cap: int  # the a-priori bound p_{qd}^d
    wiener: int
    declared_sup_upper: float
    sup_upper: float
    sup_method: str
    bound: float

    def to_obj(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "matrix": self.matrix_kind,
            "n_min": self.n_min,
            "spectrum_cap": self.spectrum_cap,
            "wiener": self.wiener,
            "declared_sup_upper": self.declared_sup_upper,
            "sup_upper": self.sup_upper,
            "sup_method": self.sup_method,
            "bound": self.bound,
        }


def sidon_certificate(
    q: int,
    d: int,
    matrix_kind: str,
    tighten: bool = False,
    points_per_dim: int | None = None,
) -> SidonCertificate:
    """Certificate from component 1 of the (q, d) tuple.

    The declared sup bound q^{(d+1)/2} always applies; with ``tighten`` a
    lattice-plus-derivative certificate is attempted as well and the smaller
    of the two is used (it can only raise the bound).
    """
    out = flat_pullback(flat_polynomial(q, d, matrix_kind, 1))
    wiener = out.poly.wiener_norm()
    declared = out.declared_sup_upper
    sup_upper, method = declared, "declared"
    if tighten:
        try:
            cert = sup_upper_lipschitz(out.poly, points_per_dim=points_per_dim)
            if cert.upper is not None and cert.upper < sup_upper:
                sup_upper, method = cert.upper, "lipschitz"
        except ResourceBudgetError:
            pass
    primes = first_primes(q * d)
    return SidonCertificate(
        q=q,
        d=d,
        matrix_kind=matrix_kind,
        n_min=out.spectrum_max,
        spectrum_cap=primes[-1] ** d if primes else 1,
        wiener=int(wiener),
        declared_sup_upper=declared,
        sup_upper=sup_upper,
        sup_method=method,
        bound=wiener / sup_upper,
    )


@dataclass(frozen=True)
class ScheduleRow:
    """One row of the N -> (d, q) schedule with its reference scale."""

    N: int
    admissible: bool
    d: int | None = None
    q: int | None = None
    bound: float | None = None
    reference: float | None = None
    lam: float | None = None
    note: str = ""

    def to_obj(self) -> dict:
        return {
            "N": self.N,
            "admissible": self.admissible,
            "d": self.d,
            "q": self.q,
            "bound": self.bound,
            "reference": self.reference,
            "lambda": self.lam,
            "note": self.note,
        }


def _schedule_d(N: float) -> int:
    return int(math.sqrt(math.log(N) / math.log(math.log(N))))


def _schedule_q(N: float, d: int) -> int:
    # guard the float d-th root before flooring into the sieve
    x = int(N ** (1.0 / d) + 1e-9)
    if x < 2:
        return 0
    return primes_up_to(x).pi(x) // d


def sidon_schedule(n_list) -> list[ScheduleRow]:
    """d = floor(sqrt(log N / log log N)), q = floor(pi(N^{1/d})/d), bound q^{(d-1)/2}."""
    rows = []
    for N in n_list:
        N = int(N)
        if N < 3 or math.log(N) <= 1.0:
            rows.append(ScheduleRow(N=N, admissible=False, note="log log N <= 0"))
            continue
        lam = lambda_scale(N)
        d = _schedule_d(N)
        if d < 1:
            rows.append(ScheduleRow(N=N, admissible=False, lam=lam, note="d < 1"))
            continue
        q = _schedule_q(N, d)
        if q < 1:
            rows.append(ScheduleRow(N=N, admissible=False, d=d, lam=lam, note="q < 1"))
            continue
        rows.append(
            ScheduleRow(
                N=N,
                admissible=True,
                d=d,
                q=q,
                bound=float(q) ** ((d - 1) / 2),
                reference=math.sqrt(N) * math.exp(-lam),
                lam=lam,
            )
        )
    return rows


def schedule_report(n_list) -> dict:
    """Schedule rows plus the exponent comparison log(bound)/log(reference).

    Both ratio directions are reported; at desk scale log(reference)/log(bound)
    climbs toward 1 from below while its reciprocal falls toward 1 from above.
    Rows with bound = 1 or reference <= 1 leave the ratios undefined (null).
    """
    rows = [r.to_obj() for r in sidon_schedule(n_list)]
    for row in rows:
        row["log_ratio"] = None
        row["log_ratio_inverse"] = None
        if row["admissible"] and row["bound"] and row["reference"]:
            if row["bound"] > 1.0 and row["reference"] > 1.0:
                lb, lr = math.log(row["bound"]), math.log(row["reference"])
                row["log_ratio"] = lb / lr
                row["log_ratio_inverse"] = lr / lb
    return {"rows": rows}


def weighted_sum_exponent_probe(d: int, n_list) -> dict:
    """Exponent e(N) = -log R(N) / log log N for R(N) = q^{(d-1)/2} N^{-sigma_d}.

    sigma_d = 1/2 - 1/(2d). The probe echoes why no weight exponent beyond
    (d-1)/2 can work: e(N) levels off near that value and the normalized
    ratio (log N)^{(d-1)/2} R(N) stays bounded away from zero.
    """
    if d < 1:
        raise DomainError(f"d must be at least 1, got {d}")
    sigma_d = 0.5 - 0.5 / d
    rows = []
    for N in n_list:
        N = int(N)
        q = _schedule_q(N, d)
        if q < 1:
            rows.append({"N": N, "q": q, "admissible": False})
            continue
        R = float(q) ** ((d - 1) / 2) * N ** (-sigma_d)
        loglogN = math.log(math.log(N))
        e = 0.0 if d == 1 else -math.log(R) / loglogN
        rows.append(
            {
                "N": N,
                "q": q,
                "admissible": True,
                "sigma_d": sigma_d,
                "R": R,
                "exponent": e,
                "normalized_ratio": math.log(N) ** ((d - 1) / 2) * R,
            }
        )
    return {"d": d, "target_exponent": (d - 1) / 2, "rows": rows}


# ---------------------------------------------------------------------------
# Rademacher random model


def squarefree_smooth_set(y: float, d: int) -> tuple[int, ...]:
    """All products of at most d distinct primes <= y, including the empty product 1."""
    if y < 2:
        raise DomainError(f"y must be at least 2, got {y}")
    if d < 0:
        raise DomainError(f"d must be nonnegative, got {d}")
    table = primes_up_to(int(y))
    r = len(table)
    count = sum(math.comb(r, s) for s in range(min(d, r) + 1))
    if count > RANDOM_MODEL_SET_CAP:
        raise ResourceBudgetError(f"set size {count} exceeds cap {RANDOM_MODEL_SET_CAP}")
    out = []
    for s in range(min(d, r) + 1):
        for combo in combinations(table.primes, s):
            n = 1
            for p in combo:
                n *= p
            out.append(n)
    return tuple(sorted(out))


def rademacher_polynomial(frequencies, signs) -> DirichletPolynomial:
    """sum eps_n n^{-s} with eps_n in {-1, +1}."""
    return DirichletPolynomial(
        (n, ONE if s > 0 else -ONE) for n, s in zip(frequencies, signs)
    )


def random_model(
    y: float,
    d: int,
    trials: int,
    seed: int,
    flow_T: float = 1000.0,
) -> dict:
    """Seeded estimate of the mean flow-sampled sup of random-sign polynomials.

    The support is the squarefree y-smooth set with at most d prime factors;
    the reference scale is |A|^{1/2} sqrt(y/log y) sqrt(log log N) with
    N = p_r^d (unit constant), reported next to the empirical mean so the
    ratio can be tracked across y.
    """
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    A = squarefree_smooth_set(y, d)
    table = primes_up_to(int(y))
    r = len(table)
    N = table.primes[-1] ** d if r else 1
    step = flow_step(max(A))
    K = max(1, int(math.ceil(flow_T / step)))
    t = (flow_T / K) * np.arange(-K, K + 1)
    logs = np.array([math.log(n) for n in A])
    E = np.exp(-1j * np.outer(t, logs))
    rng = np.random.default_rng(seed)
    signs = rng.integers(0, 2, size=(trials, len(A))) * 2 - 1
    sups = np.max(np.abs(E @ signs.T.astype(float)), axis=0)
    mean_sup = float(np.mean(sups))
    std_sup = float(np.std(sups))
    reference = math.sqrt(len(A)) * math.sqrt(y / math.log(y)) * math.sqrt(math.log(math.log(N)))
    return {
        "y": y,
        "d": d,
        "trials": trials,
        "seed": seed,
        "r": r,
        "setsize": len(A),
        "setsize_dominant_term": math.comb(r, min(d, r)),
        "N": N,
        "flow_T": flow_T,
        "flow_samples": 2 * K + 1,
        "empirical_mean_sup": mean_sup,
        "empirical_std_sup": std_sup,
        "relative_spread": std_sup / mean_sup if mean_sup else 0.0,
        "bound_value": reference,
        "ratio": mean_sup / reference,
    }


# ---------------------------------------------------------------------------
# coefficient-sum inequality checks


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    poly: DirichletPolynomial
    sup_upper: float
    sup_method: str = "declared"


def flat_corpus(configs, tighten: bool = False) -> list[CorpusEntry]:
    """Pull-backs of the flat generator for (q, d, matrix) configs, with certified sups."""
    entries = []
    for q, d, matrix_kind in configs:
        cert = sidon_certificate(q, d, matrix_kind, tighten=tighten)
        out = flat_pullback(flat_polynomial(q, d, matrix_kind, 1))
        entries.append(
            CorpusEntry(
                label=f"flat(q={q},d={d},{matrix_kind})",
                poly=out.pullback,
                sup_upper=cert.sup_upper,
                sup_method=cert.sup_method,
            )
        )
    return entries


def prime_coefficient_sum(f: DirichletPolynomial) -> float:
    return float(sum(c.modulus() for n, c in f.items() if n > 1 and factorize(n).omega == 1))


def verify_bohr_inequalities(corpus: list[CorpusEntry], tol: float = 1e-9) -> dict:
    """Check (sum |a_n|^2)^{1/2} <= sup and sum_p |a_p| <= sup per entry.

    Also reports the weighted ratios sum |a_n| n^{-1/2} / sup and, for an
    entry whose spectrum has at most d prime factors per frequency,
    sum |a_n| n^{-sigma_d} (log n)^{(d-1)/2} / sup. The maxima over the
    corpus are the observed empirical constants.
    """
    rows = []
    for entry in corpus:
        f, sup = entry.poly, entry.sup_upper
        l2 = f.l2_norm()
        psum = prime_coefficient_sum(f)
        ratio_half = sum(c.modulus() * n ** -0.5 for n, c in f.items()) / sup
        d_f = max((factorize(n).omega for n in f.spectrum), default=0)
        ratio_d = None
        if d_f >= 1:
            sigma_d = 0.5 - 0.5 / d_f
            weighted = sum(
                c.modulus() * n ** -sigma_d * math.log(n) ** ((d_f - 1) / 2)
                for n, c in f.items()
            )
            ratio_d = weighted / sup
        rows.append(
            {
                "label": entry.label,
                "sup_upper": sup,
                "sup_method": entry.sup_method,
                "l2": l2,
                "l2_ok": l2 <= sup + tol,
                "prime_sum": psum,
                "prime_sum_ok": psum <= sup + tol,
                "prime_sum_ratio": psum / sup,
                "ratio_weight_half": ratio_half,
                "omega_max": d_f,
                "ratio_weight_sigma_d": ratio_d,
            }
        )
    return {
        "rows": rows,
        "passed": all(r["l2_ok"] and r["prime_sum_ok"] for r in rows),
        "max_ratio_weight_half": max((r["ratio_weight_half"] for r in rows), default=0.0),
        "max_ratio_weight_sigma_d": max(
            (r["ratio_weight_sigma_d"] for r in rows if r["ratio_weight_sigma_d"] is not None),
            default=None,
        ),
    }


def partial_sum_constant(corpus: list[CorpusEntry], n_list, points_per_dim: int | None = None) -> dict:
    """Observed max of ||S_N(f)||_inf(estimated) / (log N * sup_upper(f))."""
    rows = []
    for entry in corpus:
        for N in n_list:
            N = int(N)
            if N < 2:
                continue  # log N <= 0 guard
            S = entry.poly.partial_sum(N)
            if len(S) == 0:
                continue
            est = sup_lower_grid(lift(S), points_per_dim=points_per_dim, target=f"S_{N}({entry.label})")
            ratio = est.lower / (math.log(N) * entry.sup_upper)
            rows.append(
                {
                    "label": entry.label,
                    "N": N,
                    "truncated_terms": len(S),
                    "sup_estimate": est.lower,
                    "sup_upper": entry.sup_upper,
                    "ratio": ratio,
                }
            )
    return {
        "rows": rows,
        "empirical_constant": max((r["ratio"] for r in rows), default=0.0),
    }


# ---------------------------------------------------------------------------
# corona counterexample and the 1/3 radius


def corona_demo(sigma_max: float = 4.0, sigma_step: float = 0.01, t_max: float = 50.0) -> dict:
    """The pair f1 = 1/2 + 2^{-s}, f2 = 3^{-s}: bounded below on the half-plane,
    yet the lifted pair shares the zero (-1/2, 0).

    Part (i) minimizes |f1| + |f2| over a sigma/t grid on [0, sigma_max] x
    [-t_max, t_max] and checks the 1/9 floor. Part (ii) evaluates the lifts
    at the common zero, where the arithmetic is exact.
    """
    sigmas = np.arange(0.0, sigma_max + sigma_step / 2, sigma_step)
    step = flow_step(3)
    K = int(math.ceil(t_max / step))
    t = (t_max / K) * np.arange(-K, K + 1)
    # |f1| = |1/2 + 2^{-sigma} e^{-it log 2}|, |f2| = 3^{-sigma}
    phases = np.exp(-1j * math.log(2.0) * t)[None, :]
    f1 = np.abs(0.5 + (2.0 ** -sigmas)[:, None] * phases)
    total = f1 + (3.0 ** -sigmas)[:, None]
    flat_idx = int(np.argmin(total))
    i, j = np.unravel_index(flat_idx, total.shape)
    grid_min = float(total[i, j])

    F1 = MultiPolynomial(2, [((0, 0), Coefficient.general(0.5)), ((1, 0), ONE)])
    F2 = MultiPolynomial(2, [((0, 1), ONE)])
    z = (-0.5, 0.0)
    v1, v2 = F1.evaluate(z), F2.evaluate(z)
    residual = abs(v1) + abs(v2)
    return {
        "grid_min": grid_min,
        "grid_argmin": {"sigma": float(sigmas[i]), "t": float(t[j])},
        "threshold": 1.0 / 9.0,
        "half_plane_ok": grid_min >= 1.0 / 9.0 - 1e-9,
        "common_zero": {
            "point": [z[0], z[1]],
            "f1_value": [v1.real, v1.imag],
            "f2_value": [v2.real, v2.imag],
            "residual": residual,
            "exact_zero": residual == 0.0,
        },
        "passed": grid_min >= 1.0 / 9.0 - 1e-9 and residual == 0.0,
        "params": {"sigma_max": sigma_max, "sigma_step": sigma_step, "t_max": t_max, "t_step": t_max / K},
    }


def mobius_truncation(a: float, degree: int) -> MultiPolynomial:
    """Degree-``degree`` truncation of (a - z)/(1 - a z): a - (1-a^2) sum a^{k-1} z^k."""
    if not 0 <= a < 1:
        raise DomainError(f"a must lie in [0, 1), got {a}")
    terms = [((0,), Coefficient.general(a))]
    for k in range(1, degree + 1):
        terms.append(((k,), Coefficient.general(-(1 - a * a) * a ** (k - 1))))
    return MultiPolynomial(1, terms)


def radius_third_sum(P: MultiPolynomial) -> float:
    """sum |a_k| (1/3)^k for a 1-variable polynomial."""
    if P.var_count != 1:
        raise DomainError("radius check needs a 1-variable polynomial")
    return float(sum(c.modulus() * (1.0 / 3.0) ** alpha[0] for alpha, c in P.items()))


def bohr_radius_check(corpus) -> dict:
    """Verify sum |a_k| 3^{-k} <= sup_upper for (label, poly, sup_upper) triples."""
    rows = []
    for label, P, sup_upper in corpus:
        s = radius_third_sum(P)
        rows.append(
            {
                "label": label,
                "radius_sum": s,
                "sup_upper": sup_upper,
                "ratio": s / sup_upper,
                "ok": s <= sup_upper + 1e-9,
            }
        )
    return {
        "rows": rows,
        "passed": all(r["ok"] for r in rows),
        "max_ratio": max((r["ratio"] for r in rows), default=0.0),
    }


def mobius_radius_report(a_values=(0.5, 0.9, 0.99), degree: int = 50) -> dict:
    """Radius check on the truncated Moebius family; circle modulus 1 is declared."""
    corpus = [(f"moebius(a={a})", mobius_truncation(a, degree), 1.0) for a in a_values]
    corpus.append(("constant_one", MultiPolynomial(1, [((0,), ONE)]), 1.0))
    corpus.append(("z", MultiPolynomial(1, [((1,), ONE)]), 1.0))
    report = bohr_radius_check(corpus)
    report["degree"] = degree
    report["closed_form"] = {
        str(a): a + (1 - a * a) / (3 - a) for a in a_values
    }
    return report


# ---------------------------------------------------------------------------
# random corpus helper (shared by the consistency experiment and the CLI)


def random_unimodular_dirichlet(
    rng: np.random.Generator, max_frequency: int = 30, n_terms: int = 6
) -> DirichletPolynomial:
    """Random 6-point spectrum in 1..max_frequency with random 64th-root coefficients.

    The support stays sparse so that the finite-horizon vertical flow remains
    an informative estimator; dense supports push the torus argmax into phase
    configurations the flow cannot reach at desk-scale T.
    """
    count = min(n_terms, max_frequency)
    freqs = rng.choice(np.arange(1, max_frequency + 1), size=count, replace=False)
    return DirichletPolynomial(
        (int(n), Coefficient.root_of_unity(int(rng.integers(0, 64)), 64)) for n in freqs
    )


def flow_grid_consistency(
    count: int = 50,
    seed: int = 0,
    max_frequency: int = 30,
    flow_T: float = 1e4,
    points_per_dim: int = 32,
    refine_steps: int = 3,
) -> dict:
    """Compare the vertical-flow and torus-grid lower bounds on a random corpus.

    Both estimate the same sup (the flow is dense in the torus), so their
    relative gap is a sampling-quality diagnostic, not a certificate.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for idx in range(count):
        f = random_unimodular_dirichlet(rng, max_frequency=max_frequency)
        flow = sup_flow(f, T=flow_T, target=f"corpus[{idx}]")
        grid = sup_lower_grid(
            lift(f), points_per_dim=points_per_dim, refine_steps=refine_steps, seed=seed,
            target=f"lift(corpus[{idx}])",
        )
        gap = abs(flow.lower - grid.lower) / grid.lower
        rows.append(
            {
                "index": idx,
                "terms": len(f),
                "lifted_vars": lift(f).var_count,
                "flow_lower": flow.lower,
                "grid_lower": grid.lower,
                "relative_gap": gap,
            }
        )
    return {
        "seed": seed,
        "count": count,
        "flow_T": flow_T,
        "points_per_dim": points_per_dim,
        "rows": rows,
        "max_relative_gap": max(r["relative_gap"] for r in rows),
    }
