"""Certified sup-norm machinery on the polytorus and along vertical lines.

Lower bounds are always realized by an evaluation point (the witness), so
they are certificates regardless of how the point was found. Upper bounds
combine a lattice maximum with derivative bounds: writing h = pi/n for the
covering radius (half the angular spacing) of an n-per-dimension lattice,

    sup |P|  <=  lattice max + min(L*h, H*h^2/2),

where L = sum |c_a| |a|_1 bounds the gradient of theta -> P(e^{i theta}) in
the max-angle metric and H = sum |c_a| |a|_1^2 bounds its second derivative
along any max-metric direction. The quadratic term is valid because a global
phase rotation turns |P| at its argmax into a real trigonometric polynomial
with vanishing gradient there.

Two sampling reductions are applied before any work and recorded in the
certificate parameters: variables that appear in no monomial are dropped, and
for a homogeneous polynomial one variable is pinned to 1 (the diagonal torus
rotation leaves |P| invariant, so the sup is unchanged). Both preserve the
witness, which is always mapped back to the full variable set.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError, ResourceBudgetError
from .polys import DirichletPolynomial, MultiPolynomial

DEFAULT_POINT_BUDGET = 1 << 22
HARD_POINT_BUDGET = 10**8
DEFAULT_SOBOL_SAMPLES = 1 << 18
FLOW_OSCILLATIONS = 20
_CHUNK = 1 << 16
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
TWO_PI = 2.0 * math.pi


@dataclass
class NormCertificate:
    """Certified bounds on a sup norm, with provenance and witness."""

    target: str
    method: str  # grid | flow | lipschitz | declared
    lower: float | None = None
    upper: float | None = None
    witness: tuple | None = None
    params: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {
            "target": self.target,
            "method": self.method,
            "lower": self.lower,
            "upper": self.upper,
            "witness": list(self.witness) if self.witness is not None else None,
            "params": self.params,
        }


def declared_certificate(target: str, upper: float, note: str = "") -> NormCertificate:
    return NormCertificate(target=target, method="declared", upper=float(upper), params={"note": note})


# ---------------------------------------------------------------------------
# reductions and evaluation cores


@dataclass
class _Reduced:
    poly: MultiPolynomial
    original_vars: int
    active: list[int]  # original index of each reduced variable
    fixed: int | None  # original index pinned to angle 0, if any

    def widen(self, theta: np.ndarray) -> tuple[float, ...]:
        full = [0.0] * self.original_vars
        for j, orig in enumerate(self.active):
            full[orig] = float(theta[j]) % TWO_PI
        return tuple(full)


def _reduce_poly(P: MultiPolynomial) -> _Reduced:
    used = sorted({j for alpha, _ in P.items() for j, e in enumerate(alpha) if e})
    fixed = None
    if P.is_homogeneous() and P.degree() >= 1 and used:
        fixed = used[-1]
        used = used[:-1]
    keep = {j: i for i, j in enumerate(used)}
    terms = []
    for alpha, c in P.items():
        beta = [0] * len(used)
        for j, e in enumerate(alpha):
            if e and j in keep:
                beta[keep[j]] = e
        terms.append((tuple(beta), c))
    # no collisions: dropped variables have zero exponent everywhere, and for a
    # homogeneous P the pinned exponent is determined by the remaining ones
    return _Reduced(
        poly=MultiPolynomial(len(used), terms),
        original_vars=P.var_count,
        active=used,
        fixed=fixed,
    )


def gradient_bound(P: MultiPolynomial) -> float:
    """L = sum |c_a| |a|_1, a max-angle-metric Lipschitz constant for P on the torus."""
    return float(sum(c.modulus() * sum(alpha) for alpha, c in P.items()))


def curvature_bound(P: MultiPolynomial) -> float:
    """H = sum |c_a| |a|_1^2, bounding the second derivative along max-metric directions."""
    return float(sum(c.modulus() * sum(alpha) ** 2 for alpha, c in P.items()))


def _lattice_max_fft(E: np.ndarray, c: np.ndarray, n: int) -> tuple[float, np.ndarray]:
    """Dense 1-D scan at the n-th roots of unity (exponents folded mod n)."""
    acc = np.zeros(n, dtype=complex)
    np.add.at(acc, E[:, 0] % n, c)
    vals = np.fft.ifft(acc) * n  # vals[k] = P(e^{2 pi i k/n})
    mags = np.abs(vals)
    k = int(np.argmax(mags))
    return float(mags[k]), np.array([TWO_PI * k / n])


def _angles_for_indices(idx: np.ndarray, n: int, r: int, shift: np.ndarray | None) -> np.ndarray:
    out = np.empty((idx.size, r), dtype=float)
    rem = idx
    for j in range(r - 1, -1, -1):
        out[:, j] = rem % n
        rem = rem // n
    out *= TWO_PI / n
    if shift is not None:
        out += shift
    return out


def _scan_chunk(E: np.ndarray, c: np.ndarray, thetas: np.ndarray) -> tuple[float, int]:
    vals = np.abs(np.exp(1j * (thetas @ E.T.astype(float))) @ c)
    k = int(np.argmax(vals))
    return float(vals[k]), k


def _lattice_max(
    E: np.ndarray,
    c: np.ndarray,
    n: int,
    r: int,
    shift: np.ndarray | None = None,
    threads: int = 1,
) -> tuple[float, np.ndarray]:
    """Max of |P| over the (shifted) n-per-dimension product lattice."""
    if r == 1 and shift is None:
        return _lattice_max_fft(E, c, n)
    total = n**r
    ranges = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]

    def work(span):
        lo, hi = span
        thetas = _angles_for_indices(np.arange(lo, hi, dtype=np.int64), n, r, shift)
        val, k = _scan_chunk(E, c, thetas)
        return val, lo + k

    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, ranges))
    else:
        results = [work(span) for span in ranges]
    val, flat = max(results)
    theta = _angles_for_indices(np.array([flat], dtype=np.int64), n, r, shift)[0]
    return val, theta


def _sobol_thetas(r: int, nsamples: int, seed: int) -> np.ndarray:
    from scipy.stats import qmc

    sampler = qmc.Sobol(d=r, scramble=True, seed=seed)
    return sampler.random(nsamples) * TWO_PI


# ---------------------------------------------------------------------------
# coordinate ascent (lower-bound refinement)


def _golden_max(fn, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    a, b = lo, hi
    c1 = b - _GOLDEN * (b - a)
    c2 = a + _GOLDEN * (b - a)
    f1, f2 = fn(c1), fn(c2)
    while b - a > tol:
        if f1 < f2:
            a, c1, f1 = c1, c2, f2
            c2 = a + _GOLDEN * (b - a)
            f2 = fn(c2)
        else:
            b, c2, f2 = c2, c1, f1
            c1 = b - _GOLDEN * (b - a)
            f1 = fn(c1)
    x = (a + b) / 2
    return x, fn(x)


def _section_max(b: np.ndarray) -> tuple[float, float]:
    """Global max over theta of |sum_g b_g e^{i g theta}| (dense scan + golden polish)."""
    deg = len(b) - 1
    npts = 1 << max(6, (4 * deg + 1).bit_length())
    vals = np.fft.ifft(b, n=npts) * npts
    mags = np.abs(vals)
    k = int(np.argmax(mags))
    theta0 = TWO_PI * k / npts
    g = np.arange(len(b))

    def fn(theta):
        return abs(np.exp(1j * g * theta) @ b)

    span = TWO_PI / npts
    x, v = _golden_max(fn, theta0 - span, theta0 + span)
    if v >= mags[k]:
        return x % TWO_PI, float(v)
    return theta0, float(mags[k])


def _coordinate_sweeps(
    E: np.ndarray, c: np.ndarray, theta0: np.ndarray, passes: int
) -> tuple[np.ndarray, float]:
    """Coordinate-wise exact 1-D maximization sweeps from a start point.

    Each move scans the full circle of one coordinate (the section is a 1-D
    trigonometric polynomial whose coefficients we aggregate), so every sweep
    is monotone in the achieved value.
    """
    theta = np.array(theta0, dtype=float)
    r = theta.size
    Ef = E.astype(float)
    best = float(np.abs(np.exp(1j * (Ef @ theta)) @ c))
    for _ in range(passes):
        improved = False
        for j in range(r):
            phases = Ef @ theta - Ef[:, j] * theta[j]
            w = c * np.exp(1j * phases)
            degs = E[:, j]
            b = np.zeros(int(degs.max()) + 1, dtype=complex)
            np.add.at(b, degs, w)
            tj, val = _section_max(b)
            if val > best:
                theta[j] = tj
                best = val
                improved = True
        if not improved:
            break
    return theta, best


# ---------------------------------------------------------------------------
# public operations


def _auto_points(r: int, budget: int) -> int:
    n = int(budget ** (1.0 / r))
    return max(8, min(65536, n))


def _target_label(P, target: str | None) -> str:
    if target is not None:
        return target
    if isinstance(P, MultiPolynomial):
        return f"multi(vars={P.var_count}, terms={len(P)})"
    return f"dirichlet(terms={len(P)}, N={P.max_frequency})"


def sup_lower_grid(
    P: MultiPolynomial,
    points_per_dim: int | None = None,
    refine_steps: int = 2,
    *,
    seed: int = 0,
    samples: int | None = None,
    point_budget: int = DEFAULT_POINT_BUDGET,
    threads: int = 1,
    target: str | None = None,
) -> NormCertificate:
    """Witnessed lower bound for sup |P| over the polytorus.

    Uses a full product lattice when it fits the point budget and the reduced
    dimension is below 5, else a seeded scrambled-Sobol sample. Coordinate
    ascent (refine_steps sweeps) is started from the best lattice point and
    from the best point of each nested sub-grid, so refining a nested lattice
    can only improve the bound.
    """
    red = _reduce_poly(P)
    Q, r = red.poly, red.poly.var_count
    label = _target_label(P, target)
    params: dict = {
        "seed": seed,
        "refine_steps": refine_steps,
        "reduced_vars": r,
        "pinned_var": None if red.fixed is None else red.fixed + 1,
    }
    if len(Q) == 0:
        return NormCertificate(label, "grid", lower=0.0, witness=(0.0,) * P.var_count, params=params)
    if r == 0:
        value = float(abs(Q.evaluate(())))
        return NormCertificate(label, "grid", lower=value, witness=(0.0,) * P.var_count, params=params)

    E, c = Q.exponent_matrix()
    starts: list[np.ndarray] = []
    best_val, best_theta = -1.0, None

    def consider(val: float, theta: np.ndarray) -> None:
        nonlocal best_val, best_theta
        if val > best_val:
            best_val, best_theta = val, np.array(theta, dtype=float)

    n = points_per_dim if points_per_dim is not None else _auto_points(r, point_budget)
    use_lattice = r < 5 and n**r <= point_budget
    if use_lattice:
        params.update({"mode": "lattice", "points_per_dim": n})
        m = n
        while True:
            val, theta = _lattice_max(E, c, m, r, threads=threads)
            consider(val, theta)
            starts.append(theta)
            if m % 2 or m // 2 < 4:
                break
            m //= 2
    else:
        nsamples = samples if samples is not None else min(DEFAULT_SOBOL_SAMPLES, point_budget)
        params.update({"mode": "sobol", "samples": nsamples})
        thetas = _sobol_thetas(r, nsamples, seed)
        vals = np.empty(nsamples, dtype=float)
        for lo in range(0, nsamples, _CHUNK):
            hi = min(lo + _CHUNK, nsamples)
            vals[lo:hi] = np.abs(np.exp(1j * (thetas[lo:hi] @ E.T.astype(float))) @ c)
        k = int(np.argmax(vals))
        consider(float(vals[k]), thetas[k])
        starts.append(thetas[k])
        # best of each power-of-two prefix, so a longer run of the same seed
        # starts ascent from every point a shorter run would have used
        size = 1 << 10
        while size < nsamples:
            kp = int(np.argmax(vals[:size]))
            starts.append(thetas[kp])
            size <<= 1
        order = np.argsort(vals)[::-1]
        for k in order[1:8]:
            starts.append(thetas[int(k)])

    if refine_steps > 0:
        seen = set()
        for theta in starts:
            key = tuple(np.round(theta, 12))
            if key in seen:
                continue
            seen.add(key)
            theta2, val2 = _coordinate_sweeps(E, c, theta, refine_steps)
            consider(val2, theta2)

    witness = red.widen(best_theta)
    # the certificate is whatever the witness actually evaluates to
    realized = float(abs(P.evaluate_torus(np.array([witness]))[0]))
    return NormCertificate(label, "grid", lower=realized, witness=witness, params=params)


def sup_upper_lipschitz(
    P: MultiPolynomial,
    points_per_dim: int | None = None,
    *,
    seed: int = 0,
    point_budget: int = DEFAULT_POINT_BUDGET,
    hard_budget: int = HARD_POINT_BUDGET,
    threads: int = 1,
    target: str | None = None,
) -> NormCertificate:
    """Certified upper bound: lattice max plus the derivative-bound margin.

    Evaluates the whole dyadic chain of nested sub-lattices and keeps the best
    certificate in the chain, so doubling points_per_dim never loosens the
    bound. Refuses (resource error) rather than degrade when the lattice
    exceeds the hard budget. The Wiener norm caps the result. For five or
    more reduced variables the lattice is randomly shifted (seeded); the
    covering radius, hence the certificate, is unchanged.
    """
    red = _reduce_poly(P)
    Q, r = red.poly, red.poly.var_count
    label = _target_label(P, target)
    wiener = float(Q.wiener_norm())
    params: dict = {
        "seed": seed,
        "reduced_vars": r,
        "pinned_var": None if red.fixed is None else red.fixed + 1,
    }
    if len(Q) == 0:
        return NormCertificate(label, "lipschitz", lower=0.0, upper=0.0, witness=(0.0,) * P.var_count, params=params)
    if r == 0:
        value = float(abs(Q.evaluate(())))
        return NormCertificate(
            label, "lipschitz", lower=value, upper=value, witness=(0.0,) * P.var_count,
            params={**params, "gradient_bound": 0.0},
        )

    L = gradient_bound(Q)
    H = curvature_bound(Q)
    n = points_per_dim if points_per_dim is not None else _auto_points(r, point_budget)
    if n**r > hard_budget:
        raise ResourceBudgetError(
            f"lattice {n}^{r} exceeds hard budget {hard_budget}; refusing a non-certificate"
        )
    shift = None
    if r >= 5:
        rng = np.random.default_rng(seed)
        shift = rng.uniform(0.0, TWO_PI / n, size=r)
        params["lattice_shift"] = [float(x) for x in shift]

    E, c = Q.exponent_matrix()
    upper = wiener
    best_val, best_theta = -1.0, None
    chain = []
    m = n
    while True:
        val, theta = _lattice_max(E, c, m, r, shift=shift, threads=threads)
        h = math.pi / m
        margin = min(L * h, 0.5 * H * h * h)
        chain.append({"points_per_dim": m, "lattice_max": val, "margin": margin})
        upper = min(upper, val + margin)
        if val > best_val:
            best_val, best_theta = val, theta
        if m % 2 or m // 2 < 4:
            break
        m //= 2
    params.update(
        {
            "points_per_dim": n,
            "gradient_bound": L,
            "curvature_bound": H,
            "wiener_cap": wiener,
            "chain": chain,
        }
    )
    witness = red.widen(best_theta)
    realized = float(abs(P.evaluate_torus(np.array([witness]))[0]))
    upper = max(upper, realized)  # a witnessed value can never exceed a valid upper bound
    return NormCertificate(
        label, "lipschitz", lower=realized, upper=float(upper), witness=witness, params=params
    )


def flow_step(max_frequency: int) -> float:
    """Default t-spacing: the fastest term oscillates FLOW_OSCILLATIONS times per period."""
    return TWO_PI / (FLOW_OSCILLATIONS * math.log(max(max_frequency, 2)))


def sup_flow(
    f: DirichletPolynomial,
    T: float,
    samples: int | None = None,
    refine_steps: int = 1,
    *,
    target: str | None = None,
) -> NormCertificate:
    """Lower bound max |f(it)| over a symmetric t-grid in [-T, T].

    The grid is k*step for k in -K..K (always contains 0), so doubling T at a
    fixed step, or halving the step, yields a nested grid and a monotone
    bound. This estimates the polytorus sup through the dense vertical flow
    but certifies only the lower bound.
    """
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    label = _target_label(f, target)
    if len(f) == 0:
        return NormCertificate(label, "flow", lower=0.0, witness=(0.0,), params={"T": T})
    if f.max_frequency == 1:
        value = float(abs(f.coefficient(1).to_complex()))
        return NormCertificate(label, "flow", lower=value, witness=(0.0,), params={"T": T, "samples": 1})
    if samples is None:
        K = max(1, int(math.ceil(T / flow_step(f.max_frequency))))
    else:
        if samples < 2:
            raise DomainError(f"samples must be at least 2, got {samples}")
        K = max(1, (int(samples) - 1) // 2)
    step = T / K
    params = {"T": T, "samples": 2 * K + 1, "step": step, "refine_steps": refine_steps}

    best_val, best_t = -1.0, 0.0
    even_val, even_t = -1.0, 0.0
    for lo in range(-K, K + 1, _CHUNK):
        hi = min(lo + _CHUNK, K + 1)
        ks = np.arange(lo, hi, dtype=np.int64)
        vals = np.abs(f.evaluate_line(ks * step))
        k = int(np.argmax(vals))
        if float(vals[k]) > best_val:
            best_val, best_t = float(vals[k]), float(ks[k] * step)
        evens = ks % 2 == 0
        if np.any(evens):
            ve = vals[evens]
            ke = int(np.argmax(ve))
            if float(ve[ke]) > even_val:
                even_val, even_t = float(ve[ke]), float(ks[evens][ke] * step)

    if refine_steps > 0:
        def fn(t):
            return abs(f.evaluate(1j * t))

        for t0 in {best_t, even_t}:
            t1, v1 = _golden_max(fn, t0 - step, t0 + step, tol=1e-9 * max(step, 1.0))
            if v1 > best_val:
                best_val, best_t = float(v1), float(t1)

    return NormCertificate(label, "flow", lower=best_val, witness=(best_t,), params=params)


def tuple_identity_check(components, trials: int = 1000, seed: int = 0) -> float:
    """Max residual of sum_i |P_i(z)|^2 against q^{d+1} at random torus points."""
    comps = list(components)
    if not comps:
        raise DimensionError("need at least one component")
    r = comps[0].var_count
    if any(p.var_count != r for p in comps):
        raise DimensionError("components must share a variable count")
    q = len(comps)
    d = comps[0].degree()
    rng = np.random.default_rng(seed)
    thetas = rng.uniform(0.0, TWO_PI, size=(trials, r))
    total = np.zeros(trials, dtype=float)
    for p in comps:
        total += np.abs(p.evaluate_torus(thetas)) ** 2
    return float(np.max(np.abs(total - float(q) ** (d + 1))))
