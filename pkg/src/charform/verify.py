"""Check battery over one polynomial, and seeded random fuzzing.

Each check produces a :class:`CheckRecord`. Exact polynomials whose roots
are rational are checked with zero tolerance; otherwise roots come from the
numerical solver and comparisons use the tolerance policy.
"""
from __future__ import annotations

import hashlib
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .discriminant import NonSquareDiscriminant, candidate_solutions, discriminant, normalized_value, prefactor
from .hmatrix import build_h, quadratic_form, verify_identity
from .numeric import DEFAULT_POLICY, TolerancePolicy, approx_eq, approx_zero, is_exact, scalar_to_json
from .poly import EXACT, PaperRootTuple, Polynomial, expand_factored
from .rewrite import (
    characteristic_equation,
    derived_equation,
    equation4_magnitude,
    equation4_sides,
    rewrite_gap,
    verify_rewrite,
)
from .rootspace import enumerate_sets, product_relations, qform_invariant, roots_to_characteristic, sum_property
from .solver import SolverConfig, rational_paper_tuple, solve, to_paper_tuple

ALL_CHECKS = ("eq2", "eq4", "eq5", "eq11", "eq12", "eq17", "eq18")


@dataclass
class CheckRecord:
    check: str
    degree: int
    digest: str
    passed: bool
    path: str            # "exact" or "approx"
    lhs: object = None
    rhs: object = None
    delta: object = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "degree": self.degree,
            "digest": self.digest,
            "pass": self.passed,
            "path": self.path,
            "lhs": _enc(self.lhs, True),
            "rhs": _enc(self.rhs, True),
            "delta": _enc(self.delta, True),
        }
        if self.detail:
            out["detail"] = {k: _enc(v) for k, v in self.detail.items()}
        return out


def _enc(v, value=False):
    """JSON encoding; ``value`` marks mathematical values, where ints become "p" strings."""
    if v is None or isinstance(v, (bool, str, float)):
        return v
    if isinstance(v, int) and not value:
        return v
    if isinstance(v, (list, tuple)):
        return [_enc(x, value) for x in v]
    if isinstance(v, dict):
        return {k: _enc(x, value) for k, x in v.items()}
    return scalar_to_json(v)


@dataclass
class VerificationReport:
    records: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.passed)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> dict:
        return {"records": [r.to_json() for r in self.records], "summary": self.summary}


def digest(p: Polynomial) -> str:
    text = ",".join(str(c) for c in p.coeffs)
    return hashlib.sha256(f"{p.mode}:{text}".encode()).hexdigest()[:12]


def _close(lhs, rhs, scale, policy):
    return approx_zero(lhs - rhs, max(float(abs(scale)), abs(lhs), abs(rhs)), policy)


def resolve_roots(p: Polynomial, solver_cfg: SolverConfig | None = None) -> PaperRootTuple:
    """Exact root tuple when the roots are rational, otherwise a numerical one."""
    sol = solve(p, solver_cfg)
    exact_tuple = rational_paper_tuple(p, sol.roots)
    if exact_tuple is not None:
        return exact_tuple
    return to_paper_tuple(sol.roots, p.leading)


def _check_eq2(p, t, ctx):
    if p.mode == EXACT:
        ok = verify_rewrite(p)
        return CheckRecord("eq2", p.degree, ctx["digest"], ok, "exact")
    gap, mag = rewrite_gap(p)
    ok = approx_zero(gap, mag, ctx["policy"])
    return CheckRecord("eq2", p.degree, ctx["digest"], ok, "approx", delta=gap, detail={"magnitude": mag})


def _check_eq4(p, t, ctx):
    policy = ctx["policy"]
    exact = p.mode == EXACT and t.mode == EXACT
    worst = None
    ok = True
    for x in t.evaluation_roots():
        if exact:
            lhs, rhs = equation4_sides(p, x)
            good = lhs == rhs
            size = abs(lhs - rhs)
        else:
            q = p if p.mode != EXACT else p.to_approx()
            lhs, rhs = equation4_sides(q, complex(x))
            mag = equation4_magnitude(q, complex(x))
            good = _close(lhs, rhs, mag, policy)
            size = abs(lhs - rhs) / max(mag, 1e-300)
        ok = ok and good
        if worst is None or size > worst[0]:
            worst = (size, x, lhs, rhs)
    _, x, lhs, rhs = worst
    return CheckRecord("eq4", p.degree, ctx["digest"], ok, "exact" if exact else "approx",
                       lhs, rhs, lhs - rhs, {"worst_root": _enc(x, True), "roots_checked": t.n})


def _check_eq5(p, t, ctx):
    n = p.degree
    (slope, intercept), d = characteristic_equation(p)
    last = derived_equation(p, n - 2)
    detail = {}
    if p.mode == EXACT:
        ok = last.lhs_base == (intercept, slope) and last.lhs_exponent == 2 and last.rhs_constant() == d
        ok = ok and last.holds_for(p)
    else:
        rhs_const = last.rhs[0]
        ok = last.lhs_exponent == 2 and _close(rhs_const, d, max(abs(c) for c in last.rhs), ctx["policy"])
    try:
        cands = candidate_solutions(p)
        detail["candidates"] = _enc(list(cands), True)
    except NonSquareDiscriminant:
        cands = None
        detail["candidates"] = "non-square"
    if n == 2 and cands is not None:
        # for quadratics the two solutions are the roots themselves
        roots = sorted(t.evaluation_roots(), key=lambda z: (complex(z).real, complex(z).imag))
        got = sorted(cands, key=lambda z: (complex(z).real, complex(z).imag))
        if p.mode == EXACT and t.mode == EXACT:
            match = roots == got
        else:
            match = all(approx_eq(a, b, TolerancePolicy(1e-6, 1e-6)) for a, b in zip(roots, got))
        detail["candidates_are_roots"] = match
        ok = ok and match
    path = "exact" if p.mode == EXACT else "approx"
    return CheckRecord("eq5", n, ctx["digest"], ok, path, last.rhs[0] if last.rhs else 0, d, None, detail)


def _identity_set(t):
    return roots_to_characteristic(t)


def _check_eq11(p, t, ctx):
    rep = verify_identity(p, _identity_set(t), ctx["policy"])
    path = "exact" if is_exact(rep.lhs) and is_exact(rep.rhs) else "approx"
    return CheckRecord("eq11", p.degree, ctx["digest"], rep.passed, path, rep.lhs, rep.rhs, rep.delta,
                       {"quadratic_form": _enc(rep.quadratic, True), "prefactor": str(prefactor(p.degree))})


def _check_eq12(p, t, ctx):
    n = p.degree
    policy = ctx["policy"]
    norm = normalized_value(p)
    d = discriminant(p).d
    q = quadratic_form(build_h(n), _identity_set(t))
    detail = {}
    value, constant = q, None
    if n <= ctx["cap"]:
        value, constant = qform_invariant(enumerate_sets(t, ctx["cap"]), policy)
        detail["permutation_invariant"] = constant
    if is_exact(norm) and is_exact(q):
        ok = norm == q and d == norm * prefactor(n) * p.leading**2
        path = "exact"
    else:
        b = [abs(v) for v in _identity_set(t).b]
        mag = quadratic_form(build_h(n), b) + abs(norm)
        ok = _close(norm, q, mag, policy)
        path = "approx"
    if constant is not None:
        ok = ok and constant and (value == q if path == "exact" else True)
    return CheckRecord("eq12", n, ctx["digest"], ok, path, norm, q, norm - q, detail)


def _check_eq17(p, t, ctx):
    fam = enumerate_sets(t, ctx["cap"])
    sums = sum_property(fam)
    if t.mode == EXACT:
        ok = all(s == 0 for s in sums)
        path = "exact"
    else:
        scale = len(fam) * max(abs(x) for x in t.roots) * 4
        ok = all(approx_zero(s, scale, ctx["policy"]) for s in sums)
        path = "approx"
    return CheckRecord("eq17", p.degree, ctx["digest"], ok, path, list(sums), [0] * len(sums), None)


def _check_eq18(p, t, ctx):
    fam = enumerate_sets(t, ctx["cap"])
    rep = product_relations(fam, discriminant(expand_factored(t)) if t.mode == EXACT else None, ctx["policy"])
    fails = [f"{r.relation}({r.i},{r.j})" for r in rep.records if not r.passed]
    factors = {f"{r.i},{r.j}": r.factor for r in rep.records if not r.passed and r.factor is not None}
    detail = {"relations": len(rep.records), "failed": fails}
    if factors:
        detail["discrepancy_factors"] = factors
    path = "exact" if t.mode == EXACT else "approx"
    first = rep.by_relation("first")
    lhs = first[0].predicted if first else None
    return CheckRecord("eq18", p.degree, ctx["digest"], rep.passed, path, lhs, rep.target, None, detail)


_CHECKS = {
    "eq2": _check_eq2,
    "eq4": _check_eq4,
    "eq5": _check_eq5,
    "eq11": _check_eq11,
    "eq12": _check_eq12,
    "eq17": _check_eq17,
    "eq18": _check_eq18,
}


def run_checks(p: Polynomial, checks=ALL_CHECKS, roots: PaperRootTuple | None = None,
               policy: TolerancePolicy = DEFAULT_POLICY, cap: int = 8,
               solver_cfg: SolverConfig | None = None) -> list:
    """Run the requested checks; unknown check names raise ValueError."""
    if p.degree < 2:
        raise ValueError("checks need degree >= 2")
    unknown = [c for c in checks if c not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    t = roots if roots is not None else resolve_roots(p, solver_cfg)
    ctx = {"digest": digest(p), "policy": policy, "cap": cap}
    records = []
    for name in checks:
        if name == "eq18" and p.degree < 3:
            continue  # no pairs of characteristic roots below degree 3
        if name in ("eq17", "eq18") and p.degree > cap:
            continue
        records.append(_CHECKS[name](p, t, ctx))
    return records


def verify_polynomial(p: Polynomial, checks=ALL_CHECKS, **kw) -> VerificationReport:
    return VerificationReport(run_checks(p, checks, **kw))


# -- fuzzing ----------------------------------------------------------------

@dataclass(frozen=True)
class FuzzConfig:
    degree_range: tuple = (2, 6)
    trials: int = 100
    seed: int = 0
    mode: str = EXACT
    numerator_bound: int = 20
    denominator_bound: int = 10
    disk_radius: float = 2.0

    def __post_init__(self):
        lo, hi = self.degree_range
        if not 2 <= lo <= hi:
            raise ValueError(f"bad degree range {self.degree_range}")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.mode not in ("exact", "approx"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.numerator_bound < 1 or self.denominator_bound < 1 or self.disk_radius <= 0:
            raise ValueError("sampling bounds must be positive")


def random_rational(rng: random.Random, cfg: FuzzConfig, nonzero=False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-cfg.numerator_bound, cfg.numerator_bound), rng.randint(1, cfg.denominator_bound))
        if v or not nonzero:
            return v


def random_complex(rng: random.Random, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    return complex(r * math.cos(2 * math.pi * rng.random()), r * math.sin(2 * math.pi * rng.random()))


def random_trial(rng: random.Random, cfg: FuzzConfig):
    """(polynomial, known root tuple or None) for one trial."""
    n = rng.randint(*cfg.degree_range)
    if cfg.mode == EXACT:
        t = PaperRootTuple([random_rational(rng, cfg) for _ in range(n)], random_rational(rng, cfg, nonzero=True))
        return expand_factored(t), t
    xs = [random_complex(rng, cfg.disk_radius) for _ in range(n)]
    lead = complex(rng.uniform(0.5, 2.0), 0.0)
    return expand_factored(PaperRootTuple(xs, lead)), None


def fuzz(cfg: FuzzConfig, policy: TolerancePolicy = DEFAULT_POLICY, cap: int = 8) -> VerificationReport:
    """Run the full battery on ``cfg.trials`` random polynomials.

    Approximate trials deliberately discard the generating roots and recover
    them with the solver.
    """
    rng = random.Random(cfg.seed)
    report = VerificationReport()
    for trial in range(cfg.trials):
        p, t = random_trial(rng, cfg)
        for rec in run_checks(p, ALL_CHECKS, roots=t, policy=policy, cap=cap):
            rec.detail = {"trial": trial, **rec.detail}
            report.records.append(rec)
    return report


def fuzz_config_json(cfg: FuzzConfig) -> dict:
    out = asdict(cfg)
    out["degree_range"] = list(cfg.degree_range)
    return out
