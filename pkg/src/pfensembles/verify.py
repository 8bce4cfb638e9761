"""Identity-verification suites, shared by the service, the CLI and the tests.

Every check is exact (zero tolerance); a failing check carries a
counterexample description in its detail field.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List

from .exact import GaussianRational
from .ensemble import HSpec, l_submatrix, pf_closed_form, pfaffian, prob_L
from .kernel import Window, kernel_K, pf_matrix_J_plus_L, rho_bruteforce, rho_pfaffian
from .lattice import HalfInt, SplitConfig, embed_theta2, embed_theta_half, inverse_embed, is_confL
from .measures import (
    JackParams,
    frobenius_plancherel,
    frobenius_z_measure,
    gen_pochhammer,
    hook_H,
    hook_Hprime,
    mixed_z_measure,
    poisson_plancherel,
    z_measure_n,
)
from .partitions import partitions_of, partitions_up_to

DEFAULT_ZS = [
    (GaussianRational.of(4), GaussianRational.of(3)),
    (GaussianRational.of(Fraction(1, 3)), GaussianRational.of(Fraction(5, 3))),
    (GaussianRational(1, 1), GaussianRational(1, -1)),
]
DEFAULT_THETAS = [Fraction(1, 2), Fraction(2)]
DEFAULT_XIS = [Fraction(1, 16), Fraction(1, 3)]
DEFAULT_ETA = Fraction(1, 2)


def _report(suite: str, checks: List[dict]) -> Dict:
    return {
        "suite": suite,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def _check(name: str, passed: bool, detail: str = "") -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def suite_normalization(max_n: int = 10, zs=None, thetas=None) -> Dict:
    """Exact unit mass of the fixed-size measures on each degree."""
    checks = []
    for theta in thetas or DEFAULT_THETAS:
        for z, zp in zs or DEFAULT_ZS:
            p = JackParams(z, zp, theta)
            bad = None
            for n in range(1, max_n + 1):
                total = sum(
                    (z_measure_n(lam, p) for lam in partitions_of(n)),
                    GaussianRational(0),
                )
                if total != 1:
                    bad = f"n={n} sum={total}"
                    break
            checks.append(
                _check(f"normalization theta={theta} z={z} z'={zp}", bad is None, bad or "")
            )
    return _report("normalization", checks)


def suite_symmetry(max_size: int = 8, zs=None, thetas=None) -> Dict:
    """Conjugation symmetries of the measures and the hook products."""
    checks = []
    for theta in thetas or DEFAULT_THETAS:
        for z, zp in zs or DEFAULT_ZS:
            p = JackParams(z, zp, theta)
            q = JackParams(-z / theta, -zp / theta, 1 / theta)
            bad = None
            for lam in partitions_up_to(max_size):
                mu = lam.conjugate()
                if hook_H(lam, theta) != theta**lam.size * hook_Hprime(mu, 1 / theta):
                    bad = f"hook symmetry fails at {lam}"
                    break
                lhs = gen_pochhammer(z, lam, theta)
                rhs = (-theta) ** lam.size * gen_pochhammer(-z / theta, mu, 1 / theta)
                if lhs != rhs:
                    bad = f"pochhammer symmetry fails at {lam}"
                    break
                if lam.size >= 1 and z_measure_n(lam, p) != z_measure_n(mu, q):
                    bad = f"measure conjugation fails at {lam}"
                    break
            checks.append(
                _check(f"symmetry theta={theta} z={z} z'={zp}", bad is None, bad or "")
            )
    return _report("symmetry", checks)


def _tagged_equal(a, b) -> bool:
    return a.prefactor == b.prefactor and a.value == b.value


def suite_frobenius(max_size: int = 8, zs=None, xis=None, eta=None) -> Dict:
    """Frobenius-coordinate forms against the direct definitions."""
    checks = []
    eta = eta or DEFAULT_ETA
    for theta in (Fraction(2), Fraction(1, 2)):
        bad = None
        for lam in partitions_up_to(max_size):
            if not _tagged_equal(
                frobenius_plancherel(lam, eta, theta),
                poisson_plancherel(lam, theta, eta),
            ):
                bad = f"plancherel mismatch at {lam}"
                break
        checks.append(_check(f"frobenius plancherel theta={theta}", bad is None, bad or ""))
    for theta in (Fraction(2), Fraction(1, 2)):
        for z, zp in zs or DEFAULT_ZS:
            for xi in xis or DEFAULT_XIS:
                p = JackParams(z, zp, theta)
                bad = None
                for lam in partitions_up_to(max_size):
                    if not _tagged_equal(
                        frobenius_z_measure(lam, p, xi), mixed_z_measure(lam, p, xi)
                    ):
                        bad = f"z-measure mismatch at {lam}"
                        break
                checks.append(
                    _check(
                        f"frobenius z theta={theta} z={z} z'={zp} xi={xi}",
                        bad is None,
                        bad or "",
                    )
                )
    # half <-> two duality of the mixed measures
    for z, zp in zs or DEFAULT_ZS:
        for xi in xis or DEFAULT_XIS:
            p_half = JackParams(z, zp, Fraction(1, 2))
            p_two = JackParams(-2 * z, -2 * zp, Fraction(2))
            bad = None
            for lam in partitions_up_to(max_size):
                if not _tagged_equal(
                    mixed_z_measure(lam, p_half, xi),
                    mixed_z_measure(lam.conjugate(), p_two, xi),
                ):
                    bad = f"duality mismatch at {lam}"
                    break
            checks.append(
                _check(f"theta duality z={z} z'={zp} xi={xi}", bad is None, bad or "")
            )
    return _report("frobenius", checks)


def _specs(zs, xis, eta):
    specs = []
    for z, zp in zs:
        for xi in xis:
            specs.append(HSpec.z_theta2(z, zp, xi))
            specs.append(HSpec.z_half(z, zp, xi))
    specs.append(HSpec.plancherel(eta))
    return specs


def _random_non_confL(rng: random.Random, radius_twice: int = 15) -> SplitConfig:
    while True:
        neg = sorted(
            rng.sample(range(-radius_twice, 0, 2), rng.randint(0, 4))
        )
        pos = sorted(rng.sample(range(1, radius_twice + 1, 2), rng.randint(0, 4)))
        config = SplitConfig(
            tuple(HalfInt(t) for t in neg), tuple(HalfInt(t) for t in pos)
        )
        if not is_confL(config):
            return config


def suite_pfaffian(max_size: int = 8, zs=None, xis=None, eta=None,
                   random_trials: int = 200, seed: int = 7) -> Dict:
    """Matrix Pfaffians of L(X|X) against the product closed form."""
    checks = []
    zs = zs or DEFAULT_ZS[:1]
    xis = xis or DEFAULT_XIS
    eta = eta or DEFAULT_ETA
    for spec in _specs(zs, xis, eta):
        bad = None
        for lam in partitions_up_to(max_size):
            config = spec.embed(lam)
            if pfaffian(l_submatrix(spec, config)) != pf_closed_form(spec, config):
                bad = f"closed form mismatch at {lam}"
                break
        checks.append(_check(f"closed form {spec.kind.value}", bad is None, bad or ""))
    rng = random.Random(seed)
    spec = HSpec.plancherel(eta)
    bad = None
    for _ in range(random_trials):
        config = _random_non_confL(rng)
        if not pfaffian(l_submatrix(spec, config)).is_zero():
            bad = f"nonzero Pfaffian off Conf^L at {config.to_json_obj()}"
            break
        if not pf_closed_form(spec, config).is_zero():
            bad = f"nonzero closed form off Conf^L at {config.to_json_obj()}"
            break
    checks.append(_check("vanishing off Conf^L", bad is None, bad or ""))
    return _report("pfaffian", checks)


def suite_theorems(max_size: int = 8, zs=None, xis=None, eta=None) -> Dict:
    """Prob_L against the corresponding measures (all three ensembles)."""
    checks = []
    zs = zs or DEFAULT_ZS[:1]
    xis = xis or DEFAULT_XIS
    eta = eta or DEFAULT_ETA
    for z, zp in zs:
        for xi in xis:
            p2 = JackParams(z, zp, Fraction(2))
            ph = JackParams(z, zp, Fraction(1, 2))
            spec2 = HSpec.z_theta2(z, zp, xi)
            spech = HSpec.z_half(z, zp, xi)
            bad = None
            for lam in partitions_up_to(max_size):
                if not _tagged_equal(
                    prob_L(spec2, embed_theta2(lam)), mixed_z_measure(lam, p2, xi)
                ):
                    bad = f"theta=2 mismatch at {lam}"
                    break
                if not _tagged_equal(
                    prob_L(spech, embed_theta_half(lam)), mixed_z_measure(lam, ph, xi)
                ):
                    bad = f"theta=1/2 mismatch at {lam}"
                    break
            checks.append(
                _check(f"z-ensembles z={z} z'={zp} xi={xi}", bad is None, bad or "")
            )
    spec = HSpec.plancherel(eta)
    bad = None
    for lam in partitions_up_to(max_size):
        if not _tagged_equal(
            prob_L(spec, embed_theta2(lam)), poisson_plancherel(lam, Fraction(2), eta)
        ):
            bad = f"plancherel theta=2 mismatch at {lam}"
            break
        if not _tagged_equal(
            prob_L(spec, embed_theta_half(lam)),
            poisson_plancherel(lam, Fraction(1, 2), eta),
        ):
            bad = f"plancherel theta=1/2 mismatch at {lam}"
            break
    checks.append(_check(f"plancherel eta={eta}", bad is None, bad or ""))
    return _report("theorems", checks)


def suite_kernel(radius_twice: int = 5, eta=None, zs=None, xi=None) -> Dict:
    """Finite-window kernel identities against the brute-force oracle."""
    checks = []
    eta = eta or DEFAULT_ETA
    zs = zs or DEFAULT_ZS[:1]
    xi = xi or Fraction(1, 16)
    w = Window(HalfInt(radius_twice))
    specs = [HSpec.plancherel(eta)]
    for z, zp in zs:
        specs.append(HSpec.z_theta2(z, zp, xi))
        specs.append(HSpec.z_half(z, zp, xi))
    for spec in specs:
        K = kernel_K(spec, w)
        bad = None
        for x in w.points:
            if rho_pfaffian(K, w, [x]) != rho_bruteforce(spec, w, [x]):
                bad = f"one-point mismatch at {x}"
                break
        if bad is None:
            pts = w.points
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    pair = [pts[i], pts[j]]
                    if rho_pfaffian(K, w, pair) != rho_bruteforce(spec, w, pair):
                        bad = f"two-point mismatch at {pair}"
                        break
                if bad:
                    break
        checks.append(_check(f"kernel {spec.kind.value}", bad is None, bad or ""))
    return _report("kernel", checks)


SUITES = {
    "normalization": suite_normalization,
    "symmetry": suite_symmetry,
    "frobenius": suite_frobenius,
    "pfaffian": suite_pfaffian,
    "theorems": suite_theorems,
    "kernel": suite_kernel,
}


def run_suite(name: str, **kwargs) -> Dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
