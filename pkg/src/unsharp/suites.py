"""Randomized property suites behind the CLI verify subcommand.

Each suite draws seeded random scenarios, checks the relevant inequalities or
identities, and reports check counts, failures and the worst slack observed.
A slack is lhs - rhs of an inequality lhs >= rhs; identities record the
negated absolute deviation, so the worst slack is always "distance from
violation" and suites pass when no slack falls below its tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    b1_bound,
    coles_bound,
    device_uncertainty_white_noise,
    hw_bound,
    krishna_bound,
    majorization_vector,
    min_device_uncertainty,
    qw_b2_bound,
)
from .povm import convex_combination, projective_from_basis, white_noise_povm
from .sampling import (
    random_basis,
    random_mixed_state,
    random_povm,
    random_pure_state,
    random_state_vector,
)
from .uncertainty import (
    binary_entropy,
    device_uncertainty,
    outcome_probs,
    quantum_uncertainty,
    shannon_entropy,
)
from .sweeps import spin_basis


@dataclass
class SuiteResult:
    name: str
    trials: int
    seed: int
    checks: int = 0
    failures: int = 0
    worst_slack: float = np.inf
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, slack: float, tol: float, label: str) -> None:
        self.checks += 1
        if slack < self.worst_slack:
            self.worst_slack = slack
        if slack < -tol:
            self.failures += 1
            if len(self.messages) < 20:
                self.messages.append(f"{label}: slack {slack:.3e} < -{tol:.1e}")

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"suite={self.name} trials={self.trials} seed={self.seed} "
            f"checks={self.checks} failures={self.failures} "
            f"worst_slack={self.worst_slack:.3e} {status}"
        )


def suite_chain(trials: int = 1000, seed: int = 0) -> SuiteResult:
    """H >= D >= minD >= resolution bound on random states and POVMs."""
    result = SuiteResult("chain", trials, seed)
    rng = np.random.default_rng(seed)
    for d in (2, 3, 4):
        for trial in range(trials):
            povm = random_povm(d, int(rng.integers(2, d + 2)), rng)
            rho = random_pure_state(d, rng) if trial % 2 else random_mixed_state(d, rng)
            entropy = shannon_entropy(outcome_probs(rho, povm))
            dev = device_uncertainty(rho, povm)
            floor = min_device_uncertainty(povm)
            resolution = krishna_bound(povm)
            label = f"d={d} trial={trial}"
            result.record(entropy - dev, 1e-9, f"{label} H>=D")
            result.record(dev - floor, 1e-9, f"{label} D>=minD")
            result.record(floor - resolution, 1e-9, f"{label} minD>=resolution")
            result.record(dev, 1e-9, f"{label} D>=0")
    return result


def suite_majorization(trials: int = 500, seed: int = 0) -> SuiteResult:
    """Direct-sum majorization and the H(W) entropy bound on random bases."""
    result = SuiteResult("majorization", trials, seed)
    rng = np.random.default_rng(seed)
    for d in (2, 3):
        for trial in range(trials):
            basis_a = random_basis(d, rng)
            basis_b = random_basis(d, rng)
            rho = random_pure_state(d, rng)
            pa = outcome_probs(rho, projective_from_basis(basis_a))
            pb = outcome_probs(rho, projective_from_basis(basis_b))
            mv = majorization_vector(basis_a, basis_b)
            merged = np.sort(np.concatenate([pa, pb]))[::-1]
            comparison = np.sort(np.concatenate([[1.0], mv.W]))[::-1]
            label = f"d={d} trial={trial}"
            partial_gap = float(np.min(np.cumsum(comparison) - np.cumsum(merged)))
            result.record(partial_gap, 1e-9, f"{label} partial sums")
            result.record(
                -abs(float(merged.sum() - comparison.sum())), 1e-9, f"{label} equal totals"
            )
            result.record(
                shannon_entropy(pa) + shannon_entropy(pb) - hw_bound(mv),
                1e-9,
                f"{label} H_A+H_B>=H(W)",
            )
    return result


def suite_convexity(trials: int = 200, seed: int = 0) -> SuiteResult:
    """Mixture identities: D gains exactly H_bin(p) and Q mixes linearly."""
    result = SuiteResult("convexity", trials, seed)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        d = int(rng.integers(2, 4))
        a = random_povm(d, int(rng.integers(2, 4)), rng)
        b = random_povm(d, int(rng.integers(2, 4)), rng)
        p = float(rng.uniform())
        rho = random_pure_state(d, rng)
        mixed = convex_combination(a, b, p)
        gain = binary_entropy(p)
        d_direct = device_uncertainty(rho, mixed)
        d_expected = p * device_uncertainty(rho, a) + (1 - p) * device_uncertainty(rho, b) + gain
        q_direct = quantum_uncertainty(rho, mixed)
        q_expected = p * quantum_uncertainty(rho, a) + (1 - p) * quantum_uncertainty(rho, b)
        label = f"trial={trial} d={d} p={p:.3f}"
        result.record(-abs(d_direct - d_expected), 1e-12, f"{label} D identity")
        result.record(-abs(q_direct - q_expected), 1e-12, f"{label} Q identity")
    return result


def suite_whitenoise(trials: int = 100, seed: int = 0) -> SuiteResult:
    """State independence and the closed form of white-noise unsharpness."""
    result = SuiteResult("whitenoise", trials, seed)
    rng = np.random.default_rng(seed)
    for d in range(2, 7):
        basis = random_basis(d, rng)
        for alpha in np.linspace(0.0, 1.0, 11):
            povm = white_noise_povm(basis, float(alpha))
            closed = device_uncertainty_white_noise(float(alpha), d)
            worst = 0.0
            for _ in range(trials):
                worst = max(worst, abs(device_uncertainty(random_pure_state(d, rng), povm) - closed))
            result.record(-worst, 1e-10, f"d={d} alpha={alpha:.1f} state independence")
    return result


def suite_validity(trials: int = 500, seed: int = 0) -> SuiteResult:
    """Entropy sums dominate B1, B2 and -log2 C for white-noise spin pairs."""
    result = SuiteResult("validity", trials, seed)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        theta = float(rng.uniform(0.0, np.pi))
        alpha = float(rng.uniform())
        beta = float(rng.uniform())
        basis_a = spin_basis(theta)
        basis_b = np.eye(2, dtype=complex)
        pa = white_noise_povm(basis_a, alpha)
        pb = white_noise_povm(basis_b, beta)
        rho = random_pure_state(2, rng)
        entropy_sum = shannon_entropy(outcome_probs(rho, pa)) + shannon_entropy(outcome_probs(rho, pb))
        _, b2 = qw_b2_bound(basis_a, alpha, basis_b, beta)
        strongest = max(b1_bound(basis_a, alpha, basis_b, beta), b2, coles_bound(pa, pb))
        result.record(
            entropy_sum - strongest,
            1e-9,
            f"trial={trial} theta={theta:.3f} alpha={alpha:.3f} beta={beta:.3f}",
        )
    return result


def suite_coles(trials: int = 500, seed: int = 0) -> SuiteResult:
    """Entropy sums dominate -log2 C for unstructured random POVM pairs."""
    result = SuiteResult("coles", trials, seed)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        d = int(rng.integers(2, 4))
        a = random_povm(d, int(rng.integers(2, 5)), rng)
        b = random_povm(d, int(rng.integers(2, 5)), rng)
        rho = random_pure_state(d, rng)
        entropy_sum = shannon_entropy(outcome_probs(rho, a)) + shannon_entropy(outcome_probs(rho, b))
        result.record(entropy_sum - coles_bound(a, b), 1e-9, f"trial={trial} d={d}")
    return result


def suite_dualmap(trials: int = 200, seed: int = 0) -> SuiteResult:
    """Noisy-state and noisy-measurement outcome probabilities coincide."""
    result = SuiteResult("dualmap", trials, seed)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        d = int(rng.integers(2, 5))
        alpha = float(rng.uniform())
        basis = random_basis(d, rng)
        psi = random_state_vector(d, rng)
        rho_noisy = alpha * np.outer(psi, psi.conj()) + (1 - alpha) * np.eye(d) / d
        noisy_probs = np.einsum("ni,ij,nj->n", basis.conj(), rho_noisy, basis).real
        povm = white_noise_povm(basis, alpha)
        sharp_probs = outcome_probs(np.outer(psi, psi.conj()), povm)
        result.record(
            -float(np.max(np.abs(noisy_probs - sharp_probs))),
            1e-12,
            f"trial={trial} d={d} alpha={alpha:.3f}",
        )
    return result


SUITES = {
    "chain": suite_chain,
    "majorization": suite_majorization,
    "convexity": suite_convexity,
    "whitenoise": suite_whitenoise,
    "validity": suite_validity,
    "coles": suite_coles,
    "dualmap": suite_dualmap,
}


def run_suite(name: str, trials: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if trials < 1:
        raise ValueError(f"need at least 1 trial, got {trials}")
    return SUITES[name](trials=trials, seed=seed)
