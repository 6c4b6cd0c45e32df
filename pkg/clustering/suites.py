# ============================================================
# 📁 File: clustering/suites.py
# 📍 Location: asymclust/clustering/suites.py
# 📝 Description: Seeded verification suites behind `verify`
# ============================================================

"""
Randomised verification suites.

Every suite draws from its own generator seeded with (seed, suite index),
so `--suite oracle` gives the same networks whether it runs alone or as
part of `all`. Each check stops at its first failing trial and reports
that trial's counterexample.
"""

from typing import Callable, Dict, List, Optional

import numpy as np

from clustering.dendrogram import (
    cut,
    dendrogram_to_ultrametric,
    ultrametric_to_dendrogram,
    validate_dendrogram,
)
from clustering.methods import (
    UltrametricMatrix,
    nonreciprocal,
    reciprocal,
    run_method,
    single_linkage,
    ultrametric_as_network,
)
from clustering.network import Network, symmetrize_max
from clustering.oracle import (
    VerificationReport,
    brute_force_method,
    check_axiom_transformation,
    check_axiom_value,
    check_sandwich,
    check_ultrametric,
    generate_reducing_map,
    random_network,
)
from config import Config
from utils.constants import BOTH_ORDER, SUITE_NAMES, Methods, Suites
from utils.logger import log_verification


Trial = Callable[[int], Optional[dict]]

# Trial multipliers relative to --trials (200 by default)
AXIOM_VALUE_FACTOR = 5.0
REDUCING_MAP_FACTOR = 2.5
SANDWICH_FACTOR = 2.5
FIXED_POINT_FACTOR = 0.5

CUT_PAIRS_PER_TREE = 10

# Edge cases run before the random (alpha, beta) draws
EXTREME_PAIRS = (
    (1.0, 1.0),
    (1e-300, 1e300),
    (5e-324, 1.0),
    (10.0, 10.0 - 2 ** -49),
    (0.1, 0.2),
)


def _scaled(trials: int, factor: float) -> int:
    return max(1, int(round(trials * factor)))


def _repeat(check_name: str, count: int, trial: Trial) -> VerificationReport:
    """Run trial(0..count-1); the first non-None result is the counterexample."""
    for t in range(count):
        counterexample = trial(t)
        if counterexample is not None:
            counterexample = {"trial": t, **counterexample}
            return VerificationReport.failure(check_name, counterexample, trials=t + 1)
    return VerificationReport.ok(check_name, trials=count)


def _off_diagonal(values: np.ndarray) -> np.ndarray:
    return values[~np.eye(values.shape[0], dtype=bool)]


def _provenance(output: UltrametricMatrix, source: Network) -> Optional[dict]:
    """Every output value must be an entry of the network it came from."""
    produced = _off_diagonal(output.values)
    foreign = ~np.isin(produced, _off_diagonal(source.dissim))
    if foreign.any():
        return {"reason": "value not among input entries", "value": float(produced[foreign][0])}
    return None


def _first_difference(a: np.ndarray, b: np.ndarray) -> Optional[dict]:
    differs = a != b
    if not differs.any():
        return None
    i, j = (int(x) for x in np.argwhere(differs)[0])
    return {"i": i, "j": j, "left": float(a[i, j]), "right": float(b[i, j])}


# ============================================================
# 🅰️ Axioms
# ============================================================

def _axiom_suite(rng: np.random.Generator, trials: int) -> List[VerificationReport]:
    reports = []
    draws = _scaled(trials, AXIOM_VALUE_FACTOR)
    pairs = list(EXTREME_PAIRS) + [
        (10.0 * (1.0 - rng.random()), 10.0 * (1.0 - rng.random())) for _ in range(draws)
    ]

    for method in BOTH_ORDER:
        def value_trial(t: int, method=method) -> Optional[dict]:
            report = check_axiom_value(method, *pairs[t])
            return report.counterexample

        reports.append(_repeat(f"axiom-value:{method}", len(pairs), value_trial))

    maps = [
        generate_reducing_map(
            random_network(rng, int(rng.integers(2, Config.REDUCING_MAP_MAX_NODES + 1))),
            seed=int(rng.integers(0, 2 ** 32)),
        )
        for _ in range(_scaled(trials, REDUCING_MAP_FACTOR))
    ]
    for method in BOTH_ORDER:
        def map_trial(t: int, method=method) -> Optional[dict]:
            return check_axiom_transformation(method, maps[t]).counterexample

        reports.append(_repeat(f"axiom-transformation:{method}", len(maps), map_trial))

    return reports


# ============================================================
# 🐢 Oracle Equivalence
# ============================================================

def _oracle_suite(rng: np.random.Generator, trials: int) -> List[VerificationReport]:
    networks = [
        random_network(rng, int(rng.integers(2, Config.ORACLE_SUITE_MAX_NODES + 1)))
        for _ in range(trials)
    ]
    reports = []
    for method in BOTH_ORDER:
        def trial(t: int, method=method) -> Optional[dict]:
            net = networks[t]
            fast = run_method(method, net)
            slow = brute_force_method(net, method)
            mismatch = _first_difference(fast.values, slow.values)
            if mismatch is not None:
                return {"n": net.n, "network": net.dissim.tolist(), **mismatch}
            return _provenance(fast, net) or check_ultrametric(fast).counterexample

        reports.append(_repeat(f"oracle:{method}", len(networks), trial))
    return reports


# ============================================================
# 🥪 Extremal Bounds
# ============================================================

def _sandwich_suite(rng: np.random.Generator, trials: int) -> List[VerificationReport]:
    networks = [
        random_network(rng, int(rng.integers(3, Config.SANDWICH_MAX_NODES + 1)))
        for _ in range(_scaled(trials, SANDWICH_FACTOR))
    ]

    def trial(t: int) -> Optional[dict]:
        net = networks[t]
        lower, upper = nonreciprocal(net), reciprocal(net)
        for u in (lower, upper):
            failure = check_ultrametric(u).counterexample or _provenance(u, net)
            if failure is not None:
                return failure
        above = lower.values > upper.values
        if above.any():
            i, j = (int(x) for x in np.argwhere(above)[0])
            return {"reason": "nonreciprocal exceeds reciprocal", "i": i, "j": j}
        for candidate in (lower, upper):
            failure = check_sandwich(net, candidate).counterexample
            if failure is not None:
                return failure
        return None

    return [_repeat("sandwich", len(networks), trial)]


# ============================================================
# 🌲 Ultrametric ⇄ Dendrogram
# ============================================================

def _dendrogram_suite(rng: np.random.Generator, trials: int) -> List[VerificationReport]:
    cases = []
    for t in range(trials):
        net = random_network(rng, int(rng.integers(2, Config.REDUCING_MAP_MAX_NODES + 1)))
        method = BOTH_ORDER[t % 2]
        u = run_method(method, net)
        top = float(u.values.max()) * 1.1
        deltas = np.sort(rng.uniform(0.0, top, size=(CUT_PAIRS_PER_TREE, 2)), axis=1)
        cases.append((u, deltas))

    def trial(t: int) -> Optional[dict]:
        u, deltas = cases[t]
        tree = ultrametric_to_dendrogram(u)

        validity = validate_dendrogram(tree)
        if not validity.passed:
            return validity.counterexample

        back = dendrogram_to_ultrametric(tree)
        mismatch = _first_difference(u.values, back.values)
        if mismatch is not None:
            return {"reason": "round trip changed the ultrametric", **mismatch}

        if tree.resolutions() != u.distinct_values().tolist():
            return {"reason": "event resolutions differ from ultrametric values"}

        for small, large in deltas:
            if not cut(tree, small).refines(cut(tree, large)):
                return {"reason": "cut monotonicity", "small": float(small), "large": float(large)}
        return None

    return [_repeat("dendrogram", len(cases), trial)]


# ============================================================
# 🪞 Symmetric Coincidence and Fixed Points
# ============================================================

def _symmetric_suite(rng: np.random.Generator, trials: int) -> List[VerificationReport]:
    symmetric = [
        random_network(rng, int(rng.integers(2, Config.REDUCING_MAP_MAX_NODES + 1)), symmetric=True)
        for _ in range(trials)
    ]
    asymmetric = [
        random_network(rng, int(rng.integers(2, Config.REDUCING_MAP_MAX_NODES + 1)))
        for _ in range(trials)
    ]
    fixed = [
        run_method(
            BOTH_ORDER[t % 2],
            random_network(rng, int(rng.integers(2, Config.REDUCING_MAP_MAX_NODES + 1))),
        )
        for t in range(_scaled(trials, FIXED_POINT_FACTOR))
    ]

    def coincide(t: int) -> Optional[dict]:
        net = symmetric[t]
        sl = single_linkage(net).values
        for method, u in ((Methods.RECIPROCAL, reciprocal(net)), (Methods.NONRECIPROCAL, nonreciprocal(net))):
            mismatch = _first_difference(u.values, sl)
            if mismatch is not None:
                return {"method": method, **mismatch}
        return None

    def symmetrized(t: int) -> Optional[dict]:
        net = asymmetric[t]
        return _first_difference(reciprocal(net).values, single_linkage(symmetrize_max(net)).values)

    def fixed_point(t: int) -> Optional[dict]:
        u = fixed[t]
        as_net = ultrametric_as_network(u)
        for method in BOTH_ORDER:
            mismatch = _first_difference(run_method(method, as_net).values, u.values)
            if mismatch is not None:
                return {"method": method, **mismatch}
        return None

    return [
        _repeat("symmetric:coincidence", len(symmetric), coincide),
        _repeat("symmetric:reciprocal-is-symmetrized-single-linkage", len(asymmetric), symmetrized),
        _repeat("symmetric:fixed-point", len(fixed), fixed_point),
    ]


SUITES: Dict[str, Callable[[np.random.Generator, int], List[VerificationReport]]] = {
    Suites.AXIOMS: _axiom_suite,
    Suites.ORACLE: _oracle_suite,
    Suites.SANDWICH: _sandwich_suite,
    Suites.DENDROGRAM: _dendrogram_suite,
    Suites.SYMMETRIC: _symmetric_suite,
}


def run_suite(name: str, trials: Optional[int] = None, seed: Optional[int] = None) -> List[VerificationReport]:
    """
    Run one named suite, or every suite for `all`.

    Args:
        name: Suite name (axioms, oracle, sandwich, dendrogram, symmetric, all)
        trials: Base trial count, Config.VERIFY_TRIALS when omitted
        seed: Base seed, Config.VERIFY_SEED when omitted

    Returns:
        One report per check, in a fixed order
    """
    trials = Config.VERIFY_TRIALS if trials is None else trials
    seed = Config.VERIFY_SEED if seed is None else seed
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")

    names = SUITE_NAMES if name == Suites.ALL else (name,)
    reports: List[VerificationReport] = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or all")
        rng = np.random.default_rng([seed, SUITE_NAMES.index(suite)])
        for report in SUITES[suite](rng, trials):
            log_verification(report.check_name, report.passed, report.trials)
            reports.append(report)
    return reports
