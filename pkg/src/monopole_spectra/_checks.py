"""Invariant suites run by `monopole-spectra check`.

Every suite returns a list of [`CheckResult`][monopole_spectra._checks.CheckResult]
records, one per quantity compared against its tolerance. Tolerances are
multiplied by the configured `tolerance_scale`.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np
import polars as pl
from scipy import special

from monopole_spectra._config import scaled_tolerance
from monopole_spectra._exceptions import DivergentIntegralError, SectorMismatchError
from monopole_spectra.modes import (
    Family,
    FluxConfig,
    NormClass,
    build_families,
    evaluate,
    inner_product,
    radial_part,
    to_grid_function,
    tower_lines,
)
from monopole_spectra.operators import (
    apply_Q,
    apply_Q_grid,
    flux_integral,
    hermiticity_defect,
    susy_algebra_residuals,
)
from monopole_spectra.oracle import (
    DiscretizationSpec,
    admissible_towers,
    s3_laplacian_check,
    sturm_liouville_eigen,
    witten_sqm_check,
)
from monopole_spectra.oracle.counterexamples import S3_EIGENVALUE
from monopole_spectra.quadrature import gauss_jacobi_rule, integrate_product
from monopole_spectra.specialfn import (
    JacobiSpec,
    jacobi_eval,
    negative_param_relation_check,
)
from monopole_spectra.susy import (
    HilbertPolicy,
    assemble_spectrum,
    pairing_report,
    susy_breaking_witness,
    witten_index,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one comparison of a check suite.

    Attributes
    ----------
    suite : str
    name : str
    value : float
        The measured deviation, 0 is perfect.
    tolerance : float
        The scaled tolerance the value is compared with.
    passed : bool
    """

    suite: str
    name: str
    value: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "value": self.value,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _result(suite: str, name: str, value: float, tol: float) -> CheckResult:
    tolerance = scaled_tolerance(tol)
    value = float(value)
    passed = bool(np.isfinite(value) and value <= tolerance)
    if not passed:
        logger.warning(
            "Check %s/%s failed: %.3g > %.3g.", suite, name, value, tolerance
        )
    return CheckResult(suite, name, value, tolerance, passed)


def two_state_summary(q, m: int = 0, n: int = 0, npoints=None) -> dict:
    """Overlap and hermiticity defect of the Tilde and Plain mode (m, n).

    The defect <T|H|P> - <P|H|T> is computed by applying H, the substituted value
    by inserting the eigenvalues of both modes.

    Examples
    --------
    >>> summary = two_state_summary("1/2")
    >>> bool(np.isclose(summary["overlap"], 2 * np.pi))
    True
    >>> bool(np.isclose(summary["defect_magnitude"], np.pi))
    True
    """
    plain, tilde = build_families(FluxConfig(q), m, n)
    overlap = inner_product(tilde, plain, npoints=npoints)
    overlap_swapped = inner_product(plain, tilde, npoints=npoints)
    defect = hermiticity_defect(tilde, plain, npoints=npoints)
    substituted = float(plain.eigenvalue) * overlap - float(
        tilde.eigenvalue
    ) * np.conj(overlap_swapped)
    return {
        "q": float(plain.config.q),
        "m": m,
        "n": n,
        "eigenvalues": [float(tilde.eigenvalue), float(plain.eigenvalue)],
        "classes": [tilde.norm_class.value, plain.norm_class.value],
        "overlap": float(np.real(overlap)),
        "defect": [float(np.real(defect)), float(np.imag(defect))],
        "defect_magnitude": float(abs(defect)),
        "substitution_defect": [
            float(np.real(substituted)),
            float(np.imag(substituted)),
        ],
    }


def check_jacobi() -> list[CheckResult]:
    """Integer-parameter relations and the reduction of negative m."""
    rng = np.random.default_rng(42)
    zs = rng.uniform(-1, 1, size=20)
    worst = 0.0
    for alpha in range(6):
        for beta in range(6):
            for n in range(9):
                for z in zs:
                    r = negative_param_relation_check(n, alpha, beta, z)
                    scale_1 = abs(jacobi_eval(JacobiSpec(n + alpha, -alpha, beta), z))
                    scale_2 = abs(jacobi_eval(JacobiSpec(n + beta, alpha, -beta), z))
                    worst = max(
                        worst,
                        r.first / max(1.0, scale_1),
                        r.second / max(1.0, scale_2),
                    )
    results = [_result("jacobi", "integer_parameter_relations", worst, 1e-10)]

    z = np.linspace(-0.9, 0.9, 7)
    worst = 0.0
    for q in ("1/2", "2.7", "-1.3"):
        config = FluxConfig(q)
        kappa = config.kappa
        for m in (-1, -2, -3):
            for n in range(-m, -m + 3):
                plain, tilde = build_families(config, m, n)
                raw = {
                    Family.PLAIN: (1 - z) ** (m / 2)
                    * (1 + z) ** float(-Fraction(m, 2) - kappa)
                    * jacobi_eval(JacobiSpec(n, m, -m - 2 * kappa), z),
                    Family.TILDE: (1 - z) ** (m / 2)
                    * (1 + z) ** float(Fraction(m, 2) + kappa)
                    * jacobi_eval(JacobiSpec(n, m, m + 2 * kappa), z),
                }
                for entry in (plain, tilde):
                    expected = raw[entry.family]
                    diff = np.abs(radial_part(entry, z) - expected)
                    scale = max(1.0, float(np.max(np.abs(expected))))
                    worst = max(worst, float(np.max(diff)) / scale)
    results.append(_result("jacobi", "negative_m_reduction", worst, 1e-10))
    return results


def check_quadrature() -> list[CheckResult]:
    """Gauss-Jacobi rules against scipy and a closed-form moment."""
    worst = 0.0
    cases = ((2, 0, 0), (5, 0.5, -0.5), (16, -0.9, 2), (64, 1.25, -0.75))
    for npoints, a, b in cases:
        rule = gauss_jacobi_rule(npoints, a, b)
        nodes, weights = special.roots_jacobi(npoints, a, b)
        worst = max(
            worst,
            float(np.max(np.abs(rule.nodes - nodes))),
            float(np.max(np.abs(rule.weights - weights) / weights)),
        )
    results = [_result("quadrature", "nodes_weights_vs_scipy", worst, 1e-10)]

    # int (1-z)^a (1+z)^b dz = 2^(a+b+1) B(a+1, b+1)
    worst = 0.0
    for a, b in ((0, 0.5), (-0.5, 1.5), (2.25, -0.75)):
        exact = 2 ** (a + b + 1) * special.beta(a + 1, b + 1)
        value = integrate_product(1, 1, a, b, npoints=8)
        worst = max(worst, abs(value - exact) / exact)
    results.append(_result("quadrature", "weighted_moments", worst, 1e-12))
    return results


def check_modes() -> list[CheckResult]:
    """Integer flux degeneracy and norms, the tower structure for 0 < q < 1."""
    spectrum = assemble_spectrum(1, (-10, 10), 10, HilbertPolicy.BUNDLE_SECTIONS)
    counts = Counter(e.eigenvalue for e in spectrum[0])
    deviation = 0
    for level in range(11):
        deviation += abs(counts.pop(level * (level + 1), 0) - (2 * level + 1))
    # levels above l=10 are incomplete in the window and ignored
    deviation += sum(v for k, v in counts.items() if k < 110)
    results = [_result("modes", "integer_flux_multiplicity", deviation, 0)]

    expected_m = {0: [-1, 0], 1: [1, 2]}
    mismatch = 0
    worst = 0.0
    for sector in (0, 1):
        df = tower_lines(0.05, 0.95, 19, sector=sector)
        singular = df.filter(pl.col("class") == NormClass.SINGULAR_NORMALIZABLE.value)
        if singular["m"].unique().sort().to_list() != expected_m[sector]:
            mismatch += 1
        sign = 1 if sector == 0 else -1
        lines = df.with_columns(
            pl.when(pl.col("family") == Family.PLAIN.value)
            .then(sign * (pl.col("q") - pl.col("m")) - 1)
            .otherwise(sign * (pl.col("m") - pl.col("q")) + 1)
            .alias("expected")
        )
        worst = max(worst, float((lines["gamma"] - lines["expected"]).abs().max()))
    results.append(_result("modes", "singular_towers", mismatch, 0))
    results.append(_result("modes", "gamma_lines", worst, 1e-12))

    divergent = 0
    for entry in _integer_flux_entries(range(-2, 4)):
        if entry.norm_class is NormClass.NON_NORMALIZABLE:
            continue
        try:
            norm = inner_product(entry, entry).real
        except DivergentIntegralError:
            norm = np.nan
        if not (np.isfinite(norm) and norm > 0):
            divergent += 1
    results.append(_result("modes", "integer_flux_norms", divergent, 0))
    return results


def _integer_flux_entries(fluxes, m_max: int = 3, labels: int = 4):
    """Nonzero family modes of both sectors at the given integer fluxes."""
    for q in fluxes:
        for sector in (0, 1):
            config = FluxConfig(q, sector)
            for m in range(-m_max, m_max + 1):
                for n in range(abs(m), abs(m) + labels):
                    for entry in build_families(config, m, n):
                        if not entry.descriptor.is_zero:
                            yield entry


def check_oracle(
    m_max: int = 10, level: int = 10, grid_size: Optional[int] = None
) -> list[CheckResult]:
    """Finite difference eigenvalues against the closed-form towers.

    Every |m| <= m_max is solved at q=1 and q=1/2 with all eigenvalues up to
    level (level + 1), l(l+1) for l <= level at q=1.
    """
    spec = DiscretizationSpec(grid_size=grid_size)
    bound = level * (level + 1)
    results = []
    for q, name in ((Fraction(1), "integer_flux_fd"), (Fraction(1, 2), "half_flux_fd")):
        config = FluxConfig(q)
        worst = 0.0
        for m in range(-m_max, m_max + 1):
            exact = [
                x
                for t in admissible_towers(config, m)
                for x in t.exact_eigenvalues(2 * level + 2)
                if x <= bound
            ]
            if not exact:
                continue
            result = sturm_liouville_eigen(config, m, len(exact), spec)
            worst = max(worst, result.residual)
        results.append(_result("oracle", name, worst, 1e-4))
    return results


def _random_normalizable(rng: np.random.Generator, size: int) -> list:
    entries = []
    while len(entries) < size:
        if rng.integers(3) == 0:
            q = Fraction(int(rng.integers(-2, 4)))
        else:
            q = Fraction(int(rng.integers(-19, 30)), 10)
        config = FluxConfig(q, int(rng.integers(2)))
        m, n = int(rng.integers(-3, 4)), int(rng.integers(0, 5))
        if config.effective_m(m) < 0 and n < abs(m):
            continue
        entry = build_families(config, m, n)[int(rng.integers(2))]
        if entry.descriptor.is_zero or entry.norm_class is NormClass.NON_NORMALIZABLE:
            continue
        entries.append(entry)
    return entries


def check_algebra() -> list[CheckResult]:
    """{Q, Qbar} = H, the grading and the classification of two images."""
    residuals = [
        susy_algebra_residuals(e)
        for e in _random_normalizable(np.random.default_rng(7), 50)
    ]
    results = [
        _result(
            "algebra",
            "anticommutator",
            max(r.anticommutator for r in residuals),
            1e-9,
        ),
        _result(
            "algebra",
            "nilpotency",
            max(r.q_squared + r.qbar_squared for r in residuals),
            0,
        ),
    ]

    config = FluxConfig("1/2")
    _, tilde = build_families(config, 0, 0)
    plain, _ = build_families(config, -1, 1)
    expected = [
        (tilde, NormClass.SINGULAR_NORMALIZABLE, Fraction(-1, 2)),
        (plain, NormClass.REGULAR, Fraction(3, 2)),
    ]
    mismatch = 0
    worst = 0.0
    nodes = gauss_jacobi_rule(24).nodes
    for entry, norm_class, gamma in expected:
        image = apply_Q(entry)
        if image.norm_class is not norm_class or image.gamma != gamma:
            mismatch += 1
        grid = apply_Q_grid(to_grid_function(entry, nodes, max_degree=20), config)
        values = evaluate(image, nodes)
        scale = max(1.0, float(np.max(np.abs(values))))
        worst = max(worst, float(np.max(np.abs(grid.evaluate(nodes) - values))) / scale)
    try:
        apply_Q(apply_Q(tilde))
        mismatch += 1
    except SectorMismatchError:
        pass
    results.append(_result("algebra", "image_classes", mismatch, 0))
    results.append(_result("algebra", "descriptor_vs_grid", worst, 1e-8))
    return results


def check_hermiticity() -> list[CheckResult]:
    """The non-orthogonal pair at q=1/2 and regular modes at q=1/2 and q=1."""
    summary = two_state_summary("1/2")
    substituted = complex(*summary["substitution_defect"])
    defect = complex(*summary["defect"])
    eigen = abs(summary["eigenvalues"][0] - 0.5) + abs(summary["eigenvalues"][1])
    results = [
        _result("hermiticity", "eigenvalues", eigen, 0),
        _result("hermiticity", "overlap", abs(summary["overlap"] - 2 * np.pi), 1e-8),
        _result(
            "hermiticity",
            "defect_magnitude",
            abs(summary["defect_magnitude"] - np.pi),
            1e-8,
        ),
        _result("hermiticity", "substitution", abs(defect - substituted), 1e-8),
    ]
    config = FluxConfig("1/2")
    regular = [build_families(config, 0, n)[1] for n in range(3)]
    worst = max(
        abs(hermiticity_defect(e1, e2))
        for i, e1 in enumerate(regular)
        for e2 in regular[i + 1 :]
    )
    results.append(_result("hermiticity", "regular_defect", worst, 1e-9))

    # at q=1 the Plain modes carry the Jacobi parameter beta = -m
    config = FluxConfig(1)
    harmonics = [build_families(config, 2, n)[0] for n in range(2, 5)]
    harmonics += [build_families(config, 2, n)[1] for n in range(3)]
    worst = max(
        abs(hermiticity_defect(e1, e2))
        for i, e1 in enumerate(harmonics)
        for e2 in harmonics[i:]
    )
    results.append(
        _result("hermiticity", "integer_flux_harmonic_defect", worst, 1e-9)
    )
    return results


def check_index() -> list[CheckResult]:
    """Witten index equals the flux for q = -3, ..., 3."""
    deviation = 0
    for q in range(-3, 4):
        deviation += abs(witten_index(q) - q) + abs(round(flux_integral(q)) - q)
    return [_result("index", "witten_index", deviation, 0)]


def check_pairing() -> list[CheckResult]:
    """Every excited level below 30 pairs across the sectors at q = 1, 2, 3."""
    unpaired = 0
    worst = 0.0
    z = gauss_jacobi_rule(16).nodes
    for q in (1, 2, 3):
        report = pairing_report(q, HilbertPolicy.BUNDLE_SECTIONS, lambda_cutoff=30)
        unpaired += len(report.unpaired_excited)
        for pair in report.pairs:
            image = radial_part(apply_Q(pair.f0), z)
            partner = radial_part(pair.f1, z)
            ratio = np.vdot(partner, image) / np.vdot(partner, partner)
            residual = np.max(np.abs(image - ratio * partner)) / np.max(np.abs(image))
            worst = max(worst, float(residual))
    return [
        _result("pairing", "unpaired_excited", unpaired, 0),
        _result("pairing", "proportional_images", worst, 1e-9),
    ]


def check_breaking() -> list[CheckResult]:
    """A mode without superpartner exists under every policy at fractional flux."""
    missing = 0
    for q in ("0.3", "1/2", "1.5", "2.7"):
        witnesses = susy_breaking_witness(q)
        for w in witnesses:
            if w.policy.admits(w.image) or not w.policy.admits(w.entry):
                missing += 1
        missing += 2 - len(witnesses)
    return [_result("breaking", "witnesses", missing, 0)]


def check_counterexamples() -> list[CheckResult]:
    """Singular ground states of the S^3 Laplacian and of Witten's model."""
    suite = "counterexamples"
    s3 = s3_laplacian_check()
    results = [
        _result(suite, "s3_eigenvalue", abs(s3.eigenvalue - S3_EIGENVALUE), 1e-6),
        # the overlap and defect must not vanish
        _result(suite, "s3_overlap", 1 / abs(s3.overlap), 1),
        _result(suite, "s3_defect", 1 / abs(s3.defect), 1),
    ]
    for omega in (1.0, 2.5):
        report = witten_sqm_check(omega)
        results.append(
            _result(
                suite,
                f"witten_ground_energy_{omega:g}",
                abs(report.ground_energy + omega) / omega,
                1e-6,
            )
        )
        results.append(
            _result(
                suite,
                f"witten_restricted_energy_{omega:g}",
                abs(report.restricted_ground_energy),
                1e-6,
            )
        )
    return results


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "jacobi": check_jacobi,
    "quadrature": check_quadrature,
    "modes": check_modes,
    "oracle": check_oracle,
    "algebra": check_algebra,
    "hermiticity": check_hermiticity,
    "index": check_index,
    "pairing": check_pairing,
    "breaking": check_breaking,
    "counterexamples": check_counterexamples,
}

# alternative names accepted by run_suites
SUITE_ALIASES = {"footnotes": "counterexamples"}


def run_suites(names=("all",)) -> list[CheckResult]:
    """Run the named suites, "all" runs every suite.

    Names of `SUITE_ALIASES` run the suite they map to.

    Raises
    ------
    ValueError
        For an unknown suite name.
    """
    if isinstance(names, str):
        names = (names,)
    selected = []
    for name in names:
        resolved = SUITE_ALIASES.get(name, name)
        if resolved == "all":
            selected.extend(SUITES)
        elif resolved in SUITES:
            selected.append(resolved)
        else:
            choices = ["all", *SUITES, *SUITE_ALIASES]
            msg = f"Unknown check suite {name}, choose from {choices}."
            raise ValueError(msg)
    results = []
    for name in dict.fromkeys(selected):
        logger.info("Running check suite %s.", name)
        suite_results = SUITES[name]()
        logger.info(
            "Suite %s: %d of %d passed.",
            name,
            sum(r.passed for r in suite_results),
            len(suite_results),
        )
        results.extend(suite_results)
    return results
