# src/services/verify_service.py
"""
Verification campaigns: every closed formula is compared with the brute-force oracle on
seeded random witnesses, and the proof ingredients are checked as ideal identities.
"""
import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from src import __version__
from src.exceptions import CertificationExhausted, GorensteinError, InputError
from src.models.field import PrimeField
from src.models.polynomial import SparsePolynomial
from src.models.witness import CIWitness
from src.schemas.chi import ChiOracle
from src.schemas.report import CampaignReport, Comparison, ErrorRecord, TrialReport
from src.schemas.run_config import RunConfig
from src.services.cycle_service import (
    antisym_family,
    fiber_tangent_dim,
    jacobian_containment,
    residual,
    residual_report,
)
from src.services.gorenstein_service import (
    colon_degree,
    contains_forms,
    enlargement_socle_dim,
    gorenstein_check,
    matches_ideal,
    recover_ideal,
)
from src.services.graded_service import graded_span
from src.services.koszul_service import (
    ci_hilbert,
    ci_scheme_dim,
    ci_scheme_dim_inductive,
    hilbert_diff,
    locus_codim,
    socle_degree,
)
from src.services.witness_service import brute_hilbert, random_forms, random_witness, smoothness_check


class _Recorder:
    """Collects the comparisons of one family on one witness."""

    def __init__(self, family: str, inputs: Dict[str, Any]) -> None:
        self.family = family
        self.inputs = inputs
        self.comparisons: List[Comparison] = []

    def equal(
        self, check: str, operation: str, expected: int, observed: int, inputs: Optional[Dict[str, Any]] = None
    ) -> None:
        self.comparisons.append(
            Comparison(
                family=self.family,
                check=check,
                operation=operation,
                inputs={**self.inputs, **(inputs or {})},
                expected=int(expected),
                observed=int(observed),
                passed=int(expected) == int(observed),
            )
        )

    def holds(self, check: str, operation: str, observed: bool, inputs: Optional[Dict[str, Any]] = None) -> None:
        self.equal(check, operation, 1, int(observed), inputs)


def trial_seed(seed: int, degrees: List[int], e: int, trial: int) -> int:
    """Seed of one trial, derived from the campaign seed, the profile and the trial index."""
    return int(np.random.SeedSequence([seed, e, trial, *degrees]).generate_state(1)[0])


def _formula_oracle(record: _Recorder, witness: CIWitness, chi: ChiOracle) -> None:
    assert witness.e is not None
    profile = witness.profile
    e, d, field, n = witness.e, profile.degrees, witness.field, witness.n_vars
    full = profile.full_degrees
    gens = witness.generators
    for m in range(socle_degree(n, full) + 2):
        expected = ci_hilbert(chi, full, m)
        record.equal(f"h_full({m})", "ci_hilbert", expected, brute_hilbert(gens, m, field, n), {"m": m})
    for m in range(e + 1):
        expected = ci_hilbert(chi, d, m)
        record.equal(f"h_cycle({m})", "ci_hilbert", expected, brute_hilbert(witness.P, m, field, n), {"m": m})
    h_full = brute_hilbert(gens, e, field, n)
    h_cycle = brute_hilbert(witness.P, e, field, n)
    codim = locus_codim(chi, d, e, n)
    cross = ci_hilbert(chi, d, e) + profile.c - ci_scheme_dim(chi, d)
    record.equal("locus_codim", "locus_codim", codim, h_full)
    record.equal("hilbert_diff", "hilbert_diff", hilbert_diff(chi, d, e), h_full - h_cycle)
    record.equal("cross_identity", "locus_codim", codim, cross)
    inductive = ci_scheme_dim_inductive(chi, d)
    record.equal("scheme_dim_inductive", "ci_scheme_dim_inductive", ci_scheme_dim(chi, d), inductive)


def _gorenstein(record: _Recorder, witness: CIWitness) -> None:
    assert witness.e is not None
    n = witness.n_vars
    try:
        report = gorenstein_check(witness.generators, witness.field, n)
    except GorensteinError as error:
        logging.warning(f"{witness!r}: {error.detail}")
        record.holds("gorenstein", "gorenstein_check", False)
        return
    record.equal("socle", "socle_degree", socle_degree(n, witness.profile.full_degrees), report.socle)
    record.equal("socle_dim", "gorenstein_check", 1, report.dims[report.socle])
    for i in range(report.socle + 1):
        record.equal(f"symmetry({i})", "gorenstein_check", report.dims[report.socle - i], report.dims[i])
    for i, rank in enumerate(report.pairing_ranks):
        record.equal(f"pairing_rank({i})", "pairing_ranks", report.dims[i], rank)


def _recovery(record: _Recorder, witness: CIWitness) -> None:
    assert witness.e is not None and witness.Q is not None
    field, n, e = witness.field, witness.n_vars, witness.e
    gens = witness.generators
    socle = socle_degree(n, witness.profile.full_degrees)
    V = graded_span(gens, socle, field, n)
    record.equal("base_point_free", "graded_span", 0, graded_span(V.polynomials(), socle + 1, field, n).codimension)
    try:
        recovered = recover_ideal(V)
    except InputError as error:
        logging.warning(f"{witness!r}: {error.detail}")
        record.holds("recover_ideal", "recover_ideal", False)
        return
    for k in range(socle + 1):
        source = graded_span(gens, k, field, n)
        record.equal(f"dim({k})", "recover_ideal", source.codimension, recovered.dims[k])
    record.holds("fixed_point", "matches_ideal", matches_ideal(recovered, gens, field, n))
    for label, forms in (("P", list(witness.P)), ("Q", list(witness.Q))):
        for i, member in enumerate(contains_forms(recovered, forms), start=1):
            record.holds(f"{label}{i}_in_I", "recover_ideal", member)
    cycle_piece = graded_span(witness.P, e, field, n)
    record.holds("cycle_ideal_in_I_e", "recover_ideal", recovered.piece(e).contains_space(cycle_piece))
    outside = recovered.piece(1).standard_monomials() if socle >= 1 else []
    if outside:
        # g is linear and not in I
        g = SparsePolynomial.monomial(field, outside[0])
        record.equal("colon_socle", "colon_degree", 1, colon_degree(gens, g, socle - 1, field, n).codimension)
        record.equal("enlargement", "enlargement_socle_dim", 0, enlargement_socle_dim(gens, g, field, n))


def _residual(record: _Recorder, witness: CIWitness) -> None:
    for i in range(1, len(witness.P) + 1):
        report = residual_report(witness, i)
        record.holds(f"identity({i})", "residual", report.identity_preserved, {"index": i})
        record.holds(f"class_identity({i})", "residual", report.class_identity, {"index": i})
        record.holds(f"involution({i})", "residual", residual(residual(witness, i), i) == witness, {"index": i})


def _fiber(record: _Recorder, witness: CIWitness) -> None:
    assert witness.e is not None
    e, profile = witness.e, witness.profile
    record.equal("fiber_tangent_dim", "fiber_tangent_dim", profile.c, fiber_tangent_dim(witness))
    a = profile.a
    if a < 2:
        return
    spans = []
    for t in (1, 2):
        M = [[0] * a for _ in range(a)]
        M[0][1], M[1][0] = t, -t
        deformed = antisym_family(witness, M)
        record.holds(f"antisym_identity(t={t})", "antisym_family", deformed.satisfies_identity(), {"t": t})
        spans.append(graded_span(deformed.P, e // 2, witness.field, witness.n_vars))
    record.holds("antisym_distinct", "antisym_family", spans[0] != spans[1])


def _jacobian(record: _Recorder, witness: CIWitness) -> None:
    for j, member in enumerate(jacobian_containment(witness).memberships):
        record.holds(f"dF/dx{j}", "jacobian_containment", member)


def verify_witness(
    witness: CIWitness, chi: Optional[ChiOracle] = None, check_smooth: bool = False
) -> List[Comparison]:
    """
    Run every invariant family on one witness with cofactors.

    Parameters:
        - witness (CIWitness): A certified witness with P, Q and F.
        - chi (Optional[ChiOracle]): Projective chi of the ring; built from n_vars by default.
        - check_smooth (bool): Also run the slow Jacobian smoothness test.

    Returns:
        List[Comparison]: Every compared pair, in family order.

    Raises:
        InputError: If the witness has no cofactors.
    """
    if witness.Q is None or witness.F is None or witness.e is None:
        raise InputError("verification needs a witness with cofactors Q and hypersurface F")
    chi_oracle = chi or ChiOracle.projective(witness.n_vars)
    inputs = {"degrees": witness.degrees, "e": witness.e}
    families: List[Tuple[str, Callable[[_Recorder], None]]] = [
        ("formula_oracle", lambda record: _formula_oracle(record, witness, chi_oracle)),
        ("gorenstein", lambda record: _gorenstein(record, witness)),
        ("recovery", lambda record: _recovery(record, witness)),
        ("residual", lambda record: _residual(record, witness)),
        ("fiber", lambda record: _fiber(record, witness)),
        ("jacobian", lambda record: _jacobian(record, witness)),
    ]
    comparisons: List[Comparison] = []
    for family, check in families:
        record = _Recorder(family, inputs)
        check(record)
        comparisons.extend(record.comparisons)
    if check_smooth:
        record = _Recorder("smoothness", inputs)
        record.holds("smooth", "smoothness_check", smoothness_check(witness))
        comparisons.extend(record.comparisons)
    return comparisons


def witness_fingerprint(witness: CIWitness) -> Optional[str]:
    """Short digest of the terms of F; None for a witness without F."""
    if witness.F is None:
        return None
    terms = [(monomial.exponents, coefficient) for monomial, coefficient in witness.F.items()]
    return hashlib.sha256(repr((witness.field.p, witness.n_vars, terms)).encode()).hexdigest()[:16]


def duplicate_witnesses(trials: List[TrialReport]) -> List[Tuple[int, int]]:
    """Pairs (first, later) of positions in trials whose witnesses for the same profile coincide."""
    seen: Dict[Tuple[Tuple[int, ...], int, str], int] = {}
    pairs: List[Tuple[int, int]] = []
    for position, trial in enumerate(trials):
        if trial.fingerprint is None:
            continue
        key = (tuple(trial.degrees), trial.e, trial.fingerprint)
        if key in seen:
            pairs.append((seen[key], position))
        else:
            seen[key] = position
    return pairs


def sabotage_witness(witness: CIWitness, seed: int) -> CIWitness:
    """Perturb F by a random form of degree e, keeping P and Q."""
    assert witness.F is not None and witness.e is not None
    noise_seed = int(np.random.SeedSequence([seed, 1]).generate_state(1)[0])
    (noise,) = random_forms(noise_seed, witness.n_vars, [witness.e], witness.field)
    return replace(witness, F=witness.F + noise)


def run_trial(config: RunConfig, degrees: List[int], e: int, trial: int) -> TrialReport:
    """Draw one witness and verify it; certification exhaustion is recorded, not raised."""
    seed = trial_seed(config.seed, degrees, e, trial)
    field = PrimeField(config.prime)
    try:
        witness = random_witness(field, config.n_vars, degrees, seed, e=e, max_attempts=config.max_attempts)
    except CertificationExhausted as error:
        logging.error(f"trial {trial} for {degrees}, e={e}: {error.detail}")
        return TrialReport(degrees=degrees, e=e, trial=trial, seed=seed, error=ErrorRecord(**error.to_record()))
    fingerprint = witness_fingerprint(witness)
    if config.sabotage:
        witness = sabotage_witness(witness, seed)
    comparisons = verify_witness(witness, ChiOracle.projective(config.n_vars), config.check_smooth)
    report = TrialReport(
        degrees=degrees,
        e=e,
        trial=trial,
        seed=seed,
        certificate=witness.certificate,
        comparisons=comparisons,
        fingerprint=fingerprint,
    )
    if report.failures:
        logging.warning(f"trial {trial} for {degrees}, e={e}: {len(report.failures)} failed check(s)")
    return report


def run_campaign(config: RunConfig) -> CampaignReport:
    """
    Verify config.trials witnesses for every e in the range.

    Trials run on config.workers threads; the report is ordered by (e, trial index) whatever
    the completion order.

    Raises:
        InputError: If a chi table is configured, the variable count does not fit a cycle of
            the given codimension, or a degree is out of range for some e.
    """
    if config.chi_table is not None:
        raise InputError("the brute-force oracle needs the projective chi; drop --chi-table for verify")
    if config.n_vars != 2 * len(config.degrees):
        raise InputError(f"{len(config.degrees)} degrees need {2 * len(config.degrees)} variables, got {config.n_vars}")
    jobs: List[Tuple[List[int], int, int]] = [
        (config.profile(e).degrees, e, trial) for e in config.e_values() for trial in range(config.trials)
    ]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        trials = list(pool.map(lambda job: run_trial(config, *job), jobs))
    for first, later in duplicate_witnesses(trials):
        logging.warning(
            f"identical witnesses for {trials[later].degrees}, e={trials[later].e}: "
            f"trials {trials[first].trial} and {trials[later].trial} (seeds {trials[first].seed}, {trials[later].seed})"
        )
    failures = sum(len(trial.failures) for trial in trials)
    return CampaignReport(config=config.model_dump(mode="json"), trials=trials, failures=failures, version=__version__)


def campaign_exit_status(report: CampaignReport) -> int:
    """0 when every check passed, 1 on any invariant failure, otherwise 3 on certification exhaustion."""
    if report.failures:
        return 1
    if any(trial.error is not None for trial in report.trials):
        return 3
    return 0
