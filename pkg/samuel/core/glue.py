"""Stitches problems, engines, profiles and the classifier together. Most side effects (logging,
engine caches) happen here so the other modules stay deterministic.
"""
import logging
from typing import Optional, Tuple

from samuel.core.classifier import ProfileBundle, classify
from samuel.core.exceptions import NoPolynomialTail
from samuel.core.hilbert import HilbertProfile, compute_hilbert_profile
from samuel.core.problems import Options, ParsedProblem, ProblemSpec
from samuel.core.reports import (ContainmentsReport, HilbertOnlyReport, HilbertReport, ProfileReport,
                                 lengths_report, sally_report)
from samuel.core.sally import SallyProfile, compute_sally_profile, northcott_narita_check, sally_consistency
from samuel.core.settings import Settings
from samuel.engines.engine_factory import get_engine
from samuel.engines.engine_interface import IdealEngine


def with_prime(spec: ProblemSpec, prime: Optional[int]) -> ProblemSpec:
    if prime is None:
        return spec
    options = Options(**{**spec.options.dict(), 'prime': prime})
    return spec.copy(update={'options': options})


def load_engine(spec: ProblemSpec) -> Tuple[ParsedProblem, IdealEngine]:
    problem = spec.parsed()
    engine = get_engine(problem)
    logging.info(f'Using the {engine.kind} engine for {spec.name or "problem"}')
    return problem, engine


def _n_max(spec: ProblemSpec) -> int:
    return spec.options.n_max if spec.options.n_max is not None else Settings.default_n_max(spec.d)


def hilbert_only(spec: ProblemSpec, n_max: Optional[int] = None) -> HilbertOnlyReport:
    problem, engine = load_engine(spec)
    I = engine.ideal(problem.I)
    profile = compute_hilbert_profile(engine, I, n_max or _n_max(spec))
    return HilbertOnlyReport(spec_echo=spec.dict(), engine=engine.kind, hilbert=HilbertReport.from_profile(profile))


def closure_coefficients(engine: IdealEngine, sally: SallyProfile, hilbert: HilbertProfile,
                         n_max: int) -> Optional[Tuple[int, ...]]:
    if sally.rr is None or not sally.rr.stabilized:
        return None
    if sally.rr.delta_length == 0:
        return hilbert.e
    try:
        return compute_hilbert_profile(engine, sally.rr.closure, n_max).e
    except NoPolynomialTail as e:
        logging.warning(f'Could not fit the Hilbert polynomial of the Ratliff-Rush closure: {e}')
        return None


def analyze_problem(spec: ProblemSpec, with_classification: bool = True) -> ProfileReport:
    """Full profile of a problem. Raises TheoremViolation when a proved numeric identity fails on the
    computed data and, with classification, when the dimension two case split is contradicted"""
    options = spec.options
    n_max = _n_max(spec)
    problem, engine = load_engine(spec)
    I = engine.ideal(problem.I)
    Q = engine.ideal(problem.Q)

    hilbert = compute_hilbert_profile(engine, I, n_max)
    sally = compute_sally_profile(
        engine, I, Q, hilbert,
        n_max=n_max,
        r_max=options.r_max if options.r_max is not None else Settings.r_max,
        stab_window=options.stab_window or Settings.stab_window,
    )
    northcott_narita_check(hilbert, sally.key, sally.r, sally.lengths)
    sally_consistency(hilbert, sally)

    I2 = engine.power(I, 2)
    QI = engine.product(Q, I)
    m_I2_in_QI = engine.contains(QI, engine.product(engine.maximal_ideal(), I2))
    Q_contains_I2 = engine.contains(Q, I2)
    closure_e = closure_coefficients(engine, sally, hilbert, n_max) if with_classification else None

    classification = None
    if with_classification:
        bundle = ProfileBundle(
            hilbert=hilbert, sally=sally, m_I2_in_QI=m_I2_in_QI, Q_contains_I2=Q_contains_I2, closure_e=closure_e,
        )
        classification = classify(bundle)
        logging.info(f'Classification status {classification.status}')

    return ProfileReport(
        spec_echo=spec.dict(),
        engine=engine.kind,
        lengths=lengths_report(sally),
        hilbert=HilbertReport.from_profile(hilbert),
        sally=sally_report(sally, list(closure_e) if closure_e is not None else None),
        containments=ContainmentsReport(m_I2_in_QI=m_I2_in_QI, Q_contains_I2=Q_contains_I2),
        classification=classification,
    )
