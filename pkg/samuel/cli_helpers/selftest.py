"""
Acceptance catalog behind `samuel selftest`: the worked examples, the span identities of the
small e_1 family and randomized property suites over monomial ideals.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from datadiff import diff
from tabulate import tabulate
from termcolor import colored

from samuel.core import local_ring
from samuel.core.classifier import ProfileBundle, classify
from samuel.core.exceptions import ReductionNotVerified, SamuelError
from samuel.core.glue import analyze_problem
from samuel.core.hilbert import binomial, compute_hilbert_profile
from samuel.core.local_ring import LocalRingSpec
from samuel.core.monomials import Exponents, MonomialIdeal, ideal_minimalize
from samuel.core.polynomials import Polynomial
from samuel.core.problems import quartic_example, small_e1_family
from samuel.core.sally import compute_sally_profile, northcott_narita_check, sally_consistency, verify_reduction
from samuel.core.settings import Settings
from samuel.core.staircase import colength, colength_bruteforce
from samuel.engines.local_engine import LocalEngine
from samuel.engines.monomial_engine import MonomialEngine

FULL_COUNTS = {'staircase': 200, 'cross_engine': 50, 'reduction': 100}
QUICK_COUNTS = {'staircase': 20, 'cross_engine': 5, 'reduction': 10}

SMALL_E1_CASES = [(1, 1, ()), (2, 2, ()), (3, 2, (3,))]
SPAN_IDENTITY_CASES = [(2, 2), (3, 2)]


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    predicted: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.predicted == self.observed


def check(group: str, name: str, predicted: Any, observed: Any) -> CheckResult:
    return CheckResult(group=group, name=name, predicted=predicted, observed=observed)


def quartic_example_checks(m: int) -> Iterator[CheckResult]:
    group = f'quartic example m={m}'
    report = analyze_problem(quartic_example(m))
    d = m + 2
    yield check(group, 'e', {0: [16, 6, 0], 1: [16, 6, 0, -1], 2: [16, 6, 0, -1, 0]}[m], report.hilbert.e)
    yield check(group, 'r_Q(I)', 2, report.sally.r)
    yield check(group, 'l(I^3/Q^2I)', 2 * d - 1, report.lengths.I3_mod_Q2I)
    if m == 0:
        lengths = report.lengths
        yield check(group, 'l(A/Q), l(A/I), l(I^2/QI)', [16, 11, 2],
                    [lengths.A_mod_Q, lengths.A_mod_I, lengths.I2_mod_QI])
        yield check(group, 'mI^2 in QI', True, report.containments.m_I2_in_QI)
        yield check(group, 'postulation number', 1, report.hilbert.postulation)
        yield check(group, 'H(n) = 16 C(n+2,2) - 6(n+1) for 1 <= n <= 10',
                    [16 * binomial(n + 2, 2) - 6 * (n + 1) for n in range(1, 11)], report.hilbert.table[1:11])
        rr = report.sally.rr
        yield check(group, 'Ratliff-Rush closure', (['X^2*Y^2'], 1, True),
                    (rr.generators_added, rr.delta_length, rr.tilde_square_eq_Q_tilde))
    else:
        yield check(group, 'postulation number', 0, report.hilbert.postulation)
        entry = next(e for e in report.classification.entries if e.id == 'sally_length_two')
        yield check(group, 'Sally length two condition holds', True, entry.applicable)
    yield check(group, 'classification', 'PASS', report.classification.status)


def small_e1_checks(m: int, d: int, lam: Sequence[int]) -> Iterator[CheckResult]:
    group = f'small e_1 family m={m} d={d} lambda={set(lam) or "{}"}'
    report = analyze_problem(small_e1_family(m, d, list(lam)))
    lengths = report.lengths
    yield check(group, 'l(A/Q), l(A/I), l(I^2/QI)', [m + 2, m - len(lam) + 1, 1],
                [lengths.A_mod_Q, lengths.A_mod_I, lengths.I2_mod_QI])
    yield check(group, 'r_Q(I)', 2, report.sally.r)
    yield check(group, 'e_0, e_1', [m + 2, len(lam) + 2], report.hilbert.e[:2])
    if d == 2:
        yield check(group, 'e_2', 1, report.hilbert.e[2])
    if not lam:
        entry = next(e for e in report.classification.entries if e.id == 'e1_equals_2')
        yield check(group, 'e_1 = 2 branch', (True, []),
                    (entry.applicable, [p.name for p in entry.predictions if p.match is False]))
    if (m, d) == (1, 1):
        yield check(group, 'l(Ĩ/I)', 1, report.sally.rr.delta_length)
    yield check(group, 'classification', 'PASS', report.classification.status)


def span_identity_checks(m: int, d: int, order: Optional[int] = None) -> Iterator[CheckResult]:
    """Identities among m, Q and I in the small e_1 family, compared as graded spans below the order"""
    group = f'span identities m={m} d={d}'
    problem = small_e1_family(m, d).parsed()
    ring = LocalRingSpec(vars=problem.names, char=problem.char, relations=problem.relations)
    order = order or d + 5
    p = problem.char

    def span(gens):
        return local_ring.build_truncated(ring, gens, order, graded=True)

    def product(a, b):
        return local_ring.ideal_product_local(a, b)

    def power(a, n):
        result = [Polynomial.constant(ring.nvars, p)]
        for _ in range(n):
            result = product(result, a)
        return result

    def same(a, b) -> bool:
        return local_ring.equal_truncated(span(a), span(b))

    def intersect_equals(a, b, c) -> bool:
        return local_ring.equal_truncated(local_ring.ideal_intersect_local(span(a), span(b), exact=False), span(c))

    I, Q = list(problem.I), list(problem.Q)
    maximal = [Polynomial.variable(ring.nvars, p, i) for i in range(ring.nvars)]
    v = Polynomial.variable(ring.nvars, p, problem.names.index('V'))
    QI = product(Q, I)
    yield check(group, 'm^2 = Qm', True, same(power(maximal, 2), product(Q, maximal)))
    yield check(group, 'I^2 = QI + (v^2)', True, same(power(I, 2), QI + [v * v]))
    yield check(group, 'I^2 != QI', False, same(power(I, 2), QI))
    yield check(group, 'I^3 = QI^2', True, same(power(I, 3), product(Q, power(I, 2))))
    for i in range(d):
        Qi = Q[:i] + Q[i + 1:]
        if Qi:
            yield check(group, f'Q_{i + 1} ∩ I^2 = Q_{i + 1} I', True, intersect_equals(Qi, power(I, 2), product(Qi, I)))
    for size in range(1, d):
        for gamma in itertools.combinations(range(d), size):
            Qg = [Q[a] for a in gamma]
            for n in (2, 3):
                yield check(group, f'Q_Γ ∩ I^{n} = Q_Γ I^{n - 1} for Γ = {[a + 1 for a in gamma]}', True,
                            intersect_equals(Qg, power(I, n), product(Qg, power(I, n - 1))))
    squares = [a * a for a in Q]
    for n in range(3, d + 2):
        yield check(group, f'(a_i^2) ∩ I^{n} = (a_i^2) I^{n - 2}', True,
                    intersect_equals(squares, power(I, n), product(squares, power(I, n - 2))))


def random_m_primary(rng: random.Random, nvars: int, max_exponent: int = 5, extra: int = 4) -> MonomialIdeal:
    bounds = [rng.randint(1, max_exponent) for _ in range(nvars)]
    gens = [tuple(b if i == j else 0 for j in range(nvars)) for i, b in enumerate(bounds)]
    for _ in range(rng.randint(0, extra)):
        gens.append(tuple(rng.randint(0, b) for b in bounds))
    gens = [g for g in gens if any(g)]
    return ideal_minimalize(gens, nvars)


def random_reduction_pair(rng: random.Random, nvars: int, max_exponent: int = 4,
                          extra: int = 3) -> Tuple[List[Exponents], List[Exponents]]:
    """Q = (X_1^a_1, ..., X_n^a_n) and I = Q + monomials with sum u_i / a_i >= 1, which are integral over Q"""
    a = [rng.randint(2, max_exponent) for _ in range(nvars)]
    q = [tuple(a[i] if i == j else 0 for j in range(nvars)) for i in range(nvars)]
    extras = []
    for _ in range(rng.randint(1, extra)):
        u = tuple(rng.randint(0, a[i] - 1) for i in range(nvars))
        if sum(u[i] / a[i] for i in range(nvars)) >= 1:
            extras.append(u)
    return q + extras, q


def staircase_suite(rng: random.Random, count: int) -> Iterator[CheckResult]:
    mismatches = []
    for _ in range(count):
        j = random_m_primary(rng, rng.randint(1, 3))
        fast, slow = colength(j).value, colength_bruteforce(j)
        if fast != slow:
            mismatches.append({'gens': [g.exps for g in j.gens], 'staircase': fast, 'box': slow})
    yield check('staircase colength', f'{count} random ideals agree with the box count', [], mismatches)


def cross_engine_suite(rng: random.Random, count: int) -> Iterator[CheckResult]:
    """Colengths of powers and colons on both engines; colons by X1 also go through the stability check"""
    mismatches = []
    for _ in range(count):
        nvars = rng.randint(1, 3)
        names = [f'X{i}' for i in range(1, nvars + 1)]
        j = random_m_primary(rng, nvars, max_exponent=3, extra=2)
        gens = [Polynomial.monomial(g.exps, Settings.prime) for g in j.gens]
        x1 = Polynomial.variable(nvars, Settings.prime, 0)
        ring = LocalRingSpec(vars=tuple(names), char=Settings.prime)
        monomial_engine = MonomialEngine(names)
        local_engine = LocalEngine(ring, dimension=nvars)
        observed = []
        for engine in (monomial_engine, local_engine):
            I = engine.ideal(gens)
            I2 = engine.power(I, 2)
            observed.append([engine.colength(engine.power(I, k)) for k in (1, 2, 3)] + [
                engine.colength(engine.colon(I2, engine.maximal_ideal())),
                engine.colength(engine.colon(I2, I)),
                engine.colength(engine.colon(I2, engine.ideal([x1]))),
            ])
        # I2 is the local square left by the loop
        stabilized = local_ring.ideal_colon_local(ring, list(I2.gens), x1)
        if observed[0] != observed[1] or not stabilized.stable or stabilized.colength != observed[0][-1]:
            mismatches.append({
                'gens': [g.exps for g in j.gens], 'monomial': observed[0], 'local': observed[1],
                'stabilized colon': (stabilized.colength, stabilized.stable),
            })
    yield check('cross engine', f'{count} random ideals agree on both engines', [], mismatches)


def reduction_suite(rng: random.Random, count: int, max_attempts: Optional[int] = None) -> Iterator[CheckResult]:
    """Numeric identities and the classifier on random pairs with a verified reduction"""
    max_attempts = max_attempts or 20 * count
    failures = []
    verified = 0
    attempts = 0
    while verified < count and attempts < max_attempts:
        attempts += 1
        nvars = rng.randint(2, 3)
        names = [f'X{i}' for i in range(1, nvars + 1)]
        i_gens, q_gens = random_reduction_pair(rng, nvars)
        engine = MonomialEngine(names)
        I, Q = (engine.ideal([Polynomial.monomial(exps, 0) for exps in gens]) for gens in (i_gens, q_gens))
        try:
            verify_reduction(engine, I, Q)
        except ReductionNotVerified:
            continue
        verified += 1
        try:
            hilbert = compute_hilbert_profile(engine, I)
            sally = compute_sally_profile(engine, I, Q, hilbert, with_ratliff_rush=False)
            northcott_narita_check(hilbert, sally.key, sally.r, sally.lengths)
            sally_consistency(hilbert, sally)
            I2 = engine.power(I, 2)
            bundle = ProfileBundle(
                hilbert=hilbert,
                sally=sally,
                m_I2_in_QI=engine.contains(engine.product(Q, I), engine.product(engine.maximal_ideal(), I2)),
                Q_contains_I2=engine.contains(Q, I2),
            )
            report = classify(bundle)
            for entry_id, prediction in report.failed_predictions:
                failures.append({'I': engine.generators(I), 'entry': entry_id, 'prediction': prediction.name})
        except SamuelError as e:
            failures.append({'I': engine.generators(I), 'error': f'{type(e).__name__}: {e}'})
    yield check('reduction pairs', 'verified instances', count, verified)
    yield check('reduction pairs', 'identities and classifier predictions hold', [], failures)


def catalog(seed: int = 0, quick: bool = False) -> List[Tuple[str, Callable[[], Iterator[CheckResult]]]]:
    counts = QUICK_COUNTS if quick else FULL_COUNTS
    entries = [(f'quartic example m={m}', lambda m=m: quartic_example_checks(m)) for m in (0, 1, 2)]
    entries += [(f'small e_1 family {case}', lambda case=case: small_e1_checks(*case)) for case in SMALL_E1_CASES]
    entries += [(f'span identities {case}', lambda case=case: span_identity_checks(*case))
                for case in SPAN_IDENTITY_CASES]
    entries += [
        ('staircase suite', lambda: staircase_suite(random.Random(seed), counts['staircase'])),
        ('cross engine suite', lambda: cross_engine_suite(random.Random(seed + 1), counts['cross_engine'])),
        ('reduction suite', lambda: reduction_suite(random.Random(seed + 2), counts['reduction'])),
    ]
    return entries


def run_catalog(seed: int = 0, quick: bool = False) -> List[CheckResult]:
    results = []
    for name, run in catalog(seed, quick):
        logging.info(f'Running {name}')
        try:
            results.extend(run())
        except SamuelError as e:
            results.append(check(name, 'runs without error', None, f'{type(e).__name__}: {e}'))
    return results


def describe_failure(result: CheckResult) -> str:
    diffable = (list, tuple, dict)
    if isinstance(result.predicted, diffable) and type(result.predicted) == type(result.observed):
        return str(diff(result.predicted, result.observed, fromfile='predicted', tofile='observed'))
    return f'Expected {result.predicted!r} but found {result.observed!r}'


def print_results(results: Sequence[CheckResult]):
    table_body = [
        [r.group, r.name, colored('ok', 'green') if r.passed else colored('FAILED', 'red')]
        for r in results
    ]
    print(tabulate(table_body, ['group', 'check', 'status'], 'plain'))
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(colored(f'Failed check "{r.name}" in {r.group}', 'red'))
        print(describe_failure(r))
    if failed:
        print(colored(f'{len(failed)} checks failed', 'red'))
    print(colored(f'{len(results) - len(failed)} checks passed', 'green'))
