"""
Sally-module lengths ℓ(S_n) = ℓ(I^(n+1)/Q^n I), the reduction number r_Q(I), the
Ratliff-Rush closure and the numeric identities tying them to the Hilbert coefficients.
"""
import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from samuel.core.exceptions import ReductionNotVerified, TheoremViolation
from samuel.core.hilbert import HilbertProfile, binomial
from samuel.core.settings import Settings

POWER_CHAIN = 'I^(n+1) : I^n'
PARAMETER_CHAIN = 'I^(n+1) : (a_1^n, ..., a_d^n)'


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    detail: str = ''


def enforce(checks: Sequence[Check]) -> List[Check]:
    failed = [c for c in checks if not c.holds]
    if failed:
        raise TheoremViolation('; '.join(f'{c.name} ({c.detail})' if c.detail else c.name for c in failed))
    return list(checks)


@dataclass(frozen=True)
class KeyLengths:
    A_mod_I: int
    A_mod_Q: int
    I_mod_Q: int
    I2_mod_QI: int
    I3_mod_Q2I: int


@dataclass(frozen=True)
class RatliffRushResult:
    closure: Any
    generators_added: Tuple[str, ...]
    delta_length: int
    stabilized: bool
    stabilized_at: Optional[int]
    first_stable: Optional[str]
    formulas_agree: bool
    tilde_square_eq_Q_tilde: bool
    heuristic: bool = True


@dataclass(frozen=True)
class SallyProfile:
    lengths: Tuple[int, ...]
    qni_colengths: Tuple[int, ...]
    r: int
    key: KeyLengths
    rank_proxy: Optional[int] = None
    mu_proxy: Optional[int] = None
    rr: Optional[RatliffRushResult] = None

    def length(self, n: int) -> int:
        """ℓ(S_n); S_0 = 0"""
        return 0 if n == 0 else self.lengths[n - 1]


def verify_reduction(engine, I, Q, r_max: Optional[int] = None) -> Tuple[bool, int]:
    r_max = r_max if r_max is not None else Settings.r_max
    if engine.generator_count(Q) != engine.dimension:
        raise ReductionNotVerified(
            f'Q has {engine.generator_count(Q)} generators but the ring has dimension {engine.dimension}'
        )
    if not engine.contains(I, Q):
        raise ReductionNotVerified('Q is not contained in I')
    for n in range(r_max + 1):
        if engine.equal(engine.power(I, n + 1), engine.product(Q, engine.power(I, n))):
            if not engine.equal(engine.power(I, n + 2), engine.product(Q, engine.power(I, n + 1))):
                raise ReductionNotVerified(f'I^{n + 1} = Q I^{n} but the next power disagrees')
            return True, n
    raise ReductionNotVerified(f'Not verified as a reduction within bound r_max = {r_max}')


def sally_lengths(engine, I, Q, n_max: int) -> Tuple[List[int], List[int]]:
    """ℓ(S_n) for 1 <= n <= n_max, and ℓ(A/Q^n I) for 0 <= n <= n_max"""
    lengths = []
    qni = I
    qni_colengths = [engine.colength(I)]
    for n in range(1, n_max + 1):
        qni = engine.product(Q, qni)
        qni_colengths.append(engine.colength(qni))
        lengths.append(engine.quotient_length(engine.power(I, n + 1), qni))
    return lengths, qni_colengths


def ratliff_rush(engine, I, Q, n_max: int, stab_window: Optional[int] = None) -> RatliffRushResult:
    """Unions of both colon chains; a chain counts as stable once its union repeats for
    stab_window consecutive steps"""
    stab_window = stab_window or Settings.stab_window
    chains = {
        POWER_CHAIN: lambda n: engine.colon(engine.power(I, n + 1), engine.power(I, n)),
        PARAMETER_CHAIN: lambda n: engine.colon(engine.power(I, n + 1), engine.parameter_powers(Q, n)),
    }
    unions = {name: I for name in chains}
    streaks = {name: 0 for name in chains}
    stable_at = {}
    order = []
    for n in range(1, n_max + 1):
        for name, chain in chains.items():
            if name in stable_at:
                continue
            grown = engine.sum(unions[name], chain(n))
            if engine.equal(grown, unions[name]):
                streaks[name] += 1
            else:
                streaks[name] = 0
                unions[name] = grown
            if streaks[name] >= stab_window:
                stable_at[name] = n
                order.append(name)
                logging.info(f'Ratliff-Rush chain {name} stable at n = {n}')
        if len(stable_at) == len(chains):
            break
    first = order[0] if order else None
    closure = unions[first or POWER_CHAIN]
    return RatliffRushResult(
        closure=closure,
        generators_added=tuple(engine.missing_generators(closure, I)),
        delta_length=engine.colength(I) - engine.colength(closure),
        stabilized=bool(order),
        stabilized_at=stable_at.get(first) if first else None,
        first_stable=first,
        formulas_agree=engine.equal(unions[POWER_CHAIN], unions[PARAMETER_CHAIN]),
        tilde_square_eq_Q_tilde=engine.equal(engine.power(closure, 2), engine.product(Q, closure)),
    )


def northcott_narita_check(profile: HilbertProfile, key: KeyLengths, r: int,
                           lengths: Sequence[int]) -> List[Check]:
    d, e = profile.d, profile.e
    bound = e[0] - key.A_mod_I
    equality = profile.coefficient(1) == bound
    checks = [
        Check('Northcott inequality e_1 >= e_0 - l(A/I)', profile.coefficient(1) >= bound,
              f'{profile.coefficient(1)} >= {bound}'),
        Check('Northcott equality iff I^2 = QI', equality == (key.I2_mod_QI == 0 and r <= 1),
              f'equality={equality}, l(I^2/QI)={key.I2_mod_QI}, r={r}'),
        Check('S = 0 iff r <= 1', (not any(lengths)) == (r <= 1), f'r={r}'),
        Check('S_n nonzero for all n once S != 0', r <= 1 or all(lengths), f'lengths={list(lengths)}'),
    ]
    if d >= 2:
        checks.append(Check('Narita e_2 >= 0', e[2] >= 0, f'e_2={e[2]}'))
        if equality:
            checks.append(Check('e_i = 0 for 2 <= i <= d when equality holds', all(x == 0 for x in e[2:]),
                                f'e={list(e)}'))
    return enforce(checks)


def sally_consistency(profile: HilbertProfile, sally: SallyProfile) -> List[Check]:
    d, e = profile.d, profile.e
    key = sally.key
    checks = []
    for n in range(min(len(profile.table), len(sally.lengths) + 1)):
        expected = e[0] * binomial(n + d, d) - (e[0] - key.A_mod_I) * binomial(n + d - 1, d - 1) - sally.length(n)
        checks.append(Check(f'length identity at n={n}', profile.table[n] == expected,
                            f'H({n})={profile.table[n]}, identity gives {expected}'))
    for n, value in enumerate(sally.qni_colengths):
        expected = e[0] * binomial(n + d - 1, d) + key.A_mod_I * binomial(n + d - 1, d - 1)
        checks.append(Check(f'l(A/Q^nI) closed form at n={n}', value == expected, f'{value} vs {expected}'))
    checks.append(Check('e_0 = l(A/Q)', e[0] == key.A_mod_Q, f'{e[0]} vs {key.A_mod_Q}'))
    if sally.rank_proxy is not None:
        checks.append(Check('rank proxy = e_1 - e_0 + l(A/I)',
                            sally.rank_proxy == e[1] - e[0] + key.A_mod_I and sally.rank_proxy >= 0,
                            f'rank proxy {sally.rank_proxy}'))
    return enforce(checks)


def compute_sally_profile(engine, I, Q, hilbert: Optional[HilbertProfile] = None, n_max: Optional[int] = None,
                          r_max: Optional[int] = None, stab_window: Optional[int] = None,
                          with_ratliff_rush: bool = True) -> SallyProfile:
    n_max = n_max if n_max is not None else Settings.default_n_max(engine.dimension)
    _, r = verify_reduction(engine, I, Q, r_max)
    lengths, qni_colengths = sally_lengths(engine, I, Q, n_max)
    A_mod_I = engine.colength(I)
    A_mod_Q = engine.colength(Q)
    key = KeyLengths(
        A_mod_I=A_mod_I,
        A_mod_Q=A_mod_Q,
        I_mod_Q=A_mod_Q - A_mod_I,
        I2_mod_QI=lengths[0],
        I3_mod_Q2I=lengths[1],
    )
    rank_proxy = hilbert.e[1] - (hilbert.e[0] - A_mod_I) if hilbert is not None and hilbert.d >= 1 else None
    # μ_B(S) = ℓ(S_1) needs S generated in degree 1, i.e. I^3 = QI^2
    mu_proxy = lengths[0] if r <= 2 else None
    rr = ratliff_rush(engine, I, Q, n_max, stab_window) if with_ratliff_rush else None
    return SallyProfile(
        lengths=tuple(lengths), qni_colengths=tuple(qni_colengths), r=r, key=key,
        rank_proxy=rank_proxy, mu_proxy=mu_proxy, rr=rr,
    )
