"""
Checks the known structure results for ideals with e_1 close to e_0 - l(A/I) against computed
profiles. Each entry lists the conditions it evaluated, the predictions it could compute (with
observed values) and labels for structural claims that are never machine-checked, such as
depths of the associated graded ring.
"""
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from samuel.core.exceptions import TheoremViolation
from samuel.core.hilbert import HilbertProfile, binomial
from samuel.core.sally import SallyProfile

PASS = 'PASS'
FAILED = 'FAILED'


class Condition(BaseModel):
    name: str
    observed: Any = None
    holds: bool


class Prediction(BaseModel):
    name: str
    predicted: Any
    observed: Any = None
    match: Optional[bool] = None


class ClassificationEntry(BaseModel):
    id: str
    description: str
    applicable: bool
    conditions: List[Condition] = Field(default=[])
    predictions: List[Prediction] = Field(default=[])
    labels: List[str] = Field(default=[], description='Predicted, not machine-checked')
    notes: List[str] = Field(default=[])


class ClassificationReport(BaseModel):
    entries: List[ClassificationEntry]
    labels: List[str] = Field(default=[], description='Predicted, not machine-checked')
    notes: List[str] = Field(default=[])
    status: str

    @property
    def failed_predictions(self) -> List[Tuple[str, Prediction]]:
        return [(entry.id, p) for entry in self.entries for p in entry.predictions if p.match is False]


@dataclass(frozen=True)
class ProfileBundle:
    hilbert: HilbertProfile
    sally: SallyProfile
    m_I2_in_QI: bool
    Q_contains_I2: bool
    closure_e: Optional[Tuple[int, ...]] = None

    @property
    def d(self) -> int:
        return self.hilbert.d

    def e(self, i: int) -> int:
        return self.hilbert.coefficient(i)

    @property
    def A_mod_I(self) -> int:
        return self.sally.key.A_mod_I

    @property
    def S1(self) -> int:
        return self.sally.key.I2_mod_QI

    @property
    def S2(self) -> int:
        return self.sally.key.I3_mod_Q2I

    @property
    def r(self) -> int:
        return self.sally.r

    @property
    def excess(self) -> int:
        """e_1 - (e_0 - l(A/I))"""
        return self.e(1) - (self.e(0) - self.A_mod_I)

    @property
    def rr_known(self) -> bool:
        return self.sally.rr is not None and self.sally.rr.stabilized

    @property
    def closure_condition(self) -> Optional[bool]:
        """l(Ĩ/I) = 1 and Ĩ^2 = QĨ, None when the closure was not computed or never stabilized"""
        if not self.rr_known:
            return None
        return self.sally.rr.delta_length == 1 and self.sally.rr.tilde_square_eq_Q_tilde


def predict(name: str, predicted: Any, observed: Any) -> Prediction:
    return Prediction(name=name, predicted=predicted, observed=observed, match=predicted == observed)


def _tail(bundle: ProfileBundle, start: int) -> List[int]:
    return [bundle.e(i) for i in range(start, bundle.d + 1)]


def classify_northcott(bundle: ProfileBundle) -> ClassificationEntry:
    """e_1 >= e_0 - l(A/I), with equality exactly when I^2 = QI"""
    d = bundle.d
    equality = bundle.excess == 0
    predictions = [
        predict('e_1 >= e_0 - l(A/I)', True, bundle.excess >= 0),
        predict('I^2 = QI', equality, bundle.S1 == 0),
    ]
    labels = []
    if d >= 2:
        predictions.append(predict('e_2 >= 0', True, bundle.e(2) >= 0))
    if equality:
        if d >= 2:
            predictions.append(predict('e_i = 0 for 2 <= i <= d', [0] * (d - 1), _tail(bundle, 2)))
        labels.append('G Cohen-Macaulay')
    return ClassificationEntry(
        id='northcott',
        description='Northcott inequality and its equality case',
        applicable=True,
        conditions=[Condition(name='e_1 = e_0 - l(A/I)', observed=bundle.excess, holds=equality)],
        predictions=predictions,
        labels=labels,
    )


def classify_sally_length_one(bundle: ProfileBundle) -> ClassificationEntry:
    """I^3 = QI^2 and l(I^2/QI) = 1, equivalently e_1 = e_0 - l(A/I) + 1 with e_2 != 0 when d >= 2"""
    d = bundle.d
    generated = bundle.r <= 2 and bundle.S1 == 1
    numeric = bundle.excess == 1 and (d < 2 or bundle.e(2) != 0)
    conditions = [
        Condition(name='I^3 = QI^2 and l(I^2/QI) = 1', observed={'r': bundle.r, 'l(I^2/QI)': bundle.S1},
                  holds=generated),
        Condition(name='e_1 = e_0 - l(A/I) + 1 and e_2 != 0 if d >= 2', observed=bundle.excess, holds=numeric),
    ]
    applicable = generated or numeric
    predictions = []
    labels = []
    if applicable:
        predictions.append(predict('numeric condition iff generation condition', generated, numeric))
    if generated:
        predictions.append(predict('e_1 - e_0 + l(A/I)', 1, bundle.excess))
        if d >= 2:
            predictions.append(predict('e_2', 1, bundle.e(2)))
        if d >= 3:
            predictions.append(predict('e_i = 0 for 3 <= i <= d', [0] * (d - 2), _tail(bundle, 3)))
        labels += ['S ~= B(-1)', 'depth G >= d - 1']
    return ClassificationEntry(
        id='sally_length_one',
        description='Sally module isomorphic to B(-1)',
        applicable=applicable,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
    )


def classify_sally_length_two(bundle: ProfileBundle) -> ClassificationEntry:
    """I^3 = QI^2, l(I^2/QI) = 2, mI^2 ⊆ QI and l(I^3/Q^2I) < 2d; for d = 2 also l(Ĩ/I) = 1 and Ĩ^2 = QĨ"""
    d = bundle.d
    if d < 2:
        return ClassificationEntry(id='sally_length_two', description='Needs d >= 2', applicable=False)
    length_two = bundle.r <= 2 and bundle.S1 == 2 and bundle.m_I2_in_QI and bundle.S2 < 2 * d
    conditions = [Condition(
        name='I^3 = QI^2, l(I^2/QI) = 2, mI^2 in QI, l(I^3/Q^2I) < 2d',
        observed={'r': bundle.r, 'l(I^2/QI)': bundle.S1, 'mI^2 in QI': bundle.m_I2_in_QI, 'l(I^3/Q^2I)': bundle.S2},
        holds=length_two,
    )]
    closure = bundle.closure_condition if d == 2 else None
    if closure is not None:
        conditions.append(Condition(name='l(Ĩ/I) = 1 and Ĩ^2 = QĨ', observed=closure, holds=closure))
    applicable = length_two or bool(closure)
    predictions = []
    labels = []
    notes = []
    if d == 2 and applicable:
        if closure is None:
            notes.append('Ratliff-Rush closure not determined; closure condition not compared')
        else:
            predictions.append(predict('closure condition iff length condition', length_two, closure))
    if applicable:
        predictions += [
            predict('e_1 - e_0 + l(A/I)', 1, bundle.excess),
            predict('e_2', 0, bundle.e(2)),
        ]
        if d >= 3:
            predictions.append(predict('e_3', -1, bundle.e(3)))
        if d >= 4:
            predictions.append(predict('e_i = 0 for 4 <= i <= d', [0] * (d - 3), _tail(bundle, 4)))
        predictions += [
            predict('l(I^3/Q^2I)', 2 * d - 1, bundle.S2),
            predict('rank proxy', 1, bundle.sally.rank_proxy),
            predict('mu proxy', 2, bundle.sally.mu_proxy),
        ]
        labels += ['0 -> B(-2) -> B(-1)^2 -> S -> 0', 'depth G = d - 2']
        if d == 2:
            labels.append("G, R and R' Buchsbaum with invariant 2")
    return ClassificationEntry(
        id='sally_length_two',
        description='Sally module of rank one with two generators',
        applicable=applicable,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
        notes=notes,
    )


def classify_dimension_two(bundle: ProfileBundle) -> ClassificationEntry:
    """For d = 2, e_1 = e_0 - l(A/I) + 1 means exactly one of
    (a) I^3 = QI^2 and l(I^2/QI) = 1, or (b) l(Ĩ/I) = 1 and Ĩ^2 = QĨ"""
    if bundle.d != 2:
        raise ValueError(f'Dimension two classification needs d = 2, found d = {bundle.d}')
    hypothesis = bundle.excess == 1
    conditions = [Condition(name='e_1 = e_0 - l(A/I) + 1', observed=bundle.excess, holds=hypothesis)]
    if not hypothesis:
        return ClassificationEntry(
            id='dimension_two', description='Dimension two trichotomy', applicable=False, conditions=conditions,
        )
    case_a = bundle.r <= 2 and bundle.S1 == 1
    case_b = bundle.closure_condition
    conditions += [
        Condition(name='(a) I^3 = QI^2 and l(I^2/QI) = 1', observed={'r': bundle.r, 'l(I^2/QI)': bundle.S1},
                  holds=case_a),
        Condition(name='(b) l(Ĩ/I) = 1 and Ĩ^2 = QĨ', observed=case_b, holds=bool(case_b)),
    ]
    if case_b is None and not case_a:
        return ClassificationEntry(
            id='dimension_two', description='Dimension two trichotomy', applicable=True, conditions=conditions,
            notes=['Ratliff-Rush closure not determined; case (b) cannot be decided'],
        )
    if case_a and case_b:
        raise TheoremViolation('Dimension two: cases (a) and (b) both hold')
    if not case_a and not case_b:
        raise TheoremViolation('Dimension two: e_1 = e_0 - l(A/I) + 1 but neither case (a) nor case (b) holds')
    predictions = [predict('r_Q(I)', 2, bundle.r)]
    if case_a:
        predictions.append(predict('e_2', 1, bundle.e(2)))
        depth = 1 if bundle.Q_contains_I2 else 2
        labels = ['case (a)', 'depth_B S = 2', f'depth G = {depth}']
        notes = ['Q contains I^2' if bundle.Q_contains_I2 else 'Q does not contain I^2']
    else:
        predictions.append(predict('e_2', 0, bundle.e(2)))
        labels = ['case (b)', 'depth_B S = 1', 'depth G = 0', 'G Buchsbaum with invariant 2']
        notes = []
    return ClassificationEntry(
        id='dimension_two',
        description='Dimension two trichotomy',
        applicable=True,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
        notes=notes,
    )


def closed_form_table(bundle: ProfileBundle, c: int) -> List[int]:
    d = bundle.d
    e0, e1 = bundle.e(0), bundle.e(1)
    return [
        e0 * binomial(n + d, d) - e1 * binomial(n + d - 1, d - 1) + (binomial(n + d - c - 1, d - c - 1) if c < d else 0)
        for n in range(len(bundle.hilbert.table))
    ]


def classify_closed_form(bundle: ProfileBundle) -> ClassificationEntry:
    """e_1 = e_0 - l(A/I) + 1 and I^3 = QI^2 pin down the whole Hilbert function through c = l(I^2/QI)"""
    d = bundle.d
    hypothesis = bundle.excess == 1 and bundle.r <= 2
    conditions = [Condition(name='e_1 = e_0 - l(A/I) + 1 and I^3 = QI^2',
                            observed={'excess': bundle.excess, 'r': bundle.r}, holds=hypothesis)]
    if not hypothesis:
        return ClassificationEntry(id='closed_form', description='Closed form Hilbert function',
                                   applicable=False, conditions=conditions)
    c = bundle.S1
    start = 0 if c < d else 1
    expected_table = closed_form_table(bundle, c)[start:]
    expected_e = [(-1) ** (c + 1) if i == c + 1 else 0 for i in range(2, d + 1)]
    predictions = [
        predict('0 < c <= d', True, 0 < c <= d),
        predict('mu proxy', c, bundle.sally.mu_proxy),
        predict('rank proxy', 1, bundle.sally.rank_proxy),
        predict(f'H(n) closed form for n >= {start}', expected_table, list(bundle.hilbert.table[start:])),
        predict('e_i for 2 <= i <= d', expected_e, _tail(bundle, 2)),
    ]
    labels = [f'depth G >= {d - c}', f'depth_B S = {d - c + 1}', f'mu_B(S) = {c}']
    if c >= 2:
        labels.append(f'depth G = {d - c}')
    return ClassificationEntry(
        id='closed_form',
        description='Closed form Hilbert function',
        applicable=True,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
        notes=[f'c = {c}'],
    )


def classify_ratliff_rush(bundle: ProfileBundle) -> ClassificationEntry:
    """For d >= 2: e_1 = e_0 - l(A/I) + 1, I^3 = QI^2, e_i = 0 (2 <= i <= d)
    iff I^3 = QI^2, l(Ĩ/I) = 1, Ĩ^2 = QĨ"""
    d = bundle.d
    closure = bundle.closure_condition
    numeric = bundle.excess == 1 and bundle.r <= 2 and all(x == 0 for x in _tail(bundle, 2))
    conditions = [Condition(name='e_1 = e_0 - l(A/I) + 1, I^3 = QI^2, e_i = 0 for 2 <= i <= d',
                            observed=bundle.excess, holds=numeric)]
    predictions = []
    notes = []
    if closure is None:
        notes.append('Ratliff-Rush closure not determined')
    else:
        closure_side = bundle.r <= 2 and closure
        conditions.append(Condition(name='I^3 = QI^2, l(Ĩ/I) = 1, Ĩ^2 = QĨ', observed=closure, holds=closure_side))
        if d >= 2:
            predictions.append(predict('numeric condition iff closure condition', numeric, closure_side))
    if bundle.closure_e is not None:
        predictions.append(predict('e(Ĩ) = e(I)', list(bundle.hilbert.e), list(bundle.closure_e)))
    labels = ['S ~= B_+', 'depth G = 0'] if d >= 2 and numeric else []
    return ClassificationEntry(
        id='ratliff_rush',
        description='Ratliff-Rush closure criterion',
        applicable=numeric or closure is not None or bundle.closure_e is not None,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
        notes=notes,
    )


def classify_e1_equals_2(bundle: ProfileBundle) -> ClassificationEntry:
    """e_1 = 2 and I^2 != QI force l(I/Q) = l(I^2/QI) = 1 and I^3 = QI^2"""
    d = bundle.d
    hypothesis = bundle.e(1) == 2
    conditions = [Condition(name='e_1 = 2', observed=bundle.e(1), holds=hypothesis),
                  Condition(name='I^2 != QI', observed=bundle.S1, holds=bundle.S1 > 0)]
    if not hypothesis:
        return ClassificationEntry(id='e1_equals_2', description='e_1 = 2', applicable=False, conditions=conditions)
    labels = ['depth G >= d - 1']
    predictions = []
    if bundle.S1 > 0:
        predictions += [
            predict('l(I/Q)', 1, bundle.sally.key.I_mod_Q),
            predict('l(I^2/QI)', 1, bundle.S1),
            predict('r_Q(I)', 2, bundle.r),
        ]
        if d >= 2:
            predictions.append(predict('e_2', 1, bundle.e(2)))
        if d >= 3:
            predictions.append(predict('e_i = 0 for 3 <= i <= d', [0] * (d - 2), _tail(bundle, 3)))
        labels += ['S ~= B(-1)', 'depth G = d - 1', 'G not Cohen-Macaulay']
    else:
        labels.append('G Cohen-Macaulay')
    return ClassificationEntry(
        id='e1_equals_2',
        description='e_1 = 2',
        applicable=True,
        conditions=conditions,
        predictions=predictions,
        labels=labels,
    )


def reduction_number_note(bundle: ProfileBundle) -> Optional[str]:
    """e_1 = e_0 - l(A/I) + 1 is expected to force I^3 = QI^2 in every dimension; only d <= 2 is settled"""
    if bundle.d >= 3 and bundle.excess == 1 and bundle.r > 2:
        return f'e_1 = e_0 - l(A/I) + 1 with r_Q(I) = {bundle.r} > 2 in dimension {bundle.d}'
    return None


def cross_check_report(entries: Sequence[ClassificationEntry], notes: Sequence[str] = ()) -> ClassificationReport:
    labels: List[str] = []
    for entry in entries:
        if entry.applicable:
            labels += [f'{entry.id}: {label}' for label in entry.labels]
    failed = any(p.match is False for entry in entries for p in entry.predictions)
    return ClassificationReport(
        entries=list(entries),
        labels=labels,
        notes=list(notes),
        status=FAILED if failed else PASS,
    )


def classify(bundle: ProfileBundle) -> ClassificationReport:
    entries = [
        classify_northcott(bundle),
        classify_sally_length_one(bundle),
        classify_sally_length_two(bundle),
    ]
    if bundle.d == 2:
        entries.append(classify_dimension_two(bundle))
    entries += [
        classify_closed_form(bundle),
        classify_ratliff_rush(bundle),
        classify_e1_equals_2(bundle),
    ]
    note = reduction_number_note(bundle)
    return cross_check_report(entries, [note] if note else [])
