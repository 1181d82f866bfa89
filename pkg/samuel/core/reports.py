"""Report models. Field order is the output order, keep it stable so JSON reports diff cleanly."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from samuel.core.classifier import ClassificationReport
from samuel.core.hilbert import HilbertProfile
from samuel.core.sally import SallyProfile


class LengthsReport(BaseModel):
    A_mod_I: int
    A_mod_Q: int
    I_mod_Q: int
    I2_mod_QI: int
    I3_mod_Q2I: int


class HilbertReport(BaseModel):
    table: List[int]
    e: List[int]
    postulation: int
    verified_points: int
    extensions: int

    @staticmethod
    def from_profile(profile: HilbertProfile) -> 'HilbertReport':
        return HilbertReport(
            table=list(profile.table),
            e=list(profile.e),
            postulation=profile.postulation,
            verified_points=profile.verified_points,
            extensions=profile.extensions,
        )


class RatliffRushReport(BaseModel):
    generators_added: List[str]
    delta_length: int
    stabilized: bool
    stabilized_at: Optional[int]
    first_stable: Optional[str]
    formulas_agree: bool
    tilde_square_eq_Q_tilde: bool
    heuristic: bool
    e: Optional[List[int]] = None


class SallyReport(BaseModel):
    lengths: List[int]
    qni_colengths: List[int]
    r: int
    rank_proxy: Optional[int]
    mu_proxy: Optional[int]
    rr: Optional[RatliffRushReport]


class ContainmentsReport(BaseModel):
    m_I2_in_QI: bool
    Q_contains_I2: bool


class HilbertOnlyReport(BaseModel):
    spec_echo: Dict[str, Any]
    engine: str
    hilbert: HilbertReport


class ProfileReport(BaseModel):
    spec_echo: Dict[str, Any]
    engine: str
    lengths: LengthsReport
    hilbert: HilbertReport
    sally: SallyReport
    containments: ContainmentsReport
    classification: Optional[ClassificationReport] = None

    @property
    def failed(self) -> bool:
        return self.classification is not None and self.classification.status != 'PASS'


def sally_report(sally: SallyProfile, closure_e: Optional[List[int]] = None) -> SallyReport:
    rr = None
    if sally.rr is not None:
        rr = RatliffRushReport(
            generators_added=list(sally.rr.generators_added),
            delta_length=sally.rr.delta_length,
            stabilized=sally.rr.stabilized,
            stabilized_at=sally.rr.stabilized_at,
            first_stable=sally.rr.first_stable,
            formulas_agree=sally.rr.formulas_agree,
            tilde_square_eq_Q_tilde=sally.rr.tilde_square_eq_Q_tilde,
            heuristic=sally.rr.heuristic,
            e=closure_e,
        )
    return SallyReport(
        lengths=list(sally.lengths),
        qni_colengths=list(sally.qni_colengths),
        r=sally.r,
        rank_proxy=sally.rank_proxy,
        mu_proxy=sally.mu_proxy,
        rr=rr,
    )


def lengths_report(sally: SallyProfile) -> LengthsReport:
    key = sally.key
    return LengthsReport(
        A_mod_I=key.A_mod_I,
        A_mod_Q=key.A_mod_Q,
        I_mod_Q=key.I_mod_Q,
        I2_mod_QI=key.I2_mod_QI,
        I3_mod_Q2I=key.I3_mod_Q2I,
    )
