from typing import List, Union

from tabulate import tabulate
from termcolor import colored
from typing_extensions import Literal

from samuel.core.classifier import ClassificationReport
from samuel.core.reports import HilbertOnlyReport, HilbertReport, ProfileReport

ReportFormat = Literal['text', 'json']


def _status(ok: bool) -> str:
    return colored('ok', 'green') if ok else colored('MISMATCH', 'red')


def _title(text: str) -> str:
    return colored(text, 'cyan')


def hilbert_lines(hilbert: HilbertReport) -> List[str]:
    table_body = [[n, value] for n, value in enumerate(hilbert.table)]
    return [
        _title('Hilbert-Samuel function H(n) = l(A/I^(n+1))'),
        tabulate(table_body, ['n', 'H(n)'], 'plain'),
        f'e = {tuple(hilbert.e)}',
        f'postulation number = {hilbert.postulation} (verified on {hilbert.verified_points} points below the fit)',
    ]


def classification_lines(classification: ClassificationReport) -> List[str]:
    lines = [_title('Classification')]
    for entry in classification.entries:
        if not entry.applicable:
            lines.append(colored(f'• {entry.id}: not applicable', 'yellow'))
            continue
        lines.append(colored(f'• {entry.id}: {entry.description}', 'green'))
        conditions = [[c.name, c.holds] for c in entry.conditions]
        if conditions:
            lines.append(tabulate(conditions, ['condition', 'holds'], 'plain'))
        predictions = [[p.name, p.predicted, p.observed, _status(p.match)] for p in entry.predictions]
        if predictions:
            lines.append(tabulate(predictions, ['prediction', 'predicted', 'observed', ''], 'plain'))
        for note in entry.notes:
            lines.append(f'   - {note}')
    if classification.labels:
        lines.append(_title('Predicted (not machine-checked)'))
        lines += [f'   - {label}' for label in classification.labels]
    for note in classification.notes:
        lines.append(colored(f'Note: {note}', 'yellow'))
    color = 'green' if classification.status == 'PASS' else 'red'
    lines.append(colored(f'Status: {classification.status}', color))
    return lines


def profile_lines(report: ProfileReport) -> List[str]:
    lengths = report.lengths
    sally = report.sally
    lines = [
        colored(f'{report.spec_echo.get("name") or "problem"} ({report.engine} engine)', 'blue'),
        _title('Lengths'),
        tabulate([
            ['l(A/I)', lengths.A_mod_I],
            ['l(A/Q)', lengths.A_mod_Q],
            ['l(I/Q)', lengths.I_mod_Q],
            ['l(I^2/QI)', lengths.I2_mod_QI],
            ['l(I^3/Q^2I)', lengths.I3_mod_Q2I],
            ['mI^2 in QI', report.containments.m_I2_in_QI],
            ['Q contains I^2', report.containments.Q_contains_I2],
        ], tablefmt='plain'),
    ]
    lines += hilbert_lines(report.hilbert)
    lines += [
        _title('Sally module'),
        tabulate([[n + 1, value] for n, value in enumerate(sally.lengths)], ['n', 'l(S_n)'], 'plain'),
        f'r_Q(I) = {sally.r}',
        f'rank proxy = {sally.rank_proxy}, mu proxy = {sally.mu_proxy}',
    ]
    rr = sally.rr
    if rr is not None:
        if rr.stabilized:
            lines.append(f'Ratliff-Rush closure = I + ({", ".join(rr.generators_added)})' if rr.generators_added
                         else 'Ratliff-Rush closure = I')
            lines.append(f'l(Ĩ/I) = {rr.delta_length}, Ĩ^2 = QĨ: {rr.tilde_square_eq_Q_tilde}, '
                         f'stable at n = {rr.stabilized_at} via {rr.first_stable}')
            if not rr.formulas_agree:
                lines.append(colored('   - the two colon chains disagree', 'yellow'))
        else:
            lines.append(colored('Ratliff-Rush closure did not stabilize within n_max', 'yellow'))
    if report.classification is not None:
        lines += classification_lines(report.classification)
    return lines


def emit_report(report: Union[ProfileReport, HilbertOnlyReport], report_format: ReportFormat = 'text') -> str:
    if report_format == 'json':
        return report.json(indent=2)
    elif report_format == 'text':
        if isinstance(report, HilbertOnlyReport):
            header = colored(f'{report.spec_echo.get("name") or "problem"} ({report.engine} engine)', 'blue')
            return '\n'.join([header] + hilbert_lines(report.hilbert))
        return '\n'.join(profile_lines(report))
    assert False, f'Invalid report format {report_format}'
