from samuel.core.problems import ParsedProblem
from samuel.engines.engine_interface import IdealEngine
from samuel.engines.local_engine import LocalEngine
from samuel.engines.monomial_engine import MonomialEngine

ENGINE_MAPPINGS = {
    'monomial': MonomialEngine,
    'local': LocalEngine,
}


def get_engine(problem: ParsedProblem) -> IdealEngine:
    engine_class = ENGINE_MAPPINGS.get(problem.engine_kind)
    assert engine_class is not None, f'Invalid engine kind {problem.engine_kind}'
    return engine_class.from_problem(problem)
