from typing import Dict, Type

from loguru import logger

from ..core import BaseConfig, CompositionParseError
from ._solver import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, BaseSolver, Command, OutputDocument
from .jack_solver import JackSolver
from .oracle_solver import OracleSolver, scan_corpus
from .pair_solver import PairSolver
from .schema import load_schema, schema_for, validate_output

VERBS: Dict[str, Type[BaseSolver]] = {
    "hooks": PairSolver,
    "construct": PairSolver,
    "verify": PairSolver,
    "closure": PairSolver,
    "enumerate": OracleSolver,
    "scan": OracleSolver,
    "jack": JackSolver,
}


def dispatch(command: Command, cfg: BaseConfig) -> OutputDocument:
    """Run one command; parse errors exit with 2, domain errors with 1."""
    if command.verb not in VERBS:
        return OutputDocument(f"unknown verb {command.verb!r}", EXIT_PARSE, error=True)
    try:
        return VERBS[command.verb](cfg).run(command)
    except CompositionParseError as e:
        logger.debug(f"parse error in `{command.verb}`: {e}")
        return OutputDocument(f"error: {e}", EXIT_PARSE, error=True)
    except ValueError as e:
        logger.debug(f"domain error in `{command.verb}`: {e}")
        return OutputDocument(f"error: {e}", EXIT_DOMAIN, error=True)
