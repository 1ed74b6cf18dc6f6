import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..combinatorics import Composition, Node, parse_composition, parse_pair
from ..core import BaseConfig

__all__ = ["Command", "OutputDocument", "BaseSolver", "EXIT_OK", "EXIT_DOMAIN", "EXIT_PARSE"]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2


@dataclass
class Command:
    """One parsed CLI invocation: a verb plus its validated options."""

    verb: str
    options: Dict[str, Any] = field(default_factory=dict)
    json: bool = False

    def get(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value


@dataclass
class OutputDocument:
    body: str
    exit_code: int = EXIT_OK
    payload: Optional[Any] = None
    error: bool = False


class BaseSolver(object):
    def __init__(self, cfg: BaseConfig) -> None:
        self.cfg = cfg

    def run(self, command: Command) -> OutputDocument:
        handler = getattr(self, command.verb, None)
        if handler is None:
            raise ValueError(f"{type(self).__name__} does not handle `{command.verb}`")
        return handler(command)

    # parsing helpers shared by the verbs

    @staticmethod
    def composition(command: Command, name: str) -> Composition:
        return parse_composition(command.options[name])

    @staticmethod
    def node(command: Command) -> Optional[Node]:
        text = command.get("node")
        return None if text is None else Node(*parse_pair(text, "node"))

    @staticmethod
    def factor(command: Command, required: bool = True):
        text = command.get("factor")
        if text is None:
            if required:
                raise ValueError(f"`{command.verb}` needs --factor m,n")
            return None
        return parse_pair(text, "factor")

    def dumps(self, payload: Any) -> str:
        return json.dumps(payload, sort_keys=True, indent=self.cfg.json_indent, ensure_ascii=False)

    def emit(self, command: Command, payload: Any, text: str, exit_code: int = EXIT_OK) -> OutputDocument:
        body = self.dumps(payload) if command.json else text
        return OutputDocument(body, exit_code, payload)

    def emit_lines(self, command: Command, records, text: str) -> OutputDocument:
        """JSON lines: one compact record per line."""
        if command.json:
            body = "\n".join(json.dumps(r, sort_keys=True, ensure_ascii=False) for r in records)
        else:
            body = text
        return OutputDocument(body, EXIT_OK, records)
