"""
Runtime configuration shared by every CLI verb.
"""

from typing import Any, Dict

__all__ = [
    "BaseConfig",
]


class BaseConfig(object):
    def __init__(self) -> None:
        super().__init__()

        # instance
        self._oracle = None
        self._jack_engine = None

        # runtime
        self.log_level: str = "INFO"
        self.print_freq: int = 50
        self.json_indent: int = 2
        self.num_workers: int = 0

        # critical pairs / oracle
        self.closure_depth: int = 2
        self.scan: Dict[str, Any] = {}

        # jack engine
        self.feasibility_cap: int = 20000

    @property
    def oracle(self):
        if self._oracle is None:
            from ..oracle import PartnerOracle

            self._oracle = PartnerOracle(num_workers=self.num_workers, print_freq=self.print_freq)
        return self._oracle

    @oracle.setter
    def oracle(self, m):
        self._oracle = m

    @property
    def jack_engine(self):
        if self._jack_engine is None:
            from ..jack import JackEngine

            self._jack_engine = JackEngine(feasibility_cap=self.feasibility_cap)
        return self._jack_engine

    @jack_engine.setter
    def jack_engine(self, m):
        self._jack_engine = m

    def __repr__(self) -> str:
        s = "\n"
        for k, v in self.__dict__.items():
            if not k.startswith("_"):
                s += f"{k}: {v}\n"
        return s
