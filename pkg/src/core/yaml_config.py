"""
YAML-backed runtime configuration.
"""

import copy
import os

from loguru import logger

from ._config import BaseConfig
from .workspace import create
from .yaml_utils import load_config, merge_config, merge_dict

FEASIBILITY_CAP_ENV = "HOOKPAIRS_FEASIBILITY_CAP"


class YAMLConfig(BaseConfig):
    def __init__(self, cfg_path: str, **kwargs) -> None:
        super().__init__()

        cfg = load_config(cfg_path)
        cfg = merge_dict(cfg, kwargs)

        env_cap = os.environ.get(FEASIBILITY_CAP_ENV)
        if env_cap is not None:
            try:
                cfg["feasibility_cap"] = int(env_cap)
            except ValueError:
                raise ValueError(f"{FEASIBILITY_CAP_ENV} must be an integer, got {env_cap!r}")
            logger.debug(f"feasibility cap overridden from environment: {cfg['feasibility_cap']}")

        self.yaml_cfg = copy.deepcopy(cfg)

        for k in super().__dict__:
            if not k.startswith("_") and k in cfg:
                self.__dict__[k] = cfg[k]

    @property
    def global_cfg(self):
        return merge_config(self.yaml_cfg, inplace=False, overwrite=False)

    @property
    def oracle(self):
        if self._oracle is None and "oracle" in self.yaml_cfg:
            self._oracle = create("oracle", self.global_cfg)
        return super().oracle

    @property
    def jack_engine(self):
        if self._jack_engine is None and "jack_engine" in self.yaml_cfg:
            self._jack_engine = create("jack_engine", self.global_cfg)
        return super().jack_engine
