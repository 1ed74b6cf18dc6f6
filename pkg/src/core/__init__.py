from ._config import BaseConfig
from .errors import (
    CompositionParseError,
    FactorizationError,
    HookPairsError,
    InfeasibleBoundsError,
    InvalidNodeError,
    UncertifiedPairError,
)
from .workspace import GLOBAL_CONFIG, create, register
from .yaml_config import YAMLConfig
from .yaml_utils import *
