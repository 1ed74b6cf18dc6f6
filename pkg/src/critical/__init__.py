"""
Critical pairs: the checker, the construction from a hook factor, and its closure.
"""

from .certificate import CriticalPairCertificate, CriticalPairCheck, check_critical_pair, is_critical_pair
from .closure import ClosureResult, ClosureStep, closure
from .construct import AlgorithmTrace, FactorConstruction, chain, construct_beta, construct_by_factor
from .extra_hooks import ExtraHook, detect_extra_hooks
