# for register purpose
from . import jack, oracle
