from .logger import ProgressLogger, SmoothedValue, setup_logger
from .visualizer import render_diagram, render_factor_table
