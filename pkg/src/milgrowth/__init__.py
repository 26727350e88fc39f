"""Growth and demand models of a militarized economy."""

from .analysis import (OptimumReport, Regime, SweepGrid, classify_regime,
                       comparative_statics, optimal_burden, sweep)
from .calibration import GrowthObservation, fit_innovation, solve_a0
from .core_model import (EconomyState, GrowthParams, RegimePoint, StepResult,
                         growth_rate, productivity, step)
from .demand import DemandParams, DemandSolution, equilibrium, multiplier
from .errors import (AnnihilationError, ComputationError, DegenerateError,
                     InstabilityError, ModelError, SingularityError, ValidationError)
from .presets import BASELINE, IRAN, PRESETS, US
from .scenario import (ComparisonReport, Country, Schedule, Trajectory,
                       counterfactual_loss, peace_war_table, simulate)

__version__ = "0.1.0"
