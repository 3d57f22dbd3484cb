"""Command line front end."""

from .main import main
from .report import Report, TaskOutcome, run_scenario
from .scenario import Scenario, Task, load_scenario, parse_scenario
from .verify import VerificationReport, verify_paper
