"""Running scenarios and collecting their outcomes into reports."""

import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from extscope.cli.scenario import Scenario, Task
from extscope.cli.tasks import TASKS, evidence, matches
from extscope.config import Settings
from extscope.hooks import WarningCollector
from extscope.invariants.window import homological_window
from extscope.logger import LOGGER
from extscope.types import ReportJSONEncoder

PASS = 'pass'
FAIL = 'fail'
COMPUTED = 'computed'
INFINITIES = {'Infinity': 'inf', '-Infinity': '-inf', 'NaN': 'nan'}


def to_plain(value: Any) -> Any:
    """JSON-compatible copy of a value, through the report encoder. Infinities become ``"inf"``."""
    return json.loads(json.dumps(value, cls=ReportJSONEncoder), parse_constant=INFINITIES.get)


def dumps(payload: Any) -> str:
    """Canonical JSON text of a report: fixed key order, two-space indentation."""
    return json.dumps(to_plain(payload), indent=2, ensure_ascii=False)


@dataclass
class TaskOutcome:
    """Computed values of one task, the expected ones and a per-field verdict."""

    position: int
    task: Task
    computed: Dict[str, Any]
    verdicts: Dict[str, bool] = field(default_factory=dict)
    evidence: Dict[str, str] = field(default_factory=dict)
    warnings: List[Dict[str, Any]] = field(default_factory=list)
    seconds: Optional[float] = None

    @property
    def status(self) -> str:
        if not self.verdicts:
            return COMPUTED
        return PASS if all(self.verdicts.values()) else FAIL

    def to_json(self) -> dict:
        payload = {
            'task': self.position,
            'op': self.task.op,
            'params': to_plain(self.task.params),
            'status': self.status,
            'computed': to_plain(self.computed),
            'expected': to_plain(self.task.expect),
            'verdicts': dict(self.verdicts),
            'evidence': dict(self.evidence),
            'warnings': to_plain(self.warnings),
        }
        if self.seconds is not None:
            payload['seconds'] = round(self.seconds, 3)
        return payload


@dataclass
class Report:
    """Outcome of a scenario. ``exit_code`` is 1 when some expectation failed and 0 otherwise."""

    name: str
    ring: str
    settings: Dict[str, Any]
    outcomes: List[TaskOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.status != FAIL for outcome in self.outcomes)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            'scenario': self.name,
            'ring': self.ring,
            'settings': self.settings,
            'passed': self.passed,
            'tasks': [outcome.to_json() for outcome in self.outcomes],
        }


def run_task(scenario: Scenario, position: int, task: Task, collector: WarningCollector,
             timing: bool = False) -> TaskOutcome:
    """Run one task and compare it with its expectations. Engine errors propagate."""

    started = time.perf_counter()
    LOGGER.fields({'scenario': scenario.name, 'task': position, 'op': task.op}).info('task started')
    computed = TASKS[task.op].run(scenario, task)
    outcome = TaskOutcome(position, task, computed)

    for key, expected in task.expect.items():
        actual = computed.get(key)
        outcome.verdicts[key] = matches(actual, expected, scenario.ring)
        outcome.evidence[key] = evidence(actual)
        if not outcome.verdicts[key]:
            LOGGER.fields({'task': position, 'field': key, 'expected': expected, 'computed': to_plain(actual)}) \
                .error('expectation failed')

    outcome.warnings = collector.drain(threading.get_ident())
    if timing:
        outcome.seconds = time.perf_counter() - started
    return outcome


def run_scenario(scenario: Scenario, settings: Optional[Settings] = None, parallel: bool = False,
                 timing: bool = False) -> Report:
    """Execute the tasks of a parsed scenario in declaration order (concurrently with ``parallel``).

    The report echoes the effective degree cap and homological window.
    """

    settings = settings or Settings()
    if scenario.window is None:
        scenario.window = settings.window
    collector = WarningCollector()
    LOGGER.add_hook(collector)
    try:
        indexed = list(enumerate(scenario.tasks))
        if parallel and len(indexed) > 1:
            with ThreadPoolExecutor() as pool:
                outcomes = list(pool.map(lambda item: run_task(scenario, item[0], item[1], collector, timing), indexed))
        else:
            outcomes = [run_task(scenario, position, task, collector, timing) for position, task in indexed]
    finally:
        LOGGER.remove_hook(collector)

    loud = {
        'degree_cap': scenario.ring.degree_cap if scenario.ring.degree_cap is not None else settings.degree_cap,
        'window': homological_window(scenario.ring, scenario.window),
        'seed': settings.seed,
    }
    return Report(scenario.name, str(scenario.ring), loud, outcomes)


def _flatten(prefix: str, value: Any, rows: List[tuple]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), item, rows)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for position, item in enumerate(value):
            _flatten(f"{prefix}[{position}]", item, rows)
    elif isinstance(value, list):
        rows.append((prefix, ', '.join(str(item) for item in value) or '-'))
    else:
        rows.append((prefix, 'null' if value is None else str(value)))


def render_text(payload: Any) -> str:
    """Aligned ``key  value`` lines of a JSON payload, nested keys joined with dots."""

    rows: List[tuple] = []
    _flatten('', to_plain(payload), rows)
    width = max((len(key) for key, _ in rows), default=0)
    return '\n'.join(f"{key.ljust(width)}  {value}" for key, value in rows)
