"""Scenario files: a ring, named objects and a list of tasks with optional expectations."""

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from extscope.errors import ExtscopeError, ParseError
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.poly.parser import parse_generator_list, parse_ring
from extscope.poly.ring import RingSpec

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

SceneObject = Union[Ideal, PresentedModule]

OBJECT_KINDS = ('quotient', 'ideal', 'ideal_module', 'free', 'matrix', 'zero', 'sum')


@dataclass
class Task:
    """One operation invocation: ``op`` with its parameters and the expected values, if any."""

    op: str
    params: Dict[str, Any]
    expect: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {'op': self.op, **self.params}


@dataclass
class Scenario:
    """A parsed scenario; every object is built and every task validated before anything is computed."""

    name: str
    ring: RingSpec
    objects: Dict[str, SceneObject]
    tasks: List[Task]
    window: Optional[int] = None
    source: Optional[str] = None


def _read(path: Path) -> Dict[str, Any]:
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as error:
        raise ParseError(f"cannot read scenario {path}: {error}") from error

    try:
        if path.suffix == '.json':
            return json.loads(text)
        return tomllib.loads(text)
    except (ValueError, tomllib.TOMLDecodeError) as error:
        raise ParseError(f"malformed scenario {path}: {error}") from error


def _generators(ring: RingSpec, name: str, spec: Dict[str, Any]) -> List:
    generators = spec.get('generators')
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise ParseError(f"object {name!r} needs a list of generator strings")
    return parse_generator_list(ring, generators)


def build_object(ring: RingSpec, name: str, spec: Dict[str, Any], built: Dict[str, SceneObject]) -> SceneObject:
    """Build one named object from its table."""

    kind = spec.get('kind')
    if kind not in OBJECT_KINDS:
        raise ParseError(f"object {name!r} has unknown kind {kind!r}; expected one of {', '.join(OBJECT_KINDS)}")

    if kind == 'ideal':
        return Ideal(ring, _generators(ring, name, spec))
    if kind == 'quotient':
        return PresentedModule.cyclic(Ideal(ring, _generators(ring, name, spec)), provenance=name)
    if kind == 'ideal_module':
        return PresentedModule.from_ideal(Ideal(ring, _generators(ring, name, spec)), provenance=name)
    if kind == 'free':
        twists = spec.get('twists', [0] * int(spec.get('rank', 1)))
        return PresentedModule.free(ring, [int(t) for t in twists])
    if kind == 'zero':
        return PresentedModule.zero(ring)
    if kind == 'matrix':
        rows = spec.get('rows')
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise ParseError(f"object {name!r} needs rows, a list of lists of polynomial strings")
        parsed = [parse_generator_list(ring, [str(entry) for entry in row]) for row in rows]
        return PresentedModule.from_matrix(ring, parsed, spec.get('twists'))

    parts = spec.get('of', [])
    missing = [part for part in parts if part not in built]
    if not parts or missing:
        raise ParseError(f"sum {name!r} refers to undefined objects {missing or parts}")
    result = built[parts[0]]
    for part in parts[1:]:
        result = result.direct_sum(built[part])
    return result


def parse_scenario(data: Dict[str, Any], source: Optional[str] = None, degree_cap: Optional[int] = None) -> Scenario:
    """Build a scenario from its decoded table, validating task names and object references."""

    from extscope.cli.tasks import TASKS, validate_task  # pylint: disable=import-outside-toplevel

    if not isinstance(data, dict) or 'ring' not in data:
        raise ParseError("a scenario needs a ring")

    cap = data.get('degree_cap', degree_cap)
    try:
        ring = parse_ring(str(data['ring']), cap)
        objects: Dict[str, SceneObject] = {}
        for name, spec in (data.get('objects') or {}).items():
            if not isinstance(spec, dict):
                raise ParseError(f"object {name!r} must be a table")
            objects[name] = build_object(ring, name, spec, objects)
    except ParseError:
        raise
    except ExtscopeError as error:
        raise ParseError(f"invalid scenario objects: {error}") from error

    tasks = []
    for position, raw in enumerate(data.get('tasks') or []):
        if not isinstance(raw, dict) or 'op' not in raw:
            raise ParseError(f"task {position} has no op")
        op = raw['op']
        if op not in TASKS:
            raise ParseError(f"task {position}: unknown op {op!r}")
        params = {key: value for key, value in raw.items() if key not in ('op', 'expect')}
        task = Task(op, params, dict(raw.get('expect') or {}))
        validate_task(task, objects)
        tasks.append(task)

    window = data.get('window')
    return Scenario(str(data.get('name', source or 'scenario')), ring, objects, tasks,
                    int(window) if window is not None else None, source)


def load_scenario(path: Union[str, Path], degree_cap: Optional[int] = None) -> Scenario:
    """Read a TOML (or ``.json``) scenario file.

    :raise ParseError: for unreadable files, syntax errors, unknown tasks or undefined objects
    """

    path = Path(path)
    return parse_scenario(_read(path), str(path), degree_cap)
