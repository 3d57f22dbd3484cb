"""The bundled verification run: worked examples as golden scenarios plus property suites on seeded corpora."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional

from extscope.cli.report import Report, run_scenario
from extscope.cli.scenario import parse_scenario
from extscope.config import Settings
from extscope.errors import UsageError
from extscope.groebner.ideal import Ideal
from extscope.invariants import SUITES, SuiteResult, height_two_perfect_corpus, monomial_corpus
from extscope.logger import LOGGER

HEIGHT_TWO_CORPUS_SIZE = 20
DEFAULT_WINDOW = 'ring dimension + 1'

XY_XZ = {'kind': 'quotient', 'generators': ['xy', 'xz']}

GOLDEN: Dict[int, List[Dict[str, Any]]] = {
    2: [
        {
            'name': 'example_2_10',
            'ring': 'QQ[x,y,z]',
            'objects': {'M': XY_XZ, 'N': {'kind': 'quotient', 'generators': ['y']}},
            'tasks': [
                {'op': 'ext', 'module': 'M', 'index': 0, 'expect': {'zero': True}},
                {'op': 'ext', 'module': 'M', 'index': 1,
                 'expect': {'annihilator': ['x'], 'hilbert': '1/(1-t)^2', 'mu': 1, 'dim': 2}},
                {'op': 'ext', 'module': 'M', 'index': 2,
                 'expect': {'annihilator': ['y', 'z'], 'hilbert': '1/(1-t)', 'mu': 1}},
                {'op': 'ext', 'module': 'M', 'index': 3, 'expect': {'zero': True}},
                {'op': 'grade', 'module': 'M', 'expect': {'grade': 1}},
                {'op': 'support_check', 'module': 'M', 'expect': {'holds': True}},
                {'op': 'nonvanishing_check', 'module': 'M', 'target': 'N', 'expect': {'holds': True}},
            ],
        },
        {
            'name': 'dimension_formula_negative_control',
            'ring': 'QQ[x,y,z]',
            'objects': {'M': XY_XZ},
            'tasks': [
                {'op': 'dim_formula_check', 'module': 'M', 'expect': {
                    'hypotheses': True, 'holds': True, 'support_equal': False, 'dimension_only': True
                }},
            ],
        },
    ],
    3: [
        {
            'name': 'example_3_1',
            'ring': 'QQ[x,y,z]',
            'objects': {'M': XY_XZ, 'I': {'kind': 'ideal', 'generators': ['xy', 'xz']}},
            'tasks': [
                {'op': 'ass_oracle', 'module': 'M', 'expect': {'primes': [['x'], ['y', 'z']]}},
                {'op': 'ext_shift', 'ideal': 'I', 'index': 1, 'expect': {'equal': True}},
            ],
        },
        {
            'name': 'example_3_5',
            'ring': 'QQ[x,y,z]/(x^2,xy,xz)',
            'objects': {'M': {'kind': 'quotient', 'generators': ['x']}},
            'tasks': [
                {'op': 'resolve', 'module': 'M', 'up_to': 3, 'expect': {'betti': [1, 1, 3, 6]}},
                {'op': 'cycles', 'module': 'M', 'index': 2,
                 'expect': {'generators': [['x', '0', '0'], ['0', 'x', '0'], ['0', '0', 'x'], ['0', 'y', 'z']]}},
                # xy = 0 in R makes y(0,y,z) equal y(x,y,z) modulo the image: Ext^2 is killed by (x,y,z)
                {'op': 'ext', 'module': 'M', 'index': 2, 'expect': {'annihilator': ['x', 'y', 'z'], 'dim': 0}},
            ],
        },
        {
            'name': 'example_3_9',
            'ring': 'QQ[x,y,z]',
            'objects': {'M': XY_XZ},
            'tasks': [
                {'op': 'iterated_ext', 'module': 'M', 'path': [2, 2],
                 'expect': {'annihilator': ['y', 'z'], 'hilbert': '1/(1-t)'}},
                {'op': 'iterated_ext', 'module': 'M', 'path': [2, 2, 2], 'expect': {'annihilator': ['y', 'z']}},
                {'op': 'iterated_ext', 'module': 'M', 'path': [1, 2], 'expect': {'zero': True}},
                {'op': 'iterated_ext', 'module': 'M', 'path': [3, 2], 'expect': {'zero': True}},
            ],
        },
        {
            'name': 'finite_dimension_matters',
            'ring': 'QQ[X,Y]/(X^2)',
            'objects': {'M': {'kind': 'quotient', 'generators': ['x']}},
            'window': 4,
            'tasks': [
                {'op': 'ext', 'module': 'M', 'target': 'M', 'index': i, 'expect': {'annihilator': ['x'], 'dim': 1}}
                for i in (1, 2, 3)
            ],
        },
    ],
    4: [
        {
            'name': 'example_4_1',
            'ring': 'QQ[x,y,z]',
            'objects': {
                'M': XY_XZ,
                'R': {'kind': 'free', 'rank': 1},
                'RM': {'kind': 'sum', 'of': ['R', 'M']},
                'I': {'kind': 'ideal_module', 'generators': ['xy', 'xz']},
            },
            'tasks': [
                {'op': 'gamma', 'module': 'M', 'expect': {'gamma': ['xy', 'xz']}},
                {'op': 'hann', 'module': 'M', 'expect': {'hann': ['xy', 'xz']}},
                {'op': 'annihilator', 'module': 'M', 'expect': {'annihilator': ['xy', 'xz']}},
                {'op': 'gamma', 'module': 'RM', 'expect': {'gamma': ['xy', 'xz']}},
                {'op': 'annihilator', 'module': 'RM', 'expect': {'annihilator': []}},
                {'op': 'gamma', 'module': 'I', 'expect': {'gamma': ['y', 'z']}},
                {'op': 'annihilator', 'module': 'I', 'expect': {'annihilator': []}},
                {'op': 'gamma_grade_check', 'module': 'I', 'expect': {'holds': True, 'radical_equal': False}},
            ],
        },
    ],
    5: [
        {
            'name': 'example_5_13',
            'ring': 'F5[X,Y,Z]/((X+Y+Z)^5)',
            'objects': {'xi': {'kind': 'ideal', 'generators': ['(x+y+z)^2']}},
            'tasks': [
                {'op': 'eass', 'ideal': 'xi', 'window': 8, 'expect': {
                    'period': 2, 'periodic_from': 1, 'verdict': 'finiteness evidence: periodic from step 1'
                }},
            ],
        },
        {
            'name': 'example_5_14',
            'ring': 'QQ[X,Y,Z]/(X^2,XYZ)',
            'objects': {'I': {'kind': 'ideal', 'generators': ['x']},
                        'J': {'kind': 'ideal', 'generators': ['x', 'yz']}},
            'tasks': [
                {'op': 'eass', 'ideal': 'I', 'window': 6, 'support_ideal': 'J', 'expect': {
                    'betti': [1, 2, 3, 5, 8, 13, 21, 34], 'support_holds': True
                }},
            ],
        },
    ],
    6: [
        {
            'name': 'generator_count',
            'ring': 'QQ[x,y,z]',
            'objects': {'I': {'kind': 'ideal', 'generators': ['xy', 'xz', 'yz']},
                        'K': {'kind': 'ideal', 'generators': ['x', 'y']}},
            'tasks': [
                {'op': 'generator_count_check', 'ideal': 'I',
                 'expect': {'holds': True, 'betti': [1, 3, 2], 'mu_ext': 2}},
                {'op': 'generator_count_check', 'ideal': 'K',
                 'expect': {'holds': True, 'betti': [1, 2, 1], 'mu_ext': 1}},
            ],
        },
    ],
}

Corpus = Callable[[int, int], List[Ideal]]


def _monomial(size: int, seed: int) -> List[Ideal]:
    return monomial_corpus(size, seed)


def _height_two(size: int, seed: int) -> List[Ideal]:
    return height_two_perfect_corpus(min(size, HEIGHT_TWO_CORPUS_SIZE), seed)


SECTION_SUITES: Dict[int, List[tuple]] = {
    2: [('support_identity', _monomial), ('dimension_formula', _monomial), ('grade', _monomial),
        ('bridger_stability', _monomial), ('ext_duality', _height_two)],
    3: [('ext_dimension_bound', _monomial), ('ass_containment', _monomial), ('diagonal_stabilization', _monomial)],
    4: [('gamma', _monomial), ('hann_containment', _monomial), ('gamma_grade', _monomial)],
    5: [('ext_shift', _monomial)],
    6: [('generator_count', _height_two), ('betti_top_ext', _monomial)],
}

SECTIONS = tuple(sorted(GOLDEN))


@dataclass
class SectionResult:
    """Golden scenario reports and suite results of one group of checks."""

    section: int
    scenarios: List[Report] = field(default_factory=list)
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.scenarios) and all(suite.passed for suite in self.suites)

    def to_json(self) -> dict:
        return {
            'section': self.section,
            'passed': self.passed,
            'scenarios': [report.to_json() for report in self.scenarios],
            'suites': [suite.to_json() for suite in self.suites],
        }


@dataclass
class VerificationReport:
    """Aggregate of every section run, with the seed and corpus size that produced it."""

    seed: int
    corpus_size: int
    settings: Dict[str, Any]
    sections: List[SectionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            'verification': 'worked examples and property suites',
            'seed': self.seed,
            'corpus_size': self.corpus_size,
            'settings': self.settings,
            'passed': self.passed,
            'sections': [section.to_json() for section in self.sections],
        }


def _selected(only: Optional[Iterable[int]]) -> List[int]:
    if not only:
        return list(SECTIONS)
    chosen = sorted(set(int(section) for section in only))
    unknown = [section for section in chosen if section not in GOLDEN]
    if unknown:
        raise UsageError(f"unknown sections {unknown}; expected some of {list(SECTIONS)}")
    return chosen


def verify_paper(only: Optional[Iterable[int]] = None, seed: Optional[int] = None, corpus_size: Optional[int] = None,
                 parallel: bool = False, settings: Optional[Settings] = None) -> VerificationReport:
    """Run the golden scenarios and the property suites of the selected sections.

    :param only: Sections to run, all of them by default
    :param seed: Corpus seed, ``Settings().seed`` by default
    :param corpus_size: Size of the monomial corpus, ``Settings().corpus_size`` by default
    :param parallel: Run tasks and suite items on a thread pool
    :raise UsageError: for unknown sections or a negative corpus size
    """

    settings = settings or Settings()
    seed = settings.seed if seed is None else seed
    corpus_size = settings.corpus_size if corpus_size is None else corpus_size
    if corpus_size < 0:
        raise UsageError(f"corpus size must be non-negative, got {corpus_size}")

    report = VerificationReport(seed, corpus_size, {
        'degree_cap': settings.degree_cap,
        'window': settings.window if settings.window is not None else DEFAULT_WINDOW,
    })
    corpora: Dict[Corpus, List[Ideal]] = {}

    for section in _selected(only):
        result = SectionResult(section)
        for data in GOLDEN[section]:
            scenario = parse_scenario(data, f"section {section}", settings.degree_cap)
            result.scenarios.append(run_scenario(scenario, settings, parallel))

        for name, build in SECTION_SUITES[section]:
            if build not in corpora:
                corpora[build] = build(corpus_size, seed)
            result.suites.append(SUITES[name](corpora[build], parallel=parallel))

        LOGGER.fields({'section': section, 'passed': result.passed}).info('section verified')
        report.sections.append(result)

    return report
