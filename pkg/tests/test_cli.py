"""Test scenario files, reports and the command line."""

import json
from pathlib import Path

import pytest
from expects import be_false, be_true, contain, equal, expect, have_key, have_keys, have_len, raise_error
from testfixtures import LogCapture

from extscope.cli import main, parse_scenario, run_scenario, verify_paper
from extscope.cli.compute import build_module, compute
from extscope.cli.report import dumps, render_text, to_plain
from extscope.config import Settings
from extscope.errors import ParseError, UsageError
from extscope.poly import parse_ring

SCENARIOS = Path(__file__).resolve().parent.parent / 'scenarios'

XY_XZ = {'M': {'kind': 'quotient', 'generators': ['xy', 'xz']}}


def _scenario(tasks, objects=None, ring='QQ[x,y,z]', **extra):
    return parse_scenario({'name': 'inline', 'ring': ring, 'objects': objects or XY_XZ, 'tasks': tasks, **extra})


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestScenarios:
    """Parsing and validation of scenario tables."""

    def test_builds_objects_and_tasks(self):
        scenario = _scenario([{'op': 'ext', 'module': 'M', 'index': 1, 'expect': {'mu': 1}}])

        expect(scenario.objects).to(have_key('M'))
        expect(scenario.tasks[0].params).to(equal({'module': 'M', 'index': 1}))
        expect(scenario.tasks[0].expect).to(equal({'mu': 1}))

    def test_direct_sums(self):
        objects = {**XY_XZ, 'R': {'kind': 'free', 'rank': 1}, 'S': {'kind': 'sum', 'of': ['R', 'M']}}
        scenario = _scenario([], objects)

        expect(scenario.objects['S'].mu()).to(equal(2))

    def test_needs_a_ring(self):
        expect(lambda: parse_scenario({'tasks': []})).to(raise_error(ParseError))

    def test_rejects_unknown_ops(self):
        expect(lambda: _scenario([{'op': 'tor', 'module': 'M'}])).to(raise_error(ParseError))

    def test_rejects_undefined_objects(self):
        expect(lambda: _scenario([{'op': 'ext', 'module': 'N', 'index': 1}])).to(raise_error(ParseError))

    def test_rejects_missing_parameters(self):
        expect(lambda: _scenario([{'op': 'ext', 'module': 'M'}])).to(raise_error(ParseError))

    def test_rejects_unknown_expected_fields(self):
        task = {'op': 'ext', 'module': 'M', 'index': 1, 'expect': {'colour': 'red'}}

        expect(lambda: _scenario([task])).to(raise_error(ParseError))

    def test_rejects_unknown_object_kinds(self):
        expect(lambda: _scenario([], {'M': {'kind': 'sheaf'}})).to(raise_error(ParseError))

    def test_rejects_ideals_in_module_slots(self):
        objects = {'I': {'kind': 'ideal', 'generators': ['x']}}

        expect(lambda: _scenario([{'op': 'ext', 'module': 'I', 'index': 1}], objects)).to(raise_error(ParseError))


class TestReports:
    """Running scenarios into reports."""

    def test_passing_expectations(self):
        report = run_scenario(_scenario([
            {'op': 'ext', 'module': 'M', 'index': 1, 'expect': {'annihilator': ['x'], 'hilbert': '1/(1-t)^2'}},
            {'op': 'grade', 'module': 'M', 'expect': {'grade': 1}},
        ]))

        expect(report.passed).to(be_true)
        expect(report.exit_code).to(equal(0))
        expect([outcome.status for outcome in report.outcomes]).to(equal(['pass', 'pass']))

    def test_hilbert_comparisons_are_invariant_level_evidence(self):
        report = run_scenario(_scenario([{'op': 'ext', 'module': 'M', 'index': 2, 'expect': {'hilbert': '1/(1-t)'}}]))

        expect(report.outcomes[0].evidence['hilbert']).to(equal('invariant-level'))

    def test_failing_expectation_is_logged(self):
        scenario = _scenario([{'op': 'grade', 'module': 'M', 'expect': {'grade': 2}}])

        with LogCapture(names='extscope', attributes=('levelname', 'message', 'field')) as capture:
            report = run_scenario(scenario)

        expect(report.exit_code).to(equal(1))
        expect(report.outcomes[0].status).to(equal('fail'))
        expect(capture.actual()).to(contain(('ERROR', 'expectation failed', 'grade')))

    def test_tasks_without_expectations_are_computed(self):
        report = run_scenario(_scenario([{'op': 'resolve', 'module': 'M'}]))

        expect(report.outcomes[0].status).to(equal('computed'))
        expect(report.passed).to(be_true)

    def test_radical_expectations(self):
        task = {'op': 'gamma', 'module': 'M', 'expect': {'gamma': ['xy', 'xz']}}
        hann = {'op': 'hann', 'module': 'M', 'expect': {'hann': {'radical': ['x^2y', 'xz']}}}

        expect(run_scenario(_scenario([task, hann])).passed).to(be_true)

    def test_parallel_runs_keep_task_order(self):
        tasks = [{'op': 'ext', 'module': 'M', 'index': i} for i in range(4)]
        report = run_scenario(_scenario(tasks), parallel=True)

        expect([outcome.position for outcome in report.outcomes]).to(equal([0, 1, 2, 3]))
        expect(report.outcomes[3].computed['zero']).to(be_true)

    def test_warnings_are_attached_to_their_task(self):
        objects = {'M': {'kind': 'quotient', 'generators': ['x']}}
        scenario = _scenario([{'op': 'gamma', 'module': 'M', 'window': 2}, {'op': 'mu', 'module': 'M'}], objects,
                             ring='QQ[x,y,z]/(x^2,xy,xz)')
        report = run_scenario(scenario)

        messages = [warning['message'] for warning in report.outcomes[0].warnings]
        expect(messages).to(contain('gamma truncated to the window'))
        expect(report.outcomes[1].warnings).to(have_len(0))

    def test_echoes_settings_and_timing(self):
        report = run_scenario(_scenario([{'op': 'mu', 'module': 'M'}]), Settings(degree_cap=12, window=3), timing=True)
        payload = report.to_json()

        expect(payload['settings']).to(equal({'degree_cap': 12, 'window': 3, 'seed': 0}))
        expect(payload['tasks'][0]).to(have_key('seconds'))

    def test_json_has_no_bare_infinities(self):
        objects = {'M': {'kind': 'quotient', 'generators': ['x']}}
        scenario = _scenario([{'op': 'resolve', 'module': 'M', 'up_to': 2}], objects, ring='QQ[x,y,z]/(x^2,xy,xz)')

        payload = json.loads(dumps(run_scenario(scenario).to_json()))
        expect(payload['tasks'][0]['computed']['pd']).to(equal('inf'))

    def test_render_text(self):
        text = render_text({'a': {'b': 1}, 'c': [1, 2], 'd': None, 'e': []})

        expect(text.splitlines()).to(equal(['a.b  1', 'c    1, 2', 'd    null', 'e    -']))

    def test_to_plain_uses_the_report_encoder(self):
        ring = parse_ring('QQ[x,y]')

        expect(to_plain({'value': ring('x^2 + y')})).to(equal({'value': 'x^2 + y'}))


class TestGoldenScenarios:
    """The shipped scenario files."""

    @pytest.mark.parametrize('name', ['example_2_10', 'example_3_1', 'example_4_1'])
    def test_scenario_passes(self, name, capsys):
        code, out = _run(capsys, 'run', str(SCENARIOS / f"{name}.toml"))

        expect(code).to(equal(0))
        expect(json.loads(out)['passed']).to(be_true)

    def test_empty_scenario(self, capsys):
        code, out = _run(capsys, 'run', str(SCENARIOS / 'empty.toml'))

        expect(code).to(equal(0))
        expect(json.loads(out)['tasks']).to(equal([]))


class TestCommandLine:
    """Exit codes and subcommands."""

    def test_failed_expectations_exit_with_one(self, tmp_path, capsys):
        path = tmp_path / 'wrong.toml'
        path.write_text('ring = "QQ[x,y,z]"\n[objects.M]\nkind = "quotient"\ngenerators = ["x"]\n'
                        '[[tasks]]\nop = "grade"\nmodule = "M"\nexpect = { grade = 3 }\n', encoding='utf-8')

        code, out = _run(capsys, 'run', str(path))

        expect(code).to(equal(1))
        expect(json.loads(out)['passed']).to(be_false)

    def test_parse_errors_exit_with_two(self, tmp_path, capsys):
        path = tmp_path / 'broken.toml'
        path.write_text('ring = "QQ[x,y,z"\n', encoding='utf-8')

        with LogCapture(names='extscope', attributes=('levelname', 'message', 'error_type')) as capture:
            code, out = _run(capsys, 'run', str(path))

        expect(code).to(equal(2))
        expect(out).to(equal(''))
        expect(capture.actual()).to(contain(('ERROR', 'command failed', 'ParseError')))

    def test_missing_files_exit_with_two(self, tmp_path, capsys):
        code, _ = _run(capsys, 'run', str(tmp_path / 'absent.toml'))

        expect(code).to(equal(2))

    def test_computation_errors_exit_with_three(self, capsys):
        code, _ = _run(capsys, 'compute', 'ext', '--ring', 'QQ[x,y]', '--module', 'x^2 + y^2, xy', '--i', '1',
                       '--degree-cap', '2')

        expect(code).to(equal(3))

    def test_argument_errors_exit_with_two(self):
        with pytest.raises(SystemExit) as error:
            main(['verify-paper', '--only', '9'])

        expect(error.value.code).to(equal(2))

    def test_compute_ext(self, capsys):
        code, out = _run(capsys, 'compute', 'ext', '--module', 'xy, xz', '--i', '1')
        payload = json.loads(out)

        expect(code).to(equal(0))
        expect(payload['result']['mu']).to(equal(1))
        expect(payload['result']['dim']).to(equal(2))
        expect(payload['result']['zero']).to(be_false)

    def test_compute_resolve(self, capsys):
        _, out = _run(capsys, 'compute', 'resolve', '--module', 'xy, xz, yz')

        expect(json.loads(out)['result']['betti']).to(equal([1, 3, 2]))

    def test_compute_invariants_of_the_zero_module(self, capsys):
        _, out = _run(capsys, 'compute', 'invariants', '--module', '0')

        expect(json.loads(out)['result']['r']).to(equal(-1))

    def test_compute_eass(self, capsys):
        code, out = _run(capsys, 'compute', 'eass', '--ring', 'F5[X,Y,Z]/(X+Y+Z)^5', '--ideal', '(x+y+z)^2')
        payload = json.loads(out)

        expect(code).to(equal(0))
        expect(payload['settings']['window']).to(equal(8))
        expect(payload['result']['period']).to(equal(2))

    def test_text_output(self, capsys):
        _, out = _run(capsys, 'compute', 'ext', '--module', 'xy, xz', '--i', '2', '--format', 'text')

        expect(out).to(contain('result.mu'))
        expect(out).to(contain('command'))

    def test_compute_needs_one_module_source(self):
        ring = parse_ring('QQ[x,y,z]')

        expect(lambda: build_module(ring, module='x', free=2)).to(raise_error(UsageError))
        expect(lambda: build_module(ring)).to(raise_error(UsageError))
        expect(lambda: compute('ext', module='x')).to(raise_error(UsageError))
        expect(lambda: compute('eass', module='x')).to(raise_error(UsageError))
        expect(lambda: compute('tor', module='x')).to(raise_error(UsageError))

    def test_free_modules(self):
        ring = parse_ring('QQ[x,y,z]')

        expect(build_module(ring, free=2).mu()).to(equal(2))
        expect(build_module(ring, free=0).is_zero()).to(be_true)


class TestVerification:
    """Golden scenarios and property suites by section."""

    def test_unknown_sections(self):
        expect(lambda: verify_paper(only=[9])).to(raise_error(UsageError))

    def test_negative_corpus_size(self):
        expect(lambda: verify_paper(only=[6], corpus_size=-1)).to(raise_error(UsageError))

    def test_section_six(self, capsys):
        code, out = _run(capsys, 'verify-paper', '--only', '6', '--corpus-size', '2', '--seed', '5')
        payload = json.loads(out)

        expect(code).to(equal(0))
        expect(payload['seed']).to(equal(5))
        expect([section['section'] for section in payload['sections']]).to(equal([6]))
        expect([suite['suite'] for suite in payload['sections'][0]['suites']]).to(
            equal(['generator_count', 'betti_top_ext']))

    def test_section_two(self):
        report = verify_paper(only=[2], corpus_size=2)

        expect(report.passed).to(be_true)
        expect(report.sections[0].scenarios[0].name).to(equal('example_2_10'))

    def test_section_two_runs_the_duality_suites(self):
        report = verify_paper(only=[2], corpus_size=2, seed=11)
        suites = {suite.name: suite for suite in report.sections[0].suites}

        expect(suites).to(have_keys('bridger_stability', 'ext_duality'))
        expect(suites['ext_duality'].checked).to(equal(2))
        expect(suites['bridger_stability'].passed).to(be_true)

    def test_section_three_runs_the_diagonal_suite(self):
        report = verify_paper(only=[3], corpus_size=2, seed=11)

        expect([suite.name for suite in report.sections[0].suites]).to(contain('diagonal_stabilization'))
        expect(report.passed).to(be_true)
