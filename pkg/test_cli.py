#!/usr/bin/env python3
"""Command-line tests: output formats, config merging and exit codes"""

import csv
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

import app
from config import Config
from controllers.qec_controller import SWEEP_COLUMNS
from tests_fixtures import EXPECTATIONS_4, GAMMA_8_IR_FIRST, gamma_tolerance

GAUSSIAN_4_FLAGS = ['--n', '4', '--mu', '7.5', '--sigma', str(8.0 / 3.0)]
WORKED_EXAMPLE_FLAGS = ['--gammas-ir-first', ','.join(str(g) for g in GAMMA_8_IR_FIRST),
                    '--p', '1e-3', '--eps-per-cycle', '1e-5']


def run(argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = app.main(argv)
    return code, stdout.getvalue(), stderr.getvalue()


class TestReports(unittest.TestCase):
    """Successful commands in each format"""

    def test_expectations_csv_for_eight_qubits(self):
        code, out, _ = run(['expectations', '--n', '8', '--mu', '127.5', '--sigma', str(50.0 / 3.0),
                            '--format', 'csv'])
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ['j', 'sequency', 'q_s', 'expectation'])
        self.assertEqual(len(rows), 257)
        self.assertEqual(rows[1][:3], ['0', '0', ''])
        self.assertAlmostEqual(float(rows[1][3]), 1.0, places=10)

    def test_expectations_json(self):
        code, out, _ = run(['expectations'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['n'], 4)
        row = document['rows'][12]
        self.assertEqual((row['j'], row['sequency'], row['q_s']), (12, 2, 2))
        self.assertAlmostEqual(row['expectation'], EXPECTATIONS_4[12], delta=0.0005)

    def test_expectations_sorted_by_magnitude(self):
        code, out, _ = run(['expectations', '--sort-magnitude', '--format', 'csv'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        magnitudes = [abs(float(row[3])) for row in list(csv.reader(io.StringIO(out)))[1:]]
        self.assertEqual(magnitudes, sorted(magnitudes, reverse=True))

    def test_text_format(self):
        code, out, _ = run(['expectations', '--format', 'text'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('expectations\n'))
        self.assertIn('sequency', out)

    def test_gammas_schema(self):
        code, out, _ = run(['gammas', '--n', '8', '--mu', '127.5', '--sigma', str(50.0 / 3.0)])
        self.assertEqual(code, 0)
        document = json.loads(out)
        for key in ('gamma_uv_first', 'gamma_ir_first', 'expectation_noiseless', 'xi', 'fit_quality'):
            self.assertIn(key, document)
        self.assertEqual(document['gamma_ir_first'], document['gamma_uv_first'][::-1])
        self.assertLess(document['xi'], 0.0)
        for expected, value in zip(GAMMA_8_IR_FIRST, document['gamma_ir_first']):
            self.assertAlmostEqual(abs(value), expected, delta=gamma_tolerance(expected))

    def test_identity_observable_has_no_decay_length(self):
        code, out, _ = run(['gammas', '--observable', 'identity'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertIsNone(document['xi'])
        self.assertEqual(document['gamma_uv_first'], [0.0, 0.0, 0.0, 0.0])
        code, out, _ = run(['gammas', '--n', '1'])
        self.assertEqual(code, 0)
        self.assertNotIn('-0.0', out)

    def test_decompose_lists_phi_parity_rows(self):
        code, out, _ = run(['decompose', '--n', '4', '--format', 'csv'])
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))[1:]
        self.assertEqual([int(row[0]) for row in rows], [0, 12, 6, 10, 3, 15, 5, 9])
        self.assertEqual(float(rows[5][4]), 0.0)

    def test_decompose_power_table(self):
        code, out, _ = run(['decompose', '--n', '4', '--powers', '2,4', '--format', 'csv'])
        self.assertEqual(code, 0)
        header = out.splitlines()[0]
        self.assertEqual(header, 'j,sequency,q_s,pauli,beta_p2,beta_p4')

    def test_polynomial_constant_is_noiseless_value(self):
        code, out, _ = run(['polynomial', '--j', '12'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        terms = json.loads(out)['polynomials'][0]['terms']
        self.assertEqual(terms[0]['qubits'], [])
        self.assertAlmostEqual(terms[0]['coefficient'], EXPECTATIONS_4[12], delta=0.0005)

    def test_optimize_totals(self):
        code, out, _ = run(['optimize'] + WORKED_EXAMPLE_FLAGS)
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['homogeneous']['total_physical'], 1352)
        self.assertEqual(document['uniform_error']['total_physical'], 944)
        self.assertEqual(document['optimized']['total_physical'], 840)
        self.assertEqual(document['optimized']['d_ir_first'], [15, 13, 11, 11, 9, 7, 7, 5])
        self.assertAlmostEqual(document['reduction_optimized_pct'], 37.9, delta=0.1)

    def test_optimize_csv_lists_distances(self):
        code, out, _ = run(['optimize', '--format', 'csv'] + WORKED_EXAMPLE_FLAGS)
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ['scheme', 'd_ir_first', 'total_physical', 'achieved_error_per_cycle',
                                   'reduction_pct'])
        self.assertEqual(rows[3][:3], ['optimized', '15 13 11 11 9 7 7 5', '840'])

    def test_sweep_marks_infeasible_targets_with_empty_fields(self):
        code, out, _ = run(['sweep', '--format', 'csv', '--eps-min', '1e-40', '--eps-max', '1e-40',
                            '--gammas-ir-first', ','.join(str(g) for g in GAMMA_8_IR_FIRST)])
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], SWEEP_COLUMNS)
        self.assertEqual(rows[1][1:], ['', '', '', '', ''])

    def test_sweep_default_grid(self):
        code, out, _ = run(['sweep', '--format', 'csv', '--gammas-ir-first',
                            ','.join(str(g) for g in GAMMA_8_IR_FIRST)])
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))[1:]
        self.assertEqual(len(rows), 53)
        first, last = float(rows[0][5]), float(rows[-1][5])
        self.assertTrue(10.0 <= first <= 30.0)
        self.assertTrue(50.0 <= last <= 65.0)

    def test_verify_passes(self):
        code, out, _ = run(['verify', '--n', '3', '--trials', '5', '--seed', '7'])
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertTrue(document['passed'])
        self.assertLess(document['max_deviation'], 1e-9)

    def test_profiles_and_layout(self):
        code, out, _ = run(['profiles', '--n', '5', '--sigmas', '2,4', '--seed', '3'])
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)['profiles']), 3)
        code, out, _ = run(['layout', '--gammas-ir-first=-3,-1,-0.5', '--device-eta', '0.01,0.001,0.005'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['device_for_qubit'], [0, 2, 1])

    def test_deterministic_output(self):
        argv = ['gammas', '--state', 'random', '--seed', '42', '--n', '5']
        self.assertEqual(run(argv)[1], run(argv)[1])


class TestConfigSources(unittest.TestCase):
    """Config files merged with flags"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write_config(self, document):
        path = os.path.join(self.directory.name, 'run.json')
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(document, handle)
        return path

    def test_flags_override_config_file(self):
        path = self.write_config({'n': 4, 'state': {'mu': 7.5, 'sigma': 8.0 / 3.0}, 'format': 'csv'})
        code, out, _ = run(['expectations', '--config', path])
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('j,sequency,q_s,expectation\n'))
        code, out, _ = run(['expectations', '--config', path, '--format', 'json', '--n', '3'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['n'], 3)

    def test_eps_per_cycle_flag_replaces_epsilon_pair(self):
        path = self.write_config({
            'gammas_ir_first': GAMMA_8_IR_FIRST,
            'surface_code': {'p': 1e-3, 'epsilon': 1.0, 'n_cycles': 2}
        })
        code, out, _ = run(['optimize', '--config', path, '--eps-per-cycle', '1e-5'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['optimized']['total_physical'], 840)

    def test_output_file(self):
        target = os.path.join(self.directory.name, 'reports', 'gammas.csv')
        code, out, _ = run(['gammas', '--format', 'csv', '--output', target] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 0)
        self.assertEqual(out, '')
        with open(target, encoding='utf-8') as handle:
            self.assertEqual(handle.readline(), 'q,k_ir,gamma\n')

    def test_unknown_config_key(self):
        path = self.write_config({'n': 4, 'colour': 'blue'})
        code, _, err = run(['expectations', '--config', path])
        self.assertEqual(code, 1)
        self.assertIn('colour', err)


class TestExitCodes(unittest.TestCase):
    """0 ok, 1 validation, 2 infeasible, 3 tolerance or internal"""

    def test_validation_errors(self):
        for argv in (['expectations', '--n', '0'],
                     ['expectations', '--n', '4', '--sigma', '-1'],
                     ['expectations', '--n', '4', '--bogus'],
                     ['optimize', '--gammas-ir-first', '1,2', '--p', '0.01'],
                     ['gammas', '--n', '4', '--power', '0']):
            code, _, err = run(argv)
            self.assertEqual(code, 1, msg=' '.join(argv))
            self.assertIn('error', err)

    def test_missing_state_file(self):
        code, _, err = run(['expectations', '--state-file', '/nonexistent/psi.txt'])
        self.assertEqual(code, 1)

    def test_infeasible_target(self):
        code, out, err = run(['optimize', '--gammas-ir-first', ','.join(str(g) for g in GAMMA_8_IR_FIRST),
                              '--eps-per-cycle', '1e-40'])
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertEqual(json.loads(err)['binding_qubit'], 7)

    def test_infeasible_target_text(self):
        code, _, err = run(['optimize', '--format', 'text', '--gammas-ir-first', '1', '--eps-per-cycle', '1e-40'])
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith('error: '))

    def test_tolerance_failure_still_reports(self):
        with patch.object(Config, 'VERIFY_TOLERANCE', -1.0):
            code, out, _ = run(['verify', '--n', '2', '--trials', '1', '--seed', '1'])
        self.assertEqual(code, 3)
        self.assertFalse(json.loads(out)['passed'])

    def test_subnormal_sensitivity_is_not_an_internal_error(self):
        code, out, _ = run(['optimize', '--gammas-ir-first', '1e-320,1', '--p', '1e-3', '--eps-per-cycle', '1e-5'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['optimized']['d_ir_first'][0], 3)

    def test_internal_error(self):
        with patch('app.dispatch', side_effect=RuntimeError('boom')):
            code, _, err = run(['gammas'] + GAUSSIAN_4_FLAGS)
        self.assertEqual(code, 3)
        self.assertIn('boom', err)


if __name__ == '__main__':
    unittest.main()
