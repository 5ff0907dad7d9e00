#!/usr/bin/env python3
"""Tests for diagonal observables and their O_j decompositions"""

import unittest
from fractions import Fraction
from unittest.mock import Mock

import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from models.observable import DiagonalObservable, PauliDecomposition
from services.observable_service import ObservableService
from services.state_service import StateService
from tests_fixtures import BETA_TABLE_4, GAUSSIAN_4, PHI_POWERS
from utils.errors import DimensionError, ParameterError


class TestDecomposition(unittest.TestCase):
    """beta = 2^-n H diag"""

    def setUp(self):
        self.service = ObservableService()

    def test_phi_values(self):
        phi = self.service.phi_power(4, 1).diag
        self.assertEqual(phi[0], 1.0)
        self.assertEqual(phi[15], -1.0)
        self.assertAlmostEqual(phi[1], 13.0 / 15.0, places=15)

    def test_phi_is_sum_of_single_qubit_z(self):
        beta = self.service.decompose(self.service.phi_power(4, 1)).beta
        expected = np.zeros(16)
        expected[[1, 2, 4, 8]] = [1 / 15, 2 / 15, 4 / 15, 8 / 15]
        np.testing.assert_allclose(beta, expected, atol=1e-15)

    def test_beta_table(self):
        table = self.service.phi_power_table(4, PHI_POWERS)
        rows = {row['j']: row for row in table['rows']}
        self.assertEqual(sorted(rows), sorted(BETA_TABLE_4))
        for j, (s, q_s, betas) in BETA_TABLE_4.items():
            self.assertEqual(rows[j]['sequency'], s)
            self.assertEqual(rows[j]['q_s'], q_s)
            for p, expected in zip(PHI_POWERS, betas):
                self.assertAlmostEqual(rows[j]['beta'][p], expected, delta=0.0005, msg=f"j={j} p={p}")

    def test_phi_squared_has_no_four_body_term(self):
        # exact rational arithmetic: phi^2 only couples pairs of qubits
        top = 15
        diag = [Fraction(top - 2 * l, top) ** 2 for l in range(16)]
        beta_15 = sum(d * (-1) ** bin(15 & l).count('1') for l, d in enumerate(diag)) / 16
        self.assertEqual(beta_15, 0)
        beta = self.service.decompose(self.service.phi_power(4, 2)).beta
        self.assertLess(abs(beta[15]), 1e-15)

    def test_sequency_report_is_ordered(self):
        decomposition = self.service.decompose(self.service.phi_power(4, 2))
        rows = self.service.sequency_report(decomposition)
        self.assertEqual([row.j for row in rows], [0, 12, 6, 10, 3, 5, 9])
        self.assertEqual([row.sequency for row in rows], sorted(row.sequency for row in rows))
        self.assertEqual(rows[1].to_dict()['q_s'], 2)
        self.assertEqual(rows[1].pauli, 'ZZII')

    def test_sequency_report_on_phi_parity_support(self):
        decomposition = self.service.decompose(self.service.phi_power(4, 2))
        support = self.service.phi_parity_support(4, 2)
        self.assertEqual(support, sorted(BETA_TABLE_4))
        rows = self.service.sequency_report(decomposition, support=support)
        self.assertEqual([row.j for row in rows], [0, 12, 6, 10, 3, 15, 5, 9])
        for row in rows:
            s, q_s, betas = BETA_TABLE_4[row.j]
            self.assertEqual((row.sequency, row.most_uv_qubit), (s, q_s))
            self.assertAlmostEqual(row.beta, betas[0], delta=0.0005, msg=f"j={row.j}")
        self.assertEqual(rows[5].beta, 0.0)

    def test_phi_squared_pair_coefficients_on_eight_qubits(self):
        n = 8
        top = 2 ** n - 1
        beta = self.service.decompose(self.service.phi_power(n, 2)).beta
        expected = np.zeros(2 ** n)
        expected[0] = sum(4 ** a for a in range(n)) / top ** 2
        for a in range(n):
            for b in range(a + 1, n):
                expected[(1 << a) | (1 << b)] = 2 * 2 ** a * 2 ** b / top ** 2
        np.testing.assert_allclose(beta, expected, rtol=0, atol=1e-14)

    def test_sequency_report_include_zero(self):
        decomposition = self.service.decompose(self.service.phi_power(3, 2))
        self.assertEqual(len(self.service.sequency_report(decomposition, include_zero=True)), 8)

    def test_recompose(self):
        observable = self.service.phi_power(5, 3)
        restored = self.service.recompose(self.service.decompose(observable))
        np.testing.assert_allclose(restored.diag, observable.diag, atol=1e-14)

    def test_identity(self):
        beta = self.service.decompose(self.service.identity(3)).beta
        np.testing.assert_array_equal(beta, [1, 0, 0, 0, 0, 0, 0, 0])

    def test_field_power_on_symmetric_window_is_phi_power(self):
        field = self.service.field_power(4, 2, 1.0, -1.0)
        np.testing.assert_allclose(field.diag, self.service.phi_power(4, 2).diag, atol=1e-15)

    def test_offset_field_has_identity_part(self):
        beta = self.service.decompose(self.service.field_diagonal(3, 0.0, 7.0)).beta
        self.assertAlmostEqual(beta[0], 3.5, places=12)

    def test_bad_power(self):
        with self.assertRaises(ParameterError):
            self.service.phi_power(4, 0)
        with self.assertRaises(ParameterError):
            self.service.phi_power(4, 1.5)

    def test_expectation_of_phi_squared(self):
        states = StateService()
        expectations = states.expectations(states.gaussian(**GAUSSIAN_4))
        observable = self.service.phi_power(4, 2)
        value = self.service.expectation(self.service.decompose(observable), expectations)
        probabilities = states.gaussian(**GAUSSIAN_4).probabilities().probabilities
        self.assertAlmostEqual(value, float(np.dot(probabilities, observable.diag)), places=12)

    def test_expectation_register_mismatch(self):
        states = StateService()
        with self.assertRaises(DimensionError):
            self.service.expectation(
                self.service.decompose(self.service.phi_power(3, 2)),
                states.expectations(states.basis_state(4))
            )

    def test_load_observable(self):
        repository = Mock()
        repository.load_vector.return_value = np.array([1.0, 2.0, 3.0, 4.0])
        service = ObservableService(repository)
        observable = service.load_observable('o.txt')
        self.assertEqual(observable.n, 2)
        with self.assertRaises(DimensionError):
            service.load_observable('o.txt', n=3)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 8).flatmap(
        lambda n: arrays(np.float64, 2 ** n, elements=st.floats(-1e3, 1e3, allow_nan=False))
    ))
    def test_parseval(self, diag):
        beta = self.service.decompose(DiagonalObservable(diag)).beta
        lhs = float(np.dot(diag, diag)) / diag.size
        self.assertAlmostEqual(float(np.dot(beta, beta)), lhs, delta=1e-9 * max(1.0, lhs))

    def test_nonzero(self):
        decomposition = PauliDecomposition(np.array([0.5, 0.0, 1e-20, -0.25]))
        self.assertEqual(decomposition.nonzero(1e-12).tolist(), [0, 3])


if __name__ == '__main__':
    unittest.main()
