#!/usr/bin/env python3
"""Tests for the file-backed vector, config and report repositories"""

import json
import os
import tempfile
import unittest

import numpy as np

from repositories.file_repository import FileReportRepository, FileVectorRepository, JsonRunConfigRepository
from utils.errors import DimensionError, ValidationError


class RepositoryTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def write(self, name, text):
        with open(self.path(name), 'w', encoding='utf-8') as handle:
            handle.write(text)
        return self.path(name)


class TestFileVectorRepository(RepositoryTestCase):
    """JSON arrays and one-number-per-line files"""

    def setUp(self):
        super().setUp()
        self.repository = FileVectorRepository()

    def test_json_array(self):
        path = self.write('psi.json', '[0.5, 0.5, 0.5, 0.5]')
        np.testing.assert_array_equal(self.repository.load_vector(path), [0.5] * 4)

    def test_line_format_skips_comments_and_blanks(self):
        path = self.write('psi.txt', '# amplitudes\n0.6\n\n0.8\n')
        np.testing.assert_array_equal(self.repository.load_vector(path), [0.6, 0.8])

    def test_rejects_non_power_of_two(self):
        path = self.write('psi.txt', '1\n2\n3\n')
        with self.assertRaises(DimensionError):
            self.repository.load_vector(path)

    def test_rejects_bad_content(self):
        cases = {
            'empty.txt': '   \n',
            'word.txt': '0.6\nzero\n',
            'nested.json': '[[1, 0]]',
            'broken.json': '[1, 0',
            'nan.txt': 'nan\n1\n'
        }
        for name, text in cases.items():
            with self.assertRaises(ValidationError, msg=name):
                self.repository.load_vector(self.write(name, text))

    def test_missing_file(self):
        with self.assertRaises(ValidationError):
            self.repository.load_vector(self.path('missing.txt'))

    def test_save_then_load(self):
        target = self.path(os.path.join('out', 'diag.json'))
        self.repository.save_vector(target, np.array([1.0, -0.25]))
        np.testing.assert_array_equal(self.repository.load_vector(target), [1.0, -0.25])


class TestJsonRunConfigRepository(RepositoryTestCase):

    def test_load(self):
        path = self.write('run.json', json.dumps({'n': 4, 'surface_code': {'p': 1e-3}}))
        self.assertEqual(JsonRunConfigRepository().load_config(path)['surface_code'], {'p': 1e-3})

    def test_rejects_non_object(self):
        with self.assertRaises(ValidationError):
            JsonRunConfigRepository().load_config(self.write('run.json', '[1, 2]'))
        with self.assertRaises(ValidationError):
            JsonRunConfigRepository().load_config(self.write('bad.json', '{"n": '))


class TestFileReportRepository(RepositoryTestCase):

    def test_creates_parent_directories(self):
        target = self.path(os.path.join('a', 'b', 'report.csv'))
        FileReportRepository().write_report(target, 'q,gamma\n')
        with open(target, encoding='utf-8') as handle:
            self.assertEqual(handle.read(), 'q,gamma\n')


if __name__ == '__main__':
    unittest.main()
