from unittest import TestCase

import numpy as np

from primal.common.digest import table_digest


class TableDigestTest(TestCase):

    def test__must_be_stable(self):
        table = np.arange(4).reshape(2, 2)
        self.assertEqual(table_digest(('ring', table)), table_digest(('ring', table.copy())))
        self.assertEqual(32, len(table_digest(('ring', table))))

    def test__must_depend_on_the_shape(self):
        values = np.arange(4)
        self.assertNotEqual(table_digest((values,)), table_digest((values.reshape(2, 2),)))

    def test__must_separate_the_parts(self):
        self.assertNotEqual(table_digest(('ab', 'c')), table_digest(('a', 'bc')))

    def test__must_ignore_the_table_dtype(self):
        table = [[0, 1], [1, 0]]
        self.assertEqual(table_digest((np.array(table, dtype=np.int8),)), table_digest((np.array(table),)))
