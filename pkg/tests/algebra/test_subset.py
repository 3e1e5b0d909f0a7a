from unittest import TestCase

import numpy as np

from primal.algebra.subset import SubSet
from primal.common.errors import InvalidParameterError


class SubSetTest(TestCase):

    def test_from_indices__must_keep_members_sorted(self):
        s = SubSet.from_indices(8, [5, 1, 3])
        self.assertEqual([1, 3, 5], s.to_list())
        self.assertEqual(3, len(s))
        self.assertIn(3, s)
        self.assertNotIn(2, s)

    def test_from_indices__must_raise_an_error_when_an_element_is_out_of_range(self):
        with self.assertRaises(InvalidParameterError):
            SubSet.from_indices(4, [4])

    def test_init__must_raise_an_error_when_the_bits_are_wider_than_the_universe(self):
        with self.assertRaises(InvalidParameterError):
            SubSet(2, 0b100)

    def test_from_mask__must_match_from_indices(self):
        mask = np.array([True, False, True, True, False])
        self.assertEqual(SubSet.from_indices(5, [0, 2, 3]), SubSet.from_mask(mask))

    def test_from_array__must_ignore_repeated_values(self):
        self.assertEqual([0, 2], SubSet.from_array(4, np.array([[2, 0], [0, 2]])).to_list())

    def test_first__must_return_the_smallest_member_or_minus_one(self):
        self.assertEqual(2, SubSet.from_indices(6, [4, 2]).first())
        self.assertEqual(-1, SubSet.empty(6).first())

    def test_set_operations(self):
        a, b = SubSet.from_indices(6, [0, 1, 2]), SubSet.from_indices(6, [2, 3])
        self.assertEqual([0, 1, 2, 3], a.union(b).to_list())
        self.assertEqual([2], a.intersection(b).to_list())
        self.assertEqual([0, 1], a.difference(b).to_list())
        self.assertTrue(a.intersection(b).issubset(a))
        self.assertFalse(a.issubset(b))

    def test_issubset__must_raise_an_error_for_different_universes(self):
        with self.assertRaises(InvalidParameterError):
            SubSet.full(3).issubset(SubSet.full(4))

    def test_sort_key__must_order_by_size_first(self):
        subsets = [SubSet.from_indices(4, [0, 1, 2]), SubSet.from_indices(4, [3]), SubSet.from_indices(4, [0, 1])]
        self.assertEqual([[3], [0, 1], [0, 1, 2]], [s.to_list() for s in sorted(subsets, key=SubSet.sort_key)])

    def test_full__must_be_full(self):
        self.assertTrue(SubSet.full(7).is_full())
        self.assertFalse(SubSet.from_indices(7, range(6)).is_full())

    def test_repr__must_list_the_members(self):
        self.assertEqual('{0,2}', repr(SubSet.from_indices(4, [2, 0])))
