import unittest

import numpy as np

from src.montecarlo.random_streams import derive_seed, stream_generator, stream_indices


class TestRandomStreams(unittest.TestCase):

    def test_stream_is_keyed_by_seed_and_index(self):
        first = stream_generator(7, 0).random(5)
        np.testing.assert_array_equal(first, stream_generator(7, 0).random(5))
        self.assertFalse(np.array_equal(first, stream_generator(7, 1).random(5)))
        self.assertFalse(np.array_equal(first, stream_generator(8, 0).random(5)))

    def test_stream_indices(self):
        partitions = stream_indices(10, 3)
        self.assertEqual([part.tolist() for part in partitions], [[0, 3, 6, 9], [1, 4, 7], [2, 5, 8]])
        self.assertEqual(stream_indices(2, 4)[3].size, 0)

    def test_derive_seed(self):
        seed = derive_seed(42, "statistics.ratio_median", 1)
        self.assertEqual(seed, derive_seed(42, "statistics.ratio_median", 1))
        self.assertNotEqual(seed, derive_seed(42, "statistics.ratio_median", 2))
        self.assertNotEqual(seed, derive_seed(42, "statistics.ratio_scaling", 1))
        self.assertTrue(0 <= seed < 2 ** 64)


if __name__ == '__main__':
    unittest.main()
