import os
import tempfile
import unittest

import numpy as np

from src.exceptions import IoError, SeedError
from src.montecarlo.batch_config import BatchConfig
from src.montecarlo.montecarlo_enums.process_tag import ProcessTag
from src.montecarlo.sample_batch import SampleBatch


class TestSampleBatch(unittest.TestCase):

    def setUp(self):
        values = np.array([[0.1, 1.0 / 3.0], [2.5e-300, -7.0], [1e300, 0.2]])
        self.batch = SampleBatch(ProcessTag.W_advdiff, 1.0, 7, values)

    def test_shape(self):
        self.assertEqual(self.batch.n_samples, 3)
        self.assertEqual(self.batch.dim, 2)
        self.assertEqual(self.batch.header(), ["index", "component_0", "component_1"])

    def test_csv_reparses_exactly(self):
        text = self.batch.to_csv()
        self.assertTrue(text.startswith("index,component_0,component_1\n0,0.1,"))
        restored = SampleBatch.from_csv(text, ProcessTag.W_advdiff, 1.0, 7)
        np.testing.assert_array_equal(restored.values, self.batch.values)

    def test_write_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "samples.csv")
            text = self.batch.to_csv(path)
            with open(path) as handle:
                self.assertEqual(handle.read(), text)
            with self.assertRaises(IoError):
                self.batch.to_csv(os.path.join(directory, "missing", "samples.csv"))

    def test_summary(self):
        batch = SampleBatch(ProcessTag.L_beta, 1.0, 7, np.array([1.0, 2.0, 3.0]))
        self.assertEqual(batch.summary(), [(2.0, 1.0)])

    def test_invalid(self):
        with self.assertRaises(SeedError):
            SampleBatch(ProcessTag.L_beta, 1.0, 7, np.empty((0, 1)))
        with self.assertRaises(SeedError):
            BatchConfig(0)
        with self.assertRaises(SeedError):
            BatchConfig(10, seed=-1)
        with self.assertRaises(SeedError):
            BatchConfig(10, worker_count=0)


if __name__ == '__main__':
    unittest.main()
