import unittest

from src.cli.cli_enums.grid_variable import GridVariable
from src.cli.grid_request import GridRequest
from src.exceptions import UsageError


class TestGridRequest(unittest.TestCase):

    def test_parse(self):
        grid = GridRequest.parse("x:0:5:11")
        self.assertEqual(grid.variable, GridVariable.x)
        self.assertEqual(grid.values().tolist(), [0.5 * k for k in range(11)])

    def test_one_point_grid(self):
        grid = GridRequest.parse("xi:0:0:1")
        self.assertEqual(grid.values().tolist(), [0.0])

    def test_invalid(self):
        for text in ("x:0:5", "w:0:1:2", "x:1:0:5", "x:0:1:1", "x:0:1:0", "x:a:1:2", "t:0:1:1000001"):
            with self.assertRaises(UsageError, msg=text):
                GridRequest.parse(text)


if __name__ == '__main__':
    unittest.main()
