# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

import unittest

if __name__ == "__main__":  # pragma: no cover
    unittest.main(module="unimodp.tests", verbosity=2)
