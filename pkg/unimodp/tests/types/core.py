# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

from unittest import TestCase

from unimodp.types import core


class CoreTypes(TestCase):
    def test_int_class(self):
        for value in (0, 1, "5", 2 ** 31 - 1):
            with self.subTest(f"valid int {value!r}"):
                result = core.Int(value)
                self.assertIsInstance(result, core.Int)
                self.assertEqual(result, int(value))

        for value, message in ((-1, "Int -1 < 0"), (2 ** 31, "Int 2147483648 >")):
            with self.subTest(f"invalid int {value!r}"):
                with self.assertRaisesRegex(ValueError, message):
                    core.Int(value)

        self.assertEqual(repr(core.Int(5)), "Int(5)")

    def test_positive_int(self):
        self.assertEqual(core.PositiveInt(1), 1)
        with self.assertRaisesRegex(ValueError, "PositiveInt 0 < 1"):
            core.PositiveInt(0)

    def test_prime(self):
        for value in (3, 5, 7, "11", 101):
            with self.subTest(f"odd prime {value!r}"):
                self.assertEqual(core.Prime(value), int(value))

        for value in (2, 4, 9, 15, 1):
            with self.subTest(f"not an odd prime {value!r}"):
                with self.assertRaisesRegex(ValueError, "not an odd prime"):
                    core.Prime(value)

    def test_prime_power(self):
        for q, expected in ((3, (3, 1)), (9, (3, 2)), (25, (5, 2)), (7, (7, 1))):
            with self.subTest(q=q):
                p, f = core.prime_power(q)
                self.assertIsInstance(p, core.Prime)
                self.assertEqual((p, f), expected)

        for q in (1, 6, 12):
            with self.subTest(q=q):
                with self.assertRaisesRegex(ValueError, "not a prime power"):
                    core.prime_power(q)

        with self.assertRaisesRegex(ValueError, "not an odd prime"):
            core.prime_power(8)

    def test_constants(self):
        self.assertEqual(core.Format.ALL, ("json", "csv", "md"))
        self.assertEqual(core.Variant.ALL, ("U", "SU", "GU", "U1"))
        self.assertIn(core.HalfTwist.STANDARD, core.HalfTwist.ALL)
        self.assertTrue(issubclass(core.InternalDefect, AssertionError))
