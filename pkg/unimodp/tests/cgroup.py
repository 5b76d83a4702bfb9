# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

from unittest import TestCase

from unimodp import cgroup as C
from unimodp.chars import omega1
from unimodp.ffield import field_make, ONE
from unimodp.langlands import correspond, endo, param_classes, torus
from unimodp.types.core import HalfTwist
from unimodp.types.params import CEndoParam, CTorusParam

F9 = field_make(3, 1, 1)
F25 = field_make(5, 1, 1)


class CGroupTest(TestCase):
    def test_half_exponent(self):
        self.assertEqual(C.half_exponent(F9), 2)
        self.assertEqual(C.half_exponent(F9, HalfTwist.ALTERNATE), 6)
        self.assertEqual(C.half_exponent(F25), 3)
        with self.assertRaisesRegex(ValueError, "unknown half twist"):
            C.half_exponent(F9, "negative")

    def test_c_param(self):
        self.assertEqual(C.c_param(F9, "c_endo", 5, 2), CEndoParam(k=1, l=2))
        self.assertEqual(
            C.c_param(F9, "c_torus", 10, 2), CTorusParam(r=2, lambda_=F9.minus_one)
        )
        self.assertEqual(
            C.parse_c_param(F9, '{"type": "c_torus", "r": -1, "lambda": "1"}'),
            CTorusParam(r=7, lambda_=ONE),
        )
        self.assertEqual(str(C.c_endo(F9, 0, 1)), "Cφ[0,1]")

        with self.assertRaisesRegex(ValueError, "cannot build a C-parameter"):
            C.c_param(F9, "c_endo", 1)
        with self.assertRaisesRegex(ValueError, "cannot build a C-parameter"):
            C.c_param(F9, "torus", 1, 1)
        with self.assertRaisesRegex(ValueError, "must be a unit"):
            C.c_torus(F9, 0, F9.zero)
        with self.assertRaisesRegex(ValueError, "unknown CParam type"):
            C.parse_c_param(F9, '{"type": "endo", "k": 0, "l": 1}')

    def test_c_d(self):
        for tower in (F9, F25):
            for half in HalfTwist.ALL:
                with self.subTest(p=tower.p, half=half):
                    for a in (C.c_endo(tower, 0, 1), C.c_torus(tower, 3, tower.gen())):
                        self.assertEqual(C.c_d(tower, a, half), omega1(tower))

    def test_param_data(self):
        data = C.c_param_data(F9, C.c_torus(F9, 1, ONE))
        self.assertEqual(data.frobenius, F9.identity)
        self.assertEqual(data.central.r, 2)
        self.assertEqual([chi.r for chi in data.restriction], [3, 3])

        endo_data = C.c_param_data(F9, C.c_endo(F9, 1, 1), HalfTwist.ALTERNATE)
        self.assertEqual(endo_data.central.r, 6)
        self.assertEqual([chi.r for chi in endo_data.restriction], [3, 3])

    def test_c_equiv(self):
        pairs = (
            (C.c_torus(F9, 2, F9.minus_one), C.c_torus(F9, 6, F9.minus_one)),
            (C.c_endo(F9, 1, 1), C.c_torus(F9, 5, F9.minus_one)),
            (C.c_endo(F9, 0, 3), C.c_endo(F9, 3, 0)),
        )
        for a, b in pairs:
            with self.subTest(a=str(a), b=str(b)):
                self.assertTrue(C.c_equiv(F9, a, b))
                self.assertTrue(C.c_equiv(F9, b, a))
                self.assertTrue(C.c_intertwiner_oracle(F9, a, b))
                self.assertEqual(C.c_correspond(F9, a), C.c_correspond(F9, b))

        a, b = C.c_torus(F9, 2, F9.minus_one), C.c_torus(F9, 2, F9.gen())
        self.assertFalse(C.c_equiv(F9, a, b))
        self.assertFalse(C.c_intertwiner_oracle(F9, a, b))

    def test_c_orbit(self):
        self.assertEqual(
            C.c_orbit(F9, C.c_torus(F9, 2, F9.minus_one)),
            [C.c_torus(F9, 2, F9.minus_one), C.c_torus(F9, 6, F9.minus_one)],
        )
        self.assertEqual(
            C.c_orbit(F9, C.c_endo(F9, 1, 1)),
            [C.c_endo(F9, 1, 1), C.c_torus(F9, 5, F9.minus_one)],
        )
        self.assertEqual(len(C.c_param_classes(F9)), len(param_classes(F9)))

    def test_c_correspond(self):
        self.assertEqual(
            C.c_correspond(F9, C.c_torus(F9, -1, ONE)),
            correspond(F9, torus(F9, 0, ONE)),
        )
        self.assertEqual(
            C.c_correspond(F9, C.c_endo(F9, 0, 1)), correspond(F9, endo(F9, 0, 1))
        )
        self.assertEqual(C.to_l_param(F9, C.c_torus(F9, 7, ONE)), torus(F9, 0, ONE))

    def test_c_sweep(self):
        for half in HalfTwist.ALL:
            report = C.c_sweep(F9, half=half)
            with self.subTest(half=half):
                self.assertTrue(report.passed, report.failures)
                self.assertEqual(len(report.checks), 4)
