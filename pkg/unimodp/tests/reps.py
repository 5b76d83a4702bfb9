# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

from unittest import TestCase

from unimodp import reps
from unimodp.ffield import field_make, ONE
from unimodp.types.labels import (
    CharLabel,
    IrrepLabel,
    LPacket,
    PrincipalSeriesLabel,
    SLCusp,
    SLPrincipalSeries,
    SLSteinberg,
    SLTrivial,
    SteinbergLabel,
    SupercuspidalLabel,
)

F9 = field_make(3, 1, 1)
F25 = field_make(5, 1, 1)
F49 = field_make(7, 1, 1)


class RepsTest(TestCase):
    def test_constructors(self):
        self.assertEqual(reps.char(F9, 5), CharLabel(k=1))
        self.assertEqual(reps.steinberg(F9, -1), SteinbergLabel(k=3))
        self.assertEqual(reps.supercuspidal(F9, 6, 2), SupercuspidalLabel(k=2, r=2))
        self.assertEqual(
            reps.principal_series(F9, 9, F9.minus_one),
            PrincipalSeriesLabel(r=1, lambda_=F9.minus_one),
        )

        with self.assertRaisesRegex(ValueError, "π_r needs"):
            reps.supercuspidal(F9, 0, 3)
        with self.assertRaisesRegex(ValueError, "is reducible"):
            reps.principal_series(F9, 2, ONE)
        with self.assertRaisesRegex(ValueError, "must be a unit"):
            reps.principal_series(F9, 1, F9.zero)

    def test_classify(self):
        labels = reps.classify(F9)
        self.assertEqual(len(labels), 32)
        self.assertEqual(len(set(labels)), 32)
        self.assertEqual(str(labels[0]), "Char(0)")
        self.assertEqual(sum(1 for x in labels if x.is_supercuspidal), 12)

        for p, tower in ((3, F9), (5, F25), (7, F49)):
            with self.subTest(p=p):
                expected = 2 * (p + 1) + p * (p + 1)
                expected += (p * p - 1) - (p + 1) + (p - 2) * (p * p - 1)
                self.assertEqual(len(reps.classify(tower)), expected)

    def test_label_codec(self):
        x = IrrepLabel.from_dict({"type": "supercuspidal", "k": 2, "r": 1})
        self.assertEqual(x, SupercuspidalLabel(k=2, r=1))
        y = PrincipalSeriesLabel(r=5, lambda_=F9.minus_one)
        self.assertEqual(
            y.to_dict(), {"type": "principal_series", "r": 5, "lambda": "g^4"}
        )
        self.assertEqual(IrrepLabel.from_dict(y.to_dict()), y)

        packet = LPacket.of([y, x])
        self.assertEqual(packet.members, (y, x))
        self.assertEqual(LPacket.from_json_value(packet.to_json_value()), packet)
        self.assertEqual(str(packet), "{PS(5, g^4), Sc(2, 1)}")

        with self.assertRaisesRegex(ValueError, "unknown IrrepLabel type"):
            IrrepLabel.from_dict({"type": "weird"})

    def test_packets(self):
        packets = reps.packets(F9)
        non_ps = [
            packet
            for packet in packets
            if not isinstance(packet.members[0], PrincipalSeriesLabel)
        ]
        self.assertEqual(len(non_ps), 14)
        self.assertEqual(len(packets), 26)
        self.assertEqual(sum(1 for packet in packets if len(packet) == 2), 6)
        self.assertTrue(reps.is_packet_partition(F9, reps.classify(F9)))

        labels = reps.classify(F9)
        labels.remove(SupercuspidalLabel(k=0, r=0))
        self.assertFalse(reps.is_packet_partition(F9, labels))

    def test_packet_of(self):
        self.assertEqual(
            reps.packet_of(F9, SupercuspidalLabel(k=0, r=0)),
            LPacket.of([SupercuspidalLabel(k=0, r=0), SupercuspidalLabel(k=1, r=2)]),
        )
        for tower in (F9, F25):
            for x in reps.classify(tower):
                packet = reps.packet_of(tower, x)
                with self.subTest(p=tower.p, x=str(x)):
                    self.assertIn(x, packet.members)
                    for y in packet:
                        self.assertEqual(reps.packet_of(tower, y), packet)

    def test_twist(self):
        self.assertEqual(reps.twist_label(F9, CharLabel(k=3), 2), CharLabel(k=1))
        self.assertEqual(
            reps.twist_label(F9, PrincipalSeriesLabel(r=1, lambda_=F9.minus_one), 1),
            PrincipalSeriesLabel(r=7, lambda_=F9.minus_one),
        )
        packet = reps.packet_of(F9, SupercuspidalLabel(k=0, r=1))
        twisted = reps.twist_packet(F9, packet, 1)
        self.assertEqual(twisted, reps.packet_of(F9, SupercuspidalLabel(k=1, r=1)))
        self.assertEqual(reps.twist_packet(F9, twisted, 3), packet)

        with self.assertRaisesRegex(TypeError, "not a U\\(1,1\\) label"):
            reps.twist_label(F9, SLTrivial(), 1)

    def test_pi_ss(self):
        self.assertEqual(
            reps.pi_ss(F9, 1, F9.minus_one),
            LPacket.of([PrincipalSeriesLabel(r=5, lambda_=F9.minus_one)]),
        )
        self.assertEqual(
            reps.pi_ss(F9, 0, ONE), LPacket.of([CharLabel(k=0), SteinbergLabel(k=0)])
        )
        self.assertEqual(
            reps.pi_ss(F9, 2, ONE), LPacket.of([CharLabel(k=3), SteinbergLabel(k=3)])
        )
        with self.assertRaisesRegex(ValueError, "π\\(r, λ\\) needs"):
            reps.pi_ss(F9, 3, ONE)

    def test_restrict_to_su(self):
        for x, expected in (
            (CharLabel(k=2), SLTrivial()),
            (SteinbergLabel(k=1), SLSteinberg()),
            (SupercuspidalLabel(k=3, r=2), SLCusp(r=2)),
            (
                PrincipalSeriesLabel(r=5, lambda_=F9.minus_one),
                SLPrincipalSeries(r=1, lambda_=F9.minus_one),
            ),
        ):
            with self.subTest(x=str(x)):
                self.assertEqual(reps.restrict_to_su(F9, x), expected)

    def test_sl_cusp(self):
        self.assertEqual(reps.sl_cusp(3, 0), SLCusp(r=0))
        self.assertEqual(reps.sl_cusp(3, 0, "zero"), SLCusp(r=2))
        self.assertEqual(str(reps.sl_cusp(5, 1, "zero")), "π_3")
        with self.assertRaisesRegex(ValueError, "unknown cusp"):
            reps.sl_cusp(3, 0, "one")
        with self.assertRaisesRegex(ValueError, "outside"):
            reps.sl_cusp(3, 3)

    def test_gl2_orbit(self):
        for r in range(3):
            orbit = reps.gl2_orbit(F9, r)
            with self.subTest(r=r):
                self.assertEqual(len(orbit), 4)
                normal = reps.gl2_normalize(F9, r)
                self.assertIn(normal, orbit)
                for x in orbit:
                    self.assertEqual(reps.gl2_orbit(F9, x.r, x.nu, x.a), orbit)
                    self.assertEqual(reps.gl2_normalize(F9, x.r, x.nu, x.a), normal)

        with self.assertRaisesRegex(ValueError, "ν must be a unit"):
            reps.gl2_label(F9, 0, F9.zero)

    def test_supercuspidal_packets(self):
        for tower in (F9, F25, F49):
            p = tower.p
            sc = [x for x in reps.classify(tower) if x.is_supercuspidal]
            packets = {reps.packet_of(tower, x) for x in sc}
            with self.subTest(p=p):
                self.assertEqual(len(sc), p * (p + 1))
                self.assertEqual(len(packets), p * (p + 1) // 2)
                self.assertTrue(all(len(packet) == 2 for packet in packets))
                for x in reps.classify(tower):
                    self.assertEqual(
                        isinstance(reps.restrict_to_su(tower, x), SLCusp),
                        x.is_supercuspidal,
                    )
