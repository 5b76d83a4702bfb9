# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

import json
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

from click.testing import CliRunner

from unimodp.cli import main, run, SOURCES
from unimodp.config import ENV_OUTPUT_DIR, RunConfig


class CliTest(TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args, **kwargs):
        return self.runner.invoke(main, list(args), **kwargs)

    def rows(self, *args):
        result = self.invoke(*args)
        self.assertEqual(result.exit_code, 0, result.output)
        return json.loads(result.stdout)["rows"]

    def test_classify(self):
        rows = self.rows("classify", "--p", "3", "--format", "json")
        self.assertEqual(len(rows), 32)
        self.assertEqual(rows[0]["name"], "Char(0)")
        self.assertEqual(rows[0]["label"], {"type": "char", "k": 0})
        self.assertEqual(rows[0]["su_restriction"], "1")
        self.assertEqual(sum(1 for row in rows if row["supercuspidal"]), 12)

        self.assertEqual(len(self.rows("classify", "--lambda-ext", "2")), 80)

        rows = self.rows("classify", "--p", "11")
        self.assertEqual(len(rows), 12 * 13 + 10 * 120 - 12)
        self.assertEqual(sum(1 for row in rows if row["supercuspidal"]), 12 * 11)

    def test_packets(self):
        result = self.invoke("packets", "--p", "3")
        self.assertEqual(result.exit_code, 0, result.output)
        document = json.loads(result.stdout)
        rows = document["rows"]
        self.assertEqual(len(rows), 14)
        self.assertEqual(sum(1 for row in rows if row["size"] == 2), 6)
        self.assertEqual(sum(1 for row in rows if row["size"] == 1), 8)

        [principal] = document["sections"]
        self.assertEqual(principal["title"], "principal-series singletons")
        self.assertEqual(len(principal["rows"]), 12)
        self.assertEqual({row["lambda"] for row in principal["rows"]}, {"1", "g^4"})
        for row in principal["rows"]:
            label = {"type": "principal_series", "r": row["r"], "lambda": row["lambda"]}
            self.assertEqual(row["packet"], [label])

        result = self.invoke("packets", "--format", "md")
        self.assertIn("\n### principal-series singletons\n", result.stdout)
        result = self.invoke("packets", "--format", "csv")
        self.assertEqual(len(result.stdout.splitlines()), 1 + 14 + 1 + 1 + 12)

    def test_params(self):
        rows = self.rows("params", "--p", "3")
        self.assertEqual(len(rows), 42)
        rows = self.rows("params", "--p", "3", "--c-group")
        self.assertEqual(len(rows), 42)
        self.assertEqual(len({row["d"] for row in rows}), 1)

    def test_correspond(self):
        rows = self.rows("correspond", "--param", '{"type": "endo", "k": 0, "l": 1}')
        self.assertEqual(
            rows[0]["packet"],
            [
                {"type": "supercuspidal", "k": 0, "r": 0},
                {"type": "supercuspidal", "k": 1, "r": 2},
            ],
        )
        self.assertEqual(
            rows[0]["param"]["data"]["frobenius"], [["0", "g^4"], ["1", "0"]]
        )

        rows = self.rows(
            "correspond", "--param", '{"type": "c_torus", "r": -1, "lambda": 1}'
        )
        self.assertEqual(
            [x["type"] for x in rows[0]["packet"]],
            ["char", "char", "steinberg", "steinberg"],
        )

        for text in ('{"type": "nope"}', "endo", "[1, 2]", '{"type": "torus", "r": 1}'):
            with self.subTest(param=text):
                result = self.invoke("correspond", "--param", text)
                self.assertEqual(result.exit_code, 2, result.output)
                self.assertIn("--param", result.output)

    def test_transfer(self):
        rows = self.rows("transfer", "--p", "3", "--k", "4", "--l", "0")
        self.assertEqual((rows[0]["k"], rows[0]["l"]), (0, 0))
        self.assertEqual(
            rows[0]["packet"],
            [{"type": "principal_series", "r": 0, "lambda": "g^4"}] * 2,
        )

    def test_formats(self):
        result = self.invoke("classify", "--format", "md")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(result.stdout.startswith("## irreducible mod-3"))
        self.assertIn("| Char(0) |", result.stdout)
        self.assertIn(f"_{SOURCES['classify']} (λ over F_3^×)_", result.stdout)

        for args, key in (
            (("params", "--c-group"), "c_params"),
            (("verify", "groups", "--q", "3"), "verify-groups"),
            (("transfer", "--k", "1", "--l", "0"), "transfer"),
        ):
            with self.subTest(args=args):
                result = self.invoke(*args, "--format", "md")
                self.assertEqual(result.exit_code, 0, result.output)
                self.assertIn(f"\n_{SOURCES[key]}_\n", result.stdout)

        result = self.invoke("classify", "--format", "csv")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.stdout.splitlines()
        self.assertEqual(lines[0], "name,label,supercuspidal,su_restriction")
        self.assertEqual(len(lines), 33)

        result = self.invoke("classify", "--format", "xml")
        self.assertEqual(result.exit_code, 2)

    def test_bad_config(self):
        for args, message in (
            (("classify", "--p", "4"), "not an odd prime"),
            (("verify", "oracle", "--p", "11"), "q=11 exceeds the enumeration bound"),
            (("verify", "hecke", "--q", "11"), "q=11 exceeds the enumeration bound"),
            (("dump-group", "--q", "25"), "q=25 exceeds the enumeration bound"),
            (("verify", "hecke", "--q", "6"), "not a prime power"),
            (("classify", "--lambda-ext", "0"), "PositiveInt 0"),
        ):
            with self.subTest(args=args):
                result = self.invoke(*args)
                self.assertEqual(result.exit_code, 2, result.output)
                self.assertIn(message, result.output)

    def test_verify(self):
        for args in (
            ("verify", "hecke", "--q", "3"),
            ("verify", "groups", "--q", "3"),
            ("verify", "oracle", "--p", "3"),
        ):
            with self.subTest(args=args):
                rows = self.rows(*args)
                self.assertTrue(rows)
                self.assertTrue(all(row["passed"] for row in rows))

    def test_output_dir(self):
        with TemporaryDirectory() as td:
            out = Path(td) / "reports"
            result = self.invoke("packets", env={ENV_OUTPUT_DIR: str(out)})
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual((out / "packets.json").read_text(), result.stdout)

            result = self.invoke(
                "verify", "hecke", "--q", "3", "--format", "md", "--output-dir", td
            )
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertTrue((Path(td) / "verify-hecke.md").exists())

            result = self.invoke(
                "dump-group", "--q", "3", "--variant", "SU", "--output-dir", td
            )
            self.assertEqual(result.exit_code, 0, result.output)
            data = json.loads((Path(td) / "dump-group-SU.json").read_text())
            self.assertEqual(data["order"], 24)
            self.assertEqual(data["cells"], {"B": 6, "BsB": 18})

    def test_config(self):
        config = RunConfig(p=5, lambda_ext=4)
        self.assertEqual(config.q, 5)
        self.assertEqual(config.tower(2).k, 2)
        self.assertEqual(config.tower(config.lambda_ext).k, 2)
        self.assertEqual(RunConfig(p=3, f=2).tower(2).k, 2)
        self.assertIsNone(config.output_path("classify"))
        self.assertEqual(
            RunConfig(output_dir="out", fmt="csv").output_path("packets"),
            Path("out") / "packets.csv",
        )
        with self.assertRaisesRegex(ValueError, "unknown format"):
            RunConfig(fmt="yaml")

        RunConfig(p=11).tower(2)
        RunConfig(p=3, f=2).require_enumerable()
        with self.assertRaisesRegex(ValueError, "q=11 exceeds the enumeration bound 9"):
            RunConfig(p=11).require_enumerable()
        RunConfig(p=11, bound=11).require_enumerable()

    def test_run(self):
        self.assertEqual(run(["--help"]), 0)
        self.assertEqual(run(["transfer", "--k", "1"]), 2)
