# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

from typing import Any, Dict, List, Optional, Tuple
from unittest import TestCase

from unimodp.ffield import FFElem
from unimodp.types import base
from unimodp.types.reports import Check, Report


class MyInt(int):
    pass


class Foo(base.Datatype):
    name: str
    from_: int
    items: List[MyInt]
    bucket_values: Dict[str, MyInt]
    maybe: Optional[Tuple[str, ...]] = None


class FooSparse(Foo, sparse=True):
    pass


class Shape(base.Datatype, union=True):
    pass


class Circle(Shape, tag="circle"):
    radius: int


class Rect(Shape, tag="rect"):
    width: int
    height: int


class Weighted(base.Datatype):
    weight: FFElem
    shapes: Tuple[Shape, ...]


class Pair(base.Datatype):
    bounds: Tuple[int, MyInt]
    tags: Tuple[str, ...] = ()


class BaseTypes(TestCase):
    def test_is_primitive(self):
        for t in (str, int, bool, float, type(None), Any, MyInt):
            with self.subTest(f"is_primitive({t!r})"):
                self.assertTrue(base.is_primitive(t))

        for t in ([1, 2], (1, 2), {1: 2}, Circle(radius=1)):
            with self.subTest(f"is_primitive({t!r})"):
                self.assertFalse(base.is_primitive(type(t)))

    def test_decode_primitives(self):
        sentinel = object()

        for value, vtype, expected in (
            (True, bool, True),
            (123, int, 123),
            (123, MyInt, MyInt(123)),
            ("name", str, "name"),
            (None, type(None), None),
            (sentinel, Any, sentinel),
            (None, Optional[MyInt], None),
            (123, Optional[MyInt], MyInt(123)),
        ):
            with self.subTest((value, vtype, expected)):
                result = base.decode(value, vtype)
                self.assertEqual(result, expected)
                self.assertEqual(type(result), type(expected))

    def test_decode_datatype(self):
        result = base.decode(
            {
                "name": "something",
                "from": 1234,
                "items": [1, 3, 9],
                "bucketValues": {"foo": 1, "bar": 2},
                "maybe": ["a", "b"],
            },
            Foo,
        )
        expected = Foo(
            name="something",
            from_=1234,
            items=[1, 3, 9],
            bucket_values={"foo": 1, "bar": 2},
            maybe=("a", "b"),
        )
        self.assertEqual(result, expected)
        self.assertIsInstance(result.items[0], MyInt)
        self.assertIsInstance(result.bucket_values["foo"], MyInt)

    def test_encode_datatype(self):
        foo = Foo(name="a", from_=1, items=[], bucket_values={})
        self.assertEqual(
            foo.to_dict(),
            {"name": "a", "from": 1, "items": [], "bucketValues": {}, "maybe": None},
        )
        sparse = FooSparse(name="a", from_=1, items=[], bucket_values={})
        self.assertEqual(sparse.to_dict(), {"name": "a", "from": 1})

    def test_tagged_union(self):
        for data, expected in (
            ({"type": "circle", "radius": 2}, Circle(radius=2)),
            ({"type": "rect", "width": 2, "height": 3}, Rect(width=2, height=3)),
        ):
            with self.subTest(data):
                result = base.decode(data, Shape)
                self.assertEqual(result, expected)
                self.assertEqual(result.to_dict(), data)

        with self.assertRaisesRegex(ValueError, "unknown Shape type 'hex'"):
            base.decode({"type": "hex", "side": 1}, Shape)

        with self.assertRaisesRegex(TypeError, "without a union"):

            # pylint: disable=unused-variable
            class Orphan(base.Datatype, tag="orphan"):
                size: int

    def test_nested_scalars(self):
        shapes = (Circle(radius=1), Rect(width=1, height=2))
        value = Weighted(weight=FFElem(3), shapes=shapes)
        data = value.to_dict()
        self.assertEqual(
            data,
            {
                "weight": "g^3",
                "shapes": [
                    {"type": "circle", "radius": 1},
                    {"type": "rect", "width": 1, "height": 2},
                ],
            },
        )
        self.assertEqual(Weighted.from_dict(data), value)

    def test_to_json_sorted(self):
        self.assertEqual(
            Rect(width=2, height=3).to_json(),
            '{"height": 3, "type": "rect", "width": 2}',
        )
        self.assertEqual(
            Rect.from_json('{"width": 2, "height": 3}'), Rect(width=2, height=3)
        )

    def test_repr(self):
        self.assertEqual(repr(Circle(radius=1)), "Circle(\n    radius=1,\n)")

    def test_tuple_fields(self):
        pair = Pair(bounds=(1, MyInt(2)), tags=("a", "b"))
        self.assertEqual(pair.to_dict(), {"bounds": [1, 2], "tags": ["a", "b"]})
        decoded = Pair.from_dict({"bounds": [1, 2], "tags": ["a", "b"]})
        self.assertEqual(decoded, pair)
        self.assertIsInstance(decoded.bounds, tuple)
        self.assertIsInstance(decoded.bounds[1], MyInt)
        self.assertEqual(Pair.from_dict({"bounds": [3, 4]}).tags, ())

        self.assertEqual(base.encode((1, 2), Tuple[int, ...]), [1, 2])
        self.assertEqual(base.decode(["x"], Optional[Tuple[str, ...]]), ("x",))

    def test_report_json(self):
        report = Report(
            title="laws",
            checks=(Check(name="a", passed=True), Check(name="b", passed=False)),
        )
        self.assertEqual(
            report.to_dict(),
            {
                "title": "laws",
                "checks": [
                    {"name": "a", "passed": True, "detail": ""},
                    {"name": "b", "passed": False, "detail": ""},
                ],
            },
        )
        self.assertEqual(Report.from_json(report.to_json()), report)
        self.assertEqual([c.name for c in report.failures], ["b"])
