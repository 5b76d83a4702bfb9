# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Verification reports
"""

from typing import List, Tuple

from .base import Datatype


class Check(Datatype):
    name: str
    passed: bool
    detail: str = ""


class Report(Datatype):
    title: str
    checks: Tuple[Check, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, *checks: Check) -> "Report":
        return Report(title=self.title, checks=self.checks + checks)

    def merge(self, other: "Report") -> "Report":
        return self.extend(*other.checks)
