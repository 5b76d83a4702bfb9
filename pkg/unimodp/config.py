# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Run configuration shared by the command line tools
"""

import logging
from math import lcm
from pathlib import Path
from typing import Optional

from .ffield import FieldTower
from .finituni import DEFAULT_BOUND
from .types.base import Datatype
from .types.core import Format, PositiveInt, Prime

LOG = logging.getLogger(__name__)

ENV_OUTPUT_DIR = "UNIMODP_OUTPUT_DIR"


class RunConfig(Datatype):
    p: int = 3
    f: int = 1
    lambda_ext: int = 1
    fmt: str = Format.JSON
    bound: int = DEFAULT_BOUND
    output_dir: Optional[str] = None

    def __post_init__(self) -> None:
        Prime(self.p)
        PositiveInt(self.f)
        PositiveInt(self.lambda_ext)
        if self.fmt not in Format.ALL:
            raise ValueError(
                f"unknown format {self.fmt!r}, expected one of {Format.ALL}"
            )

    @property
    def q(self) -> int:
        return self.p ** self.f

    def require_enumerable(self) -> None:
        """Commands that enumerate groups or sweep all pairs stay within the bound"""
        if self.q > self.bound:
            raise ValueError(f"q={self.q} exceeds the enumeration bound {self.bound}")

    def tower(self, degree: int = 2) -> FieldTower:
        """A tower whose ambient field contains F_{p^degree}"""
        k = self.f
        while 2 * k % lcm(degree, self.lambda_ext):
            k += self.f
        LOG.debug("tower for %r: k=%d", self, k)
        return FieldTower(self.p, self.f, k)

    def output_path(self, command: str) -> Optional[Path]:
        if not self.output_dir:
            return None
        return Path(self.output_dir) / f"{command}.{self.fmt}"
