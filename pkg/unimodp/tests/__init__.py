# Copyright 2022 Amethyst Reese
# Licensed under the MIT license

from .cgroup import CGroupTest
from .chars import CharsTest
from .cli import CliTest
from .ffield import FieldTowerTest
from .finituni import FiniteUnitaryTest
from .hecke import HeckeTest
from .langlands import LanglandsTest
from .reps import RepsTest
from .types.base import BaseTypes
from .types.core import CoreTypes
