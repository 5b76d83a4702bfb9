# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Mod-p representations, Hecke modules and Langlands parameters for U(1,1)(Q_{p²}/Q_p)
"""

__author__ = "Amethyst Reese"
from .__version__ import __version__
