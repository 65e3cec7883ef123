"""Exact matroid and Tutte-polynomial engine with convolution-identity checks."""

from .engines import TutteEngine, tutte
from .matroid import Matroid, build, direct_sum, from_bases, gf2, graphic, uniform
from .poly import Poly

__all__ = ["Matroid", "Poly", "TutteEngine", "build", "direct_sum", "from_bases",
           "gf2", "graphic", "tutte", "uniform"]
