"""whlab: exact homological calculator for group presentations.

Core layers:
  fields/linalg/series   exact scalars, RREF, truncated noncommutative series
  words/presentations    free-group words, Fox derivatives, presentation files
  hopf/function_hopf     shuffle-deconcatenation Hopf algebra, Magnus embedding,
                         function Hopf algebras of finite groups
  modules/cohomology     G-modules, Hochschild cochains, minimal resolutions,
                         presentation chain complexes
  spectral               double complexes, pages, Lyndon-Hochschild-Serre
  asphericity            truncated quotient algebras and the freeness probe
"""

from .fields import GF, QQ, Field
from .presentations import Presentation, parse_presentation, render_presentation
from .words import GroupWord, fox_derivative

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Field",
    "Presentation", "parse_presentation", "render_presentation",
    "GroupWord", "fox_derivative",
    "__version__",
]
