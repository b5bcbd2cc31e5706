"""Spanning surfaces of alternating links.

State surfaces of link diagrams, their genus and slope invariants, a
minimal-genus search specialized to reduced alternating diagrams, and a
census runner that checks computed nonorientable genus against a bundled
reference table.
"""

from .errors import SpanliftError
from .knotcodes import Diagram, parse_gauss, parse_pd

__version__ = "0.1.0"

__all__ = ["Diagram", "SpanliftError", "parse_gauss", "parse_pd", "__version__"]
