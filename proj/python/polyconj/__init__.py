"""Exact and numeric checks on real-rooted polynomials.

Polynomials are strings such as ``"x^2 - 2"`` or ascending coefficient
lists; rationals come back as strings so nothing is rounded.
"""

from ._polyconj import *  # noqa: F401,F403
from ._polyconj import __version__, SCHEMA_VERSION  # noqa: F401
