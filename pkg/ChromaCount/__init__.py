"""Chromatic polynomials, list color functions and DP color functions of small graphs"""

# Add imports here
from ChromaCount.chroma import *

# Handle version
from ._version import __version__
