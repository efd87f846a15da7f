"""
Workbench Pipeline

Command-line front-end tying synthesis, verification, analysis and the
half-V embedding together.
"""

__version__ = "1.0.0"
