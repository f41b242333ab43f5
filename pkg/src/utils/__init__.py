"""
Utility modules for the Randić energy toolkit.

Provides graph input parsing, graph6 file I/O and table export.
"""

from .export_helpers import ExportHelper
from .graph_parsers import GraphSpecParser, parse_graph, read_graph6_file, write_graph6_file

__all__ = [
    "ExportHelper",
    "GraphSpecParser",
    "parse_graph",
    "read_graph6_file",
    "write_graph6_file",
]
