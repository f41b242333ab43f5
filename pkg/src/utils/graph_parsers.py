"""
Graph Input Parsing Utilities

Turns command-line graph descriptions such as 'cycle:5', 'windmill:5,3' or
'g6:Bw' into Graph values, and reads and writes graph files.
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Sequence, Union

from ..exceptions import Graph6ParseError, InvalidParameterError
from ..graph_core import (
    Graph,
    cycle_union,
    graph6_decode,
    graph6_encode,
    make_complete,
    make_complete_bipartite,
    make_complete_bipartite_minus_edge,
    make_cycle,
    make_dutch_windmill,
    make_empty,
    make_friendship,
    make_petersen,
    make_prism,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _int_params(text: str, count: int, form: str) -> List[int]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != count:
        raise InvalidParameterError(f"Graph form '{form}' expects {count} integer parameter(s), got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise InvalidParameterError(f"Graph form '{form}' expects integers, got {text!r}") from e


def read_graph6_file(path: PathLike) -> List[Graph]:
    """
    Read one graph per non-empty line of a graph6 file.

    Args:
        path: File path

    Returns:
        Graphs in file order
    """
    graphs = []
    with open(path, "r", encoding="ascii") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                graphs.append(graph6_decode(line))
            except Graph6ParseError as e:
                raise Graph6ParseError(f"{path}:{line_number}: {e}") from e
    logger.info("Read %d graphs from %s", len(graphs), path)
    return graphs


def write_graph6_file(graphs: Iterable[Graph], path: PathLike) -> int:
    """Write graphs as graph6 lines; returns the number written."""
    lines = [graph6_encode(g) for g in graphs]
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="ascii") as f:
        f.write("".join(line + "\n" for line in lines))
    logger.info("Wrote %d graphs to %s", len(lines), path)
    return len(lines)


class GraphSpecParser:
    """
    Parser for 'form:parameters' graph descriptions.

    Supported forms: cycle:m, cycles:m1,m2,..., windmill:m,n, friendship:n,
    kmn:m,n, kmn-e:m,n, complete:n, empty:n, petersen, prism,
    catalog:G_i, g6:<string> and file:<path>.
    """

    def __init__(self):
        """Initialize the dispatch tables."""
        self.supported_forms: Dict[str, Callable[[str], Graph]] = {
            "cycle": lambda p: make_cycle(*_int_params(p, 1, "cycle")),
            "cycles": self.parse_cycles,
            "windmill": lambda p: make_dutch_windmill(*_int_params(p, 2, "windmill")),
            "friendship": lambda p: make_friendship(*_int_params(p, 1, "friendship")),
            "kmn": lambda p: make_complete_bipartite(*_int_params(p, 2, "kmn")),
            "kmn-e": lambda p: make_complete_bipartite_minus_edge(*_int_params(p, 2, "kmn-e")),
            "complete": lambda p: make_complete(*_int_params(p, 1, "complete")),
            "empty": lambda p: make_empty(*_int_params(p, 1, "empty")),
            "petersen": self._no_params("petersen", make_petersen),
            "prism": self._no_params("prism", make_prism),
            "catalog": self.parse_catalog,
            "g6": graph6_decode,
            "file": self.parse_file,
        }
        self.supported_files: Dict[str, Callable[[Path], Graph]] = {
            ".g6": self.parse_graph6_file,
            ".json": self.parse_json_file,
            ".txt": self.parse_adjacency_file,
        }

    @staticmethod
    def _no_params(form: str, factory: Callable[[], Graph]) -> Callable[[str], Graph]:
        def build(params: str) -> Graph:
            if params.strip():
                raise InvalidParameterError(f"Graph form '{form}' takes no parameters")
            return factory()

        return build

    def parse(self, text: str) -> Graph:
        """
        Parse a graph description.

        Args:
            text: Description such as 'kmn-e:3,4'

        Returns:
            The described graph
        """
        form, _, params = text.strip().partition(":")
        form = form.strip().lower()
        if form not in self.supported_forms:
            raise InvalidParameterError(
                f"Unknown graph form {form!r}; expected one of {', '.join(sorted(self.supported_forms))}"
            )
        return self.supported_forms[form](params)

    def parse_cycles(self, params: str) -> Graph:
        lengths = [int(p) for p in params.split(",") if p.strip()] if params.strip() else []
        if not lengths:
            raise InvalidParameterError("Graph form 'cycles' needs at least one cycle length")
        return cycle_union(lengths)

    def parse_catalog(self, params: str) -> Graph:
        from ..census_catalog import catalog_graph

        return catalog_graph(params.strip())

    def parse_file(self, params: str) -> Graph:
        """
        Load a graph from a file, choosing the reader by suffix.

        .g6 files give their first graph, .json files hold {"n", "edges"},
        anything else is read as 0/1 adjacency rows.
        """
        path = Path(params.strip())
        if not path.is_file():
            raise InvalidParameterError(f"Graph file not found: {path}")
        reader = self.supported_files.get(path.suffix.lower(), self.parse_adjacency_file)
        return reader(path)

    def parse_graph6_file(self, path: Path) -> Graph:
        graphs = read_graph6_file(path)
        if not graphs:
            raise Graph6ParseError(f"No graphs in {path}")
        return graphs[0]

    def parse_json_file(self, path: Path) -> Graph:
        """Read {"n": ..., "edges": [[i, j], ...]}."""
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        try:
            return Graph.from_edges(int(data["n"]), data["edges"])
        except (KeyError, TypeError) as e:
            raise InvalidParameterError(f"{path} must hold an object with 'n' and 'edges'") from e

    def parse_adjacency_file(self, path: Path) -> Graph:
        """Read 0/1 rows, with or without separators, skipping lines that start with #."""
        rows: List[Sequence[int]] = []
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                cells = line.split() if " " in line or "\t" in line else list(line)
                try:
                    rows.append([int(c) for c in cells])
                except ValueError as e:
                    raise InvalidParameterError(f"{path}: adjacency rows must be 0/1 digits") from e
        return Graph.from_adjacency(rows)


def parse_graph(text: str) -> Graph:
    """Parse a graph description with a default GraphSpecParser."""
    return GraphSpecParser().parse(text)
