"""
Graph I/O Module

Reads and writes the edge-list interchange format and keeps instance files
under a data directory, the same way the rest of the toolkit stores its inputs.

Edge-list format:
    n m
    u v        (m lines, 0-based ids, duplicates allowed)
"""

import json
from pathlib import Path
from typing import Dict, List, Tuple

from src.graphs.graph_core import Graph
from utils.exceptions import GraphParseError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def content_lines(text: str) -> List[Tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def _parse_ints(line: str, count: int, line_number: int, what: str) -> List[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphParseError(f"expected {count} integers for {what}, got '{line}'", line_number)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(f"non-integer token in '{line}'", line_number) from None
    if any(v < 0 for v in values):
        raise GraphParseError(f"negative value in '{line}'", line_number)
    return values


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format into a simple graph.

    Args:
        text (str): File contents

    Returns:
        Graph: The graph, duplicate edges collapsed

    Raises:
        GraphParseError: Malformed line, id out of range, self-loop or wrong edge count
    """
    lines = content_lines(text)
    if not lines:
        raise GraphParseError("missing 'n m' header", 1)

    header_number, header = lines[0]
    n, m = _parse_ints(header, 2, header_number, "header 'n m'")

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_number
        raise GraphParseError(f"header announces {m} edges but {len(body)} edge lines follow", last)

    edges = []
    for number, line in body:
        u, v = _parse_ints(line, 2, number, "edge 'u v'")
        if u >= n or v >= n:
            raise GraphParseError(f"vertex id out of range [0, {n}) in '{line}'", number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", number)
        edges.append((u, v))

    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text: header then edges sorted lexicographically, trailing newline."""
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


class InstanceStore:
    """Saves and loads instance files (graphs, WP2SAT text, JSON sidecars)."""

    def __init__(self, data_dir="data/instances"):
        """
        Args:
            data_dir (str): Directory holding instance files
        """
        self.data_dir = Path(data_dir)

    def _path(self, name) -> Path:
        path = Path(name)
        return path if path.is_absolute() or path.parent != Path(".") else self.data_dir / path

    def load_text(self, name) -> str:
        path = Path(name) if Path(name).exists() else self._path(name)
        if not path.exists():
            raise FileNotFoundError(f"Instance file not found: {path}")
        return path.read_text(encoding="utf-8")

    def save_text(self, text: str, name) -> str:
        path = self._path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Saved {len(text.splitlines())} lines to {path}")
        return str(path)

    def load_graph(self, name) -> Graph:
        """
        Load an edge-list graph file.

        Args:
            name (str|Path): File name inside the data dir, or a path

        Returns:
            Graph: Parsed graph
        """
        return parse_edge_list(self.load_text(name))

    def save_graph(self, g: Graph, name) -> str:
        return self.save_text(serialize_edge_list(g), name)

    def save_json(self, payload: Dict, name) -> str:
        return self.save_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", name)

    def load_json(self, name) -> Dict:
        return json.loads(self.load_text(name))
