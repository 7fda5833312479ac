"""Edge-list parsing for graph and orientation files."""

from pathlib import Path

import networkx as nx
import pandas as pd
from pandera.errors import SchemaErrors

from src.models.errors import GraphFormatError, InputError
from src.models.graph import Orientation, UndirectedGraph
from src.schemas.graph_file_schema import EDGE_COLUMNS, EdgeListSchema


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    """Tokenise non-blank lines, dropping ``#`` comments.

    Returns:
        List of (1-based physical line number, tokens).
    """
    lines: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {token!r}", line) from None


def _read_rows(text: str) -> tuple[int, int, pd.DataFrame]:
    """Parse the header and validate the body rows.

    Returns:
        (n, m, DataFrame with columns a, b, line).

    Raises:
        GraphFormatError: On a malformed header, a malformed row, an
            out-of-range vertex, or an edge count that does not match m.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("missing header line 'n m'", 1)
    header_line, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", header_line)
    n = _parse_int(header[0], header_line, "vertex count")
    m = _parse_int(header[1], header_line, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be non-negative", header_line)

    rows: list[tuple[str, str, int]] = []
    for number, tokens in lines[1:]:
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 vertex ids, got {len(tokens)} tokens", number)
        rows.append((tokens[0], tokens[1], number))
    if len(rows) != m:
        last = lines[-1][0]
        raise GraphFormatError(f"header declares {m} edges but {len(rows)} were given", last)

    df = pd.DataFrame(rows, columns=EDGE_COLUMNS)
    try:
        df = EdgeListSchema.validate(df, lazy=True)
    except SchemaErrors as exc:
        failures = exc.failure_cases.dropna(subset=["index"])
        first = int(failures["index"].min()) if not failures.empty else 0
        raise GraphFormatError("vertex ids must be non-negative integers", int(df.loc[first, "line"])) from None

    out_of_range = df[(df["a"] >= n) | (df["b"] >= n)]
    if not out_of_range.empty:
        row = out_of_range.iloc[0]
        raise GraphFormatError(f"vertex out of range for n={n}: {row['a']} {row['b']}", int(row["line"]))
    return n, m, df


def _with_pairs(df: pd.DataFrame) -> pd.DataFrame:
    """Add canonical lo/hi columns for duplicate detection."""
    return df.assign(lo=df[["a", "b"]].min(axis=1), hi=df[["a", "b"]].max(axis=1))


def parse_graph(text: str, strict: bool = True) -> UndirectedGraph:
    """Parse the 'n m' header plus m 'a b' lines into a graph.

    Blank lines and ``#`` comments are ignored. In strict mode self-loops
    and repeated edges are errors reported against their line; otherwise
    they are dropped.

    Args:
        text: File contents.
        strict: Reject self-loops and duplicates instead of dropping them.

    Returns:
        The parsed graph.

    Raises:
        GraphFormatError: On any format violation (carries the line number).
    """
    n, _, df = _read_rows(text)
    df = _with_pairs(df)
    loops = df["a"] == df["b"]
    duplicates = df.duplicated(subset=["lo", "hi"], keep="first") & ~loops
    if strict:
        if loops.any():
            row = df[loops].iloc[0]
            raise GraphFormatError(f"self-loop at vertex {row['a']}", int(row["line"]))
        if duplicates.any():
            row = df[duplicates].iloc[0]
            raise GraphFormatError(f"duplicate edge {{{row['lo']},{row['hi']}}}", int(row["line"]))
    kept = df[~loops & ~duplicates]
    return UndirectedGraph.from_edges(n, zip(kept["lo"].tolist(), kept["hi"].tolist()))


def parse_orientation(text: str) -> Orientation:
    """Parse an arc list ('a b' means a -> b) into an orientation.

    The underlying graph is the set of arcs read as undirected edges.

    Raises:
        GraphFormatError: On format violations, self-loops, or an edge that
            appears twice (in either direction).
    """
    n, _, df = _read_rows(text)
    df = _with_pairs(df)
    loops = df[df["a"] == df["b"]]
    if not loops.empty:
        row = loops.iloc[0]
        raise GraphFormatError(f"self-loop at vertex {row['a']}", int(row["line"]))
    duplicates = df[df.duplicated(subset=["lo", "hi"], keep="first")]
    if not duplicates.empty:
        row = duplicates.iloc[0]
        raise GraphFormatError(f"edge {{{row['lo']},{row['hi']}}} is directed twice", int(row["line"]))
    return Orientation.from_arcs(n, zip(df["a"].tolist(), df["b"].tolist()))


def _read_text(file_path: str | Path) -> str:
    path = Path(file_path)
    if not path.exists():
        raise InputError(f"file not found: {file_path}")
    try:
        return path.read_text(encoding="utf-8")
    except (UnicodeDecodeError, OSError) as exc:
        raise InputError(f"cannot read {file_path}: {exc}") from None


def load_graph(file_path: str | Path, strict: bool = True) -> UndirectedGraph:
    """Read and parse a graph file.

    Raises:
        InputError: If the file does not exist or is malformed.
    """
    return parse_graph(_read_text(file_path), strict=strict)


def load_orientation(file_path: str | Path) -> Orientation:
    """Read and parse an orientation file.

    Raises:
        InputError: If the file does not exist or is malformed.
    """
    return parse_orientation(_read_text(file_path))


def load_graph6(file_path: str | Path) -> list[UndirectedGraph]:
    """Read a graph6 file, one graph per line (e.g. geng output).

    Raises:
        InputError: If the file does not exist or a line is not valid graph6.
    """
    path = Path(file_path)
    if not path.exists():
        raise InputError(f"file not found: {file_path}")
    try:
        decoded = nx.read_graph6(path)
    except (nx.NetworkXError, ValueError, OSError) as exc:
        raise InputError(f"cannot read {file_path}: {exc}") from None
    graphs = decoded if isinstance(decoded, list) else [decoded]
    return [UndirectedGraph.from_networkx(graph) for graph in graphs]
