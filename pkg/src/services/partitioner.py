"""Vertex partition around an adjacent degree-2 pair u, v."""

from src.models.errors import PreconditionError, StructuralError
from src.models.graph import UndirectedGraph
from src.models.partition import Partition3


def _check_gadget(g: UndirectedGraph, u: int, v: int, x: int, y: int) -> None:
    for vertex in (u, v, x, y):
        if not 0 <= vertex < g.n:
            raise PreconditionError(f"vertex {vertex} out of range for n={g.n}", vertex)
    if len({u, v, x, y}) != 4:
        raise PreconditionError("u, v, x, y must be distinct")
    if g.neighbors(u) != {v, x}:
        raise PreconditionError(f"vertex {u} must have exactly the neighbours {v} and {x}", u)
    if g.neighbors(v) != {u, y}:
        raise PreconditionError(f"vertex {v} must have exactly the neighbours {u} and {y}", v)


def _isolated_split(g: UndirectedGraph, rest: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Split ``rest`` into vertices isolated in G[rest] and the others."""
    isolated = frozenset(s for s in rest if not g.neighbors(s) & rest)
    return isolated, rest - isolated


def partition_vertices(g: UndirectedGraph, u: int, v: int, x: int, y: int) -> Partition3:
    """Label every vertex with its cell.

    Cells are computed in dependency order: X, Y, Z from the neighbourhoods
    of x and y; then W, I, K, J among the remaining vertices (W first, I
    excludes W, K excludes W and I); then the X and Y splits; then the J
    splits.

    Args:
        g: Connected bridgeless graph of diameter at most 3.
        u, v: Adjacent vertices of degree 2.
        x: The other neighbour of u.
        y: The other neighbour of v.

    Returns:
        The partition.

    Raises:
        PreconditionError: If (u, v, x, y) is not a valid degree-2 gadget.
        StructuralError: If a vertex outside N(x) u N(y) lacks a neighbour in
            X u Z or in Y u Z (it would be more than 3 steps from u or v), or
            if G[J42] has a single-vertex component.
    """
    _check_gadget(g, u, v, x, y)
    nx_, ny = g.neighbors(x), g.neighbors(y)
    gadget = frozenset({u, v, x, y})
    x_side = frozenset(nx_ - ny - gadget)
    y_side = frozenset(ny - nx_ - gadget)
    z_set = frozenset((nx_ & ny) - gadget)
    core = gadget | x_side | y_side | z_set

    rest = [s for s in g.vertices() if s not in core]
    for s in rest:
        near = g.neighbors(s)
        if not near & (x_side | z_set):
            raise StructuralError(f"vertex {s} has no neighbour in X or Z, so d(s, u) > 3", s)
        if not near & (y_side | z_set):
            raise StructuralError(f"vertex {s} has no neighbour in Y or Z, so d(s, v) > 3", s)

    w_set = frozenset(s for s in rest if g.neighbors(s) & x_side and g.neighbors(s) & y_side)
    i_set = frozenset(
        s for s in rest if s not in w_set and g.neighbors(s) & x_side and g.neighbors(s) & z_set
    )
    k_set = frozenset(
        s
        for s in rest
        if s not in w_set | i_set and g.neighbors(s) & y_side and g.neighbors(s) & z_set
    )
    j_set = frozenset(rest) - w_set - i_set - k_set

    x1 = frozenset(s for s in x_side if g.neighbors(s) & (y_side | z_set | i_set | w_set))
    x2, x3 = _isolated_split(g, x_side - x1)
    y1 = frozenset(s for s in y_side if g.neighbors(s) & (x_side | z_set | k_set | w_set))
    y2, y3 = _isolated_split(g, y_side - y1)

    j1 = frozenset(s for s in j_set if g.neighbors(s) & k_set)
    j2 = frozenset(s for s in j_set - j1 if g.neighbors(s) & i_set)
    j3 = frozenset(s for s in j_set - j1 - j2 if g.neighbors(s) & w_set)
    j4 = j_set - j1 - j2 - j3
    j41 = frozenset(s for s in j4 if g.neighbors(s) <= z_set)
    j42 = j4 - j41
    for s in sorted(j42):
        if not g.neighbors(s) & j42:
            raise StructuralError(f"vertex {s} is a trivial component of G[J42]", s)

    return Partition3(
        n=g.n,
        u=u,
        v=v,
        x=x,
        y=y,
        cells={
            "X1": x1, "X2": x2, "X3": x3,
            "Y1": y1, "Y2": y2, "Y3": y3,
            "Z": z_set, "W": w_set, "I": i_set, "K": k_set,
            "J1": j1, "J2": j2, "J3": j3, "J41": j41, "J42": j42,
        },
    )
