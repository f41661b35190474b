"""The universal cover of the Kronecker quiver and its tree representations.

Vertices of the cover are addressed by reduced words over the colors
{1..r}: the neighbor of a vertex via color c is obtained by appending c,
or by deleting a trailing c.  Even-length addresses are sources, odd ones
sinks, which fixes the bipartite orientation and a canonical covering
onto the r-Kronecker quiver (color c edges lie over arrow c).

This module builds the source-regular subquivers, the dimension vectors
placing the excess on the distinguished sinks, the indecomposable tree
representations realizing them, the thin zigzag representations, and the
push-down functor folding a tree representation onto the Kronecker
quiver.  Push-down bases are ordered by address so every construction is
bit-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .exactmat import QQ, ExactMatrix, Field
from .kronecker import DimVector, KroneckerRep

Address = tuple[int, ...]
Edge = tuple[Address, Address]


# ---------------------------------------------------------------------------
# address arithmetic
# ---------------------------------------------------------------------------

def is_reduced(addr: Address) -> bool:
    return all(addr[i] != addr[i + 1] for i in range(len(addr) - 1))


def is_source(addr: Address) -> bool:
    return len(addr) % 2 == 0


def neighbor_via(addr: Address, color: int) -> Address:
    """Step along the edge of the given color."""
    if addr and addr[-1] == color:
        return addr[:-1]
    return addr + (color,)


def neighbors(addr: Address, r: int) -> list[Address]:
    return [neighbor_via(addr, c) for c in range(1, r + 1)]


def edge_color(x: Address, y: Address) -> int:
    """Color of the tree edge between two adjacent vertices."""
    longer = x if len(x) > len(y) else y
    shorter = y if longer is x else x
    if len(longer) != len(shorter) + 1 or longer[:-1] != shorter:
        raise ValueError(f"{x} and {y} are not adjacent")
    return longer[-1]


def canonical_edge(x: Address, y: Address) -> Edge:
    """Orient an adjacent pair source -> sink."""
    return (x, y) if is_source(x) else (y, x)


# ---------------------------------------------------------------------------
# finite subquivers of the cover
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeQuiver:
    """A finite connected subquiver of the cover, induced by its vertex set."""

    r: int
    vertices: frozenset[Address]

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("r must be at least 2")
        for v in self.vertices:
            if not is_reduced(v):
                raise ValueError(f"address {v} is not a reduced word")
            if any(not 1 <= c <= self.r for c in v):
                raise ValueError(f"address {v} uses colors outside 1..{self.r}")
        if self.vertices and not self._connected():
            raise ValueError("vertex set is not connected in the tree")

    def _connected(self) -> bool:
        verts = set(self.vertices)
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in neighbors(v, self.r):
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == verts

    def sources(self) -> list[Address]:
        return sorted(v for v in self.vertices if is_source(v))

    def sinks(self) -> list[Address]:
        return sorted(v for v in self.vertices if not is_source(v))

    def neighbors_in(self, v: Address) -> list[Address]:
        return [w for w in neighbors(v, self.r) if w in self.vertices]

    def degree(self, v: Address) -> int:
        return len(self.neighbors_in(v))

    def edges(self) -> list[tuple[Address, Address, int]]:
        """All edges as (source, sink, color), sorted."""
        out = []
        for x in self.sources():
            for c in range(1, self.r + 1):
                y = neighbor_via(x, c)
                if y in self.vertices:
                    out.append((x, y, c))
        return out

    def is_source_regular(self) -> bool:
        return all(self.degree(x) == self.r for x in self.sources())


def build_source_regular(r: int, n: int) -> TreeQuiver:
    """A source-regular subquiver with n sources and n(r-1)+1 sinks.

    Grown inductively: extend at the unique intermediate-degree sink when
    one exists, otherwise at the lexicographically least degree-1 sink.
    At every stage at most one sink has degree strictly between 1 and r.
    """
    if n < 1:
        raise ValueError("need at least one source")
    root: Address = ()
    verts: set[Address] = {root, *neighbors(root, r)}
    for _ in range(n - 1):
        sinks = sorted(v for v in verts if not is_source(v))
        degree = lambda v: sum(1 for w in neighbors(v, r) if w in verts)
        intermediate = [y for y in sinks if 1 < degree(y) < r]
        if intermediate:
            if len(intermediate) > 1:
                raise AssertionError("more than one intermediate sink")
            y = intermediate[0]
        else:
            y = min(v for v in sinks if degree(v) == 1)
        x = min(w for w in neighbors(y, r) if w not in verts)
        verts.add(x)
        verts.update(neighbors(x, r))
    return TreeQuiver(r, frozenset(verts))


def _sink_census(q: TreeQuiver) -> tuple[list[Address], Optional[Address], int]:
    """Full-degree sinks, the intermediate sink (or None), and s with
    q_full*(r-1) + s = a - 1."""
    full = [y for y in q.sinks() if q.degree(y) == q.r]
    inter = [y for y in q.sinks() if 1 < q.degree(y) < q.r]
    if len(inter) > 1:
        raise ValueError("quiver has more than one intermediate sink")
    a = len(q.sources())
    if inter:
        s = q.degree(inter[0]) - 1
    else:
        s = 0
    if len(full) * (q.r - 1) + s != a - 1:
        raise ValueError("sink census does not match a source-regular quiver")
    return sorted(full), inter[0] if inter else None, s


def max_cover_b(r: int, a: int) -> int:
    """Largest b reachable on a source-regular quiver with a sources.

    Equals floor((r - 1/(r-1)) a), computed from the sink census.
    """
    q, s = divmod(a - 1, r - 1)
    return (r - 1) * a + q * (r - 2) + s


def build_root_vector(q: TreeQuiver, a: int, b: int) -> dict[Address, int]:
    """Dimension vector with value 1 at sources and ordinary sinks and
    1 + budget at the distinguished sinks, summing to b over the sinks.

    The excess b - (r-1)a - 1 is distributed greedily: the full-degree
    sinks are filled first (at most r-2 each, in address order), then the
    intermediate sink (at most s-1).
    """
    r = q.r
    if len(q.sources()) != a:
        raise ValueError("quiver does not have a sources")
    if not q.is_source_regular():
        raise ValueError("quiver is not source-regular")
    if not ((r - 1) * a + 1 <= b and (r - 1) * b <= (r * r - r - 1) * a):
        raise ValueError(f"b={b} outside the window [(r-1)a+1, (r - 1/(r-1))a]")
    full, inter, s = _sink_census(q)
    excess = b - (r - 1) * a - 1
    capacity = len(full) * (r - 2) + (s - 1 if s else 0)
    if not 0 <= excess <= capacity:
        raise AssertionError("excess outside budget capacity despite window check")
    alpha = {v: 1 for v in q.vertices}
    for y in full:
        take = min(excess, r - 2)
        alpha[y] += take
        excess -= take
    if inter is not None and excess:
        take = min(excess, s - 1)
        alpha[inter] += take
        excess -= take
    if excess:
        raise AssertionError("budget distribution failed")
    return alpha


# ---------------------------------------------------------------------------
# tree representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeRep:
    """A finitely supported representation of the cover.

    ``dims`` records the nonzero vertex dimensions; ``maps`` is keyed by
    (tail, head) in the actual orientation of each edge and holds matrices
    of shape dim(head) x dim(tail).  Builders produce the canonical
    bipartite orientation (tails are sources); reflection functors flip
    edges at the reflected vertex.
    """

    r: int
    dims: dict[Address, int] = dc_field(default_factory=dict)
    maps: dict[Edge, ExactMatrix] = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        for v, d in self.dims.items():
            if d <= 0:
                raise ValueError(f"dims must list only positive dimensions, got {d} at {v}")
            if not is_reduced(v):
                raise ValueError(f"address {v} is not reduced")
        for (t, h), m in self.maps.items():
            edge_color(t, h)  # validates adjacency
            if (m.rows, m.cols) != (self.dims.get(h, 0), self.dims.get(t, 0)):
                raise ValueError(f"map at {t}->{h} has shape {(m.rows, m.cols)}")

    def support(self) -> set[Address]:
        return set(self.dims)

    def support_sources(self) -> list[Address]:
        return sorted(v for v in self.dims if is_source(v))

    def support_sinks(self) -> list[Address]:
        return sorted(v for v in self.dims if not is_source(v))

    def is_canonically_oriented(self) -> bool:
        return all(is_source(t) for (t, h) in self.maps)

    def dim_vector(self) -> dict[Address, int]:
        return dict(self.dims)

    def to_json(self) -> dict:
        verts = [{"addr": list(v), "dim": d} for v, d in sorted(self.dims.items())]
        edges = []
        for (t, h), m in sorted(self.maps.items()):
            edges.append({
                "src": list(t),
                "dst": list(h),
                "color": edge_color(t, h),
                "mat": m.to_str_lists(),
            })
        return {"r": self.r, "vertices": verts, "edges": edges}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def from_json(d: dict) -> "TreeRep":
        r = int(d["r"])
        dims = {tuple(v["addr"]): int(v["dim"]) for v in d["vertices"]}
        maps = {}
        for e in d["edges"]:
            t, h = tuple(e["src"]), tuple(e["dst"])
            maps[(t, h)] = ExactMatrix.from_str_lists(QQ, e["mat"], dims.get(h, 0), dims.get(t, 0))
        return TreeRep(r, dims, maps)


def _identity_1x1(fld: Field) -> ExactMatrix:
    return ExactMatrix.identity(fld, 1)


def _column(fld: Field, m: int, j: Optional[int]) -> ExactMatrix:
    """Standard basis column e_j of height m, or the all-ones column if j is None."""
    one, zero = fld.one, fld.zero
    if j is None:
        return ExactMatrix(fld, [[one]] * m, m, 1)
    return ExactMatrix(fld, [[one if i == j else zero] for i in range(m)], m, 1)


def _validate_alpha(q: TreeQuiver, alpha: dict[Address, int]) -> None:
    if set(alpha) != set(q.vertices):
        raise ValueError("alpha must be supported on the whole quiver")
    for x in q.sources():
        if alpha[x] != 1:
            raise ValueError(f"alpha must be 1 at every source, got {alpha[x]} at {x}")
    for y in q.sinks():
        bound = max(1, q.degree(y) - 1)
        if not 1 <= alpha[y] <= bound:
            raise ValueError(f"alpha at sink {y} must lie in 1..{bound}, got {alpha[y]}")


def build_indecomposable_tree_rep(q: TreeQuiver, alpha: dict[Address, int],
                                  field: Field = QQ,
                                  trace: Optional[list[str]] = None) -> TreeRep:
    """Indecomposable tree representation with dimension vector alpha.

    Recursion: peel a source whose neighbors are all leaves except one.
    When the remaining neighbor y carries the maximal value deg(y)-1 the
    recursion descends with value 1 at y and the step afterwards regrows
    y to a coordinate frame (standard basis columns on the old edges, the
    all-ones column on the new one); any endomorphism fixing those lines
    is scalar, which is what forces locality.  Otherwise the new source
    is adjoined with identity maps to its leaves and the inclusion of the
    first basis vector into the space at y.

    The endomorphism algebra of the result is verified downstream; the
    builder itself only guarantees the dimension vector and injectivity
    of every edge map.
    """
    _validate_alpha(q, alpha)
    if trace is None:
        trace = []
    dims, maps = _build_tree_rep(set(q.vertices), dict(alpha), q.r, field, trace)
    return TreeRep(q.r, dims, maps, field)


def _build_tree_rep(vertices: set[Address], alpha: dict[Address, int], r: int,
                    fld: Field, trace: list[str]):
    degree = lambda v: sum(1 for w in neighbors(v, r) if w in vertices)
    sources = sorted(v for v in vertices if is_source(v))
    if len(sources) == 1:
        x = sources[0]
        if any(alpha[v] != 1 for v in vertices):
            raise ValueError("star case requires the all-ones vector")
        dims = {v: 1 for v in vertices}
        maps = {(x, y): _identity_1x1(fld) for y in vertices if y != x}
        trace.append(f"star@{x}")
        return dims, maps

    for x in sources:
        nbrs = [w for w in neighbors(x, r) if w in vertices]
        if len(nbrs) != r:
            raise ValueError("quiver is not source-regular at a source")
        nonleaf = [y for y in nbrs if degree(y) >= 2]
        if len(nonleaf) == 1:
            break
    else:
        raise AssertionError("no peelable source in a multi-source tree")

    y = nonleaf[0]
    leaves = [w for w in nbrs if w != y]
    t = degree(y)
    rest = vertices - {x, *leaves}

    if alpha[y] == t - 1:
        # regrow y: the recursion carries value 1 there, the step installs
        # the rigid frame of t = alpha[y]+1 lines in general position
        m = alpha[y]
        sub_alpha = {v: alpha[v] for v in rest}
        sub_alpha[y] = 1
        dims, maps = _build_tree_rep(rest, sub_alpha, r, fld, trace)
        old_sources = sorted(w for w in neighbors(y, r) if w in rest)
        dims[y] = m
        for j, z in enumerate(old_sources):
            maps[(z, y)] = _column(fld, m, j)
        dims[x] = 1
        maps[(x, y)] = _column(fld, m, None)
        for w in leaves:
            dims[w] = 1
            maps[(x, w)] = _identity_1x1(fld)
        trace.append(f"reflect@{x}->{y}:dim{m}")
        return dims, maps

    if alpha[y] <= t - 2:
        sub_alpha = {v: alpha[v] for v in rest}
        dims, maps = _build_tree_rep(rest, sub_alpha, r, fld, trace)
        dims[x] = 1
        maps[(x, y)] = _column(fld, dims[y], 0)
        for w in leaves:
            dims[w] = 1
            maps[(x, w)] = _identity_1x1(fld)
        trace.append(f"extend@{x}->{y}")
        return dims, maps

    raise ValueError(f"alpha at {y} violates the sink bound")


def thin_path_rep(r: int, u: int, v: int, field: Field = QQ) -> TreeRep:
    """Thin zigzag representation with push-down dimension vector (u, v).

    Sources x_1..x_u alternate colors 1 and 2 along a path; the v chosen
    sinks always include the path sinks, the remainder are filled in
    address order from the neighborhood of the path.  All maps are 1x1
    identities, so every color-1 edge map incident to the support is
    injective.
    """
    if not (1 <= u <= v <= (r - 1) * u + 1):
        raise ValueError(f"need u <= v <= (r-1)u+1, got u={u}, v={v}")
    xs = []
    cur: Address = ()
    for i in range(u):
        xs.append(cur)
        cur = cur + (1, 2)
    path_sinks = [x + (1,) for x in xs]
    pool = sorted({w for x in xs for w in neighbors(x, r)} - set(path_sinks))
    chosen = set(path_sinks)
    for w in pool:
        if len(chosen) >= v:
            break
        chosen.add(w)
    if len(chosen) != v:
        raise AssertionError("sink pool exhausted")
    dims = {x: 1 for x in xs}
    dims.update({w: 1 for w in chosen})
    maps = {}
    for x in xs:
        for w in neighbors(x, r):
            if w in chosen:
                maps[(x, w)] = _identity_1x1(field)
    return TreeRep(r, dims, maps, field)


# ---------------------------------------------------------------------------
# push-down and exact certificates
# ---------------------------------------------------------------------------

def push_down(m: TreeRep) -> KroneckerRep:
    """Fold a tree representation onto the Kronecker quiver.

    Vertex 1 carries the sum over support sources, vertex 2 the sum over
    support sinks, both in address order; arrow c is assembled from all
    color-c edge maps as a block matrix with zero blocks elsewhere.
    """
    if not m.is_canonically_oriented():
        raise ValueError("push-down needs the bipartite orientation")
    srcs = m.support_sources()
    snks = m.support_sinks()
    col_off = {}
    a = 0
    for x in srcs:
        col_off[x] = a
        a += m.dims[x]
    row_off = {}
    b = 0
    for y in snks:
        row_off[y] = b
        b += m.dims[y]
    rows_by_color = [[[m.field.zero] * a for _ in range(b)] for _ in range(m.r)]
    for (x, y), mat in m.maps.items():
        c = edge_color(x, y)
        grid = rows_by_color[c - 1]
        ro, co = row_off[y], col_off[x]
        for i in range(mat.rows):
            src_row = mat.row_list(i)
            for j in range(mat.cols):
                grid[ro + i][co + j] = src_row[j]
    mats = tuple(ExactMatrix(m.field, g, b, a) for g in rows_by_color)
    return KroneckerRep(m.r, DimVector(a, b), mats, m.field)


def is_inj(m: TreeRep) -> tuple[bool, Optional[tuple[Address, Address, int]]]:
    """Exact equal-kernels certificate for push-downs.

    True iff every cover edge incident to the support has an injective
    map, including edges into sinks outside the support (those maps are
    zero, so any positive source dimension fails).  A failing edge is
    returned as witness.
    """
    if not m.is_canonically_oriented():
        raise ValueError("certificate defined for the bipartite orientation")
    for x in m.support_sources():
        dx = m.dims[x]
        for c in range(1, m.r + 1):
            y = neighbor_via(x, c)
            mat = m.maps.get((x, y))
            if mat is None:
                return False, (x, y, c)
            if mat.rank() != dx:
                return False, (x, y, c)
    return True, None


def source_regular_bound_check(m: TreeRep) -> tuple[bool, int, dict]:
    """Verify b >= (r-1)a + (max source dimension) on the push-down.

    Preconditions (membership in Inj) are reported in the detail rather
    than asserted; the slack b - (r-1)a - max_source_dim is returned.
    """
    inj, witness = is_inj(m)
    srcs = m.support_sources()
    a = sum(m.dims[x] for x in srcs)
    b = sum(m.dims[y] for y in m.support_sinks())
    max_src = max((m.dims[x] for x in srcs), default=0)
    slack = b - (m.r - 1) * a - max_src
    detail = {"inj": inj, "a": a, "b": b, "max_source_dim": max_src, "slack": slack}
    if not inj:
        detail["inj_witness"] = witness
    return slack >= 0, slack, detail
