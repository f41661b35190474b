"""Reflection functors, the inverse translate, and preprojective witnesses.

Reflection at a source replaces its space by the cokernel of the combined
outgoing map and reverses the incident arrows.  On the bipartite cover the
inverse Auslander-Reiten translate factors as two such sweeps: reflect
every source in the one-ring extension of the support, then every old
sink (which became a source); the orientation returns to the bipartite
standard and zero vertices are trimmed.  The same two-step sweep on the
Kronecker quiver itself drives the preprojective chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import (
    Address,
    TreeQuiver,
    TreeRep,
    is_source,
    neighbors,
)
from .exactmat import ExactMatrix, Field, QQ, left_kernel_matrix, vstack
from .kronecker import DimVector, KroneckerRep, coxeter_apply, simple_rep, tits_form


# ---------------------------------------------------------------------------
# Weyl reflections on dimension vectors
# ---------------------------------------------------------------------------

def weyl_reflect(q: TreeQuiver, v: dict[Address, int], vertex: Address) -> dict[Address, int]:
    """Simple reflection of an integer vector at one vertex.

    The reflected coordinate becomes -v[vertex] + sum of the values at the
    in-quiver neighbors; every other coordinate is unchanged.
    """
    if vertex not in q.vertices:
        raise ValueError(f"{vertex} is not a vertex of the quiver")
    out = dict(v)
    nb = q.neighbors_in(vertex)
    out[vertex] = -v.get(vertex, 0) + sum(v.get(w, 0) for w in nb)
    return out


# ---------------------------------------------------------------------------
# reflection functor at a source
# ---------------------------------------------------------------------------

def reflect_functor_source(m: TreeRep, x: Address) -> TreeRep:
    """Reflection functor at a source vertex of the current orientation.

    The space at x becomes the cokernel of the combined map into the sum
    of the neighbor spaces; the incident arrows reverse and the induced
    maps are the neighbor injections followed by the cokernel projection.
    When the combined map is injective the new dimension is the Weyl
    reflection of the old one.  Vertices of dimension zero are allowed
    (their reflection is the direct sum of the neighbor spaces).
    """
    for (t, h) in m.maps:
        if h == x:
            raise ValueError(f"{x} is not a source: incoming edge from {t}")
    dx = m.dims.get(x, 0)
    nbrs = sorted(y for y in neighbors(x, m.r) if m.dims.get(y, 0) > 0)
    blocks = [m.maps.get((x, y), ExactMatrix.zeros(m.field, m.dims[y], dx)) for y in nbrs]
    total = sum(m.dims[y] for y in nbrs)
    if total == 0:
        # cokernel of the map into the zero space
        new_dims = {v: d for v, d in m.dims.items() if v != x}
        new_maps = {e: mat for e, mat in m.maps.items() if x not in e}
        return TreeRep(m.r, new_dims, new_maps, m.field)
    stacked = vstack(blocks) if blocks else ExactMatrix.zeros(m.field, 0, dx)
    proj = left_kernel_matrix(stacked)   # rows span the cokernel
    new_dim = proj.rows
    new_dims = {v: d for v, d in m.dims.items() if v != x}
    new_maps = {e: mat for e, mat in m.maps.items() if x not in e}
    if new_dim > 0:
        new_dims[x] = new_dim
        off = 0
        for y in nbrs:
            dy = m.dims[y]
            block = ExactMatrix(m.field,
                                [[proj[i, off + j] for j in range(dy)] for i in range(new_dim)],
                                new_dim, dy)
            new_maps[(y, x)] = block
            off += dy
    return TreeRep(m.r, new_dims, new_maps, m.field)


def tau_inverse_tree(m: TreeRep) -> TreeRep:
    """Inverse translate on the cover as a double reflection sweep.

    Sources adjacent to the support are reflected first (including the
    zero-dimensional ones, whose cokernels grow the support), then every
    old sink.  The result carries the bipartite orientation again; a zero
    result means the input was a sum of injectives and is an error.
    """
    if not m.dims:
        raise ValueError("cannot translate the zero representation")
    if not m.is_canonically_oriented():
        raise ValueError("translate defined for the bipartite orientation")
    support = set(m.dims)
    first = {v for v in support if is_source(v)}
    for y in support:
        if not is_source(y):
            first.update(neighbors(y, m.r))
    cur = m
    for x in sorted(first):
        cur = reflect_functor_source(cur, x)
    second = {v for v in cur.dims if not is_source(v)}
    for x in cur.dims:
        if is_source(x):
            second.update(neighbors(x, m.r))
    for y in sorted(second):
        cur = reflect_functor_source(cur, y)
    if not cur.dims:
        raise ValueError("translate vanished: input had injective summands")
    if not cur.is_canonically_oriented():
        raise AssertionError("sweep did not restore the bipartite orientation")
    return cur


# ---------------------------------------------------------------------------
# Coxeter shift planning
# ---------------------------------------------------------------------------

SHIFT_SAFETY_BOUND = 64


@dataclass(frozen=True)
class ReflectionPlan:
    """Shift exponent and intermediate vector for the outer-window case."""

    l: int
    window_case: str          # cover-case | thin-case
    intermediate: DimVector   # (u_l, v_l)


def coxeter_shift_plan(r: int, a: int, b: int) -> ReflectionPlan:
    """Smallest l >= 1 with Phi^l (a,b) inside the constructible window.

    Precondition: (a, b) lies strictly above the window, i.e.
    (r-1)b > (r^2-r-1)a, and q(a,b) <= 0.  The window test and the
    boundary dispatch (v = (r-1)u+1 resolves to the thin case) are pure
    integer arithmetic.
    """
    if tits_form(r, (a, b)) > 0:
        raise ValueError("shift planning needs q(a,b) <= 0")
    if (r - 1) * b <= (r * r - r - 1) * a:
        raise ValueError("(a,b) already lies inside the constructible window")
    u, v = a, b
    for l in range(1, SHIFT_SAFETY_BOUND + 1):
        u, v = coxeter_apply(r, (u, v), 1)
        if u < v and (r - 1) * v <= (r * r - r - 1) * u:
            case = "thin-case" if v <= (r - 1) * u + 1 else "cover-case"
            return ReflectionPlan(l, case, DimVector(u, v))
    raise AssertionError("no shift exponent within the safety bound")


# ---------------------------------------------------------------------------
# the translate on the Kronecker quiver and preprojective witnesses
# ---------------------------------------------------------------------------

def kron_tau_inverse(m: KroneckerRep) -> KroneckerRep:
    """Inverse translate on the Kronecker quiver via two source reflections.

    Vertex 1 is reflected first (cokernel of the stacked arrow matrices),
    then vertex 2; the arrows end up in their original direction and the
    dimension vector is the inverse Coxeter matrix applied to the input.
    """
    a, b = m.dim
    stacked = vstack(list(m.mats)) if b else ExactMatrix.zeros(m.field, 0, a)
    proj1 = left_kernel_matrix(stacked)          # (r*b - rank) x (r*b)
    n1 = proj1.rows
    blocks1 = []
    for j in range(m.r):
        blocks1.append(ExactMatrix(m.field,
                                   [[proj1[i, j * b + k] for k in range(b)] for i in range(n1)],
                                   n1, b))
    stacked2 = vstack(blocks1) if n1 else ExactMatrix.zeros(m.field, 0, b)
    proj2 = left_kernel_matrix(stacked2)         # (r*n1 - rank) x (r*n1)
    n2 = proj2.rows
    mats = []
    for i in range(m.r):
        mats.append(ExactMatrix(m.field,
                                [[proj2[p, i * n1 + k] for k in range(n1)] for p in range(n2)],
                                n2, n1))
    return KroneckerRep(m.r, DimVector(n1, n2), tuple(mats), m.field)


def explicit_p2(r: int, field: Field = QQ) -> KroneckerRep:
    """The projective of dimension (1, r): arrow i is the i-th basis column."""
    mats = []
    for i in range(r):
        col = [[field.one] if j == i else [field.zero] for j in range(r)]
        mats.append(ExactMatrix(field, col, r, 1))
    return KroneckerRep(r, DimVector(1, r), tuple(mats), field)


def build_preprojective(r: int, a: int, b: int, field: Field = QQ) -> KroneckerRep:
    """The unique indecomposable with real-root dimension vector (a, b), a < b.

    Located on the chain (0,1), (1,r), ... via the recursion
    v_{i+2} = r v_{i+1} - v_i, then constructed by iterating the inverse
    translate from the explicit seed of matching parity.
    """
    if tits_form(r, (a, b)) != 1 or not a < b:
        raise ValueError(f"({a},{b}) is not a preprojective root")
    chain = [DimVector(0, 1), DimVector(1, r)]
    while max(chain[-1]) < b:
        p, q = chain[-2], chain[-1]
        chain.append(DimVector(r * q.a - p.a, r * q.b - p.b))
    try:
        idx = chain.index(DimVector(a, b))
    except ValueError:
        raise ValueError(f"({a},{b}) is not on the preprojective chain") from None
    rep = simple_rep(r, (0, 1), field) if idx % 2 == 0 else explicit_p2(r, field)
    for _ in range(idx // 2):
        rep = kron_tau_inverse(rep)
    if rep.dim != DimVector(a, b):
        raise AssertionError("translate chain missed the requested dimension vector")
    return rep
