"""Certification: Hom spaces, Ext dimensions, indecomposability, sampling checks.

Hom(M, N) is computed as the solution space of the intertwining system
f2 M(arrow_i) = N(arrow_i) f1; Ext^1 is the cokernel dimension of the same
presentation, computed from the rank rather than from the bilinear form so
the Euler identity remains a nontrivial cross-check.  Indecomposability is
certified through locality of the endomorphism algebra, whose radical is
the kernel of the trace form of the left regular representation (valid in
characteristic zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactmat import ExactMatrix, QQ, sparse_int_echelon, sparse_int_kernel
from .kronecker import (
    KroneckerRep,
    generic_rank,
    pencil,
    probe_alphas,
    tits_form,
)


@dataclass(frozen=True)
class HomSpace:
    """Basis of morphism pairs (f1: aN x aM, f2: bN x bM) and its dimension."""

    basis: tuple[tuple[ExactMatrix, ExactMatrix], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _intertwining_rows(m: KroneckerRep, n: KroneckerRep):
    """Sparse rows of the system f2 M(g_i) - N(g_i) f1 = 0.

    Unknowns are the entries of f1 (row-major) followed by the entries of
    f2 (row-major).  One row per (arrow, target row p, source column j).
    """
    aM, bM = m.dim
    aN, bN = n.dim
    nvars = aN * aM + bN * bM
    f2_off = aN * aM
    zero = m.field.zero
    rows = []
    for t in range(m.r):
        A = m.mats[t]   # bM x aM
        B = n.mats[t]   # bN x aN
        for p in range(bN):
            brow = B.row_list(p)
            for j in range(aM):
                row = {}
                for q in range(bM):
                    x = A[q, j]
                    if x:
                        row[f2_off + p * bM + q] = x
                for i in range(aN):
                    y = brow[i]
                    if y:
                        row[i * aM + j] = row.get(i * aM + j, zero) - y
                if row:
                    rows.append(row)
    return rows, nvars


def _clear_denominators(row: dict) -> dict:
    den = 1
    for v in row.values():
        d = v.denominator
        den = den * d // gcd(den, d)
    return {c: int(v * den) for c, v in row.items() if v}


def hom_space(m: KroneckerRep, n: KroneckerRep) -> HomSpace:
    """Basis of the space of morphisms from m to n, solved exactly."""
    if m.r != n.r:
        raise ValueError("arrow counts differ")
    if m.field != n.field:
        raise ValueError("ground fields differ")
    aM, bM = m.dim
    aN, bN = n.dim
    rows, nvars = _intertwining_rows(m, n)
    fld = m.field
    if fld == QQ:
        kernel = sparse_int_kernel([_clear_denominators(r) for r in rows], nvars)
    else:
        dense = [[fld.zero] * nvars for _ in rows]
        for rrow, drow in zip(rows, dense):
            for c, v in rrow.items():
                drow[c] = v
        kernel = ExactMatrix(fld, dense, len(dense), nvars).kernel_basis() if rows \
            else [ExactMatrix.identity(fld, nvars).row_list(i) for i in range(nvars)]
    basis = []
    for vec in kernel:
        f1 = ExactMatrix(fld, [[vec[i * aM + j] for j in range(aM)] for i in range(aN)], aN, aM)
        off = aN * aM
        f2 = ExactMatrix(fld, [[vec[off + p * bM + q] for q in range(bM)] for p in range(bN)], bN, bM)
        basis.append((f1, f2))
    return HomSpace(tuple(basis))


def ext_dim(m: KroneckerRep, n: KroneckerRep) -> int:
    """Dimension of Ext^1(m, n) from the intertwining presentation.

    Computed as r*aM*bN minus the rank of the system matrix (the cokernel
    of the map (f1, f2) -> (f2 M(g_i) - N(g_i) f1)_i), independently of
    the bilinear form.
    """
    if m.r != n.r:
        raise ValueError("arrow counts differ")
    if m.field != n.field:
        raise ValueError("ground fields differ")
    rows, nvars = _intertwining_rows(m, n)
    fld = m.field
    if fld == QQ:
        rk = len(sparse_int_echelon([_clear_denominators(r) for r in rows], nvars))
    else:
        dense = [[fld.zero] * nvars for _ in rows]
        for rrow, drow in zip(rows, dense):
            for c, v in rrow.items():
                drow[c] = v
        rk = ExactMatrix(fld, dense, len(dense), nvars).rank() if rows else 0
    return m.r * m.dim.a * n.dim.b - rk


def is_brick(m: KroneckerRep) -> bool:
    """True iff the endomorphism algebra is one-dimensional."""
    return hom_space(m, m).dim == 1


def end_is_local(m: KroneckerRep) -> bool:
    """Locality of End(m) over the rationals: indecomposability certificate.

    The radical of the endomorphism algebra is the kernel of the trace
    bilinear form of the left regular representation (characteristic
    zero); the algebra is local with residue field k exactly when the
    dimension drops to 1.
    """
    if m.field != QQ:
        raise ValueError("locality testing is supported over the rationals only")
    endos = hom_space(m, m)
    nb = endos.dim
    if nb == 0:
        return False
    if nb == 1:
        return True
    # coordinates of arbitrary endomorphisms in the computed basis
    aM, bM = m.dim
    nvars = aM * aM + bM * bM
    cols = []
    for f1, f2 in endos.basis:
        cols.append([f1[i, j] for i in range(aM) for j in range(aM)]
                    + [f2[p, q] for p in range(bM) for q in range(bM)])
    basis_mat = ExactMatrix(QQ, [[cols[k][v] for k in range(nb)] for v in range(nvars)],
                            nvars, nb)

    def coords(f1: ExactMatrix, f2: ExactMatrix) -> list[Fraction]:
        target = [f1[i, j] for i in range(aM) for j in range(aM)] \
            + [f2[p, q] for p in range(bM) for q in range(bM)]
        sol = basis_mat.solve(target)
        if sol is None:
            raise AssertionError("endomorphism product escaped the basis span")
        return sol

    left_mult = []
    for f1i, f2i in endos.basis:
        columns = [coords(f1i @ f1j, f2i @ f2j) for f1j, f2j in endos.basis]
        left_mult.append(ExactMatrix(QQ, [[columns[j][k] for j in range(nb)] for k in range(nb)],
                                     nb, nb))
    trace_form = [[Fraction(0)] * nb for _ in range(nb)]
    for i in range(nb):
        for j in range(i, nb):
            prod = left_mult[i] @ left_mult[j]
            tr = sum((prod[k, k] for k in range(nb)), Fraction(0))
            trace_form[i][j] = tr
            trace_form[j][i] = tr
    radical_dim = nb - ExactMatrix(QQ, trace_form, nb, nb).rank()
    return nb - radical_dim == 1


# ---------------------------------------------------------------------------
# sampling checks
# ---------------------------------------------------------------------------

def ekp_sample_check(m: KroneckerRep, samples: int = 200, seed: int = 0) -> bool:
    """True iff every sampled pencil has zero kernel (probabilistic check).

    The standard basis vectors are always probed first; exact certificates
    come from the echelon and cover modules.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    a = m.dim.a
    for alpha in probe_alphas(m.field, m.r, samples, seed):
        if pencil(m, alpha).rank() != a:
            return False
    return True


def eip_sample_check(m: KroneckerRep, samples: int = 200, seed: int = 0) -> bool:
    """True iff every sampled pencil has full row rank (probabilistic check)."""
    if samples < 1:
        raise ValueError("need at least one sample")
    b = m.dim.b
    for alpha in probe_alphas(m.field, m.r, samples, seed):
        if pencil(m, alpha).rank() != b:
            return False
    return True


def restriction_check(m: KroneckerRep, samples: int = 200, seed: int = 0) -> tuple[bool, dict]:
    """Generic-rank restrictions satisfied by indecomposable representations.

    Computes (d_M, c_M) by sampling and checks q(d_M, d_M + c_M) <= 1;
    when the sampled ranks are constant and m is not simple, additionally
    checks c_M >= r - 1.  The caller is responsible for having certified
    indecomposability.
    """
    d, c, record = generic_rank(m, samples, seed)
    q_val = tits_form(m.r, (d, d + c))
    ok = q_val <= 1
    detail = {"d": d, "c": c, "q": q_val, "record": record}
    constant = len(record["ranks_seen"]) == 1
    if constant and m.total_dim() > 1:
        detail["cjt_clause"] = c >= m.r - 1
        ok = ok and c >= m.r - 1
    return ok, detail
