"""Representations of the r-Kronecker quiver and their numerical invariants.

The quiver has two vertices and r parallel arrows from vertex 1 to
vertex 2; a representation is a dimension pair (a, b) together with r
matrices of shape b x a acting on column vectors.  This module houses the
bilinear and Tits forms, the Coxeter matrix, root classification, pencil
evaluation and Jordan types, duality, direct sums, the translation to
nilpotent operator matrices, and the JSON interchange format shared by
every CLI command.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .exactmat import QQ, ExactMatrix, Field, Scalar, field_from_json

# alpha samples are drawn from this symmetric integer box; a random
# rational point detects the generic rank with overwhelming probability
ALPHA_BOX = 999


class DimVector(NamedTuple):
    """Dimension pair (a, b): a at vertex 1, b at vertex 2."""

    a: int
    b: int


class JordanType(NamedTuple):
    """Block-count pair: c blocks of size 1 and d blocks of size 2."""

    c: int
    d: int


@dataclass(frozen=True)
class RootClass:
    """Classification of a dimension vector under the Tits form."""

    kind: str       # not-a-root | real | imaginary
    position: str   # preprojective | preinjective | regular | simple | n/a


@dataclass(frozen=True)
class KroneckerRep:
    """A representation of the r-Kronecker quiver: r matrices of shape b x a."""

    r: int
    dim: DimVector
    mats: tuple[ExactMatrix, ...]
    field: Field = QQ

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("arrow count r must be at least 2")
        if len(self.mats) != self.r:
            raise ValueError(f"expected {self.r} matrices, got {len(self.mats)}")
        a, b = self.dim
        if a < 0 or b < 0:
            raise ValueError("negative dimension")
        for m in self.mats:
            if (m.rows, m.cols) != (b, a):
                raise ValueError(f"matrix shape {(m.rows, m.cols)} != {(b, a)}")
            if m.field != self.field:
                raise ValueError("matrix field differs from representation field")

    def total_dim(self) -> int:
        return self.dim.a + self.dim.b

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "dim": [self.dim.a, self.dim.b],
            "field": self.field.to_json(),
            "mats": [m.to_str_lists() for m in self.mats],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def from_json(d: dict) -> "KroneckerRep":
        field = field_from_json(d["field"])
        a, b = (int(x) for x in d["dim"])
        mats = tuple(
            ExactMatrix.from_str_lists(field, m, b, a) for m in d["mats"]
        )
        return KroneckerRep(int(d["r"]), DimVector(a, b), mats, field)


# ---------------------------------------------------------------------------
# quadratic and bilinear forms, Coxeter matrix
# ---------------------------------------------------------------------------

def tits_form(r: int, v: Sequence[int]) -> int:
    """q(a, b) = a^2 + b^2 - r*a*b."""
    if r < 2:
        raise ValueError("r must be at least 2")
    a, b = v
    return a * a + b * b - r * a * b


def euler_form(r: int, x: Sequence[int], y: Sequence[int]) -> int:
    """Bilinear form <x, y> = x1*y1 + x2*y2 - r*x1*y2."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return x[0] * y[0] + x[1] * y[1] - r * x[0] * y[1]


def coxeter_matrix(r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    return ((r * r - 1, -r), (r, -1))


def coxeter_matrix_inverse(r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    return ((-1, r), (-r, r * r - 1))


def coxeter_apply(r: int, v: Sequence[int], power: int) -> tuple[int, int]:
    """Apply the Coxeter matrix (or its exact integer inverse) ``power`` times.

    Intermediate and final vectors may have negative entries; callers own
    the interpretation.
    """
    m = coxeter_matrix(r) if power >= 0 else coxeter_matrix_inverse(r)
    x, y = int(v[0]), int(v[1])
    for _ in range(abs(power)):
        x, y = m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y
    return (x, y)


def classify_root(r: int, v: Sequence[int]) -> RootClass:
    """Root class of a nonzero dimension vector under q."""
    a, b = int(v[0]), int(v[1])
    if (a, b) == (0, 0):
        raise ValueError("the zero vector is not classified")
    q = tits_form(r, (a, b))
    if q > 1:
        return RootClass("not-a-root", "n/a")
    if q == 1:
        if (a, b) in ((1, 0), (0, 1)):
            return RootClass("real", "simple")
        return RootClass("real", "preprojective" if a < b else "preinjective")
    return RootClass("imaginary", "regular")


# ---------------------------------------------------------------------------
# pencils and Jordan types
# ---------------------------------------------------------------------------

def pencil(m: KroneckerRep, alpha: Sequence) -> ExactMatrix:
    """The b x a matrix sum(alpha_i * mats[i])."""
    if len(alpha) != m.r:
        raise ValueError("alpha length must equal the arrow count")
    coeffs = [m.field.element(x) for x in alpha]
    if all(not c for c in coeffs):
        raise ValueError("alpha must be nonzero")
    a, b = m.dim
    zero = m.field.zero
    rows = [[zero] * a for _ in range(b)]
    for c, mat in zip(coeffs, m.mats):
        if not c:
            continue
        for i in range(b):
            src = mat.row_list(i)
            acc = rows[i]
            for j in range(a):
                x = src[j]
                if x:
                    acc[j] = acc[j] + c * x
    return ExactMatrix(m.field, rows, b, a)


def jordan_type_at(m: KroneckerRep, alpha: Sequence) -> JordanType:
    """Jordan type of the pencil operator at alpha: d = rank, c = a+b-2d."""
    d = pencil(m, alpha).rank()
    return JordanType(m.dim.a + m.dim.b - 2 * d, d)


def sample_alpha(field: Field, r: int, rng: random.Random) -> list[Scalar]:
    """A nonzero coefficient vector with entries from the sampling box."""
    while True:
        if field == QQ:
            vals = [rng.randint(-ALPHA_BOX, ALPHA_BOX) for _ in range(r)]
        else:
            vals = [rng.randint(0, field.p - 1) for _ in range(r)]
        if any(vals):
            return [field.element(v) for v in vals]


def probe_alphas(field: Field, r: int, samples: int, seed: int) -> list[list[Scalar]]:
    """Deterministic sample plan: the r standard basis vectors first, then
    seeded random draws.

    Probing the basis catches the degenerate pencils that vanish on a
    coordinate hyperplane, which random integer draws would almost never
    hit exactly.
    """
    rng = random.Random(seed)
    out = []
    zero, one = field.zero, field.one
    for i in range(min(r, samples)):
        out.append([one if j == i else zero for j in range(r)])
    while len(out) < samples:
        out.append(sample_alpha(field, r, rng))
    return out


def generic_rank(m: KroneckerRep, samples: int = 100, seed: int = 0) -> tuple[int, int, dict]:
    """Sampled generic rank d_M, the complement c_M, and the sampling record.

    The maximal pencil rank is attained on a dense open set, so the
    sampled maximum is a certified lower bound for the generic rank and
    equals it with high probability; the record lists every rank seen.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    ranks = set()
    for alpha in probe_alphas(m.field, m.r, samples, seed):
        ranks.add(pencil(m, alpha).rank())
    d = max(ranks)
    c = m.dim.a + m.dim.b - 2 * d
    record = {"seed": seed, "samples": samples, "ranks_seen": sorted(ranks)}
    return d, c, record


def is_constant_jordan_type(m: KroneckerRep, samples: int = 100, seed: int = 0
                            ) -> tuple[bool, Optional[JordanType], dict]:
    """Sampled constancy check of the pencil rank.

    Verdict is true iff all sampled ranks agree; exact certificates for
    the constructions come from the echelon and cover modules and are
    combined with this check by the pipeline.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    d, c, record = generic_rank(m, samples, seed)
    constant = len(record["ranks_seen"]) == 1
    return constant, JordanType(c, d) if constant else None, record


# ---------------------------------------------------------------------------
# duality, sums, simples
# ---------------------------------------------------------------------------

def dual(m: KroneckerRep) -> KroneckerRep:
    """Transpose every arrow matrix and swap the two vertices."""
    return KroneckerRep(m.r, DimVector(m.dim.b, m.dim.a),
                        tuple(mat.transpose() for mat in m.mats), m.field)


def direct_sum(m: KroneckerRep, n: KroneckerRep) -> KroneckerRep:
    if m.r != n.r or m.field != n.field:
        raise ValueError("incompatible summands")
    a = m.dim.a + n.dim.a
    b = m.dim.b + n.dim.b
    mats = []
    for p, q in zip(m.mats, n.mats):
        rows = [row + [m.field.zero] * n.dim.a for row in p.to_lists()]
        rows += [[m.field.zero] * m.dim.a + row for row in q.to_lists()]
        mats.append(ExactMatrix(m.field, rows, b, a))
    return KroneckerRep(m.r, DimVector(a, b), tuple(mats), m.field)


def simple_rep(r: int, dim: Sequence[int], field: Field = QQ) -> KroneckerRep:
    """The simple at vertex 1 (dim (1,0)) or at vertex 2 (dim (0,1))."""
    a, b = int(dim[0]), int(dim[1])
    if (a, b) not in ((1, 0), (0, 1)):
        raise ValueError("a simple has dimension (1,0) or (0,1)")
    mats = tuple(ExactMatrix.zeros(field, b, a) for _ in range(r))
    return KroneckerRep(r, DimVector(a, b), mats, field)


# ---------------------------------------------------------------------------
# admissible Jordan types and the dimension-vector bijection
# ---------------------------------------------------------------------------

def is_in_ijt(r: int, c: int, d: int) -> tuple[bool, str]:
    """Membership of (c, d) in the realizable set, with the decisive clause.

    All clauses are pure integer arithmetic; no square roots are ever
    evaluated.
    """
    if c < 0 or d < 0:
        raise ValueError("c and d must be nonnegative")
    if c < 1:
        return False, "c >= 1"
    if d < 1:
        return False, "d >= 1"
    if tits_form(r, (d, d + c)) > 1:
        return False, "q(d, d+c) <= 1"
    if c < r - 1:
        return False, "c >= r-1"
    return True, "in IJT"


def xi(c: int, d: int) -> DimVector:
    """(c, d) -> (d, d+c), the dimension vector of an equal-kernels witness."""
    return DimVector(d, d + c)


def xi_inverse(a: int, b: int) -> JordanType:
    """(a, b) -> (b-a, a); requires b >= a."""
    if b < a:
        raise ValueError("xi_inverse needs b >= a")
    return JordanType(b - a, a)


# ---------------------------------------------------------------------------
# module-operator translation
# ---------------------------------------------------------------------------

def to_module_operators(m: KroneckerRep) -> list[ExactMatrix]:
    """Square nilpotent operators X_i = [[0,0],[mats[i],0]] on M1 + M2.

    Every product X_i X_j vanishes (Loewy length at most 2) and the rank
    of sum(alpha_i X_i) equals the rank of the corresponding pencil.
    """
    a, b = m.dim
    n = a + b
    ops = []
    for mat in m.mats:
        rows = [[m.field.zero] * n for _ in range(n)]
        for i in range(b):
            src = mat.row_list(i)
            for j in range(a):
                rows[a + i][j] = src[j]
        ops.append(ExactMatrix(m.field, rows, n, n))
    return ops


# ---------------------------------------------------------------------------
# preprojective / preinjective dimension vectors
# ---------------------------------------------------------------------------

def preprojective_dim_vectors(r: int, limit: int) -> list[DimVector]:
    """P1, P2, ... dimension vectors until a component exceeds ``limit``."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    out = []
    prev, cur = DimVector(0, 1), DimVector(1, r)
    while max(prev) <= limit:
        if tits_form(r, prev) != 1:
            raise AssertionError("preprojective recursion left the real roots")
        out.append(prev)
        prev, cur = cur, DimVector(r * cur.a - prev.a, r * cur.b - prev.b)
    return out


def preinjective_dim_vectors(r: int, limit: int) -> list[DimVector]:
    """I1, I2, ... dimension vectors until a component exceeds ``limit``."""
    return [DimVector(b, a) for a, b in preprojective_dim_vectors(r, limit)]
