"""Linear codes over GF(q) and the evaluation (AG) codes of C_{a,b} curves."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .curve import AffinePoint, CabCurve, enumerate_affine_points
from .errors import CapExceededError, ValidationError
from .field import GF
from .riemann_roch import Monomial, evaluation_matrix

# default cap on q^k for exhaustive codeword enumeration
MAX_ENUMERATION = 1 << 24
_CHUNK = 1 << 15


def rref(field: GF, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(u, field.mul(f, v)) for u, v in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(field: GF, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(field, rows)[1])


@dataclass(frozen=True)
class Provenance:
    curve: CabCurve
    m: int
    points: tuple[AffinePoint, ...]
    row_order: tuple[Monomial, ...] | None = None

    def to_json(self) -> dict:
        f = self.curve.field
        return {
            "curve": self.curve.to_json(),
            "m": self.m,
            "points": [[f.format(p.x), f.format(p.y)] for p in self.points],
        }


class LinearCode:
    """Row space of a generator matrix over ``field``.

    ``canon`` is the RREF of the generator (zero rows dropped), so two codes
    are equal exactly when their ``canon`` matrices coincide.
    """

    def __init__(self, field: GF, gen: Sequence[Sequence[int]], n: int | None = None,
                 provenance: Provenance | None = None) -> None:
        gen = [[field.check(v) for v in row] for row in gen]
        if n is None:
            if not gen:
                raise ValidationError("length n is required for an empty generator")
            n = len(gen[0])
        if n < 1:
            raise ValidationError("code length must be >= 1")
        if any(len(row) != n for row in gen):
            raise ValidationError("generator rows must all have length n")
        self.field = field
        self.n = n
        self.gen = gen
        self.canon, self.pivots = rref(field, gen)
        self.provenance = provenance

    @property
    def k(self) -> int:
        return len(self.canon)

    rank = k

    def contains(self, vec: Sequence[int]) -> bool:
        f = self.field
        res = list(vec)
        for row, c in zip(self.canon, self.pivots):
            coef = res[c]
            if coef:
                res = [f.sub(u, f.mul(coef, v)) for u, v in zip(res, row)]
        return not any(res)

    def permuted(self, perm: Sequence[int]) -> "LinearCode":
        """Image under the coordinate permutation sending position i to perm[i]."""
        rows = []
        for row in self.gen:
            out = [0] * self.n
            for i, v in enumerate(row):
                out[perm[i]] = v
            rows.append(out)
        return LinearCode(self.field, rows, self.n)

    def canon_array(self) -> np.ndarray:
        return np.array(self.canon, dtype=np.int64).reshape(self.k, self.n)

    def codeword_chunks(self, max_enum: int = MAX_ENUMERATION) -> Iterator[np.ndarray]:
        """All q^k codewords, as (chunk, n) arrays, message 0 first."""
        q, k = self.field.q, self.k
        total = q ** k
        if total > max_enum:
            raise CapExceededError(f"q^k = {q}^{k} exceeds enumeration cap {max_enum}")
        basis = self.canon_array()
        f = self.field
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            words = np.zeros((len(idx), self.n), dtype=np.int64)
            for r in range(k):
                coef = (idx // q ** r) % q
                words = f.vadd(words, f.vmul(coef[:, None], basis[r][None, :]))
            yield words

    def format_matrix(self, rows: Sequence[Sequence[int]] | None = None) -> list[list[str]]:
        rows = self.gen if rows is None else rows
        return [[self.field.format(v) for v in row] for row in rows]

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.q}))"


def build_code(curve: CabCurve, m: int, point_order: Sequence[AffinePoint] | None = None,
               row_order: Sequence[Monomial] | None = None) -> LinearCode:
    """Evaluation code of L(m*P_inf) at the affine rational points (or ``point_order``)."""
    if point_order is None:
        points = enumerate_affine_points(curve)
    else:
        points = [AffinePoint(*p) for p in point_order]
        for p in points:
            if not curve.contains(p):
                raise ValidationError(f"point {p} is not on the curve")
    if not points:
        raise ValidationError("curve has no affine rational points")
    gen = evaluation_matrix(curve, m, points, row_order)
    prov = Provenance(curve, m, tuple(points),
                      tuple(row_order) if row_order is not None else None)
    return LinearCode(curve.field, gen, len(points), prov)


def weight_distribution(code: LinearCode, max_enum: int = MAX_ENUMERATION) -> dict[int, int]:
    """Number of codewords of each Hamming weight (weights with count 0 omitted)."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for words in code.codeword_chunks(max_enum):
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=code.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def minimum_distance(code: LinearCode, max_enum: int = MAX_ENUMERATION) -> int:
    """Exact minimum distance by enumerating every nonzero message."""
    if code.k == 0:
        raise ValidationError("the zero code has no minimum distance")
    best = code.n
    for words in code.codeword_chunks(max_enum):
        w = np.count_nonzero(words, axis=1)
        w = w[w > 0]
        if len(w):
            best = min(best, int(w.min()))
    return best


def designed_distance(code: LinearCode) -> int:
    """n - deg G; may be zero or negative when m >= n (see designed_bound_vacuous)."""
    if code.provenance is None:
        raise ValidationError("designed distance needs a curve provenance")
    return code.n - code.provenance.m


def designed_bound_vacuous(code: LinearCode) -> bool:
    return designed_distance(code) <= 0


def is_mds(code: LinearCode, d: int | None = None) -> bool:
    if d is None:
        d = minimum_distance(code)
    return d == code.n - code.k + 1


def dual_code(code: LinearCode) -> LinearCode:
    """Null space of the generator (the dual / C_Omega code), n - k dimensional."""
    f, n = code.field, code.n
    free = [c for c in range(n) if c not in set(code.pivots)]
    rows = []
    for c in free:
        v = [0] * n
        v[c] = 1
        for row, p in zip(code.canon, code.pivots):
            v[p] = f.neg(row[c])
        rows.append(v)
    return LinearCode(f, rows, n)


def full_space(field: GF, n: int) -> LinearCode:
    return LinearCode(field, [[int(i == j) for j in range(n)] for i in range(n)], n)


def codes_equal(c1: LinearCode, c2: LinearCode) -> bool:
    if c1.field != c2.field or c1.n != c2.n:
        raise ValidationError("codes live in different ambient spaces")
    return c1.canon == c2.canon


def inner_products_vanish(c1: LinearCode, c2: LinearCode) -> bool:
    """True when every generator row of c1 is orthogonal to every row of c2."""
    f = c1.field
    for r in c1.gen:
        for s in c2.gen:
            if f.sum(f.mul(u, v) for u, v in zip(r, s)):
                return False
    return True
