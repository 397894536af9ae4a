"""Monomial bases of L(m*P_inf) on C_{a,b} curves and evaluation matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .curve import AffinePoint, CabCurve, genus
from .errors import ValidationError


class Monomial(NamedTuple):
    i: int
    j: int

    def pole_order(self, a: int, b: int) -> int:
        return a * self.i + b * self.j

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y" if self.j == 1 else f"y^{self.j}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class RRBasis:
    curve: CabCurve
    m: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def pole_orders(self) -> list[int]:
        return [mon.pole_order(self.curve.a, self.curve.b) for mon in self.monomials]


def rr_basis(curve: CabCurve, m: int) -> RRBasis:
    """x^i y^j with j < a and a*i + b*j <= m, by ascending pole order (then j)."""
    if m < 0:
        raise ValidationError(f"m must be >= 0, got {m}")
    a, b = curve.a, curve.b
    mons = [Monomial(i, j) for j in range(a) for i in range((m - b * j) // a + 1)
            if b * j <= m]
    mons.sort(key=lambda t: (a * t.i + b * t.j, t.j))
    return RRBasis(curve, m, tuple(mons))


def rr_dimension(curve: CabCurve, m: int) -> int:
    return len(rr_basis(curve, m))


def riemann_roch_dimension(curve: CabCurve, m: int) -> int | None:
    """deg G + 1 - g when that formula is exact (m > 2g - 2), else None."""
    g = genus(curve)
    return m + 1 - g if m > 2 * g - 2 else None


def evaluate_monomial(field, mon: Monomial, pt: Sequence[int]) -> int:
    return field.mul(field.pow(pt[0], mon.i), field.pow(pt[1], mon.j))


def evaluation_matrix(curve: CabCurve, m: int, points: Sequence[AffinePoint],
                      row_order: Sequence[Monomial] | None = None) -> list[list[int]]:
    """k x n matrix whose row r holds the r-th basis monomial at every point.

    ``row_order`` reorders the rows (it must be a permutation of the basis);
    the row space is unchanged.
    """
    pts = [AffinePoint(*p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValidationError("evaluation points must be distinct")
    mons = list(rr_basis(curve, m).monomials)
    if row_order is not None:
        row_order = [Monomial(*t) for t in row_order]
        if sorted(row_order) != sorted(mons):
            raise ValidationError("row_order is not a permutation of the basis")
        mons = row_order
    f = curve.field
    return [[evaluate_monomial(f, mon, p) for p in pts] for mon in mons]
