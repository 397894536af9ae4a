"""C_{a,b} curves and general plane curves over GF(q).

A bivariate polynomial is a dict ``{(i, j): c}`` meaning sum c X^i Y^j, with
zero coefficients never stored.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import CapExceededError, ValidationError
from .field import GF, embed_field, evaluate_poly, make_field

# extension fields scanned by smoothness_check are capped at this size
SMOOTHNESS_MAX_FIELD = 1 << 12


class AffinePoint(NamedTuple):
    x: int
    y: int


Poly = Mapping[tuple[int, int], int]


def _clean(field: GF, coeffs: Poly) -> dict[tuple[int, int], int]:
    out = {}
    for (i, j), c in coeffs.items():
        if i < 0 or j < 0:
            raise ValidationError(f"negative exponent in term ({i}, {j})")
        c = field.check(c)
        if c:
            out[(int(i), int(j))] = c
    return out


def poly_eval(field: GF, poly: Poly, x: int, y: int) -> int:
    acc = 0
    for (i, j), c in poly.items():
        acc = field.add(acc, field.mul(c, field.mul(field.pow(x, i), field.pow(y, j))))
    return acc


def poly_derivative(field: GF, poly: Poly, var: int) -> dict[tuple[int, int], int]:
    """Formal partial derivative in X (var=0) or Y (var=1)."""
    out = {}
    for (i, j), c in poly.items():
        e = (i, j)[var]
        c2 = field.mul(field.from_int(e), c)
        if c2:
            out[(i - 1, j) if var == 0 else (i, j - 1)] = c2
    return out


def y_coefficients(field: GF, poly: Poly, x: int) -> list[int]:
    """Coefficients (low-to-high in Y) of poly(x, Y)."""
    deg = max((j for _, j in poly), default=0)
    out = [0] * (deg + 1)
    for (i, j), c in poly.items():
        out[j] = field.add(out[j], field.mul(c, field.pow(x, i)))
    return out


def format_poly(field: GF, poly: Poly) -> str:
    terms = []
    for (i, j) in sorted(poly, key=lambda t: (-(t[0] + t[1]), -t[1])):
        c = poly[(i, j)]
        mono = "*".join(s for s in (
            "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
            "" if j == 0 else ("y" if j == 1 else f"y^{j}")) if s)
        cs = field.format(c)
        if not mono:
            terms.append(cs)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


class PlaneCurve:
    """Affine plane curve f(X, Y) = 0 with an arbitrary nonzero polynomial f."""

    def __init__(self, field: GF, coeffs: Poly) -> None:
        self.field = field
        self.coeffs = _clean(field, coeffs)
        if not self.coeffs:
            raise ValidationError("defining polynomial is identically zero")

    def evaluate(self, x: int, y: int) -> int:
        return poly_eval(self.field, self.coeffs, x, y)

    def contains(self, pt: Sequence[int]) -> bool:
        return self.evaluate(pt[0], pt[1]) == 0

    def over(self, big: GF) -> "PlaneCurve":
        """The same curve with coefficients pushed into an extension field."""
        table = embed_field(self.field, big)
        return PlaneCurve(big, {k: table[c] for k, c in self.coeffs.items()})

    def describe(self) -> str:
        return f"{format_poly(self.field, self.coeffs)} = 0 over GF({self.field.q})"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class CabCurve(PlaneCurve):
    """C_{a,b} curve: c Y^a + c' X^b + (terms X^i Y^j with a*i + b*j < a*b).

    Construct through :func:`make_cab_curve`, which normalises a < b.
    """

    def __init__(self, a: int, b: int, coeffs: Poly, field: GF) -> None:
        super().__init__(field, coeffs)
        if a < 1 or b < 1:
            raise ValidationError("a and b must be positive")
        if math.gcd(a, b) != 1:
            raise ValidationError(f"gcd({a}, {b}) != 1")
        if not self.coeffs.get((0, a)) or not self.coeffs.get((b, 0)):
            raise ValidationError("leading coefficients of Y^a and X^b must be nonzero")
        for (i, j) in self.coeffs:
            if (i, j) in ((0, a), (b, 0)):
                continue
            if a * i + b * j >= a * b:
                raise ValidationError(
                    f"term X^{i} Y^{j} has weight {a * i + b * j} >= {a * b}")
        self.a = a
        self.b = b

    def over(self, big: GF) -> "CabCurve":
        table = embed_field(self.field, big)
        return CabCurve(self.a, self.b, {k: table[c] for k, c in self.coeffs.items()}, big)

    def to_json(self) -> dict:
        f = self.field
        return {
            "a": self.a,
            "b": self.b,
            "field": f.to_json(),
            "coeffs": [{"i": i, "j": j, "c": f.format(c)}
                       for (i, j), c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CabCurve":
        try:
            field = GF.from_json(obj["field"])
            coeffs: dict[tuple[int, int], int] = {}
            for t in obj["coeffs"]:
                key = (int(t["i"]), int(t["j"]))
                c = field.parse(str(t["c"]))
                coeffs[key] = field.add(coeffs.get(key, 0), c)
            return make_cab_curve(int(obj["a"]), int(obj["b"]), coeffs, field)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad curve description: {exc}") from exc


def make_cab_curve(a: int, b: int, coeffs: Poly, field: GF) -> CabCurve:
    """Validated C_{a,b} curve; a > b is normalised by swapping X and Y."""
    if a > b:
        a, b = b, a
        coeffs = {(j, i): c for (i, j), c in coeffs.items()}
    return CabCurve(a, b, coeffs, field)


def genus(curve: CabCurve) -> int:
    return (curve.a - 1) * (curve.b - 1) // 2


def branch_point_counts(curve: CabCurve) -> tuple[int, int]:
    """Branch-point counts (d1, d2) of the degree-a and degree-b projections."""
    a, b = curve.a, curve.b
    return b * (a - 1) + 1, a * (b - 1) + 1


def enumerate_affine_points(curve: PlaneCurve) -> list[AffinePoint]:
    """Affine rational points, x in canonical field order, then y."""
    field = curve.field
    elems = np.array(field.elements(), dtype=np.int64)
    points = []
    for x in field.elements():
        ys = y_coefficients(field, curve.coeffs, x)
        if any(ys):
            vals = evaluate_poly(field, ys, elems)
            roots = elems[vals == 0]
        else:
            roots = elems
        points.extend(AffinePoint(x, int(y)) for y in roots)
    return points


@dataclass(frozen=True)
class SmoothUpTo:
    ext_degree: int

    @property
    def smooth(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"verdict": "smooth", "ext_degree": self.ext_degree}


@dataclass(frozen=True)
class SingularAt:
    point: AffinePoint
    ext_degree: int
    field: GF

    @property
    def smooth(self) -> bool:
        return False

    def to_json(self) -> dict:
        f = self.field
        return {"verdict": "singular", "ext_degree": self.ext_degree,
                "point": [f.format(self.point.x), f.format(self.point.y)],
                "field": f.to_json()}


def smoothness_check(curve: PlaneCurve, max_ext_degree: int = 2) -> SmoothUpTo | SingularAt:
    """Look for affine singular points over GF(q^e), e = 1..max_ext_degree.

    Sound but incomplete: a singular point defined only over a larger
    extension, or at infinity, is not seen.  Point coordinates of a
    SingularAt result live in the reported extension field.
    """
    if max_ext_degree < 1:
        raise ValidationError("max_ext_degree must be >= 1")
    base = curve.field
    for e in range(1, max_ext_degree + 1):
        if base.q ** e > SMOOTHNESS_MAX_FIELD:
            raise CapExceededError(
                f"GF({base.p}^{base.m * e}) exceeds smoothness scan bound {SMOOTHNESS_MAX_FIELD}")
        big = base if e == 1 else make_field(base.p, base.m * e)
        c = curve if e == 1 else curve.over(big)
        fx = poly_derivative(big, c.coeffs, 0)
        fy = poly_derivative(big, c.coeffs, 1)
        for pt in enumerate_affine_points(c):
            if poly_eval(big, fx, *pt) == 0 and poly_eval(big, fy, *pt) == 0:
                return SingularAt(pt, e, big)
    return SmoothUpTo(max_ext_degree)


def genus3_normal_form(b: int, c: int, d: int, e: int, f: int, k: int, l: int,
                       field: GF) -> PlaneCurve:
    """(x+b)y^3 + (cx+d)y^2 + (ex^2+fx)y + x^3 + kx^2 + lx as a plane curve.

    The x*y^3 term puts this outside the C_{a,b} support condition, so the
    result is a generic PlaneCurve.
    """
    terms = {(1, 3): 1, (0, 3): b, (1, 2): c, (0, 2): d, (2, 1): e, (1, 1): f,
             (3, 0): 1, (2, 0): k, (1, 0): l}
    return PlaneCurve(field, terms)


def hyperelliptic_as_cab(g: int, f_coeffs: Sequence[int], field: GF) -> CabCurve:
    """Y^2 = f(X) with deg f = 2g + 1 as a C_{2, 2g+1} curve (odd characteristic)."""
    if field.p == 2:
        raise ValidationError("Y^2 = f(X) models are inseparable in characteristic 2")
    cs = list(f_coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if g < 1 or len(cs) - 1 != 2 * g + 1:
        raise ValidationError(f"deg f must be 2g+1 = {2 * g + 1}, got {len(cs) - 1}")
    coeffs = {(0, 2): 1}
    for i, c in enumerate(cs):
        if c:
            coeffs[(i, 0)] = field.neg(field.check(c))
    return make_cab_curve(2, 2 * g + 1, coeffs, field)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_LHS_RE = re.compile(r"^y\^(\d+)(-y)?$")
_TERM_RE = re.compile(
    r"^(?:(?P<coef>a(?:\^\d+)?|\d+)\*?)?(?P<x>x(?:\^(?P<k>\d+))?)?$")


def _parse_rhs(text: str, field: GF) -> dict[int, int]:
    if not text:
        raise ValidationError("empty right-hand side")
    out: dict[int, int] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        mo = _TERM_RE.match(body)
        if not mo or (mo.group("coef") is None and mo.group("x") is None):
            raise ValidationError(f"cannot parse term {body!r}")
        coef = field.parse(mo.group("coef")) if mo.group("coef") else 1
        if mo.group("x") is None:
            k = 0
        else:
            k = int(mo.group("k") or 1)
        if sign == "-":
            coef = field.neg(coef)
        out[k] = field.add(out.get(k, 0), coef)
    if "".join(s + b for s, b in re.findall(r"([+-]?)([^+-]+)", text)) != text:
        raise ValidationError(f"cannot parse {text!r}")
    return out


def parse_curve(text: str, field: GF) -> CabCurve:
    """Parse ``y^A=RHS`` or ``y^A-y=RHS`` with RHS a sum of ``c*x^k`` terms.

    Coefficients are integers or ``a^k`` (powers of the field generator).
    """
    s = re.sub(r"\s+", "", text)
    if s.count("=") != 1:
        raise ValidationError(f"curve {text!r} must contain exactly one '='")
    lhs, rhs = s.split("=")
    mo = _LHS_RE.match(lhs)
    if not mo:
        raise ValidationError(f"left-hand side must be y^A or y^A-y, got {lhs!r}")
    a = int(mo.group(1))
    coeffs: dict[tuple[int, int], int] = {(0, a): 1}
    if mo.group(2):
        coeffs[(0, 1)] = field.add(coeffs.get((0, 1), 0), field.neg(1))
    for k, c in _parse_rhs(rhs, field).items():
        coeffs[(k, 0)] = field.sub(coeffs.get((k, 0), 0), c)
    xdeg = [k for (k, j), c in coeffs.items() if j == 0 and c]
    if not xdeg:
        raise ValidationError("right-hand side has no x term")
    return make_cab_curve(a, max(xdeg), coeffs, field)


def parse_points(text: str, curve: PlaneCurve) -> list[AffinePoint]:
    """One ``x,y`` pair per line in element text format; blank lines and # comments skipped."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ValidationError(f"line {lineno}: expected 'x,y'")
        pt = AffinePoint(curve.field.parse(parts[0]), curve.field.parse(parts[1]))
        if not curve.contains(pt):
            raise ValidationError(f"line {lineno}: ({line}) is not on the curve")
        pts.append(pt)
    return pts
