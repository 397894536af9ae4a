"""Permutation automorphism groups of codes and affine automorphisms of curves.

Permutations are tuples of images on 0..n-1; ``perm`` sends coordinate i to
perm[i], and acts on vectors by w[perm[i]] = v[i].  Composition
``compose(s, t)`` is "t first, then s".
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .code import LinearCode, dual_code, rref
from .curve import AffinePoint, CabCurve, genus
from .errors import CapExceededError, ValidationError
from .field import GF

Perm = tuple[int, ...]

EXHAUSTIVE_MAX_N = 8
DEFAULT_MAX_N = 12
MAX_ENUMERATED_ORDER = 10 ** 6
AUTO_SEARCH_MAX_FIELD = 1 << 12


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[i] for i in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v] = i
    return tuple(out)


def perm_order(s: Perm) -> int:
    seen = [False] * len(s)
    order = 1
    for i in range(len(s)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = s[j]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def closure(gens: Iterable[Perm], n: int, limit: int = MAX_ENUMERATED_ORDER) -> set[Perm]:
    """All elements of the group generated by ``gens``."""
    gens = [tuple(g) for g in gens]
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise CapExceededError(f"group has more than {limit} elements")
                queue.append(y)
    return seen


def greedy_generators(elements: Iterable[Perm], n: int) -> list[Perm]:
    """Scan elements in lexicographic order, keeping those that enlarge the span."""
    gens: list[Perm] = []
    span = {identity(n)}
    for g in sorted(elements):
        if g not in span:
            gens.append(g)
            span = closure(gens, n)
    return gens


@dataclass
class PermGroup:
    n: int
    generators: list[Perm]
    order: int
    _elements: set[Perm] | None = dc_field(default=None, repr=False)

    def elements(self, limit: int = MAX_ENUMERATED_ORDER) -> set[Perm]:
        if self._elements is None:
            if self.order > limit:
                raise CapExceededError(f"group order {self.order} exceeds {limit}")
            self._elements = closure(self.generators, self.n, limit)
        return self._elements

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.elements()


@dataclass(frozen=True)
class GroupInvariants:
    order: int
    is_cyclic: bool
    is_abelian: bool
    element_orders: dict[int, int]

    def to_json(self) -> dict:
        return {"order": self.order, "cyclic": self.is_cyclic, "abelian": self.is_abelian,
                "element_orders": {str(k): v for k, v in sorted(self.element_orders.items())}}


def group_invariants(group: PermGroup, max_order: int = MAX_ENUMERATED_ORDER) -> GroupInvariants:
    elems = group.elements(max_order)
    hist = Counter(perm_order(g) for g in elems)
    gens = group.generators
    abelian = all(compose(s, t) == compose(t, s) for s in gens for t in gens)
    return GroupInvariants(len(elems), group.order in hist, abelian, dict(sorted(hist.items())))


def group_to_json(group: PermGroup, max_order: int = MAX_ENUMERATED_ORDER) -> dict:
    out = {"order": group.order, "cyclic": None, "abelian": None, "element_orders": None}
    if group.order <= max_order:
        out.update(group_invariants(group, max_order).to_json())
    else:
        gens = group.generators
        out["abelian"] = all(compose(s, t) == compose(t, s) for s in gens for t in gens)
        if not out["abelian"]:
            out["cyclic"] = False
    out["generators"] = [list(g) for g in group.generators]
    return out


# ---------------------------------------------------------------------------
# PAut search
# ---------------------------------------------------------------------------

def is_automorphism(code: LinearCode, perm: Sequence[int]) -> bool:
    """Whether the coordinate permutation maps the code onto itself."""
    if sorted(perm) != list(range(code.n)):
        raise ValidationError("not a permutation of the code coordinates")
    for row in code.canon:
        w = [0] * code.n
        for i, v in enumerate(row):
            w[perm[i]] = v
        if not code.contains(w):
            return False
    return True


def _exhaustive_members(code: LinearCode) -> list[Perm]:
    f, n = code.field, code.n
    canon = code.canon_array()
    if code.k == 0 or code.k == n:
        return [tuple(p) for p in permutations(range(n))]
    found = []
    all_perms = permutations(range(n))
    while True:
        block = np.array(list(_take(all_perms, 1 << 14)), dtype=np.int64)
        if not len(block):
            break
        inv = np.argsort(block, axis=1)
        ok = np.ones(len(block), dtype=bool)
        for row in canon:
            res = row[inv]
            for t, c in enumerate(code.pivots):
                coef = res[:, c]
                res = f.vsub(res, f.vmul(coef[:, None], canon[t][None, :]))
            ok &= ~res.any(axis=1)
        found.extend(tuple(int(v) for v in p) for p in block[ok])
    return found


def _take(it, count):
    for _ in range(count):
        try:
            yield next(it)
        except StopIteration:
            return


def column_signatures(code: LinearCode, max_enum: int = 1 << 20) -> list[tuple]:
    """Per-coordinate PAut invariant: weight distribution of the code shortened there.

    Falls back to an all-equal signature when enumeration exceeds ``max_enum``.
    """
    n = code.n
    try:
        hists = np.zeros((n, n + 1), dtype=np.int64)
        for words in code.codeword_chunks(max_enum):
            w = np.count_nonzero(words, axis=1)
            zero = words == 0
            for c in range(n):
                hists[c] += np.bincount(w[zero[:, c]], minlength=n + 1)
    except CapExceededError:
        return [()] * n
    return [tuple(int(v) for v in h) for h in hists]


def _punctured_canon(field: GF, canon: list[list[int]], cols: Sequence[int]):
    return rref(field, [[row[c] for c in cols] for row in canon])[0]


def _find_element(code: LinearCode, sigs: list[tuple], prefix: list[int]) -> Perm | None:
    """Some automorphism extending the partial map i -> prefix[i], or None."""
    n, f, canon = code.n, code.field, code.canon
    images = list(prefix)
    used = set(images)
    source: dict[int, list] = {}

    def consistent() -> bool:
        t = len(images)
        if t not in source:
            source[t] = _punctured_canon(f, canon, range(t))
        return source[t] == _punctured_canon(f, canon, images)

    if not consistent():
        return None

    def extend() -> Perm | None:
        c = len(images)
        if c == n:
            perm = tuple(images)
            return perm if is_automorphism(code, perm) else None
        for j in range(n):
            if j in used or sigs[j] != sigs[c]:
                continue
            images.append(j)
            used.add(j)
            if consistent():
                hit = extend()
                if hit is not None:
                    return hit
            images.pop()
            used.discard(j)
        return None

    return extend()


def _orbit(point: int, gens: list[Perm]) -> set[int]:
    orb = {point}
    queue = [point]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                queue.append(y)
    return orb


def _chain_search(code: LinearCode) -> tuple[list[Perm], int]:
    """Strong generating set and order via a pointwise-stabiliser chain.

    Level i finds, for every candidate j, one automorphism fixing 0..i-1 and
    sending i to j; levels are processed deepest first so that orbits at level
    i can reuse generators found below it.  PAut(C) = PAut(C^perp), so the
    search runs on whichever has the smaller dimension; puncturing prunes
    nothing until the prefix is longer than the dimension.
    """
    n = code.n
    if code.k > n - code.k:
        code = dual_code(code)
    sigs = column_signatures(code)
    sgs: list[Perm] = []
    order = 1
    for i in reversed(range(n)):
        level = [g for g in sgs if all(g[t] == t for t in range(i))]
        orb = _orbit(i, level)
        for j in range(i + 1, n):
            if j in orb or sigs[j] != sigs[i]:
                continue
            hit = _find_element(code, sigs, list(range(i)) + [j])
            if hit is not None:
                sgs.append(hit)
                level.append(hit)
                orb = _orbit(i, level)
        order *= len(orb)
    return sgs, order


def paut(code: LinearCode, method: str = "auto", max_n: int = DEFAULT_MAX_N) -> PermGroup:
    """Permutation automorphism group of ``code``.

    ``method`` is "exhaustive" (scan all of S_n, n <= 8), "pruned"
    (stabiliser-chain backtracking with signature and puncturing pruning) or
    "auto" (exhaustive when n <= 8, pruned otherwise).
    """
    n = code.n
    if n > max_n:
        raise CapExceededError(f"n = {n} exceeds PAut search bound {max_n}")
    if method == "auto":
        method = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "pruned"
    if method == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise CapExceededError(f"exhaustive S_n scan limited to n <= {EXHAUSTIVE_MAX_N}")
        members = set(_exhaustive_members(code))
        return PermGroup(n, greedy_generators(members, n), len(members), members)
    if method == "pruned":
        gens, order = _chain_search(code)
        return PermGroup(n, gens, order)
    raise ValidationError(f"unknown PAut method {method!r}")


def sn_expected(code: LinearCode) -> bool:
    """Whether the code is in a regime where PAut must be all of S_n."""
    if code.provenance is None:
        raise ValidationError("sn_expected needs a curve provenance")
    return code.provenance.m < code.provenance.curve.a or code.k == code.n


# ---------------------------------------------------------------------------
# Hypothesis arithmetic of the PAut ~ Aut_{D,G} theorem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoHypothesis:
    n: int
    terms: tuple[Fraction, ...]
    bound: Fraction
    required_n: int
    holds: bool
    beta_readings: tuple[int, int]
    bounds_by_reading: tuple[Fraction, Fraction]
    holds_by_reading: tuple[bool, bool]

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [str(t) for t in self.terms], "bound": str(self.bound),
                "required_n": self.required_n, "holds": self.holds,
                "beta_readings": list(self.beta_readings),
                "bounds_by_reading": [str(b) for b in self.bounds_by_reading],
                "holds_by_reading": list(self.holds_by_reading)}


def _iso_terms(g: int, k: int, l: int, m: int, beta: int) -> tuple[Fraction, ...]:
    third = Fraction(k * l) if k == 1 else k * (l + Fraction(k - 1, beta))
    fourth = l * k * (1 + Fraction(k - 1, m - k + 1))
    return (Fraction(2 * g + 2), Fraction(2 * m), third, fourth)


def iso_hypothesis_check(curve: CabCurve, m: int, n: int) -> IsoHypothesis:
    """Evaluate n > max{2g+2, 2m, k(l + (k-1)/beta), lk(1 + (k-1)/(m-k+1))}.

    k, l are the pole orders a, b of x and y.  beta has two readings:
    min(k-1, least r >= 1 with y^r in L(m P_inf)) and
    min(k-1, largest such r).  ``required_n``/``holds`` use the first.
    ``required_n`` is floor(bound), so the condition is n > required_n.
    """
    k, l = curve.a, curve.b
    if m < l:
        raise ValidationError(f"hypothesis needs m >= l = {l}, got m = {m}")
    if k >= l:
        raise ValidationError("hypothesis needs l > k")
    g = genus(curve)
    readings = (min(k - 1, 1), min(k - 1, m // l))
    bounds = []
    terms_first: tuple[Fraction, ...] = ()
    for idx, beta in enumerate(readings):
        terms = _iso_terms(g, k, l, m, beta)
        if idx == 0:
            terms_first = terms
        bounds.append(max(terms))
    bound = bounds[0]
    return IsoHypothesis(
        n=n, terms=terms_first, bound=bound, required_n=math.floor(bound), holds=n > bound,
        beta_readings=readings, bounds_by_reading=(bounds[0], bounds[1]),
        holds_by_reading=(n > bounds[0], n > bounds[1]))


# ---------------------------------------------------------------------------
# Affine-diagonal curve automorphisms (x, y) -> (alpha x + beta, gamma y + delta)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveAuto:
    alpha: int
    beta: int
    gamma: int
    delta: int

    def apply(self, field: GF, pt: Sequence[int]) -> AffinePoint:
        return AffinePoint(field.add(field.mul(self.alpha, pt[0]), self.beta),
                           field.add(field.mul(self.gamma, pt[1]), self.delta))

    def to_json(self, field: GF) -> dict:
        return {k: field.format(getattr(self, k)) for k in ("alpha", "beta", "gamma", "delta")}


def _linear_powers(field: GF, s: int, t: int, top: int) -> list[list[int]]:
    """Coefficient lists of (s*Z + t)^e for e = 0..top."""
    out = [[1]]
    for _ in range(top):
        prev = out[-1]
        nxt = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i] = field.add(nxt[i], field.mul(c, t))
            nxt[i + 1] = field.add(nxt[i + 1], field.mul(c, s))
        out.append(nxt)
    return out


def substitute(curve: CabCurve, auto: CurveAuto) -> dict[tuple[int, int], int]:
    """Coefficients of f(alpha X + beta, gamma Y + delta)."""
    f = curve.field
    top_i = max(i for i, _ in curve.coeffs)
    top_j = max(j for _, j in curve.coeffs)
    xp = _linear_powers(f, auto.alpha, auto.beta, top_i)
    yp = _linear_powers(f, auto.gamma, auto.delta, top_j)
    out: dict[tuple[int, int], int] = {}
    for (i, j), c in curve.coeffs.items():
        for i2, u in enumerate(xp[i]):
            if not u:
                continue
            cu = f.mul(c, u)
            for j2, v in enumerate(yp[j]):
                if v:
                    key = (i2, j2)
                    out[key] = f.add(out.get(key, 0), f.mul(cu, v))
    return {key: v for key, v in out.items() if v}


def is_curve_automorphism(curve: CabCurve, auto: CurveAuto) -> bool:
    """Exact check that f(alpha x + beta, gamma y + delta) = lambda f(x, y), lambda != 0."""
    f = curve.field
    if auto.alpha == 0 or auto.gamma == 0:
        return False
    lam = f.pow(auto.gamma, curve.a)
    target = {key: f.mul(lam, c) for key, c in curve.coeffs.items()}
    return substitute(curve, auto) == target


def _veval(field: GF, coeffs, xs, ys):
    acc = np.zeros(np.broadcast(xs, ys).shape, dtype=np.int64)
    for (i, j), c in coeffs.items():
        term = np.full(acc.shape, c, dtype=np.int64)
        for _ in range(i):
            term = field.vmul(term, xs)
        for _ in range(j):
            term = field.vmul(term, ys)
        acc = field.vadd(acc, term)
    return acc


def diagonal_curve_autos(curve: CabCurve, max_field: int = AUTO_SEARCH_MAX_FIELD) -> list[CurveAuto]:
    """All (alpha, beta, gamma, delta) giving a curve automorphism of that affine shape.

    The Y^a and X^b coefficients force lambda = gamma^a = alpha^b, which
    limits the (alpha, gamma) pairs; (beta, delta) are scanned with a
    vectorised sample-point filter before the exact polynomial identity check.
    """
    f = curve.field
    if f.q > max_field:
        raise CapExceededError(f"GF({f.q}) exceeds curve-automorphism search bound {max_field}")
    a, b = curve.a, curve.b
    nonzero = f.elements()[1:]
    by_power: dict[int, list[int]] = {}
    for al in nonzero:
        by_power.setdefault(f.pow(al, b), []).append(al)
    elems = np.array(f.elements(), dtype=np.int64)
    betas, deltas = np.meshgrid(elems, elems, indexing="ij")
    samples = [(x, y) for x in f.elements()[:3] for y in f.elements()[:3]]
    found = []
    for ga in nonzero:
        lam = f.pow(ga, a)
        for al in by_power.get(lam, []):
            ok = np.ones(betas.shape, dtype=bool)
            for x, y in samples:
                lhs = _veval(f, curve.coeffs, f.vadd(f.mul(al, x), betas),
                             f.vadd(f.mul(ga, y), deltas))
                ok &= lhs == f.mul(lam, curve.evaluate(x, y))
            for be, de in zip(betas[ok].tolist(), deltas[ok].tolist()):
                auto = CurveAuto(al, be, ga, de)
                if is_curve_automorphism(curve, auto):
                    found.append(auto)
    key = f.canonical_index
    found.sort(key=lambda s: (key(s.alpha), key(s.beta), key(s.gamma), key(s.delta)))
    return found


def induced_permutation(auto: CurveAuto, points: Sequence[AffinePoint], field: GF) -> Perm:
    """Coordinate permutation i -> index of auto(points[i])."""
    index = {AffinePoint(*p): i for i, p in enumerate(points)}
    out = []
    for p in points:
        img = auto.apply(field, p)
        if img not in index:
            raise ValidationError(f"automorphism moves {p} off the evaluation set")
        out.append(index[img])
    return tuple(out)
