import itertools
import random

import pytest

from cabcodes.code import (LinearCode, build_code, codes_equal, designed_bound_vacuous,
                           designed_distance, dual_code, full_space, inner_products_vanish,
                           is_mds, minimum_distance, rank, rref, weight_distribution)
from cabcodes.curve import enumerate_affine_points, genus, make_cab_curve, parse_curve
from cabcodes.errors import CapExceededError, ValidationError
from cabcodes.field import make_field


def brute_min_distance(code):
    """Scalar enumeration of every message against the raw generator rows."""
    f = code.field
    best = None
    for msg in itertools.product(range(f.q), repeat=len(code.gen)):
        word = [f.sum(f.mul(c, row[i]) for c, row in zip(msg, code.gen)) for i in range(code.n)]
        w = sum(1 for v in word if v)
        if w and (best is None or w < best):
            best = w
    return best


def random_curve(field, rng):
    a, b = rng.choice([(2, 3), (3, 4), (2, 5), (3, 5)])
    if field.p == 2 and a == 2:
        a, b = 3, 4
    coeffs = {(0, a): rng.randrange(1, field.q), (b, 0): rng.randrange(1, field.q)}
    for i in range(b):
        for j in range(a):
            if a * i + b * j < a * b and rng.random() < 0.4:
                coeffs[(i, j)] = rng.randrange(field.q)
    return make_cab_curve(a, b, coeffs, field)


def code_corpus(count=60, seed=11):
    rng = random.Random(seed)
    fields = [make_field(5), make_field(7), make_field(2, 3), make_field(3, 2)]
    out = []
    while len(out) < count:
        f = rng.choice(fields)
        c = random_curve(f, rng)
        n = len(enumerate_affine_points(c))
        if n < 2:
            continue
        m = rng.randrange(0, n + 6)
        code = build_code(c, m)
        if f.q ** code.k <= 1 << 16:
            out.append(code)
    return out


CORPUS = code_corpus()


def test_example_parameters(ex1_curve, ex2_curve, ex3_curve):
    c1, c2, c3 = build_code(ex1_curve, 4), build_code(ex2_curve, 3), build_code(ex3_curve, 6)
    assert (c1.n, c1.k) == (8, 3)
    assert (c2.n, c2.k) == (8, 2)
    assert (c3.n, c3.k) == (4, 4)
    assert minimum_distance(c1) == 6 and minimum_distance(c2) == 7 and minimum_distance(c3) == 1
    assert is_mds(c1) and is_mds(c2) and is_mds(c3)


def test_repetition_code(ex1_curve):
    c = build_code(ex1_curve, 0)
    assert c.k == 1 and minimum_distance(c) == c.n == 8
    assert is_mds(c)
    assert designed_distance(c) == 8


def test_designed_distance(ex1_curve, ex3_curve):
    c1 = build_code(ex1_curve, 4)
    assert designed_distance(c1) == 4 <= minimum_distance(c1)
    c3 = build_code(ex3_curve, 6)
    assert designed_distance(c3) == -2 and designed_bound_vacuous(c3)
    with pytest.raises(ValidationError):
        designed_distance(LinearCode(c1.field, c1.gen))


def test_minimum_distance_matches_brute_force():
    for code in CORPUS[:25]:
        if code.field.q ** len(code.gen) <= 5000:
            assert minimum_distance(code) == brute_min_distance(code)


def test_minimum_distance_errors(gf8):
    with pytest.raises(ValidationError):
        minimum_distance(LinearCode(gf8, [], n=4))
    with pytest.raises(CapExceededError):
        minimum_distance(full_space(gf8, 9), max_enum=1000)


def test_weight_distribution(gf4, ex1_curve):
    rep = LinearCode(gf4, [[1, 1, 1, 1]])
    assert weight_distribution(rep) == {0: 1, 4: 3}
    wd = weight_distribution(build_code(ex1_curve, 4))
    assert sum(wd.values()) == 8 ** 3 and wd[0] == 1 and min(w for w in wd if w) == 6
    assert weight_distribution(LinearCode(gf4, [], n=3)) == {0: 1}


def test_dual_examples(ex1_curve, ex3_curve, gf4):
    c1 = build_code(ex1_curve, 4)
    d1 = dual_code(c1)
    assert (d1.n, d1.k) == (8, 5)
    assert inner_products_vanish(c1, d1)
    assert dual_code(build_code(ex3_curve, 6)).k == 0
    rep = LinearCode(gf4, [[1] * 5])
    par = dual_code(rep)
    assert par.k == 4 and all(par.field.sum(row) == 0 for row in par.gen)


def test_duality_corpus():
    assert len(CORPUS) >= 50
    for code in CORPUS:
        dual = dual_code(code)
        assert inner_products_vanish(code, dual)
        assert code.k + dual.k == code.n
        assert codes_equal(dual_code(dual), code)


def test_codes_equal_examples(ex1_curve, ex3_curve, gf4):
    c1 = build_code(ex1_curve, 4)
    shuffled = LinearCode(c1.field, [c1.gen[2], c1.gen[0], c1.gen[1]])
    assert codes_equal(c1, shuffled)
    assert not codes_equal(c1, dual_code(c1))
    printed = [["a^1", "a^2", "0", "0"], ["a^2", "a^1", "0", "0"],
               ["a^1", "a^2", "1", "0"], ["1", "1", "1", "1"]]
    p = LinearCode(gf4, [[gf4.parse(s) for s in row] for row in printed])
    assert codes_equal(build_code(ex3_curve, 6), p)
    assert p.canon == [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(ValidationError):
        codes_equal(c1, full_space(gf4, 8))


def test_canonical_form_invariant_under_row_operations():
    rng = random.Random(5)
    for code in CORPUS[:20]:
        f = code.field
        rows = [list(r) for r in code.gen]
        for _ in range(10):
            i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
            if i != j:
                c = rng.randrange(f.q)
                rows[i] = [f.add(u, f.mul(c, v)) for u, v in zip(rows[i], rows[j])]
        scaled = [[f.mul(3 % f.q or 1, v) for v in r] for r in rows]
        assert codes_equal(LinearCode(f, scaled, code.n), code) == (rank(f, scaled) == code.k)


def test_bounds_and_dimension_law():
    for code in CORPUS:
        prov = code.provenance
        d = minimum_distance(code) if code.k else None
        if d is not None:
            assert d <= code.n - code.k + 1
            if prov.m < code.n:
                assert d >= code.n - prov.m
        g = genus(prov.curve)
        if 2 * g - 2 < prov.m < code.n:
            assert code.k == prov.m + 1 - g


def test_rref_properties(gf8):
    r1, r2 = [1, 2, 3, 4], [0, 0, 1, 5]
    r3 = [gf8.add(u, gf8.mul(2, v)) for u, v in zip(r1, r2)]
    red, piv = rref(gf8, [r1, r2, r3])
    assert len(red) == 2 and piv == [0, 2]
    for r, c in zip(red, piv):
        assert r[c] == 1
        assert all(other[c] == 0 for other in red if other is not r)


def test_no_points_rejected():
    # y^2 + y vanishes on GF(2) while x^3 + x + 1 does not
    f = make_field(2)
    c = parse_curve("y^2-y=x^3+x+1", f)
    assert enumerate_affine_points(c) == []
    with pytest.raises(ValidationError):
        build_code(c, 3)


def test_point_order_override(ex1_curve):
    pts = enumerate_affine_points(ex1_curve)[::-1]
    c = build_code(ex1_curve, 4, point_order=pts)
    assert c.provenance.points == tuple(pts)
    with pytest.raises(ValidationError):
        build_code(ex1_curve, 4, point_order=[(0, 0)])
