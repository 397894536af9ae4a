"""Acceptance criteria, one test (and one printed PASS/FAIL line) per criterion."""

import math
import random
import time

from cabcodes.cli import sweep_rows
from cabcodes.code import (LinearCode, build_code, codes_equal, dual_code, full_space,
                           inner_products_vanish, is_mds, minimum_distance, rank)
from cabcodes.curve import enumerate_affine_points, genus, make_cab_curve, parse_curve
from cabcodes.field import make_field
from cabcodes.groups import (diagonal_curve_autos, group_invariants, induced_permutation,
                             is_automorphism, iso_hypothesis_check, paut)
from cabcodes.riemann_roch import evaluation_matrix, rr_basis
from cabcodes.worked_examples import CURVES, EX3_MATRIX, example1_code, matrix_from_text


def verdict(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\nacceptance criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_example1_code(capsys):
    start = time.perf_counter()
    built, printed = example1_code()
    d = minimum_distance(built)
    elapsed = time.perf_counter() - start
    exact = built.gen == printed.gen
    ok = ((built.n, built.k, d) == (8, 3, 6) and is_mds(built, d) and elapsed < 1.0
          and (exact or codes_equal(built, printed)))
    verdict(capsys, 1, ok, f"[{built.n}, {built.k}, {d}] MDS={is_mds(built, d)} "
            f"matrix {'entry-for-entry' if exact else 'row space'} match, {elapsed:.3f}s")


def test_criterion_02_example1_group(capsys):
    built, _ = example1_code(exact_order=False)
    start = time.perf_counter()
    group = paut(built, method="exhaustive")
    elapsed = time.perf_counter() - start
    inv = group_invariants(group)
    ok = group.order == 14 and inv.is_cyclic and elapsed < 30
    verdict(capsys, 2, ok, f"|PAut| = {group.order}, cyclic = {inv.is_cyclic}, "
            f"element orders {inv.element_orders}, S_8 scan {elapsed:.2f}s")


def test_criterion_03_example2(capsys, ex2_curve):
    code = build_code(ex2_curve, 3)
    d = minimum_distance(code)
    group = paut(code)
    abelian = group_invariants(group).is_abelian
    ok = (code.n, code.k, d) == (8, 2, 7) and is_mds(code, d) and group.order == 56 and not abelian
    verdict(capsys, 3, ok, f"[{code.n}, {code.k}, {d}] |PAut| = {group.order} abelian = {abelian}")


def test_criterion_04_example3(capsys, ex3_curve, gf4):
    code = build_code(ex3_curve, 6)
    d = minimum_distance(code)
    printed = LinearCode(gf4, matrix_from_text(gf4, EX3_MATRIX))
    group = paut(code)
    hist = group_invariants(group).element_orders
    ok = ((code.n, code.k, d) == (4, 4, 1) and is_mds(code, d)
          and codes_equal(code, full_space(gf4, 4)) and codes_equal(code, printed)
          and group.order == 24 and hist == {1: 1, 2: 9, 3: 8, 4: 6})
    verdict(capsys, 4, ok, f"[{code.n}, {code.k}, {d}] |PAut| = {group.order} orders {hist}")


def test_criterion_05_degenerate(capsys):
    bad, checked = [], 0
    for text, (p, e), _ in CURVES:
        curve = parse_curve(text, make_field(p, e))
        n = len(enumerate_affine_points(curve))
        for m in (0, 1, 2, n + 5, n + 6):
            code = build_code(curve, m)
            want_k = 1 if m <= 2 else n
            order = paut(code).order
            checked += 1
            if code.k != want_k or order != math.factorial(n):
                bad.append(f"{text} m={m}: k={code.k} |PAut|={order}")
    verdict(capsys, 5, not bad, "; ".join(bad) or f"{checked} codes, k and S_n as expected")


def _random_curve(field, rng):
    a, b = rng.choice([(2, 3), (3, 4), (2, 5)] if field.p != 2 else [(3, 4), (3, 5)])
    coeffs = {(0, a): rng.randrange(1, field.q), (b, 0): rng.randrange(1, field.q)}
    for i in range(b):
        for j in range(a):
            if a * i + b * j < a * b and rng.random() < 0.5:
                coeffs[(i, j)] = rng.randrange(field.q)
    return make_cab_curve(a, b, coeffs, field)


def test_criterion_06_riemann_roch(capsys):
    bad = []
    f5 = make_field(5)
    for a, b in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        curve = make_cab_curve(a, b, {(0, a): 1, (b, 0): 1}, f5) if (a, b) != (4, 5) else \
            make_cab_curve(a, b, {(0, a): 1, (b, 0): 1}, make_field(7))
        g = genus(curve)
        for m in range(2 * g - 1, 2 * g + 11):
            if len(rr_basis(curve, m)) != m + 1 - g:
                bad.append(f"({a},{b}) m={m}")
    rng = random.Random(2024)
    ranks = 0
    fields = [make_field(5), make_field(7), make_field(2, 3)]
    while ranks < 40:
        f = rng.choice(fields)
        curve = _random_curve(f, rng)
        g = genus(curve)
        pts = enumerate_affine_points(curve)
        for m in range(2 * g - 1, len(pts)):
            r = rank(f, evaluation_matrix(curve, m, pts))
            ranks += 1
            if r != m + 1 - g:
                bad.append(f"rank {r} != {m + 1 - g} for m={m} over GF({f.q})")
    verdict(capsys, 6, not bad, "; ".join(bad[:5]) or f"lattice counts and {ranks} ranks match")


def test_criterion_07_duality(capsys):
    rng = random.Random(7)
    fields = [make_field(5), make_field(7), make_field(2, 3), make_field(3, 2)]
    bad, count = [], 0
    while count < 60:
        f = rng.choice(fields)
        curve = _random_curve(f, rng)
        n = len(enumerate_affine_points(curve))
        if n < 2:
            continue
        code = build_code(curve, rng.randrange(0, n + 4))
        dual = dual_code(code)
        count += 1
        if dual.k and not inner_products_vanish(code, dual):
            bad.append(f"{code}: G H^T != 0")
        if code.k + dual.k != code.n:
            bad.append(f"{code}: rank sum {code.k + dual.k}")
        if not codes_equal(dual_code(dual), code):
            bad.append(f"{code}: double dual differs")
    verdict(capsys, 7, not bad, "; ".join(bad[:5]) or f"{count} codes")


def test_criterion_08_bounds(capsys):
    curves = ["y^3=x^4+1", "y^3=x^4-x", "y^2=x^3+x+1", "y^2=x^5+2"]
    rows = list(sweep_rows(curves, ["5", "7"], range(0, 14),
                           max_dist_enum=1 << 16, max_paut_n=1))
    rows += list(sweep_rows(["y^3=x^4+1", "y^3=x^4-x", "y^3-y=x^4"], ["2^2", "2^3"],
                            range(0, 14), max_dist_enum=1 << 16, max_paut_n=1))
    bad, checked = [], 0
    for r in rows:
        if r["d"] == "":
            continue
        n, k, m, d = int(r["n"]), int(r["k"]), int(r["m"]), int(r["d"])
        checked += 1
        if d > n - k + 1 or (m < n and d < n - m):
            bad.append(f"{r['curve']} GF({r['field']}) m={m}: [{n}, {k}, {d}]")
    verdict(capsys, 8, not bad and checked > 100,
            "; ".join(bad[:5]) or f"{checked} codes, no violations")


def test_criterion_09_embedding(capsys):
    bad, perms = [], 0
    for q in [(5, 1), (5, 2)]:
        f = make_field(*q)
        curve = parse_curve("y^3-y=x^4", f)
        pts = enumerate_affine_points(curve)
        autos = diagonal_curve_autos(curve)
        if len(autos) < 2:
            bad.append(f"only the identity over GF({f.q})")
        for m in (4, 5, 6):
            code = build_code(curve, m)
            for s in autos:
                perms += 1
                if not is_automorphism(code, induced_permutation(s, pts, f)):
                    bad.append(f"GF({f.q}) m={m} {s}")
    verdict(capsys, 9, not bad, "; ".join(bad[:5]) or f"{perms} induced permutations in PAut")


def test_criterion_10_iso_bound(capsys, ex1_curve):
    hyp = iso_hypothesis_check(ex1_curve, 4, 8)
    verdict(capsys, 10, hyp.required_n == 24, f"required_n = {hyp.required_n}, terms "
            f"{[str(t) for t in hyp.terms]}")
