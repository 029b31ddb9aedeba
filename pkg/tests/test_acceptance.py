"""Exit criteria.  Every comparison is exact polynomial equality.

Each test prints one ``[PASS]``/``[FAIL]`` line, visible without ``-s``.
"""
import time
from contextlib import contextmanager

import pytest

from cauchyschur.cli import render_worked_table
from cauchyschur.identities import (clear_unbounded_t, lhs_bounded_family, lhs_bounded_t,
                                    lhs_unbounded_t, macdonald_lhs, macdonald_rhs,
                                    make_context, worked_example_table, rhs_bounded_family,
                                    rhs_unbounded_t_cleared, verify)
from cauchyschur.partitions import enum_by_weight, normalize, sign_table, staircase
from cauchyschur.poly import Poly, parse_poly
from cauchyschur.symfunc import Family, schur

import test_poly
import test_symfunc


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(label, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and limit is not None and elapsed >= limit:
                ok = False
            with capsys.disabled():
                print(f"\n[{'PASS' if ok else 'FAIL'}] {label} ({elapsed:.2f}s)", end="")
        assert limit is None or elapsed < limit, f"{label}: {elapsed:.2f}s >= {limit}s"
    return run


def _product(factors, ctx):
    out = Poly.one(ctx)
    for f in factors:
        out = out * f
    return out


def test_c01_worked_table(criterion):
    with criterion("1 worked table n=2, a=(2,2)", limit=1.0):
        ctx = make_context(2, t_mode="repeated")
        x1, x2, t = (Poly.var(ctx, v) for v in ("x1", "x2", "t"))
        expected = [
            ((0, 0), "1", Poly.one(ctx)),
            ((1, 0), "t", x1 + x2),
            ((1, 1), "0", x2 * x1),
            ((2, 0), "t^2", x1 ** 2 + x2 * x1 + x2 ** 2),
            ((2, 1), "t^3", (x1 + x2) * x2 * x1),
            ((2, 2), "t^4", x1 ** 2 * x2 ** 2),
        ]
        rows = worked_example_table(2)
        assert len(rows) == 6
        for (lam, det, s), (want_lam, want_det, want_s) in zip(rows, expected):
            assert lam == want_lam
            assert det == parse_poly(want_det, ctx)
            assert s == want_s
        total = sum((s * det for _, det, s in rows), Poly.zero(ctx))
        factored = (1 + t * x1 + t ** 2 * x1 ** 2) * (1 + t * x2 + t ** 2 * x2 ** 2)
        assert total == factored
        text, ok = render_worked_table()
        assert ok and text.endswith("OK")


def test_c02_classical_cauchy(criterion):
    with criterion("2 Cauchy h and dual e, (n,m) in {1,2,3}^2, D=5", limit=60.0):
        for identity in ("cauchy_h", "cauchy_dual_e"):
            for n in (1, 2, 3):
                for m in (1, 2, 3):
                    report = verify(identity, n=n, m=m, degree=5)
                    assert report.ok, (identity, n, m, report.witness)


def test_c03_theorem_family(criterion):
    with criterion("3 unbounded family identity, h/e/p/e+h, n=m=2, D=4", limit=30.0):
        for kind in ("h", "e", "p", "e_plus_h"):
            report = verify("thm1_family", n=2, m=2, degree=4, family=kind)
            assert report.ok, (kind, report.witness)
        assert Family("p", 2).p0 is None  # p_0 = m convention in force


def test_c04_theorem_t(criterion):
    with criterion("4 unbounded power identity, n in {1,2,3}, D=4, per t-slice"):
        D = 4
        for n in (1, 2, 3):
            ctx = make_context(n, t_mode="distinct")
            cleared = clear_unbounded_t(lhs_unbounded_t(n, D, "distinct", ctx), n, D)
            numerator = rhs_unbounded_t_cleared(n, D, "distinct", ctx)
            t_pos = ctx.bank_positions("t")
            for d in range(D + 1):
                def slice_of(p):
                    return {mono: c for mono, c in p.terms.items()
                            if sum(mono[k] for k in t_pos) == d}
                assert slice_of(cleared) == slice_of(numerator), (n, d)
            assert verify("thm1_t", n=n, degree=D).ok


def test_c05_bounded_family(criterion):
    with criterion("5 bounded family identity, e a=(2,2) and h a=(3,2)"):
        ctx = make_context(2, 2)
        target = _product((1 + Poly.var(ctx, f"x{i}") * Poly.var(ctx, f"y{j}")
                           for i in (1, 2) for j in (1, 2)), ctx)
        fam = Family("e", 2)
        assert lhs_bounded_family(2, fam, (2, 2), ctx) == target
        assert rhs_bounded_family(2, fam, (2, 2), ctx) == target
        assert verify("bounded_family", n=2, m=2, bounds=(2, 2), family="e").ok
        assert verify("bounded_family", n=2, m=2, bounds=(3, 2), family="h").ok


def test_c06_bounded_t(criterion):
    with criterion("6 bounded power identity, repeated/distinct/ones"):
        assert verify("bounded_t", n=2, bounds=(2, 2), t_mode="repeated").ok
        assert verify("bounded_t", n=3, bounds=(3, 2, 1), t_mode="distinct").ok
        assert verify("bounded_t", n=3, bounds=(1, 1, 1), t_mode="ones").ok
        ctx = make_context(3, t_mode="ones")
        target = _product((1 + Poly.var(ctx, f"x{i}") for i in (1, 2, 3)), ctx)
        assert lhs_bounded_t(3, (1, 1, 1), "ones", ctx) == target


def test_c07_macdonald(criterion):
    with criterion("7 Macdonald bounded formula, n,a in {1,2,3}", limit=30.0):
        for n in (1, 2, 3):
            for a in (1, 2, 3):
                ctx = make_context(n)
                assert macdonald_rhs(n, a, ctx) == macdonald_lhs(n, a, ctx), (n, a)
                assert verify("macdonald", n=n, bounds=(a,) * n).ok


def test_c08_lemma1(criterion):
    with criterion("8 signed bialternant, all mu in {0..4}^3"):
        report = verify("lemma1", n=3, box=4)
        assert report.ok, report.witness
        assert len(report.details) == 125
        degenerate = sum(1 for mu, _ in report.details
                         if normalize(tuple(int(p) for p in mu.split(","))) is None)
        assert degenerate > 0


def test_c09_lemma2(criterion):
    with criterion("9 signed permutation sum = windowed determinant, n=3, lam_1<=3"):
        for kind in ("h", "e"):
            report = verify("lemma2", n=3, m=2, family=kind)
            assert report.ok, report.witness
            assert len(report.details) == 20
        # six-row sign table, symbolically and at lam = (2, 1, 0)
        expected_rows = {
            "e": ((1, 0), (2, 0), (3, 0), +1),
            "(23)": ((1, 0), (3, -1), (2, 1), -1),
            "(12)": ((2, -1), (1, 1), (3, 0), -1),
            "(123)": ((2, -1), (3, -1), (1, 2), +1),
            "(132)": ((3, -2), (1, 1), (2, 1), +1),
            "(13)": ((3, -2), (2, 0), (1, 2), -1),
        }
        rows = sign_table(3)
        assert {c: entries + (sign,) for c, entries, sign in rows} == expected_rows
        lam = (2, 1, 0)
        for _, entries, sign in rows:
            mu = tuple(lam[k - 1] + off for k, off in entries)
            if min(mu) >= 0:
                assert normalize(mu) == (lam, sign)
            else:
                # negative entry: the orbit point leaves N^n
                assert any(lam[k - 1] + off < 0 for k, off in entries)
        assert normalize((0, 3, 0)) == (lam, -1)
        assert staircase(3) == (2, 1, 0)


def test_c10_schur_methods(criterion):
    with criterion("10 bialternant = jacobi_trudi = ssyt, |lam|<=6, n<=3"):
        count = 0
        for n in (1, 2, 3):
            for lam in enum_by_weight(n, 6):
                oracle = schur(lam, n, "ssyt")
                assert schur(lam, n, "bialternant") == oracle, lam
                assert schur(lam, n, "jacobi_trudi") == oracle, lam
                count += 1
        assert count == 7 + 16 + 23


def test_c11_property_suites(criterion):
    with criterion("11 ring axioms (500), determinant alternation, truncation, Schur symmetry"):
        test_poly.test_ring_axioms()
        test_poly.test_exact_div_inverts_mul()
        test_poly.test_truncate_mul_compatible()
        test_poly.test_minor_expansion_matches_leibniz()
        test_poly.test_determinant_alternating()
        test_symfunc.test_schur_symmetric_and_homogeneous()
