"""Both sides of the generalized Cauchy identities, and a verifier for each.

Unbounded identities are infinite sums; they are checked exactly after
truncating by degree.  Every LHS term ``s_lam(x) * det(...)`` is homogeneous
of degree ``|lam|`` in ``x`` (family identities) or in ``t`` (power
identities), so the finite sum over ``|lam| <= D`` *is* the true LHS truncated
at degree ``D``.

Determinant windows
-------------------
A bound ``a = (a_1, ..., a_n)`` zeroes the entry ``(i, j)`` of
``(f_{lam_i - i + j})`` or ``(t_j^{lam_i - i + j})`` whenever the index is
negative or exceeds ``a_j``, the bound of column ``j``.  Expanding the box sum
over ``mu_j <= a_j`` by permutations puts ``mu_j`` in column ``j``, so the
column is what carries the bound.  For a constant bound rows and columns are
interchangeable.

Right-hand sides with denominators are either exact polynomial quotients
(:func:`~cauchyschur.poly.exact_div`) or compared after clearing denominators.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any, Callable, Iterable, Sequence

from .partitions import (conjugate, enum_bounded, enum_by_weight, format_partition,
                         length, pad, perm_sign)
from .poly import (Poly, VarContext, determinant, exact_div, format_monomial, mul_truncated,
                   poly_sum, substitute, truncate)
from .symfunc import Family, family_member, s_mu, s_mu_direct, schur, vandermonde

IDENTITY_IDS = ("thm1_family", "thm1_t", "bounded_family", "bounded_t", "macdonald",
                "cauchy_h", "cauchy_dual_e", "lemma1", "lemma2")
T_MODES = ("distinct", "repeated", "ones")

MAX_N = 4
MAX_M = 4
MAX_DEGREE = 10
MAX_BOUND = 10
DEFAULT_DEGREE = 4


class ParameterError(ValueError):
    """Invalid or out-of-guardrail verification parameters."""


def make_context(n: int, m: int = 0, t_mode: str | None = None, z: bool = False) -> VarContext:
    """``x1..xn``, optional ``y1..ym``, the t-variables for ``t_mode`` and ``z``."""
    return VarContext.standard(n, m, n if t_mode == "distinct" else 0,
                               single_t=t_mode == "repeated", z=z)


def t_bases(ctx: VarContext, n: int, t_mode: str) -> list[Poly]:
    """Column bases for the power determinant: ``t1..tn``, ``t`` repeated, or ones."""
    if t_mode == "distinct":
        return [Poly.var(ctx, f"t{j}") for j in range(1, n + 1)]
    if t_mode == "repeated":
        return [Poly.var(ctx, "t")] * n
    if t_mode == "ones":
        return [Poly.one(ctx)] * n
    raise ParameterError(f"unknown t-mode {t_mode!r}")


def _x(ctx: VarContext, j: int, power: int = 1) -> Poly:
    return Poly.var(ctx, f"x{j + 1}", power)


def _in_window(index: int, bounds: Sequence[int] | None, column: int) -> bool:
    return index >= 0 and (bounds is None or index <= bounds[column])


def family_det(lam: Sequence[int], fam: Family, ctx: VarContext,
               bounds: Sequence[int] | None = None) -> Poly:
    """``det(f_{lam_i - i + j})`` with out-of-window entries set to zero."""
    n = len(lam)
    if bounds is not None and len(bounds) != n:
        raise ParameterError(f"bounds {tuple(bounds)} do not match length {n}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            k = lam[i] - i + j
            row.append(family_member(fam, k, ctx) if _in_window(k, bounds, j)
                       else Poly.zero(ctx))
        rows.append(row)
    return determinant(rows, ctx)


def power_det(lam: Sequence[int], bases: Sequence[Poly],
              bounds: Sequence[int] | None = None) -> Poly:
    """``det(b_j^{lam_i - i + j})`` with out-of-window entries set to zero.

    ``bases`` gives the column variables: distinct ``t_j``, one repeated
    variable, or the constant 1 (which yields the 0/1 matrix ``c(lam, a)``).
    """
    n = len(lam)
    ctx = bases[0].ctx
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            k = lam[i] - i + j
            row.append(bases[j] ** k if _in_window(k, bounds, j) else Poly.zero(ctx))
        rows.append(row)
    return determinant(rows, ctx)


def c_matrix(lam: Sequence[int], a: int) -> list[list[int]]:
    """The 0/1 matrix with a 1 where ``0 <= lam_i - i + j <= a``."""
    n = len(lam)
    return [[int(0 <= lam[i] - i + j <= a) for j in range(n)] for i in range(n)]


def signed_permutation_sum(lam: Sequence[int], fam: Family, ctx: VarContext,
                           bounds: Sequence[int] | None = None) -> Poly:
    """Brute force ``sum_pi sgn(pi) prod_j f_{lam_pi(j) - pi(j) + j}``.

    A factor with negative index (or one above ``bounds[j]``) kills its term.
    """
    n = len(lam)
    pieces = []
    for perm in permutations(range(n)):
        mu = [lam[perm[j]] - perm[j] + j for j in range(n)]
        if not all(_in_window(mu[j], bounds, j) for j in range(n)):
            continue
        term = Poly.const(ctx, perm_sign(perm))
        for k in mu:
            term = term * family_member(fam, k, ctx)
        pieces.append(term)
    return poly_sum(pieces, ctx)


def _accumulate(fn: Callable[[Any], Poly], items: Iterable, ctx: VarContext,
                workers: int = 1) -> tuple[Poly, int]:
    """Parallel map of ``fn`` then one ordered sum; returns (sum, item count)."""
    items = list(items)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(fn, items))
    else:
        pieces = [fn(item) for item in items]
    return poly_sum(pieces, ctx), len(items)


# -- Unbounded family identity ------------------------------------------------

def lhs_unbounded_family(n: int, fam: Family, D: int, ctx: VarContext | None = None,
                         workers: int = 1) -> Poly:
    """``sum_{|lam| <= D} s_lam(x) det(f_{lam_i - i + j})``."""
    ctx = ctx or make_context(n, fam.m, z=True)

    def term(lam):
        return schur(lam, n, ctx=ctx) * family_det(lam, fam, ctx)

    return _accumulate(term, enum_by_weight(n, D), ctx, workers)[0]


def generating_polynomial(fam: Family, ctx: VarContext, top: int, var: str = "z") -> Poly:
    """``sum_{k=0}^{top} f_k var^k``."""
    return poly_sum((family_member(fam, k, ctx) * Poly.var(ctx, var, k)
                     for k in range(top + 1)), ctx)


def rhs_unbounded_family(n: int, fam: Family, D: int, ctx: VarContext | None = None) -> Poly:
    """``prod_i F(y, x_i)`` truncated at x-degree ``D``."""
    ctx = ctx or make_context(n, fam.m, z=True)
    F = generating_polynomial(fam, ctx, D)
    result = Poly.one(ctx)
    for i in range(n):
        result = mul_truncated(result, substitute(F, "z", _x(ctx, i)), "x", D)
    return result


# -- Unbounded power identity -------------------------------------------------

def lhs_unbounded_t(n: int, D: int, t_mode: str = "distinct", ctx: VarContext | None = None,
                    workers: int = 1) -> Poly:
    """``sum_{|lam| <= D} s_lam(x) det(t_j^{lam_i - i + j})``."""
    ctx = ctx or make_context(n, t_mode=t_mode)
    bases = t_bases(ctx, n, t_mode)

    def term(lam):
        return schur(lam, n, ctx=ctx) * power_det(lam, bases)

    return _accumulate(term, enum_by_weight(n, D), ctx, workers)[0]


def rhs_unbounded_t_cleared(n: int, D: int | None = None, t_mode: str = "distinct",
                            ctx: VarContext | None = None) -> Poly:
    """Numerator determinant with row ``i`` multiplied by ``prod_k (1 - x_k t_i)``.

    Entry ``(i, j)`` is ``x_j^{n-i} prod_{k != j} (1 - x_k t_i)``.  Its
    determinant equals ``LHS * V * P`` with ``V`` the Vandermonde and
    ``P = prod_{i,j} (1 - x_j t_i)``.  Truncated at t-degree ``D`` if given.
    """
    ctx = ctx or make_context(n, t_mode=t_mode)
    bases = t_bases(ctx, n, t_mode)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = _x(ctx, j, n - 1 - i)
            for k in range(n):
                if k != j:
                    entry = entry * (1 - _x(ctx, k) * bases[i])
            row.append(entry)
        rows.append(row)
    N = determinant(rows, ctx)
    return N if D is None else truncate(N, "t", D)


def clear_unbounded_t(lhs: Poly, n: int, D: int, t_mode: str = "distinct") -> Poly:
    """``truncate_t(lhs * V * prod_{i,j} (1 - x_j t_i), D)``."""
    ctx = lhs.ctx
    bases = t_bases(ctx, n, t_mode)
    result = mul_truncated(lhs, vandermonde(ctx, ctx.bank_vars("x", n)), "t", D)
    for i in range(n):
        for j in range(n):
            result = mul_truncated(result, 1 - _x(ctx, j) * bases[i], "t", D)
    return result


# -- Bounded identities -------------------------------------------------------

def _check_bounds(n: int, bounds: Sequence[int]) -> tuple[int, ...]:
    bounds = tuple(bounds)
    if len(bounds) != n:
        raise ParameterError(f"bounds {bounds} do not have length {n}")
    if any(a < 0 for a in bounds) or any(bounds[i] < bounds[i + 1] for i in range(n - 1)):
        raise ParameterError(f"bounds {bounds} must be weakly decreasing and nonnegative")
    return bounds


def lhs_bounded_family(n: int, fam: Family, bounds: Sequence[int],
                       ctx: VarContext | None = None, workers: int = 1) -> Poly:
    """``sum_{lam <= a} s_lam(x) det(f_{lam_i - i + j})`` with the window applied."""
    bounds = _check_bounds(n, bounds)
    ctx = ctx or make_context(n, fam.m)

    def term(lam):
        return schur(lam, n, ctx=ctx) * family_det(lam, fam, ctx, bounds)

    return _accumulate(term, enum_bounded(n, bounds), ctx, workers)[0]


def rhs_bounded_family(n: int, fam: Family, bounds: Sequence[int],
                       ctx: VarContext | None = None) -> Poly:
    """``det(x_j^{n-i} F(y, x_j, a_i)) / det(x_j^{n-i})`` as an exact quotient."""
    bounds = _check_bounds(n, bounds)
    ctx = ctx or make_context(n, fam.m)
    rows = [[poly_sum((family_member(fam, k, ctx) * _x(ctx, j, k + n - 1 - i)
                       for k in range(bounds[i] + 1)), ctx)
             for j in range(n)] for i in range(n)]
    return exact_div(determinant(rows, ctx), vandermonde(ctx, ctx.bank_vars("x", n)))


def box_sum_family(n: int, fam: Family, bounds: Sequence[int],
                   ctx: VarContext | None = None) -> Poly:
    """``sum_{mu in prod [0, a_i]} S_mu(x) f_mu`` over compositions."""
    bounds = tuple(bounds)
    ctx = ctx or make_context(n, fam.m)
    pieces = []
    for mu in product(*(range(a + 1) for a in bounds)):
        s = s_mu(mu, n, ctx)
        if not s:
            continue
        for k in mu:
            s = s * family_member(fam, k, ctx)
        pieces.append(s)
    return poly_sum(pieces, ctx)


def lhs_bounded_t(n: int, bounds: Sequence[int], t_mode: str = "distinct",
                  ctx: VarContext | None = None, workers: int = 1) -> Poly:
    """``sum_{lam <= a} s_lam(x) det(t_j^{lam_i - i + j})`` with the window applied."""
    bounds = _check_bounds(n, bounds)
    ctx = ctx or make_context(n, t_mode=t_mode)
    bases = t_bases(ctx, n, t_mode)

    def term(lam):
        return schur(lam, n, ctx=ctx) * power_det(lam, bases, bounds)

    return _accumulate(term, enum_bounded(n, bounds), ctx, workers)[0]


def rhs_bounded_t(n: int, bounds: Sequence[int], t_mode: str = "distinct",
                  ctx: VarContext | None = None) -> Poly:
    """``det(x_j^{n-i} (1 - (x_j t_i)^{a_i+1}) / (1 - x_j t_i)) / det(x_j^{n-i})``.

    The geometric quotient in each entry is expanded as the finite sum
    ``sum_{k <= a_i} (x_j t_i)^k``.
    """
    bounds = _check_bounds(n, bounds)
    ctx = ctx or make_context(n, t_mode=t_mode)
    bases = t_bases(ctx, n, t_mode)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            ratio = _x(ctx, j) * bases[i]
            geometric = poly_sum((ratio ** k for k in range(bounds[i] + 1)), ctx)
            row.append(_x(ctx, j, n - 1 - i) * geometric)
        rows.append(row)
    return exact_div(determinant(rows, ctx), vandermonde(ctx, ctx.bank_vars("x", n)))


def macdonald_rhs(n: int, a: int, ctx: VarContext | None = None) -> Poly:
    """``det(x_i^{a+2n-j} - x_i^{j-1}) / (prod (x_i - 1) prod_{i<j} (x_i - x_j)(x_i x_j - 1))``."""
    if n < 1 or a < 0:
        raise ParameterError("macdonald_rhs needs n >= 1 and a >= 0")
    ctx = ctx or make_context(n)
    rows = [[_x(ctx, i, a + 2 * n - j) - _x(ctx, i, j - 1) for j in range(1, n + 1)]
            for i in range(n)]
    den = Poly.one(ctx)
    for i in range(n):
        den = den * (_x(ctx, i) - 1)
        for j in range(i + 1, n):
            den = den * (_x(ctx, i) - _x(ctx, j)) * (_x(ctx, i) * _x(ctx, j) - 1)
    return exact_div(determinant(rows, ctx), den)


def macdonald_lhs(n: int, a: int, ctx: VarContext | None = None) -> Poly:
    """``sum_{lam <= (a, ..., a)} s_lam(x)``."""
    ctx = ctx or make_context(n)
    return poly_sum((schur(lam, n, ctx=ctx) for lam in enum_bounded(n, (a,) * n)), ctx)


# -- Classical Cauchy identities ----------------------------------------------

def _y_schur(lam: Sequence[int], m: int, ctx: VarContext) -> Poly:
    if length(lam) > m:
        return Poly.zero(ctx)
    return schur(pad(lam, m), m, "bialternant", ctx, bank="y")


def lhs_cauchy(n: int, m: int, D: int, dual: bool = False, ctx: VarContext | None = None,
               workers: int = 1) -> Poly:
    """``sum_{|lam| <= D} s_lam(x) s_lam(y)``, or ``s_{lam'}(y)`` when ``dual``."""
    ctx = ctx or make_context(n, m)

    def term(lam):
        partner = conjugate(lam) if dual else lam
        return schur(lam, n, ctx=ctx) * _y_schur(partner, m, ctx)

    return _accumulate(term, enum_by_weight(n, D), ctx, workers)[0]


def rhs_cauchy(n: int, m: int, D: int, dual: bool = False,
               ctx: VarContext | None = None) -> Poly:
    """``prod 1/(1 - x_i y_j)`` (or ``prod (1 + x_i y_j)``) truncated at x-degree ``D``."""
    ctx = ctx or make_context(n, m)
    result = Poly.one(ctx)
    for i in range(n):
        for j in range(1, m + 1):
            xy = _x(ctx, i) * Poly.var(ctx, f"y{j}")
            factor = 1 + xy if dual else poly_sum((xy ** k for k in range(D + 1)), ctx)
            result = mul_truncated(result, factor, "x", D)
    return result


# -- Reports ------------------------------------------------------------------

@dataclass
class IdentityReport:
    identity: str
    params: dict
    verdict: str
    witness: dict | None = None
    lhs_terms: int = 0
    elapsed_ms: float = 0.0
    details: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.verdict == "equal"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "lhs_terms": self.lhs_terms,
            "elapsed_ms": self.elapsed_ms,
        }


def first_difference(lhs: Poly, rhs: Poly) -> dict | None:
    """First graded-lex-largest monomial where the two sides disagree."""
    if lhs == rhs:
        return None
    monos = set(lhs.terms) | set(rhs.terms)
    for mono in sorted(monos, key=lambda m: (sum(m), m), reverse=True):
        a, b = lhs.coeff(mono), rhs.coeff(mono)
        if a != b:
            return {"monomial": format_monomial(lhs.ctx, mono), "lhs": a, "rhs": b}
    return None


def _resolve_family(family: Family | str, m: int) -> Family:
    if isinstance(family, Family):
        return family
    return Family(family, m)


def _guard(n: int, m: int | None = None, degree: int | None = None,
           bounds: Sequence[int] | None = None) -> None:
    if not 1 <= n <= MAX_N:
        raise ParameterError(f"n must be in 1..{MAX_N}")
    if m is not None and not 1 <= m <= MAX_M:
        raise ParameterError(f"m must be in 1..{MAX_M}")
    if degree is not None and not 0 <= degree <= MAX_DEGREE:
        raise ParameterError(f"degree must be in 0..{MAX_DEGREE}")
    if bounds is not None and any(not 0 <= a <= MAX_BOUND for a in bounds):
        raise ParameterError(f"bounds must lie in 0..{MAX_BOUND}")


def _compare_cases(cases: Iterable[tuple[str, Poly, Poly]]) -> tuple[dict | None, int, list]:
    witness, terms, details = None, 0, []
    for label, lhs, rhs in cases:
        terms += len(lhs)
        diff = first_difference(lhs, rhs)
        details.append((label, diff is None))
        if diff is not None and witness is None:
            witness = {"case": label, **diff}
    return witness, terms, details


def verify(identity_id: str, *, n: int = 2, m: int = 2, degree: int = DEFAULT_DEGREE,
           bounds: Sequence[int] | None = None, family: Family | str = "h",
           t_mode: str | None = None, shape: Sequence[int] | None = None, box: int = 4,
           workers: int = 1) -> IdentityReport:
    """Build both sides of ``identity_id`` and compare them exactly.

    ``lemma1`` runs over the composition box ``{0..box}^n``; ``lemma2`` uses
    ``shape`` or, if omitted, every partition with largest part at most 3.
    Bounded identities default to ``bounds = (2,) * n``.
    """
    if identity_id not in IDENTITY_IDS:
        raise ParameterError(f"unknown identity {identity_id!r}; expected one of {IDENTITY_IDS}")
    start = time.perf_counter()
    details: list = []
    witness = None

    if identity_id in ("cauchy_h", "cauchy_dual_e"):
        _guard(n, m, degree)
        params = {"n": n, "m": m, "degree": degree}
        dual = identity_id == "cauchy_dual_e"
        lhs = lhs_cauchy(n, m, degree, dual, workers=workers)
        rhs = rhs_cauchy(n, m, degree, dual)
        witness, terms = first_difference(lhs, rhs), len(lhs)

    elif identity_id == "thm1_family":
        fam = _resolve_family(family, m)
        _guard(n, fam.m if fam.kind != "custom" else None, degree)
        params = {"n": n, "m": fam.m, "degree": degree, "family": fam.label}
        ctx = make_context(n, fam.m, z=True)
        lhs = lhs_unbounded_family(n, fam, degree, ctx, workers)
        rhs = rhs_unbounded_family(n, fam, degree, ctx)
        witness, terms = first_difference(lhs, rhs), len(lhs)

    elif identity_id == "thm1_t":
        t_mode = t_mode or "distinct"
        if t_mode == "ones":
            raise ParameterError("thm1_t is graded by t-degree; t-mode 'ones' is bounded-only")
        _guard(n, None, degree)
        params = {"n": n, "degree": degree, "t_mode": t_mode}
        ctx = make_context(n, t_mode=t_mode)
        lhs = lhs_unbounded_t(n, degree, t_mode, ctx, workers)
        cleared = clear_unbounded_t(lhs, n, degree, t_mode)
        rhs = rhs_unbounded_t_cleared(n, degree, t_mode, ctx)
        witness, terms = first_difference(cleared, rhs), len(lhs)

    elif identity_id in ("bounded_family", "bounded_t"):
        bounds = tuple(bounds) if bounds is not None else (2,) * n
        if identity_id == "bounded_family":
            fam = _resolve_family(family, m)
            _guard(n, fam.m if fam.kind != "custom" else None, None, bounds)
            params = {"n": n, "m": fam.m, "bounds": list(bounds), "family": fam.label}
            ctx = make_context(n, fam.m)
            lhs = lhs_bounded_family(n, fam, bounds, ctx, workers)
            rhs = rhs_bounded_family(n, fam, bounds, ctx)
        else:
            t_mode = t_mode or "distinct"
            _guard(n, None, None, bounds)
            params = {"n": n, "bounds": list(bounds), "t_mode": t_mode}
            ctx = make_context(n, t_mode=t_mode)
            lhs = lhs_bounded_t(n, bounds, t_mode, ctx, workers)
            rhs = rhs_bounded_t(n, bounds, t_mode, ctx)
        witness, terms = first_difference(lhs, rhs), len(lhs)

    elif identity_id == "macdonald":
        bounds = tuple(bounds) if bounds is not None else (2,) * n
        _guard(n, None, None, bounds)
        if len(set(bounds)) != 1 or len(bounds) != n:
            raise ParameterError("macdonald needs a constant bound (a, ..., a) of length n")
        a = bounds[0]
        params = {"n": n, "a": a}
        ctx = make_context(n)
        lhs = macdonald_lhs(n, a, ctx)
        rhs = macdonald_rhs(n, a, ctx)
        witness, terms = first_difference(lhs, rhs), len(lhs)

    elif identity_id == "lemma1":
        _guard(n)
        if not 0 <= box <= MAX_BOUND:
            raise ParameterError(f"box must lie in 0..{MAX_BOUND}")
        params = {"n": n, "box": box}
        ctx = make_context(n)
        cases = ((format_partition(mu), s_mu(mu, n, ctx), s_mu_direct(mu, ctx))
                 for mu in product(range(box + 1), repeat=n))
        witness, terms, details = _compare_cases(cases)

    else:  # lemma2
        fam = _resolve_family(family, m)
        _guard(n, fam.m if fam.kind != "custom" else None)
        shapes = [pad(shape, n)] if shape is not None else list(enum_bounded(n, (3,) * n))
        params = {"n": n, "m": fam.m, "family": fam.label,
                  "shapes": [format_partition(s) for s in shapes] if shape is not None else "lam_1<=3"}
        ctx = make_context(n, fam.m)
        cases = ((format_partition(lam), signed_permutation_sum(lam, fam, ctx),
                  family_det(lam, fam, ctx)) for lam in shapes)
        witness, terms, details = _compare_cases(cases)

    elapsed = (time.perf_counter() - start) * 1000.0
    return IdentityReport(identity_id, params, "equal" if witness is None else "mismatch",
                          witness, terms, round(elapsed, 3), details)


def worked_example_table(a: int = 2) -> list[tuple[tuple[int, int], Poly, Poly]]:
    """Rows ``(lam, det(t^{lam_i - i + j}), s_lam)`` for ``n = 2``, ``lam <= (a, a)``.

    Rows come in ascending lexicographic order: (0,0), (1,0), (1,1), ...
    """
    ctx = make_context(2, t_mode="repeated")
    bases = t_bases(ctx, 2, "repeated")
    rows = []
    for lam in sorted(enum_bounded(2, (a, a))):
        rows.append((lam, power_det(lam, bases, (a, a)), schur(lam, 2, ctx=ctx)))
    return rows
