"""Classical symmetric polynomials and four ways to compute Schur polynomials."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, Sequence

from .partitions import check_partition, conjugate, normalize, pad, staircase
from .poly import Poly, VarContext, determinant, exact_div, poly_sum

SCHUR_METHODS = ("bialternant", "jacobi_trudi", "dual_jacobi_trudi", "ssyt")
FAMILY_KINDS = ("h", "e", "p", "e_plus_h", "custom")


def _context(ctx: VarContext | None, bank: str, count: int) -> VarContext:
    if ctx is None:
        return VarContext(f"{bank}{i}" for i in range(1, count + 1))
    return ctx


@lru_cache(maxsize=None)
def gen(kind: str, k: int, m: int, ctx: VarContext | None = None, bank: str = "y") -> Poly:
    """Complete (``h``), elementary (``e``) or power-sum (``p``) polynomial of degree ``k``.

    Lives in the variables ``bank1 .. bank<m>`` of ``ctx``.  Negative degrees
    give 0; ``h_0 = e_0 = 1`` and ``p_0 = m``.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    ctx = _context(ctx, bank, m)
    names = ctx.bank_vars(bank, m)
    if k < 0:
        return Poly.zero(ctx)
    if kind == "p":
        if k == 0:
            return Poly.const(ctx, m)
        return poly_sum((Poly.var(ctx, v, k) for v in names), ctx)
    if kind == "h":
        chooser = combinations_with_replacement
    elif kind == "e":
        chooser = combinations
    else:
        raise ValueError(f"unknown generator {kind!r}")
    pos = [ctx.index(v) for v in names]
    terms = {}
    for combo in chooser(pos, k):
        mono = [0] * len(ctx)
        for q in combo:
            mono[q] += 1
        terms[tuple(mono)] = 1
    return Poly(ctx, terms)


@dataclass(frozen=True)
class Family:
    """A rule producing coefficient polynomials ``f_0, f_1, ...``.

    ``h``, ``e``, ``p`` and ``e_plus_h`` are generated in ``y1..ym``.  A
    ``custom`` family is either an explicit list ``members`` or a ``rule``
    called as ``rule(i, ctx)``; with ``zero_tail`` the explicit list is
    extended by zeros, otherwise indexing past its end is an error.
    """

    kind: str
    m: int = 0
    members: tuple[Poly, ...] = ()
    rule: Callable[[int, VarContext], Poly] | None = field(default=None, compare=False)
    zero_tail: bool = False
    p0: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind != "custom" and self.m < 1:
            raise ValueError(f"family {self.kind!r} needs m >= 1")

    @property
    def label(self) -> str:
        if self.kind == "custom":
            return f"custom[{len(self.members)}]"
        return f"{self.kind}(m={self.m})"


def family_member(fam: Family, i: int, ctx: VarContext | None = None) -> Poly:
    """``f_i`` of the family in ``ctx``; zero for negative ``i``."""
    if ctx is None:
        ctx = VarContext.standard(m=fam.m)
    if i < 0:
        return Poly.zero(ctx)
    if fam.kind == "e_plus_h":
        return gen("e", i, fam.m, ctx) + gen("h", i, fam.m, ctx)
    if fam.kind == "p" and i == 0 and fam.p0 is not None:
        return Poly.const(ctx, fam.p0)
    if fam.kind in ("h", "e", "p"):
        return gen(fam.kind, i, fam.m, ctx)
    if i < len(fam.members):
        return fam.members[i].to_context(ctx)
    if fam.rule is not None:
        return fam.rule(i, ctx)
    if fam.zero_tail:
        return Poly.zero(ctx)
    raise IndexError(f"custom family has no member f_{i}")


def alternant(exponents: Sequence[int], ctx: VarContext, names: Sequence[str]) -> Poly:
    """``det(v_j ** exponents[i])`` over the variables ``names``."""
    rows = [[Poly.var(ctx, v, e) for v in names] for e in exponents]
    return determinant(rows, ctx)


def vandermonde(ctx: VarContext, names: Sequence[str]) -> Poly:
    """``det(v_j ** (n - i))``, i.e. ``prod_{i<j} (v_i - v_j)``."""
    return alternant(staircase(len(names)), ctx, names)


def ssyt(shape: Sequence[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard Young tableaux of ``shape`` with entries in ``1..n``.

    Rows weakly increase, columns strictly increase.  Cells are filled in
    row-major order, each taking the smallest value its left and upper
    neighbours allow.
    """
    shape = [p for p in shape if p]
    cells = [(r, c) for r, row_len in enumerate(shape) for c in range(row_len)]
    grid = [[0] * row_len for row_len in shape]

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        low = 1
        if c:
            low = max(low, grid[r][c - 1])
        if r:
            low = max(low, grid[r - 1][c] + 1)
        for value in range(low, n + 1):
            grid[r][c] = value
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


def _schur_ssyt(lam, ctx, names):
    pos = [ctx.index(v) for v in names]
    terms: dict = {}
    for tableau in ssyt(lam, len(names)):
        mono = [0] * len(ctx)
        for row in tableau:
            for entry in row:
                mono[pos[entry - 1]] += 1
        mono = tuple(mono)
        terms[mono] = terms.get(mono, 0) + 1
    return Poly(ctx, terms)


def _trim(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def jacobi_trudi(lam: Sequence[int], n: int, ctx: VarContext | None = None,
                 bank: str = "x") -> Poly:
    """``det(h_{lam_i - i + j})`` in ``n`` variables of ``bank``."""
    lam = _trim(check_partition(lam))
    ctx = _context(ctx, bank, n)
    if not lam:
        return Poly.one(ctx)
    size = len(lam)
    rows = [[gen("h", lam[i] - i + j, n, ctx, bank) for j in range(size)] for i in range(size)]
    return determinant(rows, ctx)


def dual_jacobi_trudi(lam: Sequence[int], n: int, ctx: VarContext | None = None,
                      bank: str = "x") -> Poly:
    """``det(e_{lam_i - i + j})``, which is the Schur polynomial of ``conjugate(lam)``."""
    lam = _trim(check_partition(lam))
    ctx = _context(ctx, bank, n)
    if not lam:
        return Poly.one(ctx)
    size = len(lam)
    rows = [[gen("e", lam[i] - i + j, n, ctx, bank) for j in range(size)] for i in range(size)]
    return determinant(rows, ctx)


def schur(lam: Sequence[int], n: int, method: str = "bialternant",
          ctx: VarContext | None = None, bank: str = "x") -> Poly:
    """Schur polynomial of ``lam`` in the first ``n`` variables of ``bank``.

    ``bialternant`` divides the alternant by the Vandermonde, ``jacobi_trudi``
    expands ``det(h)``, ``dual_jacobi_trudi`` expands ``det(e)`` over the
    conjugate shape, and ``ssyt`` sums tableau weights.  All four agree.
    """
    if method not in SCHUR_METHODS:
        raise ValueError(f"unknown Schur method {method!r}")
    lam = check_partition(lam)
    ctx = _context(ctx, bank, n)
    return _schur_cached(lam, n, method, ctx, bank)


@lru_cache(maxsize=None)
def _schur_cached(lam, n, method, ctx, bank):
    if method == "jacobi_trudi":
        return jacobi_trudi(lam, n, ctx, bank)
    if method == "dual_jacobi_trudi":
        return dual_jacobi_trudi(conjugate(lam), n, ctx, bank)
    if len(_trim(lam)) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    names = ctx.bank_vars(bank, n)
    if method == "ssyt":
        return _schur_ssyt(lam, ctx, names)
    lam = pad(lam, n)
    shifted = [p + d for p, d in zip(lam, staircase(n))]
    return exact_div(alternant(shifted, ctx, names), vandermonde(ctx, names))


def s_mu(mu: Sequence[int], n: int | None = None, ctx: VarContext | None = None,
         bank: str = "x") -> Poly:
    """Bialternant of an arbitrary composition: ``sign * s_lam`` or zero."""
    mu = tuple(mu)
    n = len(mu) if n is None else n
    if len(mu) != n:
        raise ValueError(f"composition {mu} must have length {n}")
    ctx = _context(ctx, bank, n)
    normal = normalize(mu)
    if normal is None:
        return Poly.zero(ctx)
    lam, sign = normal
    s = schur(lam, n, "bialternant", ctx, bank)
    return s if sign > 0 else -s


def s_mu_direct(mu: Sequence[int], ctx: VarContext | None = None, bank: str = "x") -> Poly:
    """``det(x_j^{mu_i + n - i}) / det(x_j^{n - i})`` computed literally."""
    mu = tuple(mu)
    n = len(mu)
    ctx = _context(ctx, bank, n)
    names = ctx.bank_vars(bank, n)
    shifted = [e + d for e, d in zip(mu, staircase(n))]
    return exact_div(alternant(shifted, ctx, names), vandermonde(ctx, names))
