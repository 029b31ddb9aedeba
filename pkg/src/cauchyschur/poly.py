"""Sparse multivariate polynomials over the integers.

A :class:`Poly` maps exponent tuples to nonzero Python ints.  Every polynomial
lives in a :class:`VarContext`, an ordered list of variable names drawn from the
banks ``x``, ``y``, ``t`` and ``z``.  Monomials are dense exponent tuples in the
context's variable order and are compared under graded lexicographic order.

Polys are immutable; all operations return new objects.
"""
from __future__ import annotations

import heapq
import operator
import re
from itertools import permutations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

BANKS = ("x", "y", "t", "z")
MAX_DET_SIZE = 8

_NAME_RE = re.compile(r"([xytz])(\d*)$")


class ContextMismatch(ValueError):
    """Raised when two polynomials from different contexts are combined."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the division leaves a remainder."""


class VarContext:
    """Ordered, bank-tagged variable names shared by a family of polynomials.

    Names are a bank letter followed by an optional index, e.g. ``x1``, ``y3``,
    ``t`` or ``z``.  Two contexts are equal when their name lists are equal.
    """

    __slots__ = ("names", "banks", "indices", "_pos")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        banks, indices = [], []
        for name in names:
            match = _NAME_RE.match(name)
            if match is None:
                raise ValueError(f"bad variable name {name!r}")
            banks.append(match.group(1))
            indices.append(int(match.group(2)) if match.group(2) else None)
        self.names = names
        self.banks = tuple(banks)
        self.indices = tuple(indices)
        self._pos = {name: k for k, name in enumerate(names)}

    @classmethod
    def standard(cls, n: int = 0, m: int = 0, t: int = 0, *,
                 single_t: bool = False, z: bool = False) -> "VarContext":
        """Context ``x1..xn, y1..ym, t1..tt[, t][, z]``."""
        names = [f"x{i}" for i in range(1, n + 1)]
        names += [f"y{i}" for i in range(1, m + 1)]
        names += [f"t{i}" for i in range(1, t + 1)]
        if single_t:
            names.append("t")
        if z:
            names.append("z")
        return cls(names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._pos

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarContext) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarContext({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in {self!r}") from None

    def bank_positions(self, bank: str) -> tuple[int, ...]:
        if bank not in BANKS:
            raise ValueError(f"unknown bank {bank!r}")
        return tuple(k for k, b in enumerate(self.banks) if b == bank)

    def bank_vars(self, bank: str, count: int) -> list[str]:
        """Names ``bank1 .. bank<count>``; each must be present."""
        names = [f"{bank}{i}" for i in range(1, count + 1)]
        for name in names:
            self.index(name)
        return names


def _grlex(mono: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return sum(mono), mono


class Poly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: VarContext, terms: Mapping[tuple[int, ...], int] | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            width = len(ctx)
            for mono, c in terms.items():
                if c:
                    if len(mono) != width or min(mono, default=0) < 0:
                        raise ValueError(f"bad exponent vector {mono} for {ctx!r}")
                    clean[tuple(mono)] = int(c)
        self._terms = clean

    @classmethod
    def _raw(cls, ctx: VarContext, terms: dict) -> "Poly":
        # caller guarantees canonical terms
        p = object.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        return p

    @classmethod
    def const(cls, ctx: VarContext, c: int) -> "Poly":
        return cls._raw(ctx, {(0,) * len(ctx): int(c)} if c else {})

    @classmethod
    def zero(cls, ctx: VarContext) -> "Poly":
        return cls._raw(ctx, {})

    @classmethod
    def one(cls, ctx: VarContext) -> "Poly":
        return cls.const(ctx, 1)

    @classmethod
    def var(cls, ctx: VarContext, name: str, power: int = 1) -> "Poly":
        return cls.monomial(ctx, {name: power})

    @classmethod
    def monomial(cls, ctx: VarContext, exponents: Mapping[str, int], coeff: int = 1) -> "Poly":
        mono = [0] * len(ctx)
        for name, e in exponents.items():
            if e < 0:
                raise ValueError("negative exponent")
            mono[ctx.index(name)] += e
        return cls._raw(ctx, {tuple(mono): coeff} if coeff else {})

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex)
        return mono, self._terms[mono]

    def coeff(self, mono: tuple[int, ...]) -> int:
        return self._terms.get(tuple(mono), 0)

    def degree(self, bank: str | None = None) -> int:
        """Total degree, or total degree in one bank; ``-1`` for zero."""
        if not self._terms:
            return -1
        if bank is None:
            return max(map(sum, self._terms))
        pos = self.ctx.bank_positions(bank)
        return max(sum(mono[k] for k in pos) for mono in self._terms)

    def variables(self) -> set[str]:
        used = set()
        for mono in self._terms:
            used.update(self.ctx.names[k] for k, e in enumerate(mono) if e)
        return used

    def is_constant(self) -> bool:
        return all(not any(mono) for mono in self._terms)

    def to_context(self, ctx: VarContext) -> "Poly":
        """Re-express in another context containing every used variable."""
        if ctx == self.ctx:
            return self
        mapping = [ctx.index(name) for name in self.ctx.names]
        width = len(ctx)
        terms = {}
        for mono, c in self._terms.items():
            new = [0] * width
            for k, e in enumerate(mono):
                if e:
                    new[mapping[k]] = e
            terms[tuple(new)] = c
        return Poly._raw(ctx, terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == (Poly.const(self.ctx, other)._terms)
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self._terms.items())))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, int):
            return Poly.const(self.ctx, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Poly._raw(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ctx, {mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _mul(a: Poly, b: Poly, keep=None) -> Poly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    add = operator.add
    terms: dict = {}
    get = terms.get
    for mb, cb in b._terms.items():
        for ma, ca in a._terms.items():
            mono = tuple(map(add, ma, mb))
            if keep is not None and not keep(mono):
                continue
            terms[mono] = get(mono, 0) + ca * cb
    return Poly._raw(a.ctx, {m: c for m, c in terms.items() if c})


def poly_sum(polys: Iterable[Poly], ctx: VarContext) -> Poly:
    """Sum many polynomials with a single accumulator."""
    terms: dict = {}
    for p in polys:
        if p.ctx != ctx:
            raise ContextMismatch(f"{p.ctx!r} vs {ctx!r}")
        for mono, c in p._terms.items():
            terms[mono] = terms.get(mono, 0) + c
    return Poly._raw(ctx, {m: c for m, c in terms.items() if c})


def arith(a: Poly, b: Poly, kind: str) -> Poly:
    """``kind`` is one of ``add``, ``sub``, ``mul``."""
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx!r} vs {b.ctx!r}")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def exact_div(num: Poly, den: Poly) -> Poly:
    """Return ``q`` with ``q * den == num``.

    Multivariate long division by the graded-lex leading term of ``den``.  With
    a single divisor every leading term of an exact multiple is divisible by
    ``lt(den)``, so the first one that is not proves a nonzero remainder.

    Raises:
        ZeroDivisionError: ``den`` is zero.
        NotDivisible: ``den`` does not divide ``num`` in Z[vars].
    """
    if num.ctx != den.ctx:
        raise ContextMismatch(f"{num.ctx!r} vs {den.ctx!r}")
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    ctx = num.ctx
    lead, lead_c = den.leading_term()
    rest = [(mono, c) for mono, c in den._terms.items() if mono != lead]

    remainder = dict(num._terms)
    heap = [(-sum(mono), tuple(-e for e in mono)) for mono in remainder]
    heapq.heapify(heap)
    quotient = {}
    while heap:
        key = heapq.heappop(heap)
        mono = tuple(-e for e in key[1])
        c = remainder.pop(mono, 0)
        if not c:
            continue
        # duplicate heap entries are harmless: the second pop finds no coefficient
        q_mono = tuple(e - f for e, f in zip(mono, lead))
        if min(q_mono) < 0:
            raise NotDivisible(f"leading term of remainder not divisible: {num} / {den}")
        q_c, r = divmod(c, lead_c)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {lead_c}")
        quotient[q_mono] = q_c
        for d_mono, d_c in rest:
            m2 = tuple(map(operator.add, q_mono, d_mono))
            old = remainder.get(m2, 0)
            new = old - q_c * d_c
            if new:
                remainder[m2] = new
                if not old:
                    heapq.heappush(heap, (-sum(m2), tuple(-e for e in m2)))
            elif old:
                del remainder[m2]
    return Poly._raw(ctx, quotient)


def truncate(p: Poly, bank: str, D: int) -> Poly:
    """Drop every term whose degree in ``bank`` exceeds ``D``."""
    pos = p.ctx.bank_positions(bank)
    return Poly._raw(p.ctx, {mono: c for mono, c in p._terms.items()
                             if sum(mono[k] for k in pos) <= D})


def mul_truncated(a: Poly, b: Poly, bank: str, D: int) -> Poly:
    """``truncate(a * b, bank, D)`` without materializing the dropped terms."""
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx!r} vs {b.ctx!r}")
    pos = a.ctx.bank_positions(bank)
    a, b = truncate(a, bank, D), truncate(b, bank, D)
    return _mul(a, b, keep=lambda mono: sum(mono[k] for k in pos) <= D)


def substitute(p: Poly, v: str, q: Poly) -> Poly:
    """Replace the variable ``v`` by ``q`` everywhere in ``p``."""
    if p.ctx != q.ctx:
        raise ContextMismatch(f"{p.ctx!r} vs {q.ctx!r}")
    if v in q.variables():
        raise ValueError(f"substituted polynomial must not contain {v}")
    k = p.ctx.index(v)
    powers = {0: Poly.one(p.ctx)}
    pieces = []
    for mono, c in p._terms.items():
        e = mono[k]
        if e not in powers:
            powers[e] = q ** e
        rest = mono[:k] + (0,) + mono[k + 1:]
        pieces.append(_mul(Poly._raw(p.ctx, {rest: c}), powers[e]))
    return poly_sum(pieces, p.ctx)


def _matrix_context(rows, ctx):
    if ctx is None:
        for row in rows:
            for entry in row:
                if isinstance(entry, Poly):
                    return entry.ctx
        return VarContext(())
    return ctx


def _as_matrix(rows: Sequence[Sequence[Poly | int]], ctx: VarContext | None):
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError("determinant needs a nonempty square matrix")
    ctx = _matrix_context(rows, ctx)
    matrix = []
    for row in rows:
        out = []
        for entry in row:
            if isinstance(entry, int):
                entry = Poly.const(ctx, entry)
            elif entry.ctx != ctx:
                raise ContextMismatch("matrix entries must share one context")
            out.append(entry)
        matrix.append(out)
    return matrix, ctx


def determinant(rows: Sequence[Sequence[Poly | int]], ctx: VarContext | None = None) -> Poly:
    """Exact determinant by Laplace expansion memoized over column subsets.

    Integer entries are promoted into ``ctx`` (inferred from the first Poly
    entry when omitted).  Matrices larger than 8x8 are rejected.
    """
    matrix, ctx = _as_matrix(rows, ctx)
    n = len(matrix)
    if n > MAX_DET_SIZE:
        raise ValueError(f"determinant size {n} exceeds {MAX_DET_SIZE}")
    one = Poly.one(ctx)
    memo: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return one
        if cols in memo:
            return memo[cols]
        row = matrix[n - len(cols)]
        pieces = []
        for pos, j in enumerate(cols):
            entry = row[j]
            if not entry:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = _mul(entry, sub)
            pieces.append(-term if pos % 2 else term)
        memo[cols] = result = poly_sum(pieces, ctx)
        return result

    return minor(tuple(range(n)))


def permutation_determinant(rows: Sequence[Sequence[Poly | int]],
                            ctx: VarContext | None = None) -> Poly:
    """Leibniz expansion; the cross-check for :func:`determinant`."""
    matrix, ctx = _as_matrix(rows, ctx)
    n = len(matrix)
    pieces = []
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Poly.one(ctx)
        for i in range(n):
            term = term * matrix[i][perm[i]]
            if not term:
                break
        if term:
            pieces.append(-term if inversions % 2 else term)
    return poly_sum(pieces, ctx)


def format_monomial(ctx: VarContext, mono: tuple[int, ...]) -> str:
    factors = []
    for name, e in zip(ctx.names, mono):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_poly(p: Poly) -> str:
    """Render as ``x1^2*x2 - 3*y1``: descending graded-lex, unit coefficients elided."""
    if not p:
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if any(mono):
            body = format_monomial(p.ctx, mono)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"(\d+)$|([a-z]\d*)(?:\^(\d+))?$")


def parse_poly(text: str, ctx: VarContext) -> Poly:
    """Inverse of :func:`format_poly`; also accepts any product/sum spacing."""
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial text")
    pos = 0
    terms = []
    for match in _TERM_RE.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        exps: dict[str, int] = {}
        for factor in match.group(2).split("*"):
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(1) is not None:
                coeff *= int(fm.group(1))
            else:
                name = fm.group(2)
                exps[name] = exps.get(name, 0) + int(fm.group(3) or 1)
        terms.append(Poly.monomial(ctx, exps, coeff))
    if pos != len(compact):
        raise ValueError(f"cannot parse {text!r}")
    return poly_sum(terms, ctx)
