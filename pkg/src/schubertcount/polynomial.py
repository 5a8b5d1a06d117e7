"""Exact sparse multivariate polynomial arithmetic over Python integers.

A polynomial is a dict from exponent tuples to nonzero integer coefficients.
The monomial order used everywhere (leading terms, canonical text, division,
torus-evaluation accumulation) is graded lexicographic: total degree first,
then the exponent tuple, largest first.  All arithmetic is exact; there are
no modular or floating shortcuts outside eval_torus.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import isqrt
from operator import add, sub
from typing import Dict, Iterable, Optional, Sequence, Tuple

ExponentVector = Tuple[int, ...]


class ArityMismatch(ValueError):
    """Operands disagree on the number of variables."""


class NotDivisible(ValueError):
    """Multivariate long division left a nonzero remainder."""


class NotAPerfectSquare(ValueError):
    """Polynomial has no exact polynomial square root over the integers."""


def grlex_key(e: ExponentVector) -> Tuple[int, ExponentVector]:
    return (sum(e), e)


@dataclass(frozen=True)
class TorusPoint:
    """Angles (theta_1, ..., theta_k) standing for (e^{i theta_1}, ...)."""

    angles: Tuple[float, ...]

    def __post_init__(self) -> None:
        tau = 2.0 * math.pi
        angles = tuple(float(a) % tau for a in self.angles)
        object.__setattr__(self, "angles", angles)

    def __len__(self) -> int:
        return len(self.angles)


class SparsePoly:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Iterable[Tuple[Sequence[int], int]] = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: Dict[ExponentVector, int] = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ArityMismatch(f"exponent {e} has length {len(e)}, expected {nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = int(c)
            if c:
                clean[e] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[ExponentVector, int]) -> "SparsePoly":
        """Internal constructor: terms are already clean (no zeros, right arity)."""
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("SparsePoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls._raw(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SparsePoly":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def monomial(cls, nvars: int, exponents: Sequence[int], coeff: int = 1) -> "SparsePoly":
        return cls(nvars, {tuple(exponents): coeff})

    @classmethod
    def linear_form(cls, coeffs: Sequence[int]) -> "SparsePoly":
        """c_1 x_1 + ... + c_k x_k from a coefficient vector."""
        k = len(coeffs)
        terms: Dict[ExponentVector, int] = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * k
                e[i] = 1
                terms[tuple(e)] = int(c)
        return cls._raw(k, terms)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def max_exponents(self) -> Tuple[int, ...]:
        """Per-variable maximum exponent over all terms (all zeros if empty)."""
        out = [0] * self.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x > out[i]:
                    out[i] = x
        return tuple(out)

    def leading_term(self) -> Tuple[ExponentVector, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient_at(self, e: Sequence[int]) -> int:
        e = tuple(int(x) for x in e)
        if len(e) != self.nvars:
            raise ArityMismatch(f"exponent length {len(e)} != {self.nvars}")
        return self.terms.get(e, 0)

    def sorted_terms(self) -> list[Tuple[ExponentVector, int]]:
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- ring operations ---------------------------------------------------

    def _check_arity(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} variables vs {other.nvars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_arity(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return SparsePoly._raw(self.nvars, acc)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_arity(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) - c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return SparsePoly._raw(self.nvars, acc)

    def scale(self, c: int) -> "SparsePoly":
        if not c:
            return SparsePoly.zero(self.nvars)
        return SparsePoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_arity(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return SparsePoly.zero(self.nvars)
        if len(a) * len(b) >= _PACKED_MUL_THRESHOLD and self.nvars > 1:
            return _mul_packed(self, other)
        acc: Dict[ExponentVector, int] = {}
        get = acc.get
        items_b = list(b.items())
        for e1, c1 in a.items():
            for e2, c2 in items_b:
                e = tuple(map(add, e1, e2))
                acc[e] = get(e, 0) + c1 * c2
        acc = {e: c for e, c in acc.items() if c}
        return SparsePoly._raw(self.nvars, acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "SparsePoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and text -----------------------------------------------

    def eval_torus(self, point: TorusPoint) -> complex:
        """Floating value at (e^{i theta_1}, ..., e^{i theta_k}).

        Terms are accumulated in descending graded-lex order, so the result
        is reproducible run to run.
        """
        if len(point) != self.nvars:
            raise ArityMismatch(f"point length {len(point)} != {self.nvars}")
        th = point.angles
        total = 0j
        for e, c in self.sorted_terms():
            phase = 0.0
            for x, t in zip(e, th):
                phase += x * t
            total += c * cmath.exp(1j * phase)
        return total

    def to_text(self) -> str:
        """Canonical text form: graded-lex order, `coeff*x1^e1*...*xk^ek`."""
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            vars_part = "*".join(f"x{i + 1}^{x}" for i, x in enumerate(e))
            chunks.append(f"{c}*{vars_part}" if vars_part else str(c))
        return " + ".join(chunks)

    @classmethod
    def from_text(cls, text: str, nvars: Optional[int] = None) -> "SparsePoly":
        text = text.strip()
        if text == "0":
            if nvars is None:
                raise ValueError("nvars required to parse the zero polynomial")
            return cls.zero(nvars)
        terms: Dict[ExponentVector, int] = {}
        for chunk in text.split(" + "):
            parts = chunk.split("*")
            coeff = int(parts[0])
            exps = []
            for p in parts[1:]:
                name, _, exp = p.partition("^")
                if not name.startswith("x"):
                    raise ValueError(f"bad factor {p!r}")
                exps.append(int(exp))
            e = tuple(exps)
            if nvars is None:
                nvars = len(e)
            if len(e) != nvars:
                raise ArityMismatch(f"term {chunk!r} has arity {len(e)}, expected {nvars}")
            terms[e] = terms.get(e, 0) + coeff
        return cls(nvars, terms)

    def __repr__(self) -> str:
        text = self.to_text()
        if len(text) > 60:
            text = text[:57] + "..."
        return f"SparsePoly({self.nvars}, {text})"


# Above this many coefficient pairs, __mul__ packs exponent tuples into
# single integers so the inner loop hashes machine ints instead of tuples.
_PACKED_MUL_THRESHOLD = 1 << 20


def _mul_packed(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Large-product path of __mul__; exact, same result as the tuple path."""
    k = f.nvars
    base = f.degree() + g.degree() + 1
    fa = [(sum(c * base**i for i, c in enumerate(e)), v) for e, v in f.terms.items()]
    ga = [(sum(c * base**i for i, c in enumerate(e)), v) for e, v in g.terms.items()]
    acc: Dict[int, int] = {}
    get = acc.get
    for ke, kc in fa:
        for le, lc in ga:
            key = ke + le
            acc[key] = get(key, 0) + kc * lc
    out: Dict[ExponentVector, int] = {}
    for key, c in acc.items():
        if not c:
            continue
        e = []
        for _ in range(k):
            key, r = divmod(key, base)
            e.append(r)
        out[tuple(e)] = c
    return SparsePoly._raw(k, out)


def product_of_linear_forms(rows: Sequence[Sequence[int]], nvars: int) -> SparsePoly:
    """Exact product of the linear forms given by coefficient vectors.

    The empty product is the constant 1.  Factors are combined with a
    balanced pairing tree, which keeps intermediate polynomials small and
    makes the evaluation order deterministic; the result itself does not
    depend on the pairing (exact integer arithmetic).
    """
    for row in rows:
        if len(row) != nvars:
            raise ArityMismatch(f"coefficient vector {tuple(row)} has length {len(row)}, expected {nvars}")
    level = [SparsePoly.linear_form(row) for row in rows]
    if not level:
        return SparsePoly.one(nvars)
    while len(level) > 1:
        nxt = [level[i] * level[i + 1] for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def exact_div(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Exact quotient f/g; raises NotDivisible if the remainder is nonzero.

    Multivariate long division in graded-lex order with a single divisor:
    when g divides f, the leading term of the running remainder is always
    divisible by the leading term of g, so the division runs to zero; the
    first failure of that divisibility proves f is not a multiple of g.
    """
    f._check_arity(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ge, gc = g.leading_term()
    gitems = [(e, c) for e, c in g.terms.items() if e != ge]
    rem = dict(f.terms)
    quo: Dict[ExponentVector, int] = {}
    while rem:
        re = max(rem, key=grlex_key)
        rc = rem.pop(re)
        de = tuple(map(sub, re, ge))
        if any(x < 0 for x in de):
            raise NotDivisible(f"leading monomial {re} not divisible by {ge}")
        dc, r = divmod(rc, gc)
        if r:
            raise NotDivisible(f"coefficient {rc} not divisible by {gc}")
        quo[de] = dc
        for e2, c2 in gitems:
            e = tuple(map(add, de, e2))
            v = rem.get(e, 0) - dc * c2
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return SparsePoly._raw(f.nvars, quo)


def exact_sqrt(f: SparsePoly) -> SparsePoly:
    """Exact polynomial square root, normalized to a positive leading coefficient.

    Works term by term in descending graded-lex order: with r the partial
    root and s its leading term, the leading term of f - r^2 is exactly
    2*s*t where t is the next term of the true root, so t is recovered by
    one monomial division.  Any failed divisibility, a negative or
    non-square leading coefficient, an odd leading exponent, or a stalled
    order all certify that f is not a perfect square.
    """
    if f.is_zero():
        raise ValueError("square root of the zero polynomial is excluded")
    le, lc = f.leading_term()
    if lc < 0:
        raise NotAPerfectSquare("negative leading coefficient")
    s = isqrt(lc)
    if s * s != lc:
        raise NotAPerfectSquare(f"leading coefficient {lc} is not a square")
    if any(x % 2 for x in le):
        raise NotAPerfectSquare(f"leading exponent {le} is odd")
    lead = tuple(x // 2 for x in le)
    root: Dict[ExponentVector, int] = {lead: s}
    res = dict(f.terms)
    del res[le]
    twice = 2 * s
    prev = grlex_key(lead)
    while res:
        me = max(res, key=grlex_key)
        mc = res[me]
        te = tuple(map(sub, me, lead))
        if any(x < 0 for x in te):
            raise NotAPerfectSquare(f"residual term {me} outside the root's span")
        tc, r = divmod(mc, twice)
        if r:
            raise NotAPerfectSquare(f"residual coefficient {mc} not divisible by {twice}")
        key = grlex_key(te)
        if key >= prev:
            raise NotAPerfectSquare("root terms stopped decreasing")
        prev = key
        # maintain res = f - (current root)^2: subtract 2*t*root + t^2
        for e2, c2 in list(root.items()):
            e = tuple(map(add, te, e2))
            v = res.get(e, 0) - 2 * tc * c2
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        e = tuple(2 * x for x in te)
        v = res.get(e, 0) - tc * tc
        if v:
            res[e] = v
        else:
            res.pop(e, None)
        root[te] = tc
    return SparsePoly._raw(f.nvars, root)
