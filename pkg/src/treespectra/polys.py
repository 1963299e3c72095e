"""Exact univariate integer polynomials and real-root machinery.

Everything here is certificate-grade: coefficients are arbitrary-precision
integers, interval endpoints are rationals, and no floating point is used
anywhere.  Root counting goes through Sturm chains on square-free parts;
multiplicities are recovered by exact division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional


class DivisibilityError(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class SymmetryError(ValueError):
    """Polynomial is not of the form x^h * q(x^2)."""


class PrecisionExhausted(RuntimeError):
    """Interval refinement hit its width cap without resolving a comparison."""


def _strip(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class IntPoly:
    """Dense univariate polynomial over the integers, ascending coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = tuple(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse the comma-separated ascending-coefficient form."""
        parts = [p.strip() for p in text.split(",")]
        return cls(int(p) for p in parts if p)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            elif i == 1:
                body = "x" if a == 1 else f"{a}x"
            else:
                body = f"x^{i}" if a == 1 else f"{a}x^{i}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_text(self) -> str:
        """Comma-separated ascending coefficients, e.g. "-1,0,1" for x^2-1."""
        return ",".join(str(c) for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly.zero()
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0)
                       if self.degree >= 1 else ())

    def evaluate(self, t):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def exact_divide(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient self/divisor when the division is exact over the integers.

        Raises DivisibilityError when any coefficient step fails or a nonzero
        remainder is left.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return IntPoly.zero()
        da, db = self.degree, divisor.degree
        if da < db:
            raise DivisibilityError(f"{divisor} does not divide {self}")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        quot = [0] * (da - db + 1)
        for i in range(da - db, -1, -1):
            top = rem[i + db]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r != 0:
                raise DivisibilityError(f"{divisor} does not divide {self}")
            quot[i] = q
            for j, c in enumerate(divisor.coeffs):
                rem[i + j] -= q * c
        if any(rem):
            raise DivisibilityError(f"{divisor} does not divide {self}")
        return IntPoly(quot)

    def divides(self, other: "IntPoly") -> bool:
        try:
            other.exact_divide(self)
            return True
        except DivisibilityError:
            return False

    def content(self) -> int:
        """GCD of the coefficients (0 for the zero polynomial)."""
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        g = self.content()
        if g == 0:
            return IntPoly.zero()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))


# ---------------------------------------------------------------------------
# gcd / square-free machinery


def _pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Pseudo-remainder r with lc(b)^(da-db+1) * a = q*b + r."""
    da, db = len(a) - 1, len(b) - 1
    lead = b[-1]
    rem = list(a)
    for i in range(da - db, -1, -1):
        top = rem[i + db]
        for j in range(len(rem)):
            rem[j] *= lead
        if top:
            for j, c in enumerate(b):
                rem[i + j] -= top * c
        # rem now has degree < i+db in positions above; keep going
    return _strip(tuple(rem))


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = p.primitive(), q.primitive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = IntPoly(_pseudo_rem(a.coeffs, b.coeffs)).primitive()
        a, b = b, r
    return a.primitive()


def square_free_part(p: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors of p (primitive)."""
    if p.degree <= 0:
        return p.primitive() if not p.is_zero else p
    g = poly_gcd(p, p.derivative())
    return p.primitive().exact_divide(g)


def square_free_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Musser decomposition: [(f_i, i)] with primitive(p) = prod f_i^i.

    The f_i are primitive, square-free, and pairwise coprime.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    a = p.primitive()
    if a.degree <= 0:
        return []
    b = poly_gcd(a, a.derivative())
    c = a.exact_divide(b)
    out: list[tuple[IntPoly, int]] = []
    i = 1
    while c.degree > 0:
        d = poly_gcd(b, c)
        fi = c.exact_divide(d)
        if fi.degree > 0:
            out.append((fi, i))
        b = b.exact_divide(d)
        c = d
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm chains and root counting


@lru_cache(maxsize=8192)
def _sturm_chain(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Sturm chain of a square-free polynomial, content-reduced each step."""
    p = IntPoly(coeffs)
    chain = [p.coeffs, p.derivative().coeffs]
    while chain[-1] and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = _pseudo_rem(a, b)
        if not r:
            break
        delta = len(a) - len(b) + 1
        if b[-1] < 0 and delta % 2 == 1:
            # pseudo-remainder was scaled by a negative constant; undo the flip
            r = tuple(-c for c in r)
        nxt = IntPoly(tuple(-c for c in r))
        g = nxt.content()
        chain.append(tuple(c // g for c in nxt.coeffs))
    if not chain[-1]:
        chain.pop()
    return tuple(chain)


def _eval_scaled(coeffs: tuple[int, ...], num: int, den: int) -> int:
    """den^deg * p(num/den), exact; sign equals sign of p(num/den)."""
    acc = coeffs[-1]
    dp = 1
    for c in reversed(coeffs[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return acc


def _sign_variations(chain, num: int, den: int) -> int:
    signs = []
    for coeffs in chain:
        v = _eval_scaled(coeffs, num, den)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _as_fraction(t) -> Fraction:
    return t if isinstance(t, Fraction) else Fraction(t)


class RootCount(NamedTuple):
    with_multiplicity: int
    distinct: int


def _distinct_roots_open(squarefree: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of a square-free polynomial in the open interval.

    Sturm with the zero-skip convention counts roots in (lo, hi]; a root
    sitting exactly at hi is removed by exact evaluation.
    """
    if squarefree.degree <= 0:
        return 0
    chain = _sturm_chain(squarefree.coeffs)
    count = (_sign_variations(chain, lo.numerator, lo.denominator)
             - _sign_variations(chain, hi.numerator, hi.denominator))
    if squarefree.evaluate(hi) == 0:
        count -= 1
    return count


@lru_cache(maxsize=4096)
def _square_free_cached(p: IntPoly) -> tuple[tuple[IntPoly, int], ...]:
    return tuple(square_free_decomposition(p))


def count_roots_open(p: IntPoly, lo, hi) -> RootCount:
    """Exact number of real roots of p in the open interval (lo, hi).

    Returns both the multiplicity-weighted count and the distinct count.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no root count")
    lo, hi = _as_fraction(lo), _as_fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    with_mult = 0
    distinct = 0
    for factor, mult in _square_free_cached(p):
        d = _distinct_roots_open(factor, lo, hi)
        distinct += d
        with_mult += mult * d
    return RootCount(with_mult, distinct)


def count_roots_above(p: IntPoly, t) -> RootCount:
    """Real roots of p strictly above t (the right endpoint is pushed past
    both the root bound and t)."""
    t = _as_fraction(t)
    hi = Fraction(max(root_bound(p), 0)) + max(t, Fraction(0)) + 1
    return count_roots_open(p, t, hi)


# ---------------------------------------------------------------------------
# exact evaluation at quadratic irrationals mu + sqrt(m)


def _eval_at_quadratic(coeffs, mu: Fraction, m: int) -> tuple[Fraction, Fraction]:
    """p(mu + sqrt(m)) as (u, v) with value u + v*sqrt(m), exactly."""
    u, v = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        u, v = u * mu + v * m + c, u + v * mu
    return u, v


def _sign_of_quadratic(u: Fraction, v: Fraction, m: int) -> int:
    """Sign of u + v*sqrt(m) for a positive nonsquare m, exactly."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    usq, vsq = u * u, v * v * m
    if usq == vsq:
        return 0
    if u > 0:
        return 1 if usq > vsq else -1
    return -1 if usq > vsq else 1


def _variations_at_quadratic(chain, mu: Fraction, m: int) -> int:
    signs = []
    for coeffs in chain:
        s = _sign_of_quadratic(*_eval_at_quadratic(coeffs, mu, m), m)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_plus_infinity(chain) -> int:
    signs = [1 if coeffs[-1] > 0 else -1 for coeffs in chain]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def quadratic_root_multiplicity(p: IntPoly, mu: Fraction, m: int) -> int:
    """Multiplicity of mu + sqrt(m) as a root of p (m a positive nonsquare),
    by repeated exact division by its minimal polynomial (x-mu)^2 - m."""
    mu = _as_fraction(mu)
    coeffs = [Fraction(c) for c in p.coeffs]
    minimal = (mu * mu - m, -2 * mu, Fraction(1))
    mult = 0
    while len(coeffs) >= 3:
        rem = list(coeffs)
        quot = [Fraction(0)] * (len(rem) - 2)
        for i in range(len(rem) - 3, -1, -1):
            q = rem[i + 2]
            quot[i] = q
            if q:
                rem[i + 2] = Fraction(0)
                rem[i + 1] -= q * minimal[1]
                rem[i] -= q * minimal[0]
        if rem[0] != 0 or rem[1] != 0:
            break
        coeffs = quot
        mult += 1
    return mult


def count_roots_above_quadratic(p: IntPoly, mu, m: int) -> int:
    """Roots of p strictly above mu + sqrt(m), counted with multiplicity.

    m must be a positive nonsquare so the threshold is a genuine quadratic
    irrational; evaluation of the Sturm chain there is exact.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    from math import isqrt
    if m <= 0 or isqrt(m) ** 2 == m:
        raise ValueError("threshold must be irrational; use count_roots_above")
    mu = _as_fraction(mu)
    total = 0
    for factor, mult in _square_free_cached(p):
        if factor.degree <= 0:
            continue
        chain = _sturm_chain(factor.coeffs)
        d = (_variations_at_quadratic(chain, mu, m)
             - _variations_at_plus_infinity(chain))
        total += mult * d
    return total


def rational_root_multiplicity(p: IntPoly, t) -> int:
    """Multiplicity of the rational number t as a root of p."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    t = _as_fraction(t)
    if t.denominator == 1:
        # integer fast path: Horner deflation stays in the integers
        k = t.numerator
        mult = 0
        coeffs = list(p.coeffs)
        while len(coeffs) > 1:
            acc = 0
            for c in reversed(coeffs):
                acc = acc * k + c
            if acc != 0:
                break
            out = []
            acc = 0
            for c in reversed(coeffs[1:]):
                acc = acc * k + c
                out.append(acc)
            out.reverse()
            coeffs = out
            mult += 1
        return mult
    mult = 0
    coeffs_q: list = list(p.coeffs)
    while len(coeffs_q) > 1:
        # synthetic division by (x - t) over the rationals
        acc = Fraction(0)
        for c in reversed(coeffs_q):
            acc = acc * t + c
        if acc != 0:
            break
        acc = Fraction(0)
        quotient = []
        for c in reversed(coeffs_q[1:]):
            acc = acc * t + c
            quotient.append(acc)
        quotient.reverse()
        coeffs_q = quotient
        mult += 1
    return mult


def root_bound(p: IntPoly) -> int:
    """Cauchy bound: every real root has absolute value strictly below it."""
    if p.is_zero or p.degree < 1:
        return 1
    lead = abs(p.coeffs[-1])
    biggest = max(abs(c) for c in p.coeffs[:-1]) if p.degree >= 1 else 0
    return 1 + (biggest + lead - 1) // lead


# ---------------------------------------------------------------------------
# integer roots / spectrum summary


@dataclass(frozen=True)
class SpectrumSummary:
    """Integer roots with multiplicities plus the unfactored residual."""

    roots: dict
    residual: IntPoly
    is_integral: bool
    nullity: int

    def reassemble(self) -> IntPoly:
        out = self.residual
        x = IntPoly.x()
        for k, m in self.roots.items():
            out = out * (x - IntPoly.const(k)) ** m
        return out

    def multiplicity(self, k: int) -> int:
        return self.roots.get(k, 0)


def integer_roots(p: IntPoly) -> SpectrumSummary:
    """All integer roots of a monic polynomial, with exact multiplicities.

    Candidates are the divisors of the lowest nonzero coefficient (both
    signs) that clear the Cauchy root bound; zero is handled by valuation.
    The residual is certified to have no further integer roots.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if not p.is_monic:
        raise ValueError("integer_roots requires a monic polynomial")
    h = 0
    while p.coeffs[h] == 0:
        h += 1
    q = list(p.coeffs[h:])
    roots: dict = {}
    if h:
        roots[0] = h
    tail = abs(q[0])
    bound = root_bound(IntPoly(q))
    candidates = set()
    d = 1
    while d * d <= tail:
        if tail % d == 0:
            for c in (d, tail // d):
                if c <= bound:
                    candidates.add(c)
                    candidates.add(-c)
        d += 1
    for k in sorted(candidates, key=lambda c: (abs(c), c)):
        while len(q) > 1:
            # Horner test, then integer synthetic division by (x - k)
            acc = 0
            for c in reversed(q):
                acc = acc * k + c
            if acc != 0:
                break
            out = []
            acc = 0
            for c in reversed(q[1:]):
                acc = acc * k + c
                out.append(acc)
            out.reverse()
            q = out
            roots[k] = roots.get(k, 0) + 1
    residual = IntPoly(q)
    return SpectrumSummary(roots=roots, residual=residual,
                           is_integral=(residual.degree == 0),
                           nullity=h)


# ---------------------------------------------------------------------------
# even part and Taylor shift


def even_part(p: IntPoly) -> tuple[int, IntPoly]:
    """Write p(x) = x^h * q(x^2); return (h, q).

    Raises SymmetryError when p has no such form, which signals that the
    input was not the characteristic polynomial of a bipartite graph.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    h = 0
    while p.coeffs[h] == 0:
        h += 1
    rest = p.coeffs[h:]
    if any(rest[i] for i in range(1, len(rest), 2)):
        raise SymmetryError("polynomial is not x^h * q(x^2)")
    return h, IntPoly(rest[0::2])


def taylor_shift(q: IntPoly, r: int) -> IntPoly:
    """Exact Taylor shift: the polynomial q(y - r)."""
    out = IntPoly.zero()
    lin = IntPoly((-r, 1))
    for c in reversed(q.coeffs):
        out = out * lin + IntPoly.const(c)
    return out


# ---------------------------------------------------------------------------
# k-th largest root isolation


@dataclass(frozen=True)
class IsolatingInterval:
    """Certified open interval around the k-th largest real root."""

    lo: Fraction
    hi: Fraction
    index: int
    certified: bool
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _count_ge(p: IntPoly, t: Fraction, bound: int) -> int:
    """Roots of p in [t, bound), counted with multiplicity."""
    c = count_roots_open(p, t, Fraction(bound)).with_multiplicity
    return c + rational_root_multiplicity(p, t)


def isolate_kth_largest(p: IntPoly, k: int, width) -> IsolatingInterval:
    """Certified interval of length <= width around the k-th largest real root.

    Roots are ranked with multiplicity (index 1 = largest).  A rational root
    hit exactly is returned as a degenerate pinch interval with the exact
    value attached.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if k < 1:
        raise ValueError("root index starts at 1")
    width = _as_fraction(width)
    bound = root_bound(p)
    lo, hi = Fraction(-bound), Fraction(bound)
    total = count_roots_open(p, lo, hi).with_multiplicity
    if k > total:
        raise ValueError(f"polynomial has only {total} real roots, asked for #{k}")

    def pinch(value: Fraction) -> IsolatingInterval:
        eps = width / 2
        while count_roots_open(p, value - eps, value + eps).distinct != 1:
            eps /= 2
        return IsolatingInterval(value - eps, value + eps, k, True, exact=value)

    if p.is_monic:
        # monic: every rational root is an integer; pinch if the target is one
        summary = integer_roots(p)
        for rt in sorted(summary.roots, reverse=True):
            ge = _count_ge(p, Fraction(rt), bound)
            if ge >= k and ge - summary.roots[rt] < k:
                return pinch(Fraction(rt))

    while True:
        rc = count_roots_open(p, lo, hi)
        if rc.distinct == 1 and hi - lo <= width:
            return IsolatingInterval(lo, hi, k, True)
        mid = (lo + hi) / 2
        m = rational_root_multiplicity(p, mid)
        if m:
            ge = _count_ge(p, mid, bound)
            if ge >= k and ge - m < k:
                return pinch(mid)
            if ge >= k:
                lo = mid
            else:
                hi = mid
        elif _count_ge(p, mid, bound) >= k:
            lo = mid
        else:
            hi = mid
