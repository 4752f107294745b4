"""Exact multivariate polynomials and rational functions over the rationals.

Coefficients are ints or Fractions (ints whenever the denominator is 1, so
integer-only pipelines run on plain int arithmetic).  Terms live in a dict
keyed by exponent tuples; the monomial order is graded lexicographic with
the variable priority fixed once, globally, so rendered output and leading
coefficients are deterministic across runs.

RatFunc is always kept in canonical form: numerator and denominator are
integer-coefficient polynomials with no common polynomial factor, coprime
integer contents, and a positive leading denominator coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DomainError, PoleError
from .exactnum import is_perfect_square, is_prime

__all__ = [
    "VAR_ORDER",
    "Poly",
    "RatFunc",
    "var",
    "const",
    "poly_divide_exact",
    "poly_sqrt",
    "poly_gcd",
    "poly_lcm",
    "substitute",
    "evaluate",
    "exact_sqrt",
    "squarefree_decomposition",
    "largest_square_root_divisor",
]

# Global variable priority; earlier = higher rank in the lexicographic tie-break.
VAR_ORDER = ("x", "u", "v", "U", "V", "X", "Y", "f", "g", "h", "p", "q", "m", "n", "r", "s", "t", "k")
_VAR_RANK = {name: i for i, name in enumerate(VAR_ORDER)}

Coeff = Union[int, Fraction]
Scalar = Union[int, Fraction]


def _canon_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _var_key(name: str):
    # Known symbols sort by their fixed rank; anything else after them, by name.
    rank = _VAR_RANK.get(name)
    return (0, rank) if rank is not None else (1, name)


class Poly:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict[tuple[int, ...], Coeff]):
        # Internal constructor: callers must pass vars sorted by _var_key and
        # terms free of zero coefficients.  Use var()/const() and arithmetic.
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def one() -> "Poly":
        return _ONE

    @staticmethod
    def const(c: Scalar) -> "Poly":
        c = _canon_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        if c == 0:
            return _ZERO
        return Poly((), {(): c})

    @staticmethod
    def variable(name: str) -> "Poly":
        return Poly((name,), {(1,): 1})

    @staticmethod
    def _make(vars: tuple[str, ...], terms: dict[tuple[int, ...], Coeff]) -> "Poly":
        """Normalize: drop zeros, canonicalize coefficients, prune unused vars."""
        clean = {}
        for e, c in terms.items():
            c = _canon_coeff(c)
            if c != 0:
                clean[e] = c
        if not clean:
            return _ZERO
        if vars:
            used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
            if len(used) != len(vars):
                vars = tuple(vars[i] for i in used)
                clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        return Poly(vars, clean)

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_const(self) -> bool:
        return not self.vars

    def const_value(self) -> Fraction:
        if self.vars:
            raise DomainError("polynomial %s is not constant" % self)
        return Fraction(self.terms.get((), 0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self) -> tuple[tuple[int, ...], Coeff]:
        """Leading (exponents, coefficient) in graded-lex order."""
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def leading_coeff(self) -> Coeff:
        return self.leading()[1] if self.terms else 0

    def rational_content(self) -> Fraction:
        """Positive c with self/c integer-coefficient and content 1 (0 for zero)."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            if isinstance(c, int):
                num_gcd = math.gcd(num_gcd, c)
            else:
                num_gcd = math.gcd(num_gcd, c.numerator)
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    # -- alignment helpers ----------------------------------------------------

    def _aligned_with(self, other: "Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = tuple(sorted(set(self.vars) | set(other.vars), key=_var_key))
        return merged, _embed(self, merged), _embed(other, merged)

    # -- arithmetic -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return not self.vars and self.terms.get((), 0) == other
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        elif isinstance(other, RatFunc):
            return other + self
        elif not isinstance(other, Poly):
            return NotImplemented
        vars, t1, t2 = self._aligned_with(other)
        out = dict(t1)
        for e, c in t2.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._make(vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        elif isinstance(other, RatFunc):
            return (-other) + self
        elif not isinstance(other, Poly):
            return NotImplemented
        vars, t1, t2 = self._aligned_with(other)
        out = dict(t1)
        for e, c in t2.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._make(vars, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            return Poly(self.vars, {e: _canon_coeff(c * other) for e, c in self.terms.items()})
        if isinstance(other, RatFunc):
            return other * self
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return _ZERO
        if self.is_const:
            return other * self.terms[()]
        if other.is_const:
            return self * other.terms[()]
        vars, t1, t2 = self._aligned_with(other)
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        out: dict[tuple[int, ...], Coeff] = {}
        items2 = list(t2.items())
        for e1, c1 in t1.items():
            for e2, c2 in items2:
                e = tuple(map(sum, zip(e1, e2)))
                prev = out.get(e)
                out[e] = c1 * c2 if prev is None else prev + c1 * c2
        return Poly._make(vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise DomainError("Poly powers require a nonnegative integer exponent")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            return RatFunc(self, other)
        if isinstance(other, RatFunc):
            return RatFunc(self, _ONE) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.const(other), self)
        return NotImplemented

    # -- calculus / structure ---------------------------------------------------

    def derivative(self, name: str) -> "Poly":
        if name not in self.vars:
            return _ZERO
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[e2] = out.get(e2, 0) + c * e[i]
        return Poly._make(self.vars, out)

    def as_univariate(self, name: str) -> list["Poly"]:
        """Coefficient list [c0, c1, ...] of self viewed in Q[rest][name]."""
        if name not in self.vars:
            return [self]
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1 :]
        deg = max(e[i] for e in self.terms)
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1 :]] = c
        return [Poly._make(rest, b) for b in buckets]

    @staticmethod
    def from_univariate(name: str, coeffs: Iterable["Poly"]) -> "Poly":
        acc = _ZERO
        xv = Poly.variable(name)
        power = _ONE
        for c in coeffs:
            if not isinstance(c, Poly):
                c = Poly.const(c)
            if not c.is_zero:
                acc = acc + c * power
            power = power * xv
        return acc

    # -- rendering ----------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, terms in descending graded-lex order."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (abs(c), mono)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "Poly(%s)" % self.render()

    # -- evaluation / substitution -------------------------------------------------

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        return evaluate(self, point)

    def substitute(self, bindings: Mapping[str, object]):
        return substitute(self, bindings)


def _embed(p: Poly, vars: tuple[str, ...]) -> dict:
    if p.vars == vars:
        return p.terms
    pos = [vars.index(v) for v in p.vars]
    n = len(vars)
    out = {}
    for e, c in p.terms.items():
        e2 = [0] * n
        for j, exp in zip(pos, e):
            e2[j] = exp
        out[tuple(e2)] = c
    return out


_ZERO = Poly((), {})
_ONE = Poly((), {(): 1})


def var(name: str) -> Poly:
    """The polynomial consisting of the single variable `name`."""
    return Poly.variable(name)


def const(c: Scalar) -> Poly:
    return Poly.const(c)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def poly_divide_exact(a: Poly, b: Poly) -> Poly | None:
    """Quotient a/b when b divides a exactly, else None.

    Single-divisor long division in graded-lex order: when the quotient
    exists every intermediate leading term is divisible, so the first
    failed leading-term division certifies indivisibility.
    """
    if not isinstance(a, Poly) or not isinstance(b, Poly):
        raise DomainError("poly_divide_exact expects Poly arguments")
    if b.is_zero:
        raise DomainError("division by the zero polynomial")
    if a.is_zero:
        return _ZERO
    if b.is_const:
        inv = Fraction(1) / Fraction(b.terms[()])
        return a * inv
    vars, ta, tb = a._aligned_with(b)
    rem = dict(ta)
    lb = max(tb, key=lambda e: (sum(e), e))
    lbc = tb[lb]
    items_b = list(tb.items())
    quot: dict[tuple[int, ...], Coeff] = {}
    while rem:
        la = max(rem, key=lambda e: (sum(e), e))
        qe = tuple(x - y for x, y in zip(la, lb))
        if any(k < 0 for k in qe):
            return None
        ra = rem[la]
        if isinstance(ra, int) and isinstance(lbc, int) and ra % lbc == 0:
            qc = ra // lbc
        else:
            qc = _canon_coeff(Fraction(ra) / Fraction(lbc))
        quot[qe] = qc
        for e, c in items_b:
            key = tuple(x + y for x, y in zip(qe, e))
            s = rem.get(key, 0) - qc * c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return Poly._make(vars, quot)


def _divexact(a: Poly, b: Poly) -> Poly:
    q = poly_divide_exact(a, b)
    if q is None:
        raise DomainError("expected exact division failed: (%s) / (%s)" % (a, b))
    return q


# ---------------------------------------------------------------------------
# GCD machinery
# ---------------------------------------------------------------------------


def _int_coeff_lists(a: Poly, name: str) -> list[int]:
    """Dense integer coefficient list of a univariate poly after clearing content."""
    cont = a.rational_content()
    prim = a * (Fraction(1) / cont)
    deg = prim.degree_in(name)
    out = [0] * (deg + 1)
    if prim.is_const:
        out[0] = int(prim.terms[()])
        return out
    i = prim.vars.index(name)
    for e, c in prim.terms.items():
        out[e[i]] = int(c)
    return out


def _int_list_degree(a: list[int]) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _int_list_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return [0]
    d = _int_list_degree(a)
    sign = -1 if a[d] < 0 else 1
    return [c // (sign * g) for c in a[: d + 1]]

def _int_list_divexact(a: list[int], b: list[int]) -> list[int] | None:
    da, db = _int_list_degree(a), _int_list_degree(b)
    if da < 0:
        return [0]
    if db < 0:
        return None
    rem = list(a[: da + 1])
    lead = b[db]
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = rem[db + i]
        if c == 0:
            continue
        if c % lead:
            return None
        qc = c // lead
        q[i] = qc
        for j in range(db + 1):
            rem[i + j] -= qc * b[j]
    return q if all(c == 0 for c in rem) else None


_GCD_PRIME_START = (1 << 62) + 135  # first prime above 2^62 is found from here


def _gcd_primes():
    p = _GCD_PRIME_START
    while True:
        if is_prime(p):
            yield p
        p += 2


def _int_list_gcd(A: list[int], B: list[int]) -> list[int]:
    """Primitive gcd of integer coefficient lists via modular images + CRT."""
    da, db = _int_list_degree(A), _int_list_degree(B)
    if da < 0:
        return _int_list_primitive(B)
    if db < 0:
        return _int_list_primitive(A)
    A = _int_list_primitive(A)
    B = _int_list_primitive(B)
    da, db = _int_list_degree(A), _int_list_degree(B)
    lc_gcd = math.gcd(A[da], B[db])
    best_deg = None
    acc: list[int] = []
    acc_mod = 1
    primes_in_acc = 0
    for p in _gcd_primes():
        if A[da] % p == 0 or B[db] % p == 0:
            continue
        g = _gf_gcd([c % p for c in A], [c % p for c in B], p)
        dg = _int_list_degree(g)
        if dg == 0:
            return [1]
        if primes_in_acc > 24:
            # an unlucky prime may have poisoned the accumulator; start over
            best_deg = None
        if best_deg is None or dg < best_deg:
            best_deg = dg
            acc = [0] * (dg + 1)
            acc_mod = 1
            primes_in_acc = 0
        elif dg > best_deg:
            continue
        primes_in_acc += 1
        # scale image so its leading coefficient is lc_gcd mod p
        scale = lc_gcd * pow(g[dg], -1, p) % p
        img = [c * scale % p for c in g]
        if acc_mod == 1:
            acc = img
            acc_mod = p
        else:
            inv = pow(acc_mod, -1, p)
            new = []
            for old, gi in zip(acc, img):
                t = (gi - old) * inv % p
                new.append(old + acc_mod * t)
            acc = new
            acc_mod *= p
        # symmetric lift then trial division
        half = acc_mod >> 1
        cand = [c - acc_mod if c > half else c for c in acc]
        cand = _int_list_primitive(cand)
        if _int_list_divexact(A, cand) is not None and _int_list_divexact(B, cand) is not None:
            return cand


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[: _int_list_degree(a) + 1] or [0]
    b = b[: _int_list_degree(b) + 1] or [0]
    while _int_list_degree(b) >= 0:
        da, db = _int_list_degree(a), _int_list_degree(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db], -1, p)
        bm = [c * inv % p for c in b]
        rem = list(a)
        for i in range(da - db, -1, -1):
            c = rem[db + i] % p
            if c:
                for j in range(db + 1):
                    rem[i + j] = (rem[i + j] - c * bm[j]) % p
        a, b = b, rem[: db] or [0]
        b = b[: _int_list_degree(b) + 1] or [0]
    return a


def _gcd_univar(a: Poly, b: Poly, name: str) -> Poly:
    g = _int_list_gcd(_int_coeff_lists(a, name), _int_coeff_lists(b, name))
    return Poly.from_univariate(name, [Poly.const(c) for c in g])


def _split_monomial_pair(p: Poly, v1: str, v2: str) -> tuple[int, int, Poly]:
    """Factor p (vars within {v1, v2}) as v1^e1 * v2^e2 * cofactor."""
    i1 = p.vars.index(v1) if v1 in p.vars else None
    i2 = p.vars.index(v2) if v2 in p.vars else None
    e1 = min(e[i1] for e in p.terms) if i1 is not None else 0
    e2 = min(e[i2] for e in p.terms) if i2 is not None else 0
    if not (e1 or e2):
        return 0, 0, p
    terms = {}
    for e, c in p.terms.items():
        e = list(e)
        if i1 is not None:
            e[i1] -= e1
        if i2 is not None:
            e[i2] -= e2
        terms[tuple(e)] = c
    return e1, e2, Poly._make(p.vars, terms)


def _gcd_bivar_homogeneous(a: Poly, b: Poly, v1: str, v2: str) -> Poly:
    """gcd of homogeneous polynomials whose variables lie within {v1, v2}.

    Reduces to a univariate gcd: after stripping monomial factors, a
    homogeneous p(v1, v2) of degree d is v1^d * f(v2/v1) with f of degree d
    and nonzero constant term, and gcds commute with this substitution.
    """
    a1, a2, ca = _split_monomial_pair(a, v1, v2)
    b1, b2, cb = _split_monomial_pair(b, v1, v2)
    e1, e2 = min(a1, b1), min(a2, b2)
    mono = Poly._make((v1, v2), {(e1, e2): 1})
    # a stripped homogeneous cofactor in one variable only must be constant
    if ca.is_const or cb.is_const:
        return _normalize_gcd(mono)

    def dehom(p: Poly) -> list[int]:
        cont = p.rational_content()
        prim = p * (Fraction(1) / cont)
        d = prim.total_degree()
        out = [0] * (d + 1)
        iv2 = prim.vars.index(v2)
        for e, c in prim.terms.items():
            out[e[iv2]] = int(c)
        return out

    g = _int_list_gcd(dehom(ca), dehom(cb))
    dg = _int_list_degree(g)
    terms = {}
    for k in range(dg + 1):
        if g[k]:
            terms[(dg - k + e1, k + e2)] = g[k]
    return _normalize_gcd(Poly._make((v1, v2), terms))


def _content_wrt(p: Poly, name: str) -> tuple[Poly, Poly]:
    """(content, primitive part) of p viewed in (Q[rest])[name]."""
    coeffs = [c for c in p.as_univariate(name) if not c.is_zero]
    cont = coeffs[0]
    for c in coeffs[1:]:
        if cont.is_const:
            break
        cont = _poly_gcd_core(cont, c)
    if cont.is_const:
        cont = _ONE
    return cont, _divexact(p, cont)


def _pseudo_rem(A: list[Poly], B: list[Poly]) -> list[Poly]:
    """Pseudo-remainder of coefficient lists (univariate over a poly ring).

    Eliminates the top term via rem <- lead(B)*rem - c*x^i*B, so no
    coefficient division is ever needed.
    """
    da, db = len(A) - 1, len(B) - 1
    lead = B[db]
    rem = list(A)
    for i in range(da - db, -1, -1):
        c = rem[db + i]
        if c.is_zero:
            continue
        rem = [r * lead for r in rem]
        for j in range(db + 1):
            rem[i + j] = rem[i + j] - c * B[j]
    while rem and rem[-1].is_zero:
        rem.pop()
    return rem


def _max_abs_coeff(p: Poly) -> int:
    return max(abs(int(c)) for c in p.terms.values())


def _int_content_split(p: Poly) -> tuple[int, Poly]:
    """(signed content, primitive part) of an integer-coefficient poly."""
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, int(c))
    if p.leading_coeff() < 0:
        g = -g
    if g in (1, 0):
        return (g or 1), p
    return g, Poly(p.vars, {e: int(c) // g for e, c in p.terms.items()})


def _subst_int(p: Poly, name: str, xi: int) -> Poly:
    """Evaluate one variable at an integer, exactly."""
    if name not in p.vars:
        return p
    i = p.vars.index(name)
    powers = {0: 1}
    out: dict[tuple[int, ...], Coeff] = {}
    for e, c in p.terms.items():
        k = e[i]
        pw = powers.get(k)
        if pw is None:
            pw = xi**k
            powers[k] = pw
        e2 = e[:i] + e[i + 1 :]
        out[e2] = out.get(e2, 0) + c * pw
    return Poly._make(p.vars[:i] + p.vars[i + 1 :], out)


def _mods(c: int, xi: int) -> int:
    r = c % xi
    return r - xi if r > xi >> 1 else r


def _interpolate_digits(gamma: Poly, xi: int, name: str) -> Poly:
    """Rebuild the polynomial in `name` from balanced base-xi digits of gamma."""
    digits: list[Poly] = []
    g = gamma
    while not g.is_zero:
        digit = Poly(g.vars, {e: _mods(int(c), xi) for e, c in g.terms.items()})
        digit = Poly._make(digit.vars, digit.terms)
        digits.append(digit)
        g = Poly._make(g.vars, {e: (int(c) - _mods(int(c), xi)) // xi for e, c in g.terms.items()})
    return Poly.from_univariate(name, digits)


def _heugcd(a: Poly, b: Poly, depth: int = 0) -> Poly | None:
    """Heuristic gcd of integer-coefficient polys: evaluate one variable at a
    large integer, take the gcd one level down, lift the digits back, and
    verify by trial division.  Returns the content-inclusive gcd, or None
    if six evaluation points all fail (callers then use the slow path).
    """
    ca, pa = _int_content_split(a)
    cb, pb = _int_content_split(b)
    content = math.gcd(ca, cb)
    vars = tuple(sorted(set(pa.vars) | set(pb.vars), key=_var_key))
    if not vars:
        return Poly.const(content)
    if len(vars) == 1:
        return _gcd_univar(pa, pb, vars[0]) * content
    if depth > 8:
        return None
    name = vars[-1]
    xi = 2 * min(_max_abs_coeff(pa), _max_abs_coeff(pb)) + 29
    for _ in range(6):
        A = _subst_int(pa, name, xi)
        B = _subst_int(pb, name, xi)
        if not (A.is_zero or B.is_zero):
            gamma = _heugcd(A, B, depth + 1)
            if gamma is None:
                return None
            cand = _interpolate_digits(gamma, xi, name)
            if not cand.is_zero:
                _, cand = _int_content_split(cand)
                if (
                    poly_divide_exact(pa, cand) is not None
                    and poly_divide_exact(pb, cand) is not None
                ):
                    return cand * content
        xi = 73794 * xi // 27011
    return None


def _gcd_recursive(a: Poly, b: Poly) -> Poly:
    vars = tuple(sorted(set(a.vars) | set(b.vars), key=_var_key))
    name = vars[0]
    ca, pa = _content_wrt(a, name)
    cb, pb = _content_wrt(b, name)
    cont = _poly_gcd_core(ca, cb)
    A = pa.as_univariate(name)
    B = pb.as_univariate(name)
    if len(A) < len(B):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B)
        if not R:
            g = Poly.from_univariate(name, B)
            break
        if len(R) == 1:
            g = _ONE
            break
        rpoly = Poly.from_univariate(name, R)
        _, rprim = _content_wrt(rpoly, name)
        A, B = B, rprim.as_univariate(name)
    if not g.is_const:
        _, g = _content_wrt(g, name)
    return cont * g


def _normalize_gcd(g: Poly) -> Poly:
    if g.is_zero:
        return g
    cont = g.rational_content()
    g = g * (Fraction(1) / cont)
    if g.leading_coeff() < 0:
        g = -g
    return g


def _poly_gcd_core(a: Poly, b: Poly) -> Poly:
    if a.is_zero:
        return _normalize_gcd(b)
    if b.is_zero:
        return _normalize_gcd(a)
    if a.is_const or b.is_const:
        return _ONE
    vars = tuple(sorted(set(a.vars) | set(b.vars), key=_var_key))
    if len(vars) == 1:
        return _gcd_univar(a, b, vars[0])
    if len(vars) == 2 and a.is_homogeneous() and b.is_homogeneous():
        return _gcd_bivar_homogeneous(a, b, vars[0], vars[1])
    if not (set(a.vars) & set(b.vars)):
        return _ONE
    # general case: heuristic evaluation gcd, primitive PRS as fallback
    ia = a * (Fraction(1) / a.rational_content())
    ib = b * (Fraction(1) / b.rational_content())
    heu = _heugcd(ia, ib)
    if heu is not None:
        return heu
    return _gcd_recursive(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Polynomial gcd, normalized to integer content 1 and positive leading coeff."""
    return _normalize_gcd(_poly_gcd_core(a, b))


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return _ZERO
    return _normalize_gcd(_divexact(a * b, poly_gcd(a, b)))


# ---------------------------------------------------------------------------
# Polynomial square root
# ---------------------------------------------------------------------------


def _const_sqrt(c: Coeff) -> Coeff | None:
    f = Fraction(c)
    if f < 0:
        return None
    pn = is_perfect_square(f.numerator)
    if pn is None:
        return None
    pd = is_perfect_square(f.denominator)
    if pd is None:
        return None
    return _canon_coeff(Fraction(pn, pd))


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact square root with positive leading coefficient, or None.

    Views p univariately in its highest-ranked variable and solves for the
    root's coefficients top-down; each step is an exact division by twice
    the leading root, failing fast when p is not a square.
    """
    if p.is_zero:
        return _ZERO
    if p.is_const:
        r = _const_sqrt(p.terms[()])
        return None if r is None else Poly.const(r)
    name = p.vars[0]
    coeffs = p.as_univariate(name)
    deg = len(coeffs) - 1
    if deg & 1:
        return None
    d = deg >> 1
    lead_root = poly_sqrt(coeffs[deg])
    if lead_root is None:
        return None
    b: list[Poly | None] = [None] * (d + 1)
    b[d] = lead_root
    two_lead = lead_root * 2
    for j in range(d - 1, -1, -1):
        s = coeffs[d + j]
        i = max(j + 1, (d + j + 1) // 2)
        while i <= d - 1:
            k2 = d + j - i
            s = s - (b[i] * b[k2] * 2 if i != k2 else b[i] * b[i])
            i += 1
        bj = poly_divide_exact(s, two_lead)
        if bj is None:
            return None
        b[j] = bj
    q = Poly.from_univariate(name, b)  # type: ignore[arg-type]
    if q * q != p:
        return None
    if q.leading_coeff() < 0:
        q = -q
    return q


# ---------------------------------------------------------------------------
# Squarefree structure
# ---------------------------------------------------------------------------


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """[(f_i, e_i)] with p = unit * prod f_i^e_i, f_i squarefree pairwise coprime.

    Rational content is discarded (the unit); factors are primitive with
    positive leading coefficients.  Yun's algorithm on the main variable,
    with the part free of that variable handled recursively.
    """
    if p.is_zero:
        raise DomainError("squarefree decomposition of zero")
    if p.is_const:
        return []
    name = p.vars[0]
    cont, prim = _content_wrt(p, name)
    out = squarefree_decomposition(cont) if not cont.is_const else []
    P = _normalize_gcd(prim)
    dP = P.derivative(name)
    G = poly_gcd(P, dP)
    C = _divexact(P, G)
    D = _divexact(dP, G) - C.derivative(name)
    i = 1
    while not C.is_const:
        F = poly_gcd(C, D)
        if not F.is_const:
            out.append((_normalize_gcd(F), i))
        C = _divexact(C, F)
        D = _divexact(D, F) - C.derivative(name)
        i += 1
    return out


def largest_square_root_divisor(p: Poly) -> Poly:
    """Largest (primitive) g such that g^2 divides p."""
    if p.is_zero or p.is_const:
        return _ONE
    g = _ONE
    for f, e in squarefree_decomposition(p):
        if e >= 2:
            g = g * f ** (e >> 1)
    return _normalize_gcd(g)


# ---------------------------------------------------------------------------
# Substitution and evaluation
# ---------------------------------------------------------------------------


def substitute(p: Poly, bindings: Mapping[str, object]):
    """Substitute Poly/RatFunc/scalar values for variables; exact and expanded.

    Returns a Poly when every binding is polynomial, otherwise a RatFunc.
    Bindings for variables absent from p are ignored.
    """
    if not isinstance(p, Poly):
        raise DomainError("substitute expects a Poly")
    live = {k: v for k, v in bindings.items() if k in p.vars}
    if not live:
        return p
    coerced: dict[str, object] = {}
    for k, v in live.items():
        if isinstance(v, (int, Fraction)):
            coerced[k] = Poly.const(v)
        elif isinstance(v, (Poly, RatFunc)):
            coerced[k] = v
        else:
            raise DomainError("unsupported binding for %s: %r" % (k, v))
    powers: dict[str, list] = {k: [_ONE, v] for k, v in coerced.items()}

    def power(name: str, e: int):
        cache = powers[name]
        while len(cache) <= e:
            cache.append(cache[-1] * cache[1])
        return cache[e]

    acc = None
    kept = [v for v in p.vars if v not in coerced]
    for e, c in p.terms.items():
        term = Poly._make(
            tuple(kept),
            {tuple(k for v, k in zip(p.vars, e) if v in kept): c},
        ) if kept else Poly.const(c)
        for name, exp in zip(p.vars, e):
            if name in coerced and exp:
                term = term * power(name, exp)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = _ZERO
    if isinstance(acc, RatFunc) and acc.den == _ONE:
        return acc.num
    return acc


def evaluate(p, point: Mapping[str, Scalar]) -> Fraction:
    """Exact value of a Poly or RatFunc at a fully specified rational point."""
    if isinstance(p, RatFunc):
        den = evaluate(p.den, point)
        if den == 0:
            raise PoleError("denominator vanishes at %s" % dict(point))
        return evaluate(p.num, point) / den
    if not isinstance(p, Poly):
        raise DomainError("evaluate expects a Poly or RatFunc")
    missing = [v for v in p.vars if v not in point]
    if missing:
        raise DomainError("unbound variables in evaluation: %s" % ", ".join(missing))
    vals = [Fraction(point[v]) for v in p.vars]
    total = Fraction(0)
    cache: dict[tuple[int, int], Fraction] = {}
    for e, c in p.terms.items():
        prod = Fraction(c)
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                pw = cache.get(key)
                if pw is None:
                    pw = vals[i] ** k
                    cache[key] = pw
                prod *= pw
        total += prod
    return total


def exact_sqrt(x):
    """Square root in the element's own exact domain, or None.

    ints/Fractions give a nonnegative rational; Poly/RatFunc give the
    positive-leading-coefficient root.
    """
    if isinstance(x, int):
        r = is_perfect_square(x)
        return r
    if isinstance(x, Fraction):
        from .exactnum import sqrt_fraction

        return sqrt_fraction(x)
    if isinstance(x, Poly):
        return poly_sqrt(x)
    if isinstance(x, RatFunc):
        return x.sqrt()
    raise DomainError("exact_sqrt does not support %r" % type(x))


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Quotient of two Polys, always reduced to the canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = _ONE
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero:
            raise PoleError("rational function with zero denominator")
        num, den = _ratfunc_normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _raw(num: Poly, den: Poly) -> "RatFunc":
        """Wrap already-canonical parts without re-normalizing."""
        obj = object.__new__(RatFunc)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @staticmethod
    def _coerce(x) -> "RatFunc | None":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc(Poly.const(x))
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        g = poly_gcd(self.den, o.den)
        if g.is_const:
            num = self.num * o.den + o.num * self.den
            return RatFunc(num, self.den * o.den)
        d1 = _divexact(self.den, g)
        d2 = _divexact(o.den, g)
        num = self.num * d2 + o.num * d1
        return RatFunc(num, d1 * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return _RF_ZERO
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_const else _divexact(self.num, g1)
        d2 = o.den if g1.is_const else _divexact(o.den, g1)
        n2 = o.num if g2.is_const else _divexact(o.num, g2)
        d1 = self.den if g2.is_const else _divexact(self.den, g2)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise PoleError("division by zero rational function")
        if o.num.leading_coeff() > 0:
            inv = RatFunc._raw(o.den, o.num)
        else:
            inv = RatFunc._raw(-o.den, -o.num)
        return self * inv

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero:
                raise PoleError("zero rational function to a negative power")
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def sqrt(self) -> "RatFunc | None":
        """Exact square root in the rational-function field, or None."""
        if self.is_zero:
            return _RF_ZERO
        h = poly_sqrt(self.num * self.den)
        if h is None:
            return None
        return RatFunc(h, self.den)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        return evaluate(self, point)

    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        num = substitute(self.num, bindings)
        den = substitute(self.den, bindings)
        num = RatFunc._coerce(num)
        den = RatFunc._coerce(den)
        if den.is_zero:
            raise PoleError("substitution sends the denominator to zero")
        return num / den

    def total_degree(self) -> int:
        return max(self.num.total_degree(), self.den.total_degree())

    def render(self) -> str:
        if self.den == _ONE:
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "RatFunc(%s)" % self.render()


def _ratfunc_normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero:
        return _ZERO, _ONE
    g = poly_gcd(num, den)
    if not g.is_const:
        num = _divexact(num, g)
        den = _divexact(den, g)
    cn = num.rational_content()
    cd = den.rational_content()
    ratio = cn / cd
    num = num * (Fraction(ratio.numerator) / cn)
    den = den * (Fraction(ratio.denominator) / cd)
    if den.leading_coeff() < 0:
        num, den = -num, -den
    return num, den


_RF_ZERO = RatFunc._raw(_ZERO, _ONE)


def canonical_sort_key(x) -> tuple:
    """Deterministic ordering key for Poly/RatFunc values."""
    if isinstance(x, Poly):
        return (x.total_degree(), 0, x.render())
    if isinstance(x, RatFunc):
        return (x.num.total_degree(), x.den.total_degree(), x.render())
    return (-1, 0, str(x))
