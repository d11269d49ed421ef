"""Sparse multivariate polynomials over an exact coefficient field.

A polynomial in ``n`` variables is a dict mapping exponent tuples (one int
per variable) to coefficients.  Zero coefficients are never stored; the zero
polynomial has an empty table.  Coefficients may be ``Fraction`` or
``Scalar`` (or anything supporting +, -, *, / and truth testing); a single
polynomial keeps one coefficient type throughout.

This representation is shared by the eigenvalue-variable symmetric engine
(rational coefficients) and the ambient-coordinate differential-operator
engine (Q(sqrt2, i) coefficients).
"""

from __future__ import annotations

from typing import Callable, Iterable


class Poly:
    """Exact sparse polynomial; immutable by convention."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n)

    @staticmethod
    def const(n: int, c) -> "Poly":
        return Poly(n, {(0,) * n: c})

    @staticmethod
    def var(n: int, i: int, one) -> "Poly":
        """The monomial x_i, with the given multiplicative unit."""
        e = [0] * n
        e[i] = 1
        return Poly(n, {tuple(e): one})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coeff(self, expo: tuple):
        return self.terms.get(expo)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}"
                            for i, k in enumerate(e) if k)
            c = self.terms[e]
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.n, out)

    def __neg__(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.n)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly(self.n, out)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly.zero(self.n)
        return Poly(self.n, {e: co * c for e, co in self.terms.items()})

    def map_coeffs(self, fn: Callable) -> "Poly":
        return Poly(self.n, {e: fn(c) for e, c in self.terms.items()})

    # -- calculus -----------------------------------------------------------

    def dx(self, i: int) -> "Poly":
        """Partial derivative with respect to x_i."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return Poly(self.n, out)

    def eval(self, vals: Iterable):
        """Evaluate at a point; the value type follows the inputs."""
        vals = list(vals)
        total = None
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v = v * vals[i]
            total = v if total is None else total + v
        return 0 if total is None else total

    def subst(self, polys: list["Poly"]) -> "Poly":
        """Substitute x_i -> polys[i]; all replacement polys share an arity."""
        m = polys[0].n if polys else self.n
        out = Poly.zero(m)
        pow_cache: dict[tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                got = polys[i] if k == 1 else power(i, k - 1) * polys[i]
                pow_cache[key] = got
            return got

        for e, c in self.terms.items():
            term = Poly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def shift_all_by_one(self, one) -> "Poly":
        """Substitute x_i -> x_i + 1 for every variable."""
        shifted = [Poly(self.n, {(0,) * self.n: one}) + Poly.var(self.n, i, one)
                   for i in range(self.n)]
        return self.subst(shifted)

    def div_linear_diff(self, i: int, j: int) -> "Poly":
        """Exact division by (x_i - x_j); raises if the division leaves a remainder.

        Uses long division with a term order in which x_i is dominant, so the
        divisor's leading monomial is x_i.
        """
        def key(e):
            return (e[i], e)

        rem = dict(self.terms)
        quo: dict = {}
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            if e[i] == 0:
                raise ArithmeticError("polynomial not divisible by (x_i - x_j)")
            q = list(e)
            q[i] -= 1
            qe = tuple(q)
            quo[qe] = quo.get(qe, c * 0) + c
            # subtract c * x^qe * (x_i - x_j)
            del rem[e]
            r = list(qe)
            r[j] += 1
            re = tuple(r)
            s = rem.get(re, c * 0) + c
            if s:
                rem[re] = s
            elif re in rem:
                del rem[re]
        return Poly(self.n, quo)
