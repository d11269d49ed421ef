"""Simple Euclidean Jordan algebras and their symmetric cones.

Three concrete realizations are supported:

* ``sym-real``  : real symmetric r x r matrices, product (AB + BA)/2,
  dimension n = r(r+1)/2, degree d = 1;
* ``herm-complex`` : complex Hermitian r x r matrices, same product,
  n = r^2, d = 2;
* ``spin-factor``  : R x R^(n-1) with (s,u)(t,v) = (st + <u,v>, sv + tu),
  rank 2, d = n - 2.

Coordinates always refer to a fixed orthonormal basis for the trace form
<x, y> = tr(x y).  For the matrix kinds this basis consists of the diagonal
matrix units together with (E_kl + E_lk)/sqrt2 (and i(E_kl - E_lk)/sqrt2 in
the Hermitian case); the sqrt2 normalizations are carried exactly by the
Scalar field, so every structure constant is exact.  Complexified elements
are simply coordinate vectors with nonzero imaginary Scalar parts.

All exact pipelines rely only on polynomial invariants (principal minors,
trace powers); numeric eigenvalues exist solely in the floating profile.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .partitions import pad, trim
from .scalars import HALF_SQRT2, IMAG, ONE, SQRT2, ZERO, Scalar, sc

KINDS = ("sym-real", "herm-complex", "spin-factor")


class AlgebraError(ValueError):
    """Unsupported kind or inconsistent structural parameters."""


@dataclass(frozen=True)
class Element:
    """A point of V (or its complexification) in orthonormal coordinates."""

    alg: "Algebra"
    coords: tuple

    def __add__(self, other: "Element") -> "Element":
        self.alg.check_same(other.alg)
        return Element(self.alg, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self.alg.check_same(other.alg)
        return Element(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.alg, tuple(-a for a in self.coords))

    def __mul__(self, other: "Element") -> "Element":
        return self.alg.mul(self, other)

    def scale(self, c) -> "Element":
        c = sc(c) if not isinstance(c, Scalar) else c
        return Element(self.alg, tuple(a * c for a in self.coords))

    def inner(self, other: "Element") -> Scalar:
        """Trace form <x, y> = tr(x y); bilinear, no conjugation."""
        self.alg.check_same(other.alg)
        return linalg.vec_dot(self.coords, other.coords)

    def tr(self) -> Scalar:
        return linalg.vec_dot(self.coords, self.alg.unit.coords)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.alg is other.alg
                and all(not (a - b) for a, b in zip(self.coords, other.coords)))

    __hash__ = None


class Algebra:
    """Descriptor plus cached structure tables for one concrete algebra."""

    def __init__(self, kind: str, rank: int, dim: int):
        self.kind = kind
        self.rank = rank
        self.dim = dim
        if rank == 1:
            self.degree = Fraction(0)
        elif kind == "spin-factor":
            self.degree = Fraction(dim - 2)
        elif kind == "sym-real":
            self.degree = Fraction(1)
        else:
            self.degree = Fraction(2)
        self.genus = Fraction(2 * dim, rank)
        self._basis_mats = None  # matrix kinds only
        self._build_tables()
        self._p_polarized: dict[tuple[int, int], tuple] = {}

    # -- construction of structure data --------------------------------

    def _build_tables(self):
        n = self.dim
        if self.kind == "spin-factor":
            tab = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
            for j in range(n):
                tab[0][j][j] = HALF_SQRT2  # f0 f_j = f_j / sqrt2
                tab[j][0][j] = HALF_SQRT2
            for j in range(1, n):
                tab[j][j] = [ZERO] * n
                tab[j][j][0] = HALF_SQRT2  # f_j f_j = f0 / sqrt2
            tab[0][0] = [ZERO] * n
            tab[0][0][0] = HALF_SQRT2
            self._mul_table = tuple(tuple(tuple(row) for row in plane) for plane in tab)
            e = [ZERO] * n
            e[0] = SQRT2
            self.unit = Element(self, tuple(e))
            c1 = [ZERO] * n
            c1[0] = Scalar(0, Fraction(1, 2))
            c1[1] = Scalar(0, Fraction(1, 2))
            c2 = list(c1)
            c2[1] = -c2[1]
            self.frame = (Element(self, tuple(c1)), Element(self, tuple(c2)))
            return

        r = self.rank
        mats = []
        if self.kind == "sym-real":
            for k in range(r):
                mats.append(_unit_matrix(r, k, k, ONE))
            for k in range(r):
                for l in range(k + 1, r):
                    m = _mat_zero(r)
                    m[k][l] = HALF_SQRT2
                    m[l][k] = HALF_SQRT2
                    mats.append(_freeze(m))
        elif self.kind == "herm-complex":
            for k in range(r):
                mats.append(_unit_matrix(r, k, k, ONE))
            for k in range(r):
                for l in range(k + 1, r):
                    m = _mat_zero(r)
                    m[k][l] = HALF_SQRT2
                    m[l][k] = HALF_SQRT2
                    mats.append(_freeze(m))
                    m = _mat_zero(r)
                    m[k][l] = IMAG * HALF_SQRT2
                    m[l][k] = -IMAG * HALF_SQRT2
                    mats.append(_freeze(m))
        else:
            raise AlgebraError(f"unsupported kind {self.kind!r}")
        assert len(mats) == self.dim
        self._basis_mats = tuple(mats)

        def coords_of(m):
            return tuple(linalg.mat_trace(linalg.mat_mul(m, b)) for b in mats)

        tab = []
        for i in range(self.dim):
            plane = []
            for j in range(self.dim):
                prod = linalg.mat_scale(
                    linalg.mat_add(linalg.mat_mul(mats[i], mats[j]),
                                   linalg.mat_mul(mats[j], mats[i])),
                    Fraction(1, 2))
                plane.append(coords_of(prod))
            tab.append(tuple(plane))
        self._mul_table = tuple(tab)
        self.unit = Element(self, coords_of(linalg.identity(r, ONE, ZERO)))
        self.frame = tuple(Element(self, coords_of(_unit_matrix(r, k, k, ONE)))
                           for k in range(r))

    # -- basics ----------------------------------------------------------

    def check_same(self, other: "Algebra"):
        if self is not other:
            raise AlgebraError("algebra mismatch between operands")

    def element(self, coords) -> Element:
        cs = tuple(sc(c) if not isinstance(c, Scalar) else c for c in coords)
        if len(cs) != self.dim:
            raise AlgebraError(f"expected {self.dim} coordinates, got {len(cs)}")
        return Element(self, cs)

    def zero(self) -> Element:
        return Element(self, (ZERO,) * self.dim)

    def basis_element(self, i: int) -> Element:
        coords = [ZERO] * self.dim
        coords[i] = ONE
        return Element(self, tuple(coords))

    def from_eigenvalues(self, lams) -> Element:
        """sum lam_k c_k over the canonical frame (spin factor: two values)."""
        lams = list(lams)
        if len(lams) != self.rank:
            raise AlgebraError("need one eigenvalue per frame idempotent")
        out = self.zero()
        for lam, c in zip(lams, self.frame):
            out = out + c.scale(lam)
        return out

    def mul(self, x: Element, y: Element) -> Element:
        self.check_same(x.alg)
        self.check_same(y.alg)
        tab = self._mul_table
        n = self.dim
        out = [ZERO] * n
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            plane = tab[i]
            for j, yj in enumerate(y.coords):
                if not yj:
                    continue
                f = xi * yj
                for k, t in enumerate(plane[j]):
                    if t:
                        out[k] = out[k] + f * t
        return Element(self, tuple(out))

    def lmul_matrix(self, x: Element) -> tuple:
        """Matrix of L(x): v -> x v in the orthonormal basis."""
        n = self.dim
        tab = self._mul_table
        rows = [[ZERO] * n for _ in range(n)]
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            for j in range(n):
                col = tab[i][j]
                for k, t in enumerate(col):
                    if t:
                        rows[k][j] = rows[k][j] + xi * t
        return tuple(tuple(row) for row in rows)

    # -- quadratic representation ----------------------------------------

    def quad_rep(self, x: Element) -> tuple:
        """P(x) = 2 L(x)^2 - L(x^2) as an n x n matrix."""
        lx = self.lmul_matrix(x)
        lx2 = self.lmul_matrix(self.mul(x, x))
        return linalg.mat_sub(linalg.mat_scale(linalg.mat_mul(lx, lx), 2), lx2)

    def polarized(self, x: Element, y: Element) -> tuple:
        """P(x, y) = L(x)L(y) + L(y)L(x) - L(xy)."""
        lx, ly = self.lmul_matrix(x), self.lmul_matrix(y)
        return linalg.mat_sub(
            linalg.mat_add(linalg.mat_mul(lx, ly), linalg.mat_mul(ly, lx)),
            self.lmul_matrix(self.mul(x, y)))

    def polarized_basis(self, i: int, j: int) -> tuple:
        """Cached P(e_i, e_j) for basis units."""
        key = (i, j) if i <= j else (j, i)
        got = self._p_polarized.get(key)
        if got is None:
            got = self.polarized(self.basis_element(key[0]), self.basis_element(key[1]))
            self._p_polarized[key] = got
        return got

    # -- determinant machinery ---------------------------------------------

    def realize(self, x: Element):
        """Concrete realization: Scalar matrix for matrix kinds, (s, u) for spin."""
        if self.kind == "spin-factor":
            s = x.coords[0] * HALF_SQRT2
            u = tuple(c * HALF_SQRT2 for c in x.coords[1:])
            return (s, u)
        m = _mat_zero(self.rank)
        for c, b in zip(x.coords, self._basis_mats):
            if c:
                for a in range(self.rank):
                    for bcol in range(self.rank):
                        if b[a][bcol]:
                            m[a][bcol] = m[a][bcol] + c * b[a][bcol]
        return _freeze(m)

    def from_matrix(self, m) -> Element:
        """Inverse of realize for the matrix kinds."""
        coords = tuple(linalg.mat_trace(linalg.mat_mul(m, b)) for b in self._basis_mats)
        return Element(self, coords)

    def principal_minor(self, x: Element, k: int) -> Scalar:
        """Delta_k(x): determinant of the projection onto the k-th Peirce block."""
        if not 1 <= k <= self.rank:
            raise AlgebraError(f"minor index {k} out of range")
        if self.kind == "spin-factor":
            s, u = self.realize(x)
            if k == 1:
                return s + u[0]
            return s * s - linalg.vec_dot(u, u)
        m = self.realize(x)
        sub = tuple(tuple(m[a][b] for b in range(k)) for a in range(k))
        return linalg.det(sub)

    def det(self, x: Element) -> Scalar:
        return self.principal_minor(x, self.rank)

    def power_function(self, x: Element, m) -> Scalar:
        """Delta_m(x) = prod Delta_k(x)^(m_k - m_(k+1)) for a partition m."""
        p = pad(trim(m), self.rank)
        out = ONE
        for k in range(1, self.rank + 1):
            expo = p[k - 1] - (p[k] if k < self.rank else 0)
            if expo:
                mk = self.principal_minor(x, k)
                if expo < 0 and not mk:
                    raise ZeroDivisionError(f"principal minor {k} vanishes")
                out = out * mk ** expo
        return out

    def inverse(self, x: Element) -> Element:
        if self.kind == "spin-factor":
            d = self.det(x)
            if not d:
                raise ZeroDivisionError("singular element")
            coords = [x.coords[0] / d] + [-c / d for c in x.coords[1:]]
            return Element(self, tuple(coords))
        m = self.realize(x)
        try:
            minv = linalg.invert(m)
        except ArithmeticError as exc:
            raise ZeroDivisionError("singular element") from exc
        return self.from_matrix(minv)

    def in_cone(self, x: Element) -> bool:
        """Exact membership test for the open cone: all principal minors positive."""
        if not x.is_real():
            raise AlgebraError("cone membership is defined for real elements")
        return all(self.principal_minor(x, k).sign() > 0 for k in range(1, self.rank + 1))

    # -- floating profile ----------------------------------------------------

    def realize_numeric(self, x: Element):
        if self.kind == "spin-factor":
            s, u = self.realize(x)
            return complex(s), np.array([complex(c) for c in u])
        m = self.realize(x)
        return np.array([[complex(v) for v in row] for row in m])

    def eigenvalues(self, x: Element) -> tuple:
        """Descending eigenvalues, floating point; real elements only."""
        if not x.is_real():
            raise AlgebraError("spectrum is defined for real elements")
        if self.kind == "spin-factor":
            s, u = self.realize(x)
            sv = float(s)
            norm = float(np.sqrt(sum(float(c) ** 2 for c in u)))
            return (sv + norm, sv - norm)
        m = self.realize_numeric(x)
        if self.kind == "sym-real":
            m = m.real
        vals = np.linalg.eigvalsh(m)
        return tuple(sorted((float(v) for v in vals), reverse=True))

    def spectral(self, x: Element):
        """(descending eigenvalues, exact trace, exact determinant)."""
        return self.eigenvalues(x), x.tr(), self.det(x)

    def random_element(self, rng: random.Random, denom: int = 4, span: int = 8) -> Element:
        coords = [Fraction(rng.randint(-span, span), rng.randint(1, denom))
                  for _ in range(self.dim)]
        return self.element(coords)

    def random_cone_point(self, seed: int, scale=1) -> Element:
        """Deterministic interior point: scale * (y^2 + e), eigenvalues >= scale."""
        rng = random.Random(seed)
        y = self.random_element(rng)
        x = self.mul(y, y) + self.unit
        return x.scale(Fraction(scale) if not isinstance(scale, (Fraction, int)) else scale)

    # -- misc -----------------------------------------------------------------

    def trace_of_lmul(self, x: Element) -> Scalar:
        return linalg.mat_trace(self.lmul_matrix(x))

    def __repr__(self) -> str:
        return f"Algebra({self.kind}, r={self.rank}, n={self.dim}, d={self.degree})"


def _mat_zero(r: int):
    return [[ZERO] * r for _ in range(r)]


def _freeze(m) -> tuple:
    return tuple(tuple(row) for row in m)


def _unit_matrix(r: int, a: int, b: int, val: Scalar) -> tuple:
    m = _mat_zero(r)
    m[a][b] = val
    return _freeze(m)


@lru_cache(maxsize=None)
def make_algebra(kind: str, rank: int | None = None, dim: int | None = None) -> Algebra:
    """Construct (and cache) an algebra from its structural parameters.

    sym-real and herm-complex take a rank; spin-factor takes the ambient
    dimension n >= 3 (its rank is always 2).
    """
    if kind not in KINDS:
        raise AlgebraError(f"unsupported kind {kind!r}; choose from {KINDS}")
    if kind == "spin-factor":
        if dim is None or dim < 3:
            raise AlgebraError("spin-factor requires dim n >= 3")
        if rank not in (None, 2):
            raise AlgebraError("spin-factor rank is always 2")
        return Algebra(kind, 2, dim)
    if rank is None or rank < 1:
        raise AlgebraError("matrix kinds require rank >= 1")
    n = rank * (rank + 1) // 2 if kind == "sym-real" else rank * rank
    if dim is not None and dim != n:
        raise AlgebraError(f"inconsistent dim {dim} for {kind} rank {rank} (expected {n})")
    if rank > 3:
        raise AlgebraError("ranks above 3 are outside the verification envelope")
    return Algebra(kind, rank, n)


# module-level forms of the operations, matching the documented interface

def jordan_mul(a: Element, b: Element) -> Element:
    return a.alg.mul(a, b)


def quad_rep(x: Element) -> tuple:
    return x.alg.quad_rep(x)


def polarized(x: Element, y: Element) -> tuple:
    return x.alg.polarized(x, y)


def spectral(x: Element):
    return x.alg.spectral(x)


def principal_minor(x: Element, k: int) -> Scalar:
    return x.alg.principal_minor(x, k)


def power_function(x: Element, m) -> Scalar:
    return x.alg.power_function(x, m)


def inverse(x: Element) -> Element:
    return x.alg.inverse(x)


def in_cone(x: Element) -> bool:
    return x.alg.in_cone(x)


def random_cone_point(alg: Algebra, seed: int, scale=1) -> Element:
    return alg.random_cone_point(seed, scale)
