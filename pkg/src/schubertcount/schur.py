"""Vandermonde alternants, complex and real Schur polynomials, and Schur
coefficient extraction.

Coefficient extraction is exact: the torus integral behind a Schur
coefficient equals one coefficient of f multiplied by the plain (complex
case) or squared-variable (real case) Vandermonde alternant, because the
product is antisymmetric and its coefficients at permuted exponents agree up
to sign.  A floating trapezoidal quadrature of the same integral is kept as
an independent oracle: on a uniform torus grid the rule is exact for
trigonometric polynomials once the grid passes the bandwidth threshold, so
the two routes must agree to rounding.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .combinatorics import InvalidLength, NotInRectangle, Partition, classify_partition
from . import kernels
from .polynomial import SparsePoly, exact_div

Polylike = Union["RootPolynomial", SparsePoly]


class DegenerateAlternant(ValueError):
    """Alternant exponents are not strictly decreasing; the sum vanishes."""


class NotEvenOrOdd(ValueError):
    """2k-partition is neither even nor odd; no real Schur class exists."""


class NotEulerPontryagin(ValueError):
    """Polynomial is outside the Euler-Pontryagin ring."""


def delta(k: int) -> Tuple[int, ...]:
    """The staircase (k-1, k-2, ..., 1, 0)."""
    return tuple(range(k - 1, -1, -1))


def _perm_data(k: int) -> list[Tuple[Tuple[int, ...], int]]:
    out = []
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inv % 2 else 1))
    return out


def vandermonde(gamma: Sequence[int], k: int) -> SparsePoly:
    """Alternating sum over S_k of sign(tau) * prod_i z_{tau(i)}^{gamma_i}."""
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != k:
        raise InvalidLength(f"exponent sequence length {len(gamma)} != k={k}")
    if any(g < 0 for g in gamma):
        raise DegenerateAlternant(f"negative exponent in {gamma}")
    if any(gamma[i] <= gamma[i + 1] for i in range(k - 1)):
        raise DegenerateAlternant(f"{gamma} is not strictly decreasing")
    terms = {}
    for perm, sign in _perm_data(k):
        e = [0] * k
        for i in range(k):
            e[perm[i]] = gamma[i]
        terms[tuple(e)] = sign
    return SparsePoly._raw(k, terms)


def _multinomial_orbit_size(sorted_e: Tuple[int, ...]) -> int:
    size = factorial(len(sorted_e))
    run = 1
    for i in range(1, len(sorted_e)):
        if sorted_e[i] == sorted_e[i - 1]:
            run += 1
        else:
            size //= factorial(run)
            run = 1
    return size // factorial(run)


def is_symmetric(poly: SparsePoly) -> bool:
    """Exact symmetry test via orbit grouping (no k! expansion per term)."""
    orbits: dict = {}
    for e, c in poly.terms.items():
        key = tuple(sorted(e, reverse=True))
        orbits.setdefault(key, []).append(c)
    for key, coeffs in orbits.items():
        if len(coeffs) != _multinomial_orbit_size(key):
            return False
        first = coeffs[0]
        if any(c != first for c in coeffs[1:]):
            return False
    return True


def in_euler_pontryagin(poly: SparsePoly) -> bool:
    """Membership test: symmetric, and each monomial all-even or all-odd."""
    for e in poly.terms:
        parity = e[0] % 2 if e else 0
        if any(x % 2 != parity for x in e):
            return False
    return is_symmetric(poly)


@dataclass(frozen=True)
class RootPolynomial:
    """A cohomology class represented by its root polynomial.

    Complex regime: symmetric polynomial in the Chern roots z_i.  Real
    regime: member of the Euler-Pontryagin ring (symmetric, every monomial
    with all exponents even or all odd).
    """

    poly: SparsePoly
    regime: str

    def __post_init__(self) -> None:
        if self.regime == "complex":
            if not is_symmetric(self.poly):
                raise ValueError("complex root polynomial must be symmetric")
        elif self.regime == "real":
            if not in_euler_pontryagin(self.poly):
                raise NotEulerPontryagin(
                    "real root polynomial must lie in the Euler-Pontryagin ring"
                )
        else:
            raise ValueError(f"unknown regime {self.regime!r}")

    @property
    def variables(self) -> int:
        return self.poly.nvars

    def degree(self) -> int:
        return self.poly.degree()


@dataclass(frozen=True)
class SchurCoefficient:
    """One coefficient of a Schur-basis expansion.

    sign_certain is False exactly in the real regime, where orientation
    conventions pin the value only up to a global sign.
    """

    partition: Partition
    value: int
    sign_certain: bool


def _as_complex_root(f: Polylike) -> RootPolynomial:
    if isinstance(f, RootPolynomial):
        if f.regime != "complex":
            raise ValueError("expected a complex-regime root polynomial")
        return f
    return RootPolynomial(f, "complex")


def _as_real_root(f: Polylike) -> RootPolynomial:
    if isinstance(f, RootPolynomial):
        if f.regime != "real":
            raise NotEulerPontryagin("expected a real-regime root polynomial")
        return f
    return RootPolynomial(f, "real")


def schur_polynomial(alpha: Partition, k: int) -> RootPolynomial:
    """Schur polynomial as the bialternant quotient V_{alpha+delta} / V_delta."""
    if len(alpha) != k:
        raise InvalidLength(f"partition length {len(alpha)} != k={k}")
    d = delta(k)
    num = vandermonde(tuple(a + b for a, b in zip(alpha, d)), k)
    den = vandermonde(d, k)
    return RootPolynomial(exact_div(num, den), "complex")


def _real_profile(alpha: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Half-length profile beta of an even/odd 2k-partition alpha = beta(2)."""
    parity = classify_partition(alpha)
    if not (parity.is_even or parity.is_odd):
        raise NotEvenOrOdd(f"{alpha.parts} is neither an even nor an odd partition")
    k = len(alpha) // 2
    return k, alpha.parts[0::2]


def real_schur_polynomial(alpha: Partition, k: int) -> RootPolynomial:
    """Real Schur polynomial of an even or odd 2k-partition, in k variables.

    Computed as the squared-variable bialternant quotient
    V_{beta+2delta} / V_{2delta} with beta the half-length profile of alpha.
    """
    kk, beta = _real_profile(alpha)
    if kk != k:
        raise InvalidLength(f"partition length {len(alpha)} != 2k with k={k}")
    d2 = tuple(2 * x for x in delta(k))
    num = vandermonde(tuple(a + b for a, b in zip(beta, d2)), k)
    den = vandermonde(d2, k)
    return RootPolynomial(exact_div(num, den), "real")


def _alternant_coefficient(f: SparsePoly, target: Tuple[int, ...], van: SparsePoly) -> int:
    """Coefficient of x^target in f * van, without expanding the product."""
    total = 0
    coeff = f.terms.get
    for e, c in van.terms.items():
        shifted = tuple(t - x for t, x in zip(target, e))
        if any(x < 0 for x in shifted):
            continue
        total += c * coeff(shifted, 0)
    return total


def schur_coefficient(f: Polylike, alpha: Partition) -> SchurCoefficient:
    """Exact Schur coefficient: the coefficient of z^{alpha+delta} in f*V_delta."""
    root = _as_complex_root(f)
    k = root.variables
    if len(alpha) != k:
        raise InvalidLength(f"partition length {len(alpha)} != {k} variables")
    d = delta(k)
    target = tuple(a + b for a, b in zip(alpha, d))
    value = _alternant_coefficient(root.poly, target, vandermonde(d, k))
    return SchurCoefficient(alpha, value, sign_certain=True)


def real_schur_coefficient(f: Polylike, alpha: Partition) -> SchurCoefficient:
    """Real Schur coefficient of an even or odd 2k-partition, up to sign.

    Equals the coefficient of x^{beta+2delta} in f*V_{2delta}, with beta the
    half-length profile of alpha.  sign_certain is False: orientation
    conventions leave the global sign open, and consumers use |value|.
    """
    root = _as_real_root(f)
    k, beta = _real_profile(alpha)
    if k != root.variables:
        raise InvalidLength(
            f"2k-partition of length {len(alpha)} against {root.variables} variables"
        )
    d2 = tuple(2 * x for x in delta(k))
    target = tuple(a + b for a, b in zip(beta, d2))
    value = _alternant_coefficient(root.poly, target, vandermonde(d2, k))
    return SchurCoefficient(alpha, value, sign_certain=False)


def duality_pairing(alpha: Partition, beta: Partition, m: int, k: int) -> int:
    """Pairing of two Schubert classes against the k x m fundamental class.

    Equals 1 exactly when alpha and beta are m-complementary, else 0.
    """
    if len(alpha) != k or len(beta) != k:
        raise InvalidLength("both partitions must have length k")
    if (k and alpha[0] > m) or (k and beta[0] > m):
        raise NotInRectangle(f"partitions must fit in the {k}x{m} rectangle")
    product = schur_polynomial(alpha, k).poly * schur_polynomial(beta, k).poly
    return schur_coefficient(product, Partition.constant(m, k)).value


# -- numeric quadrature oracle -------------------------------------------------


def quadrature_threshold(f: RootPolynomial, alpha: Partition) -> int:
    """Smallest grid at which the trapezoidal rule is provably exact.

    The integrand is a Laurent polynomial whose per-axis frequencies lie in
    [-gb_1, E + ga_1 - gb_k] with E the largest per-axis exponent of f and
    ga, gb the two alternant exponent sequences; once the grid exceeds both
    endpoints in absolute value, only the zero frequency survives the
    periodic sum.
    """
    ga, gb, _ = _quadrature_exponents(f, alpha)
    emax = max(f.poly.max_exponents(), default=0)
    return max(gb[0], emax + ga[0] - gb[-1]) + 1


def _quadrature_exponents(f: RootPolynomial, alpha: Partition):
    k = f.variables
    if f.regime == "complex":
        if len(alpha) != k:
            raise InvalidLength(f"partition length {len(alpha)} != {k} variables")
        ga = delta(k)
        gb = tuple(a + b for a, b in zip(alpha, ga))
        spower = 1
    else:
        kk, beta = _real_profile(alpha)
        if kk != k:
            raise InvalidLength(
                f"2k-partition of length {len(alpha)} against {k} variables"
            )
        ga = tuple(2 * x for x in delta(k))
        gb = tuple(a + b for a, b in zip(beta, ga))
        spower = 2
    return ga, gb, spower


def _fold_to_grid(arr: np.ndarray, grid: int) -> np.ndarray:
    """Reduce every axis length to `grid` by summing entries with equal
    exponent residues (z^e on the grid only sees e mod grid)."""
    for axis in range(arr.ndim):
        n = arr.shape[axis]
        if n == grid:
            continue
        arr = np.moveaxis(arr, axis, 0)
        blocks = -(-n // grid)
        if blocks * grid != n:
            pad = [(0, blocks * grid - n)] + [(0, 0)] * (arr.ndim - 1)
            arr = np.pad(arr, pad)
        arr = arr.reshape((blocks, grid) + arr.shape[1:]).sum(axis=0)
        arr = np.moveaxis(arr, 0, axis)
    return arr


def numeric_schur_coefficient(
    f: RootPolynomial,
    alpha: Partition,
    grid: Optional[int] = None,
    threads: int = 1,
) -> complex:
    """Trapezoidal torus quadrature of the Schur-coefficient integral.

    Runs grid^k nodes; the rule is exact for the polynomial integrand (up to
    floating rounding) whenever grid reaches `quadrature_threshold`.  The
    default grid is 2*deg(f)+1, the generic exactness threshold for
    trigonometric polynomials of that degree.  Evaluation of f on the grid
    goes through an FFT per slab of the first axis; the per-slab combines
    run in the kernel backend and may be spread over `threads` workers, with
    partial sums always reduced in slab order so the result is deterministic.
    """
    if not isinstance(f, RootPolynomial):
        raise TypeError("numeric_schur_coefficient expects a RootPolynomial")
    ga, gb, spower = _quadrature_exponents(f, alpha)
    k = f.variables
    sharp = quadrature_threshold(f, alpha)
    if grid is None:
        grid = max(2 * f.poly.degree() + 1, sharp)
    if grid < sharp:
        raise ValueError(f"grid {grid} below the exactness threshold {sharp}")
    g = int(grid)

    maxe = f.poly.max_exponents()
    cube = np.zeros(tuple(x + 1 for x in maxe), np.complex128)
    for e, c in f.poly.terms.items():
        cube[e] = float(c)

    perm_data = _perm_data(k)
    perms = np.array([p for p, _ in perm_data], np.int64).reshape(len(perm_data), k)
    signs = np.array([s for _, s in perm_data], np.float64)
    gammas = np.array(gb, np.int64)
    zgrid = np.exp(2j * np.pi * np.arange(g) / g)

    if k == 1:
        vals = np.fft.ifft(_fold_to_grid(cube, g)) * g
        total = complex(np.sum(vals * np.conj(zgrid ** int(gb[0]))))
        return total / g

    n0 = cube.shape[0]
    e0 = np.arange(n0)

    def slab(t0: int) -> complex:
        z0 = zgrid[t0]
        reduced = np.tensordot(z0**e0, cube, axes=(0, 0))
        folded = _fold_to_grid(reduced, g)
        fvals = np.fft.ifftn(folded) * g ** (k - 1)
        return kernels.quadrature_slab(
            np.ascontiguousarray(fvals.ravel(), np.complex128),
            complex(z0),
            zgrid.astype(np.complex128),
            gammas,
            perms,
            signs,
            spower,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(slab, range(g)))
    else:
        partials = [slab(t0) for t0 in range(g)]
    total = sum(partials, start=0j)
    return total / (factorial(k) * g**k)
