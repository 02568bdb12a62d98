"""Characters of GL_n-modules as symmetric polynomials

A symmetric polynomial in n variables is stored in the monomial basis:
the coefficient of m_mu for every partition mu with at most n parts
(padded with zeros to length n). The character of nabla(lambda) is the
Schur polynomial s_lambda, the characters of S^r E and of the exterior
power Lambda^j E are h_r and e_j.

All arithmetic is exact (python integers).
"""
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict

import sympy
from sympy.utilities.iterables import multiset_permutations

from .excpt import SchurBasisConversionError
from .lattice import Partition, as_weight, partitions, root_pairings


def _as_key(parts, n):
    parts = tuple(int(x) for x in parts)
    stripped = tuple(x for x in parts if x != 0)
    if len(stripped) > n:
        raise ValueError("{} has more than n={} parts!".format(parts, n))
    key = stripped + (0,) * (n - len(stripped))
    if any(x < 0 for x in key) or any(a < b for a, b in zip(key, key[1:])):
        raise ValueError("{} is not a partition!".format(parts))
    return key


def _orbit(key):
    """All distinct permutations of an exponent vector"""
    return [tuple(p) for p in multiset_permutations(list(key))]


def _orbit_size(key):
    size = math.factorial(len(key))
    for mult in Counter(key).values():
        size //= math.factorial(mult)
    return size


class SymFunc(object):
    def __init__(self, n, coeffs=None):
        """Symmetric polynomial in the monomial basis

        Parameters
        ----------
        n: int
            Number of variables
        coeffs: dict
            Maps partitions (tuples, at most `n` non-zero parts)
            to integer coefficients of the monomial symmetric
            functions; zero coefficients are dropped
        """
        if n < 1:
            raise ValueError("`n` must be at least 1, got {}!".format(n))
        self.n = n
        self.coeffs = {}
        for parts, value in (coeffs or {}).items():
            value = int(value)
            if value:
                key = _as_key(parts, n)
                self.coeffs[key] = self.coeffs.get(key, 0) + value
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    def __repr__(self):
        return "SymFunc({}, {})".format(self.n, self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for key in self.keys():
            value = self.coeffs[key]
            name = "m({})".format(",".join(str(x) for x in key))
            terms.append(name if value == 1 else "{}*{}".format(value, name))
        return " + ".join(terms)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __getitem__(self, parts):
        return self.coeffs.get(_as_key(parts, self.n), 0)

    def __contains__(self, parts):
        return _as_key(parts, self.n) in self.coeffs

    def _check_other(self, other):
        if not isinstance(other, SymFunc) or other.n != self.n:
            raise ValueError("Variable count mismatch: {} vs {}!".format(
                self.n, getattr(other, "n", other)))

    def __add__(self, other):
        self._check_other(other)
        coeffs = Counter(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] += value
        return SymFunc(self.n, coeffs)

    def __neg__(self):
        return SymFunc(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc(self.n, {k: other * v
                                    for k, v in self.coeffs.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def keys(self):
        """Partitions with non-zero coefficient, lexicographically descending"""
        return sorted(self.coeffs, reverse=True)

    def leading(self):
        """Lexicographically largest partition and its coefficient"""
        key = max(self.coeffs)
        return key, self.coeffs[key]

    def monomials(self):
        """Expansion into (exponent vector, coefficient) pairs"""
        for key, value in self.coeffs.items():
            for alpha in _orbit(key):
                yield alpha, value

    def to_dict(self):
        return {",".join(str(x) for x in key): self.coeffs[key]
                for key in self.keys()}


def multiply(f, g):
    """Exact product of two symmetric polynomials

    The coefficient of m_nu in f*g is collected from all pairs of
    monomials whose exponents add up to the sorted vector nu.
    """
    f._check_other(g)
    n = f.n
    expanded = list(g.monomials())
    product = Counter()
    for alpha, a in f.monomials():
        for beta, b in expanded:
            gamma = tuple(x + y for x, y in zip(alpha, beta))
            if all(gamma[i] >= gamma[i + 1] for i in range(n - 1)):
                product[gamma] += a * b
    return SymFunc(n, product)


def _ssyt_contents(shape, n):
    """Contents of all semistandard tableaux of `shape` with entries <= n"""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}
    content = [0] * n

    def fill(k):
        if k == len(cells):
            yield tuple(content)
            return
        i, j = cells[k]
        low = 1
        if j > 0:
            low = filling[(i, j - 1)]
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        # cells below in the same column need strictly larger entries
        column = sum(1 for row in shape if row > j)
        high = n - (column - 1 - i)
        for value in range(low, high + 1):
            filling[(i, j)] = value
            content[value - 1] += 1
            yield from fill(k + 1)
            content[value - 1] -= 1
        filling.pop((i, j), None)

    yield from fill(0)


def schur_polynomial(lam, n):
    """Schur polynomial s_lambda in `n` variables

    The coefficient of m_mu is the Kostka number, i.e. the number of
    semistandard Young tableaux of shape lambda and content mu.

    Parameters
    ----------
    lam: Partition or tuple of ints
        Partition with at most `n` non-zero parts
    n: int
        Number of variables

    Returns
    -------
    s: SymFunc
        Character of nabla(lambda) for GL_n
    """
    key = _as_key(as_weight(lam).coords, n)
    shape = tuple(x for x in key if x)
    kostka = Counter()
    for content in _ssyt_contents(shape, n):
        if all(content[i] >= content[i + 1] for i in range(n - 1)):
            kostka[content] += 1
    return SymFunc(n, kostka)


def complete_h(r, n):
    """Complete homogeneous symmetric polynomial h_r (character of S^r E)"""
    if r < 0:
        raise ValueError("Degree must be non-negative, got {}!".format(r))
    return SymFunc(n, {lam.coords: 1 for lam in partitions(n, r)})


def elementary_e(r, n):
    """Elementary symmetric polynomial e_r (character of Lambda^r E)"""
    if not 0 <= r <= n:
        raise ValueError("Need 0 <= r <= n={}, got r={}!".format(n, r))
    return SymFunc(n, {(1,) * r + (0,) * (n - r): 1})


def jacobi_trudi(lam, n):
    """Schur polynomial from the determinant det(h_{lambda_i - i + j})

    The determinant is expanded symbolically in the complete
    homogeneous polynomials with sympy; every resulting monomial
    in the h's is then evaluated with :func:`multiply`.
    """
    key = _as_key(as_weight(lam).coords, n)
    shape = [x for x in key if x]
    k = len(shape)
    if k == 0:
        return SymFunc.one(n)
    hsym = sympy.symbols("h1:{}".format(shape[0] + k + 1))

    def entry(i, j):
        idx = shape[i] - i + j
        if idx < 0:
            return sympy.Integer(0)
        if idx == 0:
            return sympy.Integer(1)
        return hsym[idx - 1]

    det = sympy.Matrix(k, k, entry).det(method="berkowitz")
    poly = sympy.Poly(sympy.expand(det), *hsym)
    result = SymFunc(n)
    for exps, coeff in poly.terms():
        term = SymFunc.one(n) * int(coeff)
        for index, power in enumerate(exps):
            for _ in range(power):
                term = multiply(term, complete_h(index + 1, n))
        result = result + term
    return result


def to_schur_basis(f, n=None):
    """Expansion of a symmetric polynomial in Schur polynomials

    The lexicographically largest partition of the remainder is
    removed with the matching multiple of its Schur polynomial until
    nothing remains.

    Returns
    -------
    expansion: dict
        Maps :class:`schurdim.lattice.Partition` to its coefficient

    Raises
    ------
    SchurBasisConversionError
        If a leading term survives its own elimination step
    """
    if n is not None and n != f.n:
        raise ValueError("Variable count mismatch: {} vs {}!".format(f.n, n))
    remainder = f
    expansion = {}
    while remainder:
        key, coeff = remainder.leading()
        remainder = remainder - schur_polynomial(key, f.n) * coeff
        if key in remainder.coeffs:
            raise SchurBasisConversionError(
                "Leading term m{} survived the elimination.".format(key))
        expansion[Partition(key)] = coeff
    return expansion


def dimension(f):
    """Value of `f` at x = (1, ..., 1)"""
    return sum(value * _orbit_size(key) for key, value in f.coeffs.items())


def weyl_dimension(lam):
    """Dimension of nabla(lambda) by Weyl's dimension formula

    The product of <lambda + rho, alpha^v> over the positive roots
    divided by the product of <rho, alpha^v>.
    """
    lam = as_weight(lam)
    numer = math.prod(int(x) for x in root_pairings(lam))
    denom = math.prod(int(x) for x in root_pairings((0,) * len(lam)))
    return numer // denom


def dim_symmetric_power(r, n):
    """Dimension C(r + n - 1, n - 1) of S^r E"""
    return math.comb(r + n - 1, n - 1)


def dim_exterior_power(j, n):
    return math.comb(n, j)


@dataclass(frozen=True)
class PieriReport:
    """Character check of h_{mc-j} e_j = s_hook1 + s_hook2"""
    m: int
    j: int
    n: int
    c: int
    constituents: Dict
    ok: bool

    @property
    def lhs(self):
        return "h_{}*e_{}".format(self.m * self.c - self.j, self.j)

    @property
    def expected(self):
        return pieri_hooks(self.m, self.j, self.n, self.c)

    @property
    def message(self):
        if self.ok:
            return "character identity verified"
        return "character identity failed"

    def to_dict(self):
        return {"m": self.m,
                "j": self.j,
                "n": self.n,
                "c": self.c,
                "lhs": self.lhs,
                "constituents": [
                    {"weight": list(lam.coords), "multiplicity": mult}
                    for lam, mult in sorted(self.constituents.items(),
                                            key=lambda it: it[0].sort_key())],
                "expected": [list(lam.coords) for lam in self.expected],
                "ok": self.ok,
                "message": self.message,
                }

    @classmethod
    def from_dict(cls, data):
        constituents = {Partition(tuple(item["weight"])): item["multiplicity"]
                        for item in data["constituents"]}
        return cls(m=data["m"], j=data["j"], n=data["n"], c=data["c"],
                   constituents=constituents, ok=data["ok"])


def pieri_hooks(m, j, n, c):
    """The hooks (mc-j, 1^j, 0^(n-j-1)) and (mc-j+1, 1^(j-1), 0^(n-j))"""
    top = m * c - j
    return (Partition((top,) + (1,) * j + (0,) * (n - j - 1)),
            Partition((top + 1,) + (1,) * (j - 1) + (0,) * (n - j)))


def verify_pieri_ses(m, j, ctx):
    """Check the characters of the short exact sequence of hooks

    The sequence 0 -> nabla(hook1) -> S^{mc-j}E (x) Lambda^j E
    -> nabla(hook2) -> 0 requires h_{mc-j} e_j to decompose into
    exactly the two hook Schur polynomials, each with multiplicity 1.
    Only the character identity is verified.

    Parameters
    ----------
    m: int
        Multiple of c, m >= 1
    j: int
        Exterior degree, 1 <= j <= n - 1
    ctx: schurdim.lattice.Context
        Context providing n and c

    Returns
    -------
    report: PieriReport
    """
    n, c = ctx.n, ctx.c
    if not (1 <= j <= n - 1 and m >= 1 and m * c - j >= 1):
        raise ValueError("Need 1 <= j <= n-1, m >= 1 and mc - j >= 1, got "
                         "m={}, j={}, n={}, c={}!".format(m, j, n, c))
    product = multiply(complete_h(m * c - j, n), elementary_e(j, n))
    constituents = to_schur_basis(product, n)
    expected = {hook: 1 for hook in pieri_hooks(m, j, n, c)}
    return PieriReport(m=m, j=j, n=n, c=c, constituents=constituents,
                       ok=constituents == expected)
