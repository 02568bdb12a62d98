"""Weights, partitions and positive roots of GL_n

The weight lattice X of GL_n is identified with Z^n via the basis
e_1, ..., e_n. A positive root e_i - e_j (i < j) is stored as the
index pair (i, j) with 1-based indices.

The half-sum of positive roots is not integral on X. All formulas
below only depend on coordinate differences, so the integral
surrogate rho = (n-1, n-2, ..., 0) is used instead; with it

    <lambda + rho, (e_i - e_j)^v> = lambda_i - lambda_j + j - i.
"""
import functools
import operator
import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from .excpt import CharacteristicTooSmallError, WeightOverflowError

#: computation modes; in "quantum" mode `c` is the order l of the
#: root of unity, otherwise it is the characteristic p
MODES = ("classical", "quantum")

#: largest absolute value allowed for a weight coordinate
COORD_LIMIT = 2**31 - 1


def _checked(value):
    value = operator.index(value)
    if abs(value) > COORD_LIMIT:
        raise WeightOverflowError(
            "Weight coordinate {} exceeds +/-{}.".format(value, COORD_LIMIT))
    return value


@dataclass(frozen=True)
class Context:
    """Parameters shared by every computation

    Parameters
    ----------
    n: int
        Rank of GL_n (number of diagonal entries), n >= 2
    c: int
        Characteristic p (classical mode) or order l of the root
        of unity (quantum mode), c >= 2
    mode: str
        One of :const:`MODES`
    """
    n: int
    c: int
    mode: str = "classical"

    def __post_init__(self):
        if operator.index(self.n) < 2:
            raise ValueError("`n` must be at least 2, got {}!".format(self.n))
        if operator.index(self.c) < 2:
            raise ValueError("`c` must be at least 2, got {}!".format(self.c))
        if self.mode not in MODES:
            raise ValueError("`mode` must be one of {}, got '{}'!".format(
                MODES, self.mode))

    @property
    def coxeter_number(self):
        """Coxeter number h = n of the root system A_{n-1}"""
        return self.n

    @property
    def quantum(self):
        return self.mode == "quantum"

    @property
    def symbol(self):
        """Name of `c` in the current mode ("p" or "l")"""
        return "l" if self.quantum else "p"

    def require_alcove_weights(self):
        """Raise if the fundamental alcove contains no weights (c < n)"""
        if self.c < self.n:
            raise CharacteristicTooSmallError(
                "This computation requires {}={} >= n={}.".format(
                    self.symbol, self.c, self.n))


@dataclass(frozen=True, eq=False)
class Weight:
    """Integral weight of GL_n given by its coordinates"""
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords",
                           tuple(_checked(x) for x in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.coords)

    def __str__(self):
        return "({})".format(",".join(str(x) for x in self.coords))

    def __add__(self, other):
        other = as_weight(other)
        _check_lengths(self, other)
        return Weight(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        other = as_weight(other)
        _check_lengths(self, other)
        return Weight(tuple(a - b for a, b in zip(self, other)))

    @classmethod
    def parse(cls, text):
        """Parse "7,0", "(7,0)" or "7 0" """
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        items = [it for it in re.split(r"[,\s]+", body.strip()) if it]
        if not items:
            raise ValueError("Cannot parse weight from '{}'!".format(text))
        try:
            coords = tuple(int(it) for it in items)
        except ValueError:
            raise ValueError("Cannot parse weight from '{}'!".format(text))
        return cls(coords)

    @property
    def degree(self):
        """Sum of coordinates"""
        return sum(self.coords)

    def as_array(self):
        return np.array(self.coords, dtype=np.int64)

    def sort_key(self):
        """Key that sorts in reverse-lexicographic order"""
        return tuple(-x for x in self.coords)


@dataclass(frozen=True, eq=False)
class Partition(Weight):
    """Dominant weight with non-negative coordinates

    The degree r of the partition is the sum of its parts, i.e.
    the partition belongs to Lambda(n, r).
    """

    def __post_init__(self):
        super(Partition, self).__post_init__()
        if not is_dominant(self) or (self.coords and self.coords[-1] < 0):
            raise ValueError(
                "{} is not a partition (weakly decreasing, "
                "non-negative).".format(Weight(self.coords)))

    @classmethod
    def from_weight(cls, weight):
        return cls(as_weight(weight).coords)


@dataclass(frozen=True)
class PosRoot:
    """Positive root e_i - e_j with 1 <= i < j"""
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(
                "Invalid positive root indices ({}, {})!".format(self.i,
                                                                 self.j))

    def __str__(self):
        return "({},{})".format(self.i, self.j)

    @property
    def is_simple(self):
        return self.j == self.i + 1

    def check(self, n):
        """Raise `ValueError` if the root does not exist for GL_n"""
        if self.j > n:
            raise ValueError(
                "Root index {} out of range for n={}!".format(self.j, n))


def _check_lengths(a, b):
    if len(a) != len(b):
        raise ValueError("Length mismatch: {} vs {}!".format(a, b))


def as_weight(obj):
    """Convert a tuple, list, string or Weight to a :class:`Weight`"""
    if isinstance(obj, Weight):
        return obj
    elif isinstance(obj, str):
        return Weight.parse(obj)
    return Weight(tuple(obj))


def rho(n):
    """Integral surrogate (n-1, n-2, ..., 0) for the half-sum rho"""
    return Weight(tuple(range(n - 1, -1, -1)))


def positive_roots(n):
    """All positive roots of GL_n in the order (1,2), (1,3), ..., (n-1,n)"""
    return [PosRoot(int(i) + 1, int(j) + 1)
            for i, j in zip(*np.triu_indices(n, k=1))]


def simple_roots(n):
    return [PosRoot(i, i + 1) for i in range(1, n)]


def highest_root(n):
    return PosRoot(1, n)


def pairing_rho(lam, alpha):
    """Pairing of lambda + rho with the coroot of `alpha`

    Parameters
    ----------
    lam: Weight or tuple of ints
        Weight lambda
    alpha: PosRoot
        Positive root e_i - e_j

    Returns
    -------
    value: int
        lambda_i - lambda_j + j - i
    """
    lam = as_weight(lam)
    alpha.check(len(lam))
    return lam[alpha.i - 1] - lam[alpha.j - 1] + alpha.j - alpha.i


def root_pairings(lam):
    """Vector of :func:`pairing_rho` over :func:`positive_roots`

    Returns
    -------
    pairings: 1d np.ndarray of int64
        Entry k belongs to the k-th root of :func:`positive_roots`
    """
    arr = as_weight(lam).as_array()
    shifted = arr - np.arange(1, arr.size + 1)
    iu, ju = np.triu_indices(arr.size, k=1)
    return shifted[iu] - shifted[ju]


def pairing_table(lam):
    """Upper-triangular table of all pairings with positive coroots

    Entry (i, j) with i < j (0-based) is the pairing with
    e_{i+1} - e_{j+1}; all other entries are zero.
    """
    arr = as_weight(lam).as_array()
    shifted = arr - np.arange(1, arr.size + 1)
    return np.triu(np.subtract.outer(shifted, shifted), k=1)


def is_dominant(lam):
    """Whether the coordinates of `lam` are weakly decreasing"""
    arr = as_weight(lam).as_array()
    return bool(np.all(np.diff(arr) <= 0))


def dominance_leq(mu, lam):
    """Dominance order: mu <= lam iff lam - mu is in NS

    For type A this holds iff every partial sum of lam - mu is
    non-negative and the total sum vanishes.
    """
    mu = as_weight(mu)
    lam = as_weight(lam)
    _check_lengths(mu, lam)
    partial = np.cumsum(lam.as_array() - mu.as_array())
    return bool(np.all(partial >= 0) and partial[-1] == 0)


def partitions(n, r):
    """Enumerate Lambda(n, r) in reverse-lexicographic order

    Parameters
    ----------
    n: int
        Maximal number of parts (length of the yielded weights), n >= 1
    r: int
        Degree, r >= 0

    Yields
    ------
    partition: Partition
        Partition of `r` padded with zeros to length `n`
    """
    if n < 1 or r < 0:
        raise ValueError("Need n >= 1 and r >= 0, got n={}, r={}!".format(
            n, r))
    for parts in _partitions(r, n, r):
        yield Partition(parts)


def _partitions(r, k, maxpart):
    if k == 0:
        if r == 0:
            yield ()
        return
    # the first part is at least the average of the remaining degree
    lowest = -(-r // k)
    for first in range(min(r, maxpart), lowest - 1, -1):
        for rest in _partitions(r - first, k - 1, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def count_partitions(n, r):
    """Number of partitions of `r` into at most `n` parts

    Uses the recurrence p(r, <=n) = p(r, <=n-1) + p(r-n, <=n).
    """
    if r == 0:
        return 1
    if r < 0 or n == 0:
        return 0
    return count_partitions(n - 1, r) + count_partitions(n, r - n)


def check_context_weight(lam, ctx):
    """Convert `lam` to a Weight and make sure it has length `ctx.n`"""
    lam = as_weight(lam)
    if len(lam) != ctx.n:
        raise ValueError("Weight {} has length {}, expected n={}!".format(
            lam, len(lam), ctx.n))
    return lam


def weights_in_box(n, radius) -> Iterator[Weight]:
    """All weights with coordinates in [-radius, radius]"""
    axis = np.arange(-radius, radius + 1)
    grid = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1)
    for row in grid.reshape(-1, n):
        yield Weight(tuple(int(x) for x in row))


def dominant_weights(n, max_part) -> List[Weight]:
    """Dominant weights with last coordinate 0 and first <= `max_part`"""
    out = []
    for top in range(max_part + 1):
        for rest in _bounded_decreasing(n - 1, top):
            out.append(Weight((top,) + rest))
    return out


def _bounded_decreasing(k, maxpart):
    # weakly decreasing k-tuples in [0, maxpart] ending in 0
    if k == 0:
        yield ()
        return
    if k == 1:
        yield (0,)
        return
    for first in range(maxpart, -1, -1):
        for rest in _bounded_decreasing(k - 1, first):
            yield (first,) + rest
