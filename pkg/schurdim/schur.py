"""Weyl filtration and global dimensions of (quantum) Schur algebras

The Weyl filtration dimension of S(n, r) is the largest d(lambda) over
lambda in Lambda(n, r), and its global dimension is twice that value
whenever both are known. Closed forms exist for c > n and for n = c
with c dividing r; all other parameters only receive the upper bound
(n - 1) * floor(r / c).

Classical (c = p) and quantum (c = l) Schur algebras give identical
numbers.
"""
import numbers
import operator
import sys
import warnings
from dataclasses import dataclass
from typing import Optional

from .alcoves import d_closed_form, is_regular
from .excpt import UpperBoundWarning
from .lattice import MODES, Partition, partitions

#: status values of a :class:`SchurDimResult`
STATUSES = ("exact", "upper_bound")

#: column order of the CSV output of :func:`schur_sweep`
CSV_HEADER = ("n", "r", "c", "mode", "wfd", "glob", "status", "witness")


@dataclass(frozen=True)
class SchurDimResult:
    """Filtration and global dimension of S(n, r)

    Attributes
    ----------
    n, r, c: int
        Rank, degree and characteristic (or root-of-unity order)
    mode: str
        "classical" or "quantum"
    wfd: int
        Weyl filtration dimension (or its upper bound)
    glob: int
        Global dimension (or its upper bound)
    status: str
        "exact" or "upper_bound"
    witness: Partition or None
        Regular weight in Lambda(n, r) with d = wfd (exact results only)
    """
    n: int
    r: int
    c: int
    mode: str
    wfd: int
    glob: int
    status: str
    witness: Optional[Partition] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError("`mode` must be one of {}, got '{}'!".format(
                MODES, self.mode))
        if self.status not in STATUSES:
            raise ValueError("`status` must be one of {}, got '{}'!".format(
                STATUSES, self.status))
        if min(self.wfd, self.glob) < 0:
            raise ValueError("Dimensions must be non-negative!")
        if (self.witness is not None) != (self.status == "exact"):
            raise ValueError("A witness is given iff the result is exact!")
        if self.status == "exact" and self.glob != 2 * self.wfd:
            raise ValueError("Exact results satisfy glob = 2 wfd, got "
                             "glob={}, wfd={}!".format(self.glob, self.wfd))
        if self.witness is not None:
            witness = Partition.from_weight(self.witness)
            object.__setattr__(self, "witness", witness)
            if len(witness) != self.n or witness.degree != self.r:
                raise ValueError("Witness {} not in Lambda({}, {})!".format(
                    witness, self.n, self.r))

    @property
    def exact(self):
        return self.status == "exact"

    def to_dict(self):
        return {"n": self.n,
                "r": self.r,
                "c": self.c,
                "mode": self.mode,
                "wfd": self.wfd,
                "glob": self.glob,
                "status": self.status,
                "witness": (None if self.witness is None
                            else list(self.witness.coords)),
                }

    @classmethod
    def from_dict(cls, data):
        kwargs = dict(data)
        if kwargs.get("witness") is not None:
            kwargs["witness"] = Partition(tuple(kwargs["witness"]))
        return cls(**kwargs)

    def csv_row(self):
        witness = "" if self.witness is None else str(self.witness)
        return [str(self.n), str(self.r), str(self.c), self.mode,
                str(self.wfd), str(self.glob), self.status, witness]


def _check_degree(r):
    r = operator.index(r)
    if r < 0:
        raise ValueError("Degree `r` must be non-negative, got {}!".format(r))
    return r


def covered(ctx, r):
    """Whether the Weyl filtration dimension of S(n, r) is known exactly"""
    r = _check_degree(r)
    return ctx.c > ctx.n or (ctx.c == ctx.n and r % ctx.c == 0)


def witness_weight(ctx, r):
    """Regular weight of Lambda(n, r) attaining the maximal d

    Parameters
    ----------
    ctx: schurdim.lattice.Context
        Context with c > n, or with c = n and c dividing r
    r: int
        Degree

    Returns
    -------
    witness: Partition
        For c > n write r = r1*c + r0 and r0 = b*n + a with
        0 <= a < n; the witness is (r1*c + 1, 1^(a-1), 0^(n-a)) + b*(1^n)
        if a >= 1 and (r1*c, 0^(n-1)) + b*(1^n) otherwise. For c = n
        it is (r, 0^(n-1)).
    """
    r = _check_degree(r)
    n, c = ctx.n, ctx.c
    if not covered(ctx, r):
        raise ValueError("No witness for n={}, r={}, {}={}: requires "
                         "c > n, or c = n dividing r!".format(
                             n, r, ctx.symbol, c))
    if c == n:
        return Partition((r,) + (0,) * (n - 1))
    r1, r0 = divmod(r, c)
    b, a = divmod(r0, n)
    if a >= 1:
        coords = [r1 * c + 1] + [1] * (a - 1) + [0] * (n - a)
    else:
        coords = [r1 * c] + [0] * (n - 1)
    return Partition(tuple(x + b for x in coords))


def floor_lambda_over_c(lam, ctx):
    """Sum of floor(lambda_i / c) over the parts of a partition"""
    lam = Partition.from_weight(lam)
    return sum(part // ctx.c for part in lam)


def symmetric_power_wfd_bound(degree_or_partition, ctx):
    """Upper bound for the Weyl filtration dimension of S^lambda E

    Parameters
    ----------
    degree_or_partition: int or Partition
        A degree r (for S^r E) or a partition lambda (for the tensor
        product S^lambda E of symmetric powers)
    ctx: schurdim.lattice.Context
        Context providing n and c

    Returns
    -------
    bound: int
        (n - 1) * floor(r / c) for a degree, and the sum of these
        bounds over the parts for a partition
    """
    if isinstance(degree_or_partition, numbers.Integral):
        r = _check_degree(int(degree_or_partition))
        return (ctx.n - 1) * (r // ctx.c)
    return (ctx.n - 1) * floor_lambda_over_c(degree_or_partition, ctx)


def schur_upper_bound(ctx, r):
    """Largest symmetric-power bound over Lambda(n, r)

    Equals (n - 1) * floor(r / c), attained by the one-row partition.
    """
    r = _check_degree(r)
    return max(symmetric_power_wfd_bound(lam, ctx)
               for lam in partitions(ctx.n, r))


def regular_partitions(ctx, r):
    """Stream the regular members of Lambda(n, r)"""
    r = _check_degree(r)
    for lam in partitions(ctx.n, r):
        if is_regular(lam, ctx):
            yield lam


def max_d_over_regular(ctx, r):
    """Exhaustive maximum of d over the regular members of Lambda(n, r)

    Returns
    -------
    value: int or None
        Maximal d, None if Lambda(n, r) has no regular member
    argmax: list of Partition
        All regular partitions attaining `value`, in reverse-lex order
    """
    ctx.require_alcove_weights()
    value = None
    argmax = []
    for lam in regular_partitions(ctx, r):
        d = d_closed_form(lam, ctx)
        if value is None or d > value:
            value = d
            argmax = [lam]
        elif d == value:
            argmax.append(lam)
    return value, argmax


def wfd_schur(ctx, r, strict=False):
    """Weyl filtration and global dimension of S(n, r)

    Parameters
    ----------
    ctx: schurdim.lattice.Context
        Context providing n, c and the mode
    r: int
        Degree
    strict: bool
        Issue an :class:`schurdim.excpt.UpperBoundWarning` if only
        an upper bound is available

    Returns
    -------
    result: SchurDimResult
        Exact values for c > n ((n - 1) * floor(r / c)) and for
        c = n dividing r ((c - 1) * r / c); otherwise the upper bound
    """
    r = _check_degree(r)
    n, c = ctx.n, ctx.c
    if c > n:
        wfd = (n - 1) * (r // c)
    elif c == n and r % c == 0:
        wfd = (c - 1) * (r // c)
    else:
        if strict:
            warnings.warn("Only an upper bound is known for S({}, {}) with "
                          "{}={}.".format(n, r, ctx.symbol, c),
                          UpperBoundWarning)
        bound = schur_upper_bound(ctx, r)
        return SchurDimResult(n=n, r=r, c=c, mode=ctx.mode, wfd=bound,
                              glob=2 * bound, status="upper_bound")
    witness = witness_weight(ctx, r)
    assert is_regular(witness, ctx) and d_closed_form(witness, ctx) == wfd, \
        "witness {} does not attain {}".format(witness, wfd)
    return SchurDimResult(n=n, r=r, c=c, mode=ctx.mode, wfd=wfd,
                          glob=2 * wfd, status="exact", witness=witness)


def schur_sweep(ctx, rmax, verbose=0):
    """Yield :func:`wfd_schur` for r = 0, 1, ..., rmax"""
    rmax = _check_degree(rmax)
    for r in range(rmax + 1):
        result = wfd_schur(ctx, r)
        if verbose >= 2:
            print("S({}, {}): wfd={} ({})".format(ctx.n, r, result.wfd,
                                                 result.status),
                  file=sys.stderr)
        yield result
    if verbose:
        print("Swept S({}, r) for r <= {} at {}={}".format(
            ctx.n, rmax, ctx.symbol, ctx.c), file=sys.stderr)
