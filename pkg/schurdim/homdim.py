"""Filtration dimensions, Ext degrees and block dimensions

For a regular dominant weight lambda = w . lambda_0 with lambda_0 in the
fundamental alcove, the Weyl filtration dimension of nabla(lambda)
equals the Coxeter length l(w), which in turn equals the number d(lambda)
of hyperplanes separating lambda from the fundamental alcove. All
invariants in this module are derived from d.

Only regular weights are accepted by the exact formulas; for singular
weights the values are unknown and :func:`wfd_nabla_upper_bound` offers
the chain-length bound instead. In quantum mode the statements that
rely on the Ext(L, nabla) result are carried over with a caveat flag
and a :class:`schurdim.excpt.QuantumCaveatWarning`.
"""
import operator
import warnings
from dataclasses import dataclass
from typing import Optional

from .alcoves import d_closed_form, is_regular, linked
from .excpt import (NotDominantError, NotLinkedError, NotUpBelowError,
                    QuantumCaveatWarning, SingularWeightError)
from .lattice import Weight, as_weight, check_context_weight, is_dominant
from .uporder import chain_length, saturated_set, up_leq

#: module families that can be labelled
FAMILIES = ("nabla", "delta", "simple", "tilting", "symmetric_power",
            "exterior_power")

#: status values of a :class:`DimReport`
STATUSES = ("exact", "upper_bound", "caveat_quantum")

#: column order of the block dimension table
BLOCK_CSV_HEADER = ("mu", "d_mu", "inj_L", "proj_L", "proj_nabla",
                    "inj_delta", "inj_nabla", "proj_delta", "status")

_WEIGHT_FAMILIES = ("nabla", "delta", "simple", "tilting")


@dataclass(frozen=True)
class ModuleLabel:
    """Module family together with its highest weight (or degree)"""
    family: str
    weight: Optional[Weight] = None
    degree: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("`family` must be one of {}, got '{}'!".format(
                FAMILIES, self.family))
        if self.family in _WEIGHT_FAMILIES:
            if self.weight is None:
                raise ValueError("Family '{}' needs a weight!".format(
                    self.family))
            object.__setattr__(self, "weight", as_weight(self.weight))
            if not is_dominant(self.weight):
                raise NotDominantError("{}({}) needs a dominant weight.".format(
                    self.family, self.weight))
        elif self.degree is None or self.degree < 0:
            raise ValueError("Family '{}' needs a degree >= 0!".format(
                self.family))

    def __str__(self):
        if self.family in _WEIGHT_FAMILIES:
            return "{}{}".format(self.family, self.weight)
        return "{}({})".format(self.family, self.degree)

    def to_dict(self):
        if self.family in _WEIGHT_FAMILIES:
            return {"family": self.family, "weight": list(self.weight.coords)}
        return {"family": self.family, "degree": self.degree}

    @classmethod
    def from_dict(cls, data):
        if "weight" in data:
            return cls(family=data["family"],
                       weight=Weight(tuple(data["weight"])))
        return cls(family=data["family"], degree=data["degree"])


@dataclass(frozen=True)
class ExtDegree:
    """Top non-vanishing Ext degree and its multiplicity

    Attributes
    ----------
    degree: int
        Degree i of the top non-vanishing Ext group
    multiplicity: int
        Dimension of Ext^i
    vanishing_above: int
        Ext vanishes in all degrees above this value
    caveat: bool
        Set if the statement is only expected (quantum mode)
    """
    degree: int
    multiplicity: int
    vanishing_above: int
    caveat: bool = False

    def __post_init__(self):
        if min(self.degree, self.multiplicity, self.vanishing_above) < 0:
            raise ValueError("Ext data must be non-negative: {}".format(self))
        if self.multiplicity >= 1 and self.degree > self.vanishing_above:
            raise ValueError(
                "Non-zero Ext in degree {} above the vanishing bound "
                "{}!".format(self.degree, self.vanishing_above))

    def to_dict(self):
        return {"degree": self.degree,
                "multiplicity": self.multiplicity,
                "vanishing_above": self.vanishing_above,
                "caveat": self.caveat}


@dataclass(frozen=True)
class BlockDimRow:
    """Injective and projective dimensions for one weight of a block

    The first four dimensions are all d(mu) + d(lambda), the last
    two d(lambda) - d(mu). Rows of singular weights have
    `in_scope=False` and no values.
    """
    mu: Weight
    d_mu: Optional[int]
    inj_L: Optional[int]
    proj_L: Optional[int]
    proj_nabla: Optional[int]
    inj_delta: Optional[int]
    inj_nabla: Optional[int]
    proj_delta: Optional[int]
    in_scope: bool = True
    caveat: bool = False

    @property
    def status(self):
        if not self.in_scope:
            return "out_of_scope"
        return "caveat_quantum" if self.caveat else "exact"

    def to_dict(self):
        data = {"mu": list(self.mu.coords), "status": self.status}
        for key in BLOCK_CSV_HEADER[1:-1]:
            data[key] = getattr(self, key)
        return data

    def csv_row(self):
        values = [str(self.mu)]
        for key in BLOCK_CSV_HEADER[1:-1]:
            value = getattr(self, key)
            values.append("" if value is None else str(value))
        values.append(self.status)
        return values


@dataclass(frozen=True)
class DimReport:
    """Homological invariant of a labelled module"""
    label: ModuleLabel
    invariant: str
    value: Optional[int]
    status: str = "exact"

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError("`status` must be one of {}, got '{}'!".format(
                STATUSES, self.status))

    def to_dict(self):
        return {"label": self.label.to_dict(),
                "invariant": self.invariant,
                "value": self.value,
                "status": self.status}

    @classmethod
    def from_dict(cls, data):
        return cls(label=ModuleLabel.from_dict(data["label"]),
                   invariant=data["invariant"],
                   value=data["value"],
                   status=data["status"])


@dataclass(frozen=True)
class CategoryODims:
    """Dimensions in the principal block of category O"""
    gfd_verma: int
    gfd_simple: int
    proj_verma: int
    proj_simple_upper: int
    glob_O: int

    def to_dict(self):
        return {"gfd_verma": self.gfd_verma,
                "gfd_simple": self.gfd_simple,
                "proj_verma": self.proj_verma,
                "proj_simple_upper": self.proj_simple_upper,
                "glob_O": self.glob_O}


def _require_dominant(lam, ctx):
    lam = check_context_weight(lam, ctx)
    if not is_dominant(lam):
        raise NotDominantError("{} is not dominant.".format(lam))
    return lam


def _require_regular(lam, ctx):
    ctx.require_alcove_weights()
    lam = _require_dominant(lam, ctx)
    if not is_regular(lam, ctx):
        raise SingularWeightError(
            "{} lies on a hyperplane for {}={}; regular weights only."
            .format(lam, ctx.symbol, ctx.c))
    return lam


def _require_pair(lam, mu, ctx):
    lam = _require_regular(lam, ctx)
    mu = _require_regular(mu, ctx)
    if not linked(lam, mu, ctx):
        raise NotLinkedError("{} and {} are not linked for {}={}.".format(
            lam, mu, ctx.symbol, ctx.c))
    return lam, mu


def _warn_quantum(ctx, what):
    if ctx.quantum:
        warnings.warn("{} relies on the Ext(L, nabla) result, which is "
                      "only expected to hold in the quantum case.".format(what),
                      QuantumCaveatWarning)


def wfd_nabla(lam, ctx):
    """Weyl filtration dimension of nabla(lam)

    Parameters
    ----------
    lam: Weight
        Regular dominant weight
    ctx: schurdim.lattice.Context
        Context with c >= n

    Returns
    -------
    wfd: int
        d(lam); this also equals gfd(Delta(lam))
    """
    return d_closed_form(_require_regular(lam, ctx), ctx)


def gfd_delta(lam, ctx):
    """Good filtration dimension of Delta(lam), equal to wfd(nabla(lam))"""
    return wfd_nabla(lam, ctx)


def gfd_nabla(lam, ctx):
    """nabla(lam) has a good filtration, hence dimension 0"""
    _require_dominant(lam, ctx)
    return 0


def wfd_delta(lam, ctx):
    """Delta(lam) has a Weyl filtration, hence dimension 0"""
    _require_dominant(lam, ctx)
    return 0


def wfd_simple(lam, ctx):
    """Weyl filtration dimension of L(lam), which is d(lam)"""
    return d_closed_form(_require_regular(lam, ctx), ctx)


def gfd_simple(lam, ctx):
    """Good filtration dimension of L(lam), equal to wfd(L(lam))"""
    return wfd_simple(lam, ctx)


#: (wfd, gfd) evaluators per module family
family_dict = {"delta": (wfd_delta, gfd_delta),
               "nabla": (wfd_nabla, gfd_nabla),
               "simple": (wfd_simple, gfd_simple),
               }

#: module families with dimension formulas
available = sorted(list(family_dict.keys()))


def ext_vanishing_threshold(wfd_N, gfd_M):
    """Degree above which Ext^i(N, M) vanishes: wfd(N) + gfd(M)"""
    wfd_N = operator.index(wfd_N)
    gfd_M = operator.index(gfd_M)
    if wfd_N < 0 or gfd_M < 0:
        raise ValueError("Filtration dimensions must be non-negative!")
    return wfd_N + gfd_M


def glob_upper_bound(wfd_A, gfd_A):
    """Upper bound wfd(A) + gfd(A) for the global dimension of A"""
    return ext_vanishing_threshold(wfd_A, gfd_A)


def top_ext_nabla_delta(lam, mu, ctx):
    """Top non-vanishing Ext^i(nabla(lam), Delta(mu))

    Parameters
    ----------
    lam, mu: Weight
        Regular dominant linked weights
    ctx: schurdim.lattice.Context
        Context with c >= n

    Returns
    -------
    ext: ExtDegree
        Degree d(lam) + d(mu) with multiplicity 1
    """
    lam, mu = _require_pair(lam, mu, ctx)
    degree = d_closed_form(lam, ctx) + d_closed_form(mu, ctx)
    return ExtDegree(degree=degree,
                     multiplicity=1,
                     vanishing_above=ext_vanishing_threshold(
                         wfd_nabla(lam, ctx), gfd_delta(mu, ctx)))


def top_ext_simple_simple(lam, mu, ctx):
    """Top non-vanishing Ext^i(L(lam), L(mu)), degree d(lam) + d(mu)"""
    lam, mu = _require_pair(lam, mu, ctx)
    degree = d_closed_form(lam, ctx) + d_closed_form(mu, ctx)
    return ExtDegree(degree=degree,
                     multiplicity=1,
                     vanishing_above=ext_vanishing_threshold(
                         wfd_simple(lam, ctx), gfd_simple(mu, ctx)))


def _require_below(lam, mu, ctx):
    lam, mu = _require_pair(lam, mu, ctx)
    if not up_leq(mu, lam, ctx):
        raise NotUpBelowError("{} is not up-arrow-below {}.".format(mu, lam))
    return lam, mu


def ext_nabla_nabla(lam, mu, ctx):
    """Ext^i(nabla(lam), nabla(mu)) in degree d(lam) - d(mu)

    `mu` must lie up-arrow-below `lam`. Ext vanishes above
    wfd(nabla(lam)) + gfd(nabla(mu)) = d(lam).
    """
    lam, mu = _require_below(lam, mu, ctx)
    d_lam = d_closed_form(lam, ctx)
    return ExtDegree(degree=d_lam - d_closed_form(mu, ctx),
                     multiplicity=1,
                     vanishing_above=ext_vanishing_threshold(
                         wfd_nabla(lam, ctx), gfd_nabla(mu, ctx)))


def ext_simple_nabla(lam, mu, ctx):
    """Top non-vanishing Ext^i(L(lam), nabla(mu)), degree d(lam) - d(mu)

    Ext vanishes in all degrees above d(lam) - d(mu). In quantum mode
    the result carries a caveat.
    """
    lam, mu = _require_below(lam, mu, ctx)
    _warn_quantum(ctx, "Ext(L({}), nabla({}))".format(lam, mu))
    degree = d_closed_form(lam, ctx) - d_closed_form(mu, ctx)
    return ExtDegree(degree=degree,
                     multiplicity=1,
                     vanishing_above=degree,
                     caveat=ctx.quantum)


def block_dimension_table(lam, ctx):
    """Injective/projective dimensions in the block algebra S(Pi(lam))

    Parameters
    ----------
    lam: Weight
        Regular dominant weight (top of the saturated set)
    ctx: schurdim.lattice.Context
        Context with c >= n

    Returns
    -------
    rows: list of BlockDimRow
        One row per member mu of Pi(lam), ascending by d(mu)
    """
    lam = _require_regular(lam, ctx)
    _warn_quantum(ctx, "The block dimension table of {}".format(lam))
    d_lam = d_closed_form(lam, ctx)
    rows = []
    for mu in saturated_set(lam, ctx):
        if not is_regular(mu, ctx):
            rows.append(BlockDimRow(mu, None, None, None, None, None, None,
                                    None, in_scope=False))
            continue
        d_mu = d_closed_form(mu, ctx)
        upper = d_mu + d_lam
        lower = d_lam - d_mu
        rows.append(BlockDimRow(mu=mu,
                                d_mu=d_mu,
                                inj_L=upper,
                                proj_L=upper,
                                proj_nabla=upper,
                                inj_delta=upper,
                                inj_nabla=lower,
                                proj_delta=lower,
                                caveat=ctx.quantum))
    return rows


def block_global_dimension(lam, ctx):
    """Global dimension 2 d(lam) of the block algebra S(Pi(lam))"""
    return 2 * wfd_nabla(lam, ctx)


def wfd_nabla_upper_bound(lam, ctx):
    """Chain-length bound for wfd(nabla(lam)), valid for singular weights

    Returns the length of a maximal up-arrow chain of dominant
    weights ending in `lam`.
    """
    ctx.require_alcove_weights()
    lam = _require_dominant(lam, ctx)
    return chain_length(lam, ctx, domain="Xplus")


def num_positive_roots(rank, root_type="A"):
    """Number of positive roots of the root system A_rank"""
    if root_type != "A":
        raise ValueError("Only type A is supported, got '{}'!".format(
            root_type))
    if rank < 1:
        raise ValueError("`rank` must be at least 1, got {}!".format(rank))
    return rank * (rank + 1) // 2


def category_O_dims(num_pos_roots, length_w):
    """Dimensions for the principal block of category O

    Parameters
    ----------
    num_pos_roots: int
        Number N = l(w_0) of positive roots
    length_w: int
        Length l(w) of the Weyl group element w, 0 <= l(w) <= N

    Returns
    -------
    dims: CategoryODims
        gfd(M(w.lam)) = gfd(L(w.lam)) = N - l(w), proj(M(w.lam)) = l(w),
        proj(L(w.lam)) <= 2N - l(w) and glob(O) = 2N
    """
    num_pos_roots = operator.index(num_pos_roots)
    length_w = operator.index(length_w)
    if num_pos_roots < 0 or not 0 <= length_w <= num_pos_roots:
        raise ValueError("Need 0 <= l(w) <= N, got l(w)={}, N={}!".format(
            length_w, num_pos_roots))
    return CategoryODims(gfd_verma=num_pos_roots - length_w,
                         gfd_simple=num_pos_roots - length_w,
                         proj_verma=length_w,
                         proj_simple_upper=2 * num_pos_roots - length_w,
                         glob_O=2 * num_pos_roots)
