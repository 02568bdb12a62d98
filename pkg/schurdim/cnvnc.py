from .excpt import SingularWeightError
from .homdim import DimReport, ModuleLabel, available, family_dict
from .homdim import wfd_nabla_upper_bound
from .lattice import check_context_weight
from .schur import symmetric_power_wfd_bound


def analyze(lam, ctx, family="nabla", allow_bound=False):
    """Determine the filtration dimensions of a module

    Parameters
    ----------
    lam: Weight, tuple of ints or int
        Highest weight of the module; the degree r for
        `family="symmetric_power"`
    ctx: schurdim.lattice.Context
        Characteristic (or root-of-unity order), rank and mode
    family: str
        The module family, one of "delta", "nabla", "simple" (see
        :data:`schurdim.homdim.available`) or "symmetric_power".
    allow_bound: bool
        If True, singular weights of the family "nabla" do not raise
        a :class:`schurdim.excpt.SingularWeightError`; the Weyl
        filtration dimension is then reported as the chain-length
        upper bound.

    Returns
    -------
    reports: list of schurdim.homdim.DimReport
        The Weyl and the good filtration dimension (in this order)

    Notes
    -----
    For symmetric powers S^r E only the upper bound
    (n - 1) * floor(r / c) of the Weyl filtration dimension is
    known; the good filtration dimension is 0.
    """
    if family == "symmetric_power":
        label = ModuleLabel(family=family, degree=int(lam))
        bound = symmetric_power_wfd_bound(int(lam), ctx)
        return [DimReport(label, "wfd", bound, status="upper_bound"),
                DimReport(label, "gfd", 0)]
    if family not in family_dict:
        raise ValueError("`family` must be one of {}, got '{}'!".format(
            available + ["symmetric_power"], family))
    lam = check_context_weight(lam, ctx)
    label = ModuleLabel(family=family, weight=lam)
    wfd_func, gfd_func = family_dict[family]
    try:
        wfd = DimReport(label, "wfd", wfd_func(lam, ctx))
    except SingularWeightError:
        if not (allow_bound and family == "nabla"):
            raise
        wfd = DimReport(label, "wfd", wfd_nabla_upper_bound(lam, ctx),
                        status="upper_bound")
        return [wfd, DimReport(label, "gfd", 0)]
    gfd = DimReport(label, "gfd", gfd_func(lam, ctx))
    return [wfd, gfd]
