import warnings

import numpy as np

from schurdim import alcoves, excpt, schur
from schurdim.lattice import Context, Partition, Weight


def test_wfd_schur_examples():
    res = schur.wfd_schur(Context(2, 3), 7)
    assert (res.wfd, res.glob, res.status) == (2, 4, "exact")
    assert res.witness == Weight((7, 0))
    res = schur.wfd_schur(Context(3, 3), 6)
    assert (res.wfd, res.glob, res.status) == (4, 8, "exact")
    assert res.witness == Weight((6, 0, 0))
    res = schur.wfd_schur(Context(3, 5), 2)
    assert (res.wfd, res.glob, res.status) == (0, 0, "exact")


def test_wfd_schur_upper_bound():
    res = schur.wfd_schur(Context(3, 3), 4)
    assert res.status == "upper_bound"
    assert res.wfd == 2
    assert res.witness is None
    res = schur.wfd_schur(Context(4, 3), 7)
    assert res.status == "upper_bound"
    assert res.wfd == 3 * 2
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        schur.wfd_schur(Context(3, 3), 4, strict=True)
    assert any(issubclass(w.category, excpt.UpperBoundWarning)
               for w in caught)


def test_witness_weight():
    assert schur.witness_weight(Context(2, 3), 7) == Weight((7, 0))
    assert schur.witness_weight(Context(3, 5), 5) == Weight((5, 0, 0))
    assert schur.witness_weight(Context(3, 3), 6) == Weight((6, 0, 0))
    # r0 = b*n + a with b = 1, a = 1
    assert schur.witness_weight(Context(3, 5), 4) == Weight((2, 1, 1))
    assert schur.witness_weight(Context(4, 5), 9) == Weight((6, 1, 1, 1))
    assert schur.witness_weight(Context(2, 5), 0) == Weight((0, 0))
    try:
        schur.witness_weight(Context(3, 3), 4)
    except ValueError:
        pass
    else:
        assert False, "witness outside the proven range"


def test_floor_lambda_over_c():
    ctx = Context(3, 3)
    assert schur.floor_lambda_over_c((3, 3, 3), ctx) == 3
    assert schur.floor_lambda_over_c((2, 1, 0), ctx) == 0
    assert schur.floor_lambda_over_c((7, 0), Context(2, 3)) == 2


def test_symmetric_power_bound():
    ctx = Context(2, 3)
    assert schur.symmetric_power_wfd_bound(7, ctx) == 2
    assert schur.symmetric_power_wfd_bound(Partition((3, 3)), ctx) == 2
    assert schur.symmetric_power_wfd_bound(2, ctx) == 0
    # numpy integers count as degrees, not as partitions
    assert schur.symmetric_power_wfd_bound(np.int64(7), ctx) == 2
    assert schur.symmetric_power_wfd_bound(np.arange(8)[-1], ctx) == 2
    for r in range(20):
        assert schur.schur_upper_bound(ctx, r) == r // 3


def test_max_d_over_regular():
    assert schur.max_d_over_regular(Context(2, 3), 7) == (2, [Weight((7, 0))])
    assert schur.max_d_over_regular(Context(2, 3), 2) == (0, [Weight((1, 1))])
    value, argmax = schur.max_d_over_regular(Context(3, 5), 5)
    assert value == 2
    assert Weight((5, 0, 0)) in argmax
    # (1,0) is the only partition of 1 and lies on a wall for c = n = 2
    assert schur.max_d_over_regular(Context(2, 2), 1) == (None, [])


def test_regular_partitions():
    parts = list(schur.regular_partitions(Context(2, 3), 7))
    assert parts == [Weight((7, 0)), Weight((5, 2)), Weight((4, 3))]


def test_schur_closed_form_grid():
    """closed form equals the exhaustive maximum for c > n"""
    for c in [5, 7]:
        for n in [2, 3, 4]:
            ctx = Context(n, c)
            for r in range(4 * c + 1):
                res = schur.wfd_schur(ctx, r)
                assert res.exact
                assert res.wfd == (n - 1) * (r // c)
                assert res.glob == 2 * res.wfd
                value, argmax = schur.max_d_over_regular(ctx, r)
                assert value == res.wfd, (n, r, c)
                assert alcoves.is_regular(res.witness, ctx)
                assert alcoves.d_closed_form(res.witness, ctx) == value
                assert res.witness in argmax


def test_schur_equal_rank_grid():
    for c in [2, 3, 5]:
        ctx = Context(c, c)
        for m in range(6):
            lam = (m * c,) + (0,) * (c - 1)
            assert alcoves.is_regular(lam, ctx)
            assert alcoves.d_closed_form(lam, ctx) == (c - 1) * m
            res = schur.wfd_schur(ctx, m * c)
            assert res.exact
            assert res.wfd == (c - 1) * m
            assert res.witness == Weight(lam)


def test_exact_below_bound():
    for n, c in [(2, 3), (2, 5), (3, 5), (3, 3)]:
        ctx = Context(n, c)
        for r in range(3 * c):
            res = schur.wfd_schur(ctx, r)
            assert res.wfd <= schur.symmetric_power_wfd_bound(r, ctx)


def test_sweep_n2():
    ctx = Context(2, 3)
    results = list(schur.schur_sweep(ctx, 20))
    assert [res.r for res in results] == list(range(21))
    assert [res.wfd for res in results] == [r // 3 for r in range(21)]
    assert all(res.exact for res in results)


def test_quantum_parity():
    for c in [5, 7]:
        for n in [2, 3, 4]:
            for r in range(4 * c + 1):
                classical = schur.wfd_schur(Context(n, c), r).to_dict()
                quantum = schur.wfd_schur(Context(n, c, "quantum"),
                                          r).to_dict()
                assert quantum.pop("mode") == "quantum"
                assert classical.pop("mode") == "classical"
                assert quantum == classical


def test_result_dict_and_csv():
    res = schur.wfd_schur(Context(2, 3), 7)
    assert schur.SchurDimResult.from_dict(res.to_dict()) == res
    assert res.csv_row() == ["2", "7", "3", "classical", "2", "4", "exact",
                             "(7,0)"]
    assert len(res.csv_row()) == len(schur.CSV_HEADER)
    bound = schur.wfd_schur(Context(3, 3), 4)
    assert schur.SchurDimResult.from_dict(bound.to_dict()) == bound
    assert bound.csv_row()[-1] == ""


def test_result_invariants():
    for kwargs in [dict(wfd=2, glob=3, status="exact", witness=(7, 0)),
                   dict(wfd=2, glob=4, status="exact"),
                   dict(wfd=2, glob=4, status="upper_bound", witness=(7, 0)),
                   dict(wfd=2, glob=4, status="exact", witness=(6, 0))]:
        try:
            schur.SchurDimResult(n=2, r=7, c=3, mode="classical", **kwargs)
        except ValueError:
            pass
        else:
            assert False, "invalid result {} accepted".format(kwargs)


if __name__ == "__main__":
    # Run all tests
    loc = locals()
    for key in list(loc.keys()):
        if key.startswith("test_") and hasattr(loc[key], "__call__"):
            loc[key]()
