from schurdim import analyze, excpt
from schurdim.lattice import Context, Weight


def test_analyze_nabla():
    wfd, gfd = analyze((7, 0), Context(2, 3))
    assert (wfd.invariant, wfd.value, wfd.status) == ("wfd", 2, "exact")
    assert (gfd.invariant, gfd.value) == ("gfd", 0)
    assert wfd.label.weight == Weight((7, 0))


def test_analyze_families():
    ctx = Context(3, 5)
    values = {family: [rep.value for rep in analyze((5, 0, 0), ctx, family)]
              for family in ["nabla", "delta", "simple"]}
    assert values == {"nabla": [2, 0], "delta": [0, 2], "simple": [2, 2]}


def test_analyze_symmetric_power():
    wfd, gfd = analyze(7, Context(2, 3), family="symmetric_power")
    assert wfd.label.degree == 7
    assert (wfd.value, wfd.status) == (2, "upper_bound")
    assert (gfd.value, gfd.status) == (0, "exact")


def test_analyze_singular():
    ctx = Context(2, 3)
    try:
        analyze((6, 1), ctx)
    except excpt.SingularWeightError:
        pass
    else:
        assert False, "singular weight accepted"
    wfd, gfd = analyze((6, 1), ctx, allow_bound=True)
    assert (wfd.value, wfd.status) == (0, "upper_bound")
    try:
        analyze((6, 1), ctx, family="delta", allow_bound=True)
    except excpt.SingularWeightError:
        pass
    else:
        assert False, "bound is only available for nabla"


def test_analyze_bad_family():
    try:
        analyze((7, 0), Context(2, 3), family="tilting")
    except ValueError:
        pass
    else:
        assert False, "unsupported family accepted"


if __name__ == "__main__":
    # Run all tests
    loc = locals()
    for key in list(loc.keys()):
        if key.startswith("test_") and hasattr(loc[key], "__call__"):
            loc[key]()
