import itertools

import networkx as nx

from schurdim import alcoves, excpt, lattice, uporder
from schurdim.lattice import Context, Weight


def test_covers_dominant():
    ctx = Context(2, 3)
    assert uporder.up_covers_down((7, 0), ctx, domain="Xplus") == \
        [Weight((5, 2))]
    assert uporder.up_covers_down((5, 2), ctx, domain="Xplus") == \
        [Weight((4, 3))]
    assert uporder.up_covers_down((4, 3), ctx, domain="Xplus") == []
    assert uporder.up_covers_down((0, 0, 0), Context(3, 5)) == []


def test_covers_all_weights():
    ctx = Context(2, 3)
    assert uporder.up_covers_down((7, 0), ctx, domain="X") == \
        [Weight((5, 2)), Weight((2, 5))]
    # (2,5) is a dead end: its only reflections below move away from C
    assert uporder.up_covers_down((2, 5), ctx, domain="X") == []


def test_bad_domain():
    try:
        uporder.up_covers_down((7, 0), Context(2, 3), domain="Y")
    except ValueError:
        pass
    else:
        assert False, "unknown domain accepted"


def test_cover_graph():
    ctx = Context(2, 3)
    graph = uporder.cover_graph((7, 0), ctx)
    assert isinstance(graph, nx.DiGraph)
    assert set(graph.nodes) == {Weight((7, 0)), Weight((5, 2)),
                                Weight((2, 5)), Weight((4, 3))}
    assert graph.has_edge(Weight((5, 2)), Weight((7, 0)))
    assert graph.has_edge(Weight((4, 3)), Weight((5, 2)))
    assert graph.nodes[Weight((7, 0))]["d"] == 2
    assert nx.is_directed_acyclic_graph(graph)
    # d strictly increases along every edge
    for lower, upper in graph.edges:
        assert graph.nodes[lower]["d"] < graph.nodes[upper]["d"]


def test_up_leq():
    ctx = Context(2, 3)
    assert uporder.up_leq((4, 3), (7, 0), ctx)
    assert uporder.up_leq((2, 5), (7, 0), ctx)
    assert not uporder.up_leq((3, 1), (7, 0), ctx)
    assert uporder.up_leq((7, 0), (7, 0), ctx)
    assert not uporder.up_leq((7, 0), (4, 3), ctx)


def test_maximal_chain():
    ctx = Context(2, 3)
    chain = uporder.maximal_chain((7, 0), ctx)
    assert str(chain) == "(4,3) ↑ (5,2) ↑ (7,0)"
    assert chain.length == 2
    assert chain.top == Weight((7, 0))
    assert chain.bottom == Weight((4, 3))
    assert chain.to_list() == [[4, 3], [5, 2], [7, 0]]
    chain_plus = uporder.maximal_chain((7, 0), ctx, domain="Xplus")
    assert chain_plus.weights == chain.weights


def test_chain_length():
    ctx = Context(2, 3)
    for domain in uporder.DOMAINS:
        assert uporder.chain_length((7, 0), ctx, domain=domain) == 2
        assert uporder.chain_length((4, 3), ctx, domain=domain) == 0
    assert uporder.chain_length((5, 0, 0), Context(3, 5), domain="Xplus") == 2


def test_chain_singular():
    ctx = Context(2, 3)
    # (6,1) lies on a hyperplane; no dominant weight is reachable below
    assert uporder.chain_length((6, 1), ctx, domain="Xplus") == 0
    chain = uporder.maximal_chain((6, 1), ctx, domain="X")
    assert chain.bottom == Weight((3, 4))
    assert chain.length == 1


def test_chain_requires_dominant_top():
    try:
        uporder.maximal_chain((2, 5), Context(2, 3), domain="Xplus")
    except excpt.NotDominantError:
        pass
    else:
        assert False, "non-dominant top accepted"


def test_chain_validation():
    try:
        uporder.Chain(weights=(Weight((2, 5)), Weight((7, 0))),
                      domain="Xplus")
    except ValueError:
        pass
    else:
        assert False, "non-dominant member accepted"


def test_saturated_set():
    ctx = Context(2, 3)
    sat = uporder.saturated_set((7, 0), ctx)
    assert list(sat) == [Weight((4, 3)), Weight((5, 2)), Weight((7, 0))]
    assert Weight((5, 2)) in sat
    assert Weight((2, 5)) not in sat
    assert list(uporder.saturated_set((2, 2), ctx)) == [Weight((2, 2))]
    assert list(uporder.saturated_set((0, 0, 0), Context(3, 3))) == \
        [Weight((0, 0, 0))]


def test_bruhat():
    ctx = Context(2, 3)
    assert uporder.bruhat_leq((5, 2), (7, 0), ctx)
    assert not uporder.bruhat_leq((7, 0), (5, 2), ctx)
    assert uporder.bruhat_leq((7, 0), (7, 0), ctx)
    for args, error in [(((6, 1), (7, 0)), excpt.SingularWeightError),
                        (((2, 5), (7, 0)), excpt.NotDominantError),
                        (((2, 2), (7, 0)), excpt.NotLinkedError)]:
        try:
            uporder.bruhat_leq(args[0], args[1], ctx)
        except error:
            pass
        else:
            assert False, "{} should raise {}".format(args, error)


def test_bruhat_partial_order():
    """antisymmetric and transitive on every regular orbit of Lambda(2, r)"""
    ctx = Context(2, 3)
    for r in range(21):
        regular = [lam for lam in lattice.partitions(2, r)
                   if alcoves.is_regular(lam, ctx)]
        leq = {}
        for mu, lam in itertools.product(regular, repeat=2):
            if alcoves.linked(mu, lam, ctx):
                leq[mu, lam] = uporder.bruhat_leq(mu, lam, ctx)
        for (mu, lam), value in leq.items():
            assert leq[mu, mu]
            if value and leq[lam, mu]:
                assert mu == lam, (mu, lam)
            for nu in regular:
                if value and leq.get((lam, nu)):
                    assert leq[mu, nu], (mu, lam, nu)


def test_saturated_set_down_closed():
    """covers of members that are dominant belong to the set again"""
    for n, c in [(2, 3), (3, 3), (3, 5)]:
        ctx = Context(n, c)
        for lam in lattice.dominant_weights(n, 2 * c + 2):
            if not alcoves.is_regular(lam, ctx):
                continue
            sat = uporder.saturated_set(lam, ctx)
            assert lam in sat
            for mu in sat:
                assert lattice.is_dominant(mu)
                for nu in uporder.up_covers_down(mu, ctx, domain="X"):
                    if lattice.is_dominant(nu):
                        assert nu in sat, (lam, mu, nu)


if __name__ == "__main__":
    # Run all tests
    loc = locals()
    for key in list(loc.keys()):
        if key.startswith("test_") and hasattr(loc[key], "__call__"):
            loc[key]()
