"""The up-arrow order on weights and its chains

For a positive root alpha and an integer m the reflected weight
s_{alpha,mc} . lambda lies below lambda in the up-arrow order whenever
<lambda + rho, alpha^v> >= mc. The order is generated by these relations.

Steps that do not decrease the distance d to the fundamental alcove
are discarded; along any chain that ends in the closed fundamental
alcove d strictly increases, and the pruning makes the search below
a weight finite although m is unbounded below.
"""
import sys
from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from .alcoves import (AffineReflection, d_closed_form, d_separating_count,
                      dot_reflect, in_closed_fundamental_alcove, is_regular,
                      linked)
from .excpt import NotDominantError, NotLinkedError, SingularWeightError
from .lattice import (check_context_weight, is_dominant, positive_roots,
                      root_pairings)

#: chain domains: all weights ("X") or dominant weights only ("Xplus")
DOMAINS = ("X", "Xplus")

_SOURCE = "chain-source"


@dataclass(frozen=True)
class Chain:
    """Ascending chain mu_0 up mu_1 up ... up mu_l"""
    weights: Tuple
    domain: str = "X"

    def __post_init__(self):
        _check_domain(self.domain)
        for lower, upper in zip(self.weights[:-1], self.weights[1:]):
            if lower == upper:
                raise ValueError("Repeated chain member {}!".format(lower))
        if self.domain == "Xplus":
            for w in self.weights:
                if not is_dominant(w):
                    raise ValueError(
                        "Chain member {} is not dominant!".format(w))

    def __str__(self):
        return " ↑ ".join(str(w) for w in self.weights)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    @property
    def length(self):
        """Number of steps (members minus one)"""
        return len(self.weights) - 1

    @property
    def top(self):
        return self.weights[-1]

    @property
    def bottom(self):
        return self.weights[0]

    def to_list(self):
        return [list(w.coords) for w in self.weights]


@dataclass(frozen=True)
class SaturatedSet:
    """Dominant weights up-arrow-below `top`, ascending by d"""
    top: object
    members: Tuple

    def __contains__(self, weight):
        return weight in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def _check_domain(domain):
    if domain not in DOMAINS:
        raise ValueError("`domain` must be one of {}, got '{}'!".format(
            DOMAINS, domain))


def distance(lam, ctx, cache=None):
    """Number of hyperplanes separating `lam` from the fundamental alcove

    Uses :func:`schurdim.alcoves.d_closed_form` for dominant weights and
    :func:`schurdim.alcoves.d_separating_count` otherwise.

    Parameters
    ----------
    lam: Weight
        Any weight
    ctx: schurdim.lattice.Context
        Context with c >= n
    cache: dict or None
        Optional memo mapping weights to their distance
    """
    if cache is not None and lam in cache:
        return cache[lam]
    if is_dominant(lam):
        value = d_closed_form(lam, ctx)
    else:
        value = d_separating_count(lam, ctx)
    if cache is not None:
        cache[lam] = value
    return value


def _covers(lam, ctx, domain, cache):
    d_lam = distance(lam, ctx, cache)
    # the reflected pairing 2mc - a crosses more than d hyperplanes
    # for every m below this level
    lowest = -(d_lam + 2)
    found = {}
    for alpha, a in zip(positive_roots(ctx.n), root_pairings(lam)):
        for m in range(int(a) // ctx.c, lowest - 1, -1):
            mu = dot_reflect(lam, AffineReflection(alpha, m), ctx)
            if mu == lam or mu in found:
                continue
            if distance(mu, ctx, cache) >= d_lam:
                continue
            if domain == "Xplus" and not is_dominant(mu):
                continue
            found[mu] = None
        beyond = dot_reflect(lam, AffineReflection(alpha, lowest - 1), ctx)
        assert distance(beyond, ctx, cache) >= d_lam, \
            "cover search range for {} misses {}".format(lam, beyond)
    return sorted(found, key=lambda w: w.sort_key())


def up_covers_down(lam, ctx, domain="X"):
    """Weights one reflection step below `lam` in the up-arrow order

    Parameters
    ----------
    lam: Weight
        Weight lambda
    ctx: schurdim.lattice.Context
        Context with c >= n
    domain: str
        "X" (all weights) or "Xplus" (dominant weights only)

    Returns
    -------
    covers: list of Weight
        All mu = s_{alpha,mc} . lambda with mc <= <lambda+rho, alpha^v>,
        mu != lambda and d(mu) < d(lambda), in reverse-lexicographic
        order
    """
    ctx.require_alcove_weights()
    _check_domain(domain)
    lam = check_context_weight(lam, ctx)
    return _covers(lam, ctx, domain, cache={})


def cover_graph(lam, ctx, domain="X", verbose=0):
    """Directed graph of everything up-arrow-below `lam`

    Parameters
    ----------
    lam: Weight
        Top weight
    ctx: schurdim.lattice.Context
        Context with c >= n
    domain: str
        "X" or "Xplus", see :const:`DOMAINS`
    verbose: int
        Higher values increase verbosity

    Returns
    -------
    graph: networkx.DiGraph
        Nodes are weights with attribute "d"; an edge (mu, nu) means
        that mu is a cover of nu (mu up nu in one step).
    """
    ctx.require_alcove_weights()
    _check_domain(domain)
    lam = check_context_weight(lam, ctx)
    cache = {}
    graph = nx.DiGraph()
    graph.add_node(lam, d=distance(lam, ctx, cache))
    queue = [lam]
    while queue:
        upper = queue.pop(0)
        covers = _covers(upper, ctx, domain, cache)
        if verbose >= 2:
            print("Covers of {}: {}".format(
                upper, ", ".join(str(w) for w in covers) or "none"),
                file=sys.stderr)
        for mu in covers:
            if mu not in graph:
                graph.add_node(mu, d=distance(mu, ctx, cache))
                queue.append(mu)
            graph.add_edge(mu, upper)
    if verbose:
        print("Cover graph below {} ({}): {} weights, {} covers".format(
            lam, domain, graph.number_of_nodes(), graph.number_of_edges()),
            file=sys.stderr)
    return graph


def up_leq(mu, lam, ctx):
    """Whether mu up-arrow lam (reflexive)

    The search runs over chains through all of X.
    """
    ctx.require_alcove_weights()
    mu = check_context_weight(mu, ctx)
    lam = check_context_weight(lam, ctx)
    if mu == lam:
        return True
    if not linked(mu, lam, ctx):
        return False
    if distance(mu, ctx) >= distance(lam, ctx):
        return False
    return mu in cover_graph(lam, ctx, domain="X")


def maximal_chain(lam, ctx, domain="X", verbose=0):
    """Longest chain of up-arrow steps ending in `lam`

    Parameters
    ----------
    lam: Weight
        Top of the chain; dominant if `domain` is "Xplus"
    ctx: schurdim.lattice.Context
        Context with c >= n
    domain: str
        "X": members may be any weight but the bottom lies in the
        closed fundamental alcove; "Xplus": all members dominant.
    verbose: int
        Higher values increase verbosity

    Returns
    -------
    chain: Chain
        A chain of maximal length

    Notes
    -----
    If no chain below `lam` reaches the closed fundamental alcove
    (domain "X"), the longest chain among all chains is returned.
    """
    ctx.require_alcove_weights()
    _check_domain(domain)
    lam = check_context_weight(lam, ctx)
    if domain == "Xplus" and not is_dominant(lam):
        raise NotDominantError(
            "Chains through dominant weights need a dominant top, "
            "got {}.".format(lam))
    graph = cover_graph(lam, ctx, domain=domain, verbose=verbose)
    minimal = [w for w in graph if graph.in_degree(w) == 0]
    if domain == "X":
        bottoms = [w for w in graph if in_closed_fundamental_alcove(w, ctx)]
        bottoms = bottoms or minimal
    else:
        bottoms = minimal
    graph.add_edges_from((_SOURCE, b) for b in bottoms)
    reachable = nx.descendants(graph, _SOURCE) | {_SOURCE}
    path = nx.dag_longest_path(graph.subgraph(reachable))
    assert path[0] == _SOURCE and path[-1] == lam
    chain = Chain(weights=tuple(path[1:]), domain=domain)
    if verbose:
        print("Maximal chain ({}): {}".format(domain, chain), file=sys.stderr)
    return chain


def chain_length(lam, ctx, domain="X"):
    """Length of a maximal chain below `lam`, see :func:`maximal_chain`

    For a regular dominant weight both domains give d(lam).
    """
    return maximal_chain(lam, ctx, domain=domain).length


def saturated_set(lam, ctx):
    """Saturated set Pi(lam) of dominant weights below `lam`

    Reachability is decided through chains in all of X; the result
    is intersected with the dominant weights. Members are sorted by
    ascending d, ties in reverse-lexicographic order.
    """
    ctx.require_alcove_weights()
    lam = check_context_weight(lam, ctx)
    if not is_dominant(lam):
        raise NotDominantError("{} is not dominant.".format(lam))
    graph = cover_graph(lam, ctx, domain="X")
    members = [w for w in graph if is_dominant(w)]
    members.sort(key=lambda w: (graph.nodes[w]["d"], w.sort_key()))
    return SaturatedSet(top=lam, members=tuple(members))


def bruhat_leq(mu, lam, ctx):
    """Bruhat comparison of two regular dominant linked weights

    On a regular orbit the up-arrow order coincides with the Bruhat
    order of the affine Weyl group; this equals :func:`up_leq`.
    """
    ctx.require_alcove_weights()
    mu = check_context_weight(mu, ctx)
    lam = check_context_weight(lam, ctx)
    for w in (mu, lam):
        if not is_dominant(w):
            raise NotDominantError("{} is not dominant.".format(w))
        if not is_regular(w, ctx):
            raise SingularWeightError(
                "{} is singular; regular weights only.".format(w))
    if not linked(mu, lam, ctx):
        raise NotLinkedError("{} and {} are not linked.".format(mu, lam))
    return up_leq(mu, lam, ctx)
