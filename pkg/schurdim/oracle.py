"""Brute-force cross-checks of the combinatorial formulas

The functions in this module recompute lengths and orbits without the
closed forms of :mod:`schurdim.alcoves` and compare the results.

Alcove walk
-----------
The dot-orbit of the zero weight (which lies in C for c >= n) meets
every alcove exactly once, so its members can stand in for the alcoves.
Reflecting a weight in a wall of its own alcove moves it into the
adjacent alcove; each such wall reflection is a conjugate of a Coxeter
generator. The breadth-first depth of a weight is therefore the
Coxeter length of the corresponding group element, which equals the
number of separating hyperplanes.
"""
import sys
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .alcoves import (AffineReflection, d_closed_form, d_separating_count,
                      dot_reflect, is_regular, linked, wall_reflections)
from .excpt import (NotDominantError, SingularWeightError,
                    VerificationFailedError)
from .lattice import (Weight, check_context_weight, dominant_weights,
                      is_dominant, positive_roots, root_pairings,
                      weights_in_box)
from .schur import covered, max_d_over_regular, wfd_schur
from .uporder import Chain, maximal_chain


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a cross-check; `ok` iff expected equals observed"""
    subject: str
    expected: int
    observed: int
    witness: Optional[Chain] = None

    @property
    def ok(self):
        return self.expected == self.observed

    def to_dict(self):
        data = {"subject": self.subject,
                "expected": self.expected,
                "observed": self.observed,
                "ok": self.ok,
                "witness": None}
        if self.witness is not None:
            data["witness"] = {"domain": self.witness.domain,
                               "weights": self.witness.to_list()}
        return data

    @classmethod
    def from_dict(cls, data):
        witness = None
        if data.get("witness") is not None:
            witness = Chain(weights=tuple(Weight(tuple(w)) for w in
                                          data["witness"]["weights"]),
                            domain=data["witness"]["domain"])
        report = cls(subject=data["subject"],
                     expected=data["expected"],
                     observed=data["observed"],
                     witness=witness)
        if "ok" in data and data["ok"] != report.ok:
            raise ValueError("Inconsistent 'ok' flag in {}!".format(data))
        return report


def _finish(report, strict):
    if strict and not report.ok:
        raise VerificationFailedError(
            "{}: expected {}, observed {}".format(
                report.subject, report.expected, report.observed))
    return report


def alcove_bfs_lengths(ctx, max_len, verbose=0):
    """Breadth-first walk through the alcoves around the zero weight

    Parameters
    ----------
    ctx: schurdim.lattice.Context
        Context with c >= n
    max_len: int
        Maximal depth of the search
    verbose: int
        Higher values increase verbosity

    Returns
    -------
    depth: dict
        Maps every visited member of the dot-orbit of the zero
        weight to its depth (the number of wall crossings)
    """
    ctx.require_alcove_weights()
    if max_len < 0:
        raise ValueError("`max_len` must be non-negative!")
    base = Weight((0,) * ctx.n)
    depth = {base: 0}
    queue = deque([base])
    layer = 0
    while queue:
        weight = queue.popleft()
        level = depth[weight]
        if verbose >= 2 and level > layer:
            layer = level
            print("BFS layer {}: {} weights".format(
                layer, sum(1 for v in depth.values() if v == layer)),
                file=sys.stderr)
        if level == max_len:
            continue
        for refl in wall_reflections(weight, ctx):
            neighbour = dot_reflect(weight, refl, ctx)
            if neighbour not in depth:
                depth[neighbour] = level + 1
                queue.append(neighbour)
    if verbose:
        print("Visited {} alcoves up to depth {}".format(len(depth), max_len),
              file=sys.stderr)
    return depth


def verify_alcove_bfs(ctx, max_len, strict=False, verbose=0):
    """Compare BFS depths with the separating-hyperplane count"""
    depth = alcove_bfs_lengths(ctx, max_len, verbose=verbose)
    matches = 0
    for weight, level in depth.items():
        agree = d_separating_count(weight, ctx) == level
        if agree and is_dominant(weight):
            agree = d_closed_form(weight, ctx) == level
        if agree:
            matches += 1
        elif verbose:
            print("BFS depth {} of {} differs from d".format(level, weight),
                  file=sys.stderr)
    report = VerificationReport(
        subject="alcove BFS depth = d for n={}, {}={}, depth <= {}".format(
            ctx.n, ctx.symbol, ctx.c, max_len),
        expected=len(depth),
        observed=matches)
    return _finish(report, strict)


def verify_length_equalities(lam, ctx, strict=False, verbose=0):
    """Check d(lam) = l(lam) = lbar(lam) for a regular dominant weight

    Parameters
    ----------
    lam: Weight
        Regular dominant weight
    ctx: schurdim.lattice.Context
        Context with c >= n
    strict: bool
        Raise :class:`schurdim.excpt.VerificationFailedError` on mismatch
    verbose: int
        Higher values increase verbosity

    Returns
    -------
    report: VerificationReport
        `expected` is d(lam); `observed` is the common chain length,
        or the first chain length that differs from d(lam). The
        witness is a maximal chain with bottom in the closed
        fundamental alcove.
    """
    ctx.require_alcove_weights()
    lam = check_context_weight(lam, ctx)
    if not is_dominant(lam):
        raise NotDominantError("{} is not dominant.".format(lam))
    if not is_regular(lam, ctx):
        raise SingularWeightError(
            "{} is singular; regular weights only.".format(lam))
    d = d_closed_form(lam, ctx)
    chain = maximal_chain(lam, ctx, domain="X", verbose=verbose)
    chain_plus = maximal_chain(lam, ctx, domain="Xplus", verbose=verbose)
    observed = d
    for length in (chain.length, chain_plus.length):
        if length != d:
            observed = length
            break
    report = VerificationReport(
        subject="lengths of {} at {}={}: d={}, l={}, lbar={}".format(
            lam, ctx.symbol, ctx.c, d, chain.length, chain_plus.length),
        expected=d,
        observed=observed,
        witness=chain)
    return _finish(report, strict)


def length_grid(ctx, dmax, verbose=0):
    """Yield :func:`verify_length_equalities` for all small weights

    Covers every regular dominant weight with last coordinate 0
    and d <= `dmax`.
    """
    ctx.require_alcove_weights()
    # d(lam) >= floor((lam_1 - lam_n + n - 2) / c) from the highest root
    max_part = ctx.c * (dmax + 1)
    for lam in dominant_weights(ctx.n, max_part):
        if is_regular(lam, ctx) and d_closed_form(lam, ctx) <= dmax:
            yield verify_length_equalities(lam, ctx, verbose=verbose)


def verify_d_formula(ctx, max_part, strict=False):
    """Closed form for d versus the hyperplane count

    Compared on all dominant weights with last coordinate 0 and
    first coordinate at most `max_part`.
    """
    ctx.require_alcove_weights()
    weights = dominant_weights(ctx.n, max_part)
    matches = sum(1 for lam in weights
                  if d_closed_form(lam, ctx) == d_separating_count(lam, ctx))
    report = VerificationReport(
        subject="d closed form = hyperplane count for n={}, {}={}, "
                "lambda_1 <= {}".format(ctx.n, ctx.symbol, ctx.c, max_part),
        expected=len(weights),
        observed=matches)
    return _finish(report, strict)


def verify_schur_witness(ctx, r, strict=False):
    """Exhaustive maximum of d over Lambda(n, r) versus the closed form

    Only available where the closed form is proven.
    """
    ctx.require_alcove_weights()
    if not covered(ctx, r):
        raise ValueError("No closed form for n={}, r={}, {}={}!".format(
            ctx.n, r, ctx.symbol, ctx.c))
    result = wfd_schur(ctx, r)
    value, argmax = max_d_over_regular(ctx, r)
    observed = value
    if value == result.wfd and d_closed_form(result.witness, ctx) != value:
        observed = d_closed_form(result.witness, ctx)
    report = VerificationReport(
        subject="max d over regular Lambda({}, {}) at {}={} (argmax {})"
                .format(ctx.n, r, ctx.symbol, ctx.c,
                        ", ".join(str(w) for w in argmax)),
        expected=result.wfd,
        observed=-1 if observed is None else observed)
    return _finish(report, strict)


def _reflect_in_box(weight, ctx, radius):
    """All dot-reflections of `weight` with coordinates in the box"""
    out = []
    for alpha, a in zip(positive_roots(ctx.n), root_pairings(weight)):
        low = (int(a) - 2 * radius) // ctx.c - 1
        high = (int(a) + 2 * radius) // ctx.c + 1
        for m in range(low, high + 1):
            mu = dot_reflect(weight, AffineReflection(alpha, m), ctx)
            if max(abs(x) for x in mu) <= radius:
                out.append(mu)
    return out


def orbit_closure(lam, ctx, radius):
    """Reflection closure of `lam` inside the box [-radius, radius]^n

    Returns
    -------
    closure: list of Weight
        All weights reachable from `lam` by dot-reflections without
        leaving the box, in reverse-lexicographic order
    """
    lam = check_context_weight(lam, ctx)
    if max(abs(x) for x in lam) > radius:
        raise ValueError("{} lies outside the box of radius {}!".format(
            lam, radius))
    seen = {lam}
    queue = deque([lam])
    while queue:
        weight = queue.popleft()
        for mu in _reflect_in_box(weight, ctx, radius):
            if mu not in seen:
                seen.add(mu)
                queue.append(mu)
    return sorted(seen, key=lambda w: w.sort_key())


def verify_orbit_linkage(lam, ctx, radius, strict=False):
    """Reflection closure versus the residue criterion for linkage

    The closure is computed in a box enlarged by n + c, which
    contains a reflection path between any two linked weights of
    the original box.

    Returns
    -------
    report: VerificationReport
        `expected` counts the weights of the box that satisfy the
        residue criterion; `observed` counts those reached by the
        closure, minus the number of reached weights that violate
        the criterion.
    """
    lam = check_context_weight(lam, ctx)
    closure = set(orbit_closure(lam, ctx, radius + ctx.n + ctx.c))
    criterion = set()
    reached = set()
    for weight in weights_in_box(ctx.n, radius):
        if linked(lam, weight, ctx):
            criterion.add(weight)
        if weight in closure:
            reached.add(weight)
    report = VerificationReport(
        subject="dot-orbit of {} at {}={} in box of radius {}".format(
            lam, ctx.symbol, ctx.c, radius),
        expected=len(criterion),
        observed=len(criterion & reached) - len(reached - criterion))
    return _finish(report, strict)
