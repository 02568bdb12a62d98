"""Affine reflections, the dot action and the alcove geometry of GL_n

The affine Weyl group W_c is generated by the reflections s_{alpha,mc}
in the hyperplanes <x + rho, alpha^v> = mc. Under the dot action a
reflection changes the coordinates i and j of a weight only:

    s_{alpha,mc} . lambda = lambda - (<lambda + rho, alpha^v> - mc) alpha.

Linkage
-------
On lambda + rho the reflection s_{alpha,mc} swaps the coordinates i
and j and adds mc(e_i - e_j). Hence W_c = S_n x c*Q, Q being the
root lattice (integer vectors with zero sum). Two weights lambda and mu
are linked iff mu + rho = sigma(lambda + rho) + c*q with q in Q, i.e. iff
the coordinate sums of lambda + rho and mu + rho agree and their
coordinates agree as multisets of residues mod c.
"""
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .excpt import NotDominantError
from .lattice import (PosRoot, Weight, as_weight, check_context_weight,
                      highest_root, is_dominant, positive_roots,
                      root_pairings, simple_roots)


@dataclass(frozen=True)
class AffineReflection:
    """Reflection in the hyperplane <x + rho, alpha^v> = m*c"""
    alpha: PosRoot
    m: int

    def __str__(self):
        return "s[{},{};{}]".format(self.alpha.i, self.alpha.j, self.m)

    @classmethod
    def parse(cls, text):
        """Parse the notation "s[i,j;m]" """
        match = re.fullmatch(r"\s*s\[\s*(\d+)\s*,\s*(\d+)\s*;\s*(-?\d+)\s*\]\s*",
                             text)
        if match is None:
            raise ValueError("Cannot parse reflection '{}'!".format(text))
        i, j, m = (int(g) for g in match.groups())
        return cls(PosRoot(i, j), m)


def sigma_generators(ctx):
    """Coxeter generators of W_c (the reflections in the walls of C)

    These are s_{alpha,0} for the simple roots alpha and
    s_{theta,c} for the highest root theta = e_1 - e_n.
    """
    gens = [AffineReflection(alpha, 0) for alpha in simple_roots(ctx.n)]
    gens.append(AffineReflection(highest_root(ctx.n), 1))
    return gens


def is_sigma_generator(refl, ctx):
    return refl in sigma_generators(ctx)


def coxeter_number(ctx):
    """Coxeter number h = n of type A_{n-1}"""
    return ctx.n


def dot_reflect(lam, refl, ctx):
    """Dot action of an affine reflection on a weight

    Parameters
    ----------
    lam: Weight
        Weight lambda
    refl: AffineReflection
        Reflection s_{alpha,mc}
    ctx: schurdim.lattice.Context
        Context providing c

    Returns
    -------
    mu: Weight
        lambda - (<lambda+rho, alpha^v> - mc) alpha
    """
    lam = check_context_weight(lam, ctx)
    alpha = refl.alpha
    alpha.check(ctx.n)
    offset = (lam[alpha.i - 1] - lam[alpha.j - 1] + alpha.j - alpha.i
              - refl.m * ctx.c)
    coords = list(lam.coords)
    coords[alpha.i - 1] -= offset
    coords[alpha.j - 1] += offset
    return Weight(tuple(coords))


def in_fundamental_alcove(lam, ctx):
    """Whether 0 < <lambda+rho, alpha^v> < c for all positive roots"""
    pairings = root_pairings(check_context_weight(lam, ctx))
    return bool(np.all((pairings > 0) & (pairings < ctx.c)))


def in_closed_fundamental_alcove(lam, ctx):
    """Whether 0 <= <lambda+rho, alpha^v> <= c for all positive roots"""
    pairings = root_pairings(check_context_weight(lam, ctx))
    return bool(np.all((pairings >= 0) & (pairings <= ctx.c)))


def is_regular(lam, ctx):
    """Whether `lam` lies inside an alcove (on no hyperplane)

    Two criteria are evaluated and must agree: the coordinate test
    lambda_i - lambda_j != i - j (mod c) for all i < j, and the
    pairing test <lambda+rho, alpha^v> != 0 (mod c) for all roots.
    """
    lam = check_context_weight(lam, ctx)
    arr = lam.as_array()
    idx = np.arange(1, ctx.n + 1)
    iu, ju = np.triu_indices(ctx.n, k=1)
    coord_test = np.all((arr[iu] - arr[ju]) % ctx.c != (idx[iu] - idx[ju])
                        % ctx.c)
    pairing_test = np.all(root_pairings(lam) % ctx.c != 0)
    assert coord_test == pairing_test, "regularity criteria disagree"
    return bool(pairing_test)


def d_closed_form(lam, ctx):
    """Number of hyperplanes separating a dominant weight from C

    Parameters
    ----------
    lam: Weight
        Dominant weight
    ctx: schurdim.lattice.Context
        Context providing c

    Returns
    -------
    d: int
        Sum over i < j of floor((lambda_i - lambda_j - i + j - 1) / c)

    Notes
    -----
    Hyperplanes that contain `lam` are not counted.
    """
    lam = check_context_weight(lam, ctx)
    if not is_dominant(lam):
        raise NotDominantError(
            "The closed form for d requires a dominant weight, "
            "got {}.".format(lam))
    return int(np.sum(np.floor_divide(root_pairings(lam) - 1, ctx.c)))


def separating_hyperplanes(lam, ctx, base=None):
    """Hyperplanes strictly separating `lam` from `base`

    Parameters
    ----------
    lam: Weight
        Weight whose distance is measured
    ctx: schurdim.lattice.Context
        Context providing c
    base: Weight or None
        Reference weight; must not lie on a hyperplane. Defaults to
        the zero weight, which lies in C whenever c >= n.

    Returns
    -------
    hyperplanes: list of AffineReflection
        Reflections in the separating hyperplanes; hyperplanes
        containing `lam` are excluded.
    """
    lam = check_context_weight(lam, ctx)
    if base is None:
        ctx.require_alcove_weights()
        base = Weight((0,) * ctx.n)
    base = check_context_weight(base, ctx)
    c = ctx.c
    lam_pairings = root_pairings(lam)
    base_pairings = root_pairings(base)
    assert np.all(base_pairings % c != 0), "base weight must be regular"
    bound = (int(np.max(np.abs(np.concatenate([lam_pairings,
                                               base_pairings])))) + c) // c + 1
    levels = np.arange(-bound, bound + 1)
    out = []
    for alpha, a, b in zip(positive_roots(ctx.n), lam_pairings,
                           base_pairings):
        side_lam = np.sign(a - levels * c)
        side_base = np.sign(b - levels * c)
        for m in levels[side_lam * side_base < 0]:
            out.append(AffineReflection(alpha, int(m)))
    return out


def d_separating_count(lam, ctx):
    """Count the hyperplanes separating `lam` from the zero weight

    Requires c >= n so that the zero weight lies in the fundamental
    alcove C. Any other weight of C gives the same count, since no
    hyperplane meets the open alcove. Agrees with
    :func:`d_closed_form` on dominant weights.
    """
    return len(separating_hyperplanes(lam, ctx))


def alcove_signature(lam, ctx):
    """Tuple of floor(<lambda+rho, alpha^v> / c) over the positive roots

    Two regular weights lie in the same alcove iff their
    signatures coincide.
    """
    lam = check_context_weight(lam, ctx)
    return tuple(int(x) for x in np.floor_divide(root_pairings(lam), ctx.c))


def wall_reflections(lam, ctx):
    """Reflections in the walls of the alcove that contains `lam`

    A hyperplane at the level floor(a/c) or floor(a/c)+1 (a being the
    pairing with alpha) bounds the alcove of a regular weight; it is
    a wall iff the reflection in it moves `lam` across exactly one
    hyperplane.
    """
    lam = check_context_weight(lam, ctx)
    if not is_regular(lam, ctx):
        raise ValueError("{} lies on a hyperplane.".format(lam))
    sig = np.array(alcove_signature(lam, ctx))
    walls = []
    for alpha, level in zip(positive_roots(ctx.n), sig):
        for m in (int(level), int(level) + 1):
            refl = AffineReflection(alpha, m)
            mu = dot_reflect(lam, refl, ctx)
            crossed = np.sum(np.abs(np.array(alcove_signature(mu, ctx))
                                    - sig))
            if crossed == 1:
                walls.append(refl)
    return walls


def rho_shifted_residues(lam, ctx):
    """Multiset of the residues mod c of lambda + rho"""
    lam = check_context_weight(lam, ctx)
    shifted = lam.as_array() + np.arange(ctx.n - 1, -1, -1)
    return Counter(int(x) for x in shifted % ctx.c)


def linked(lam, mu, ctx):
    """Whether `lam` and `mu` lie in the same dot-orbit of W_c

    See the module documentation for the criterion used.
    """
    lam = as_weight(lam)
    mu = as_weight(mu)
    if len(lam) != len(mu):
        raise ValueError("Length mismatch: {} vs {}!".format(lam, mu))
    lam = check_context_weight(lam, ctx)
    mu = check_context_weight(mu, ctx)
    return (lam.degree == mu.degree
            and rho_shifted_residues(lam, ctx)
            == rho_shifted_residues(mu, ctx))
