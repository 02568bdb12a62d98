from schurdim import alcoves, excpt, lattice
from schurdim.alcoves import AffineReflection
from schurdim.lattice import Context, PosRoot, Weight


def test_reflection_parse():
    refl = AffineReflection.parse("s[1,2;-1]")
    assert refl == AffineReflection(PosRoot(1, 2), -1)
    assert str(refl) == "s[1,2;-1]"
    assert AffineReflection.parse(str(refl)) == refl
    try:
        AffineReflection.parse("s[1,2]")
    except ValueError:
        pass
    else:
        assert False, "incomplete reflection parsed"


def test_dot_reflect():
    ctx = Context(2, 3)
    alpha = PosRoot(1, 2)
    assert alcoves.dot_reflect((4, 0), AffineReflection(alpha, 1), ctx) == \
        Weight((2, 2))
    assert alcoves.dot_reflect((7, 0), AffineReflection(alpha, 2), ctx) == \
        Weight((5, 2))
    # involution
    for m in range(-3, 4):
        refl = AffineReflection(alpha, m)
        mu = alcoves.dot_reflect((7, 0), refl, ctx)
        assert alcoves.dot_reflect(mu, refl, ctx) == Weight((7, 0))


def test_sigma_generators():
    ctx = Context(3, 5)
    gens = alcoves.sigma_generators(ctx)
    assert [str(g) for g in gens] == ["s[1,2;0]", "s[2,3;0]", "s[1,3;1]"]
    assert alcoves.is_sigma_generator(AffineReflection(PosRoot(1, 3), 1), ctx)
    assert not alcoves.is_sigma_generator(AffineReflection(PosRoot(1, 3), 0),
                                          ctx)
    for n in [2, 3, 5]:
        assert alcoves.coxeter_number(Context(n, 7)) == n


def test_fundamental_alcove():
    ctx3 = Context(3, 3)
    assert alcoves.in_fundamental_alcove((0, 0, 0), ctx3)
    ctx = Context(2, 3)
    assert alcoves.in_fundamental_alcove((4, 3), ctx)
    assert not alcoves.in_fundamental_alcove((4, 0), ctx)
    # walls belong to the closure only
    assert not alcoves.in_fundamental_alcove((2, 0), ctx)
    assert alcoves.in_closed_fundamental_alcove((2, 0), ctx)
    assert alcoves.in_closed_fundamental_alcove((0, 1), ctx)
    assert not alcoves.in_closed_fundamental_alcove((0, 2), ctx)


def test_regular():
    ctx = Context(3, 3)
    assert not alcoves.is_regular((3, 1, 0), ctx)
    assert alcoves.is_regular((2, 1, 0), ctx)
    assert not alcoves.is_regular((6, 1), Context(2, 3))
    for c in [2, 3, 5]:
        for m in range(6):
            lam = (m * c,) + (0,) * (c - 1)
            assert alcoves.is_regular(lam, Context(c, c))


def test_d_closed_form():
    ctx = Context(2, 3)
    assert alcoves.d_closed_form((7, 0), ctx) == 2
    assert alcoves.d_closed_form((4, 3), ctx) == 0
    assert alcoves.d_closed_form((5, 0, 0), Context(3, 5)) == 2
    assert alcoves.d_closed_form((2, 1, 0), Context(3, 3)) == 1
    try:
        alcoves.d_closed_form((2, 5), ctx)
    except excpt.NotDominantError:
        pass
    else:
        assert False, "non-dominant weight accepted"


def test_d_closed_form_wall():
    # hyperplanes containing the weight are not counted
    ctx = Context(2, 3)
    assert alcoves.d_closed_form((2, 0), ctx) == 0
    assert alcoves.d_closed_form((6, 1), ctx) == 1


def test_separating_hyperplanes():
    ctx = Context(2, 3)
    assert alcoves.d_separating_count((7, 0), ctx) == 2
    assert alcoves.d_separating_count((-1, 5), ctx) == 2
    assert alcoves.d_separating_count((0, 0), ctx) == 0
    hyper = alcoves.separating_hyperplanes((7, 0), ctx)
    assert sorted(h.m for h in hyper) == [1, 2]
    hyper = alcoves.separating_hyperplanes((-1, 5), ctx)
    assert sorted(h.m for h in hyper) == [-1, 0]
    # relative to another base point
    assert len(alcoves.separating_hyperplanes((7, 0), ctx,
                                              base=(5, 2))) == 1


def test_separating_count_requires_alcove_weights():
    try:
        alcoves.d_separating_count((1, 0, 0, 0), Context(4, 3))
    except excpt.CharacteristicTooSmallError:
        pass
    else:
        assert False, "c < n must raise"


def test_d_formula_equivalence():
    """closed form and hyperplane count agree on dominant weights"""
    for n in [2, 3, 4]:
        for c in [3, 5, 7]:
            if c < n:
                continue
            ctx = Context(n, c)
            for lam in lattice.dominant_weights(n, 3 * c):
                assert alcoves.d_closed_form(lam, ctx) == \
                    alcoves.d_separating_count(lam, ctx), (lam, c)


def test_alcove_signature_and_walls():
    ctx = Context(2, 3)
    assert alcoves.alcove_signature((7, 0), ctx) == (2,)
    assert alcoves.alcove_signature((6, 2), ctx) == (1,)
    walls = alcoves.wall_reflections((7, 0), ctx)
    assert sorted(str(w) for w in walls) == ["s[1,2;2]", "s[1,2;3]"]
    ctx3 = Context(3, 5)
    walls = alcoves.wall_reflections((0, 0, 0), ctx3)
    assert sorted(walls, key=str) == sorted(alcoves.sigma_generators(ctx3),
                                            key=str)
    try:
        alcoves.wall_reflections((6, 1), ctx)
    except ValueError:
        pass
    else:
        assert False, "singular weight accepted"


def test_linked():
    ctx = Context(2, 3)
    assert alcoves.linked((4, 0), (2, 2), ctx)
    assert not alcoves.linked((4, 0), (3, 1), ctx)
    assert alcoves.linked((7, 0), (7, 0), ctx)
    assert alcoves.linked((7, 0), (4, 3), ctx)
    assert not alcoves.linked((7, 0), (6, 1), ctx)
    try:
        alcoves.linked((7, 0), (7, 0, 0), ctx)
    except ValueError:
        pass
    else:
        assert False, "length mismatch accepted"


def test_linked_reflections():
    ctx = Context(3, 4)
    lam = Weight((5, 2, -1))
    for alpha in lattice.positive_roots(3):
        for m in range(-3, 4):
            mu = alcoves.dot_reflect(lam, AffineReflection(alpha, m), ctx)
            assert alcoves.linked(lam, mu, ctx)


if __name__ == "__main__":
    # Run all tests
    loc = locals()
    for key in list(loc.keys()):
        if key.startswith("test_") and hasattr(loc[key], "__call__"):
            loc[key]()
