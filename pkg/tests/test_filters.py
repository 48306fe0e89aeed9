"""Filter-space tests: enumeration, units, multiplications, comparisons.

The small expected values (point counts, generators, where units land) were
derived by enumerating filters of the relevant lattices by hand and are
frozen here; structural invariants are rechecked by the library's own
assertion routine plus an independent primality oracle.
"""

from hypothesis import given, settings, strategies as st

from topolab import (
    CLOSED_PRIME,
    OPEN_PRIME,
    ULTRA,
    ContinuousMap,
    alpha,
    build_space,
    classify,
    compose,
    closure,
    enumerate_continuous_maps,
    find_homeomorphism,
    identity_map,
    is_homeomorphism,
    lift_map,
    lift_space,
    minimal_neighborhood,
    mult,
    unit,
)
from topolab.filters import ambient_lattice, check_filter_point, member_set


def oracle_prime_filters(kind, space):
    """Independent enumeration: every up-closed, meet-closed, proper subset
    of the ambient lattice, tested for the kind's primality directly."""
    ambient = ambient_lattice(kind, space)
    out = set()
    for picks in range(1 << len(ambient)):
        fam = {ambient[i] for i in range(len(ambient)) if picks >> i & 1}
        if not fam or 0 in fam or space.full not in fam:
            continue
        if any(a & b not in fam for a in fam for b in fam):
            continue
        if any(b in ambient and a in fam and a & b == a and b not in fam
               for a in fam for b in ambient):
            continue
        if kind == ULTRA:
            if not all((m in fam) != (space.full ^ m in fam) for m in ambient):
                continue
        else:
            if any(
                a | b in fam and a not in fam and b not in fam
                for a in ambient
                for b in ambient
            ):
                continue
        out.add(frozenset(fam))
    return out


# --- enumeration ------------------------------------------------------------


def test_open_prime_points_of_e1(e1):
    lifted = lift_space(OPEN_PRIME, e1)
    assert [p.generator for p in lifted.points] == [0b001, 0b111]
    assert find_homeomorphism(lifted.space, build_space(2, [{1}])) is not None


def test_closed_prime_points_of_e1(e1):
    lifted = lift_space(CLOSED_PRIME, e1)
    assert [p.generator for p in lifted.points] == [0b110, 0b111]
    assert find_homeomorphism(lifted.space, build_space(2, [{1}])) is not None


def test_ultra_points_of_discrete(discrete3):
    lifted = lift_space(ULTRA, discrete3)
    assert [p.generator for p in lifted.points] == [1, 2, 4]
    assert len(lifted.space.opens) == 8


def test_enumeration_matches_oracle(classes3):
    for space in classes3:
        for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
            got = {frozenset(p.elements) for p in lift_space(kind, space).points}
            assert got == oracle_prime_filters(kind, space), (kind, space)


def test_filter_points_pass_invariant_audit(classes3):
    for space in classes3:
        for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
            for p in lift_space(kind, space).points:
                check_filter_point(p, space)


# --- functor action ---------------------------------------------------------


def test_lift_identity_is_identity(e1):
    for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
        lifted = lift_map(kind, identity_map(e1))
        assert lifted.map == identity_map(lift_space(kind, e1).space).map


def test_lift_map_example(e1, sierpinski):
    f = ContinuousMap(e1, sierpinski, (1, 0, 0))
    sf = lift_map(OPEN_PRIME, f)
    dom = lift_space(OPEN_PRIME, e1)
    cod = lift_space(OPEN_PRIME, sierpinski)
    # {0}-generated filter lands on the {1}-generated one, the whole-space
    # filter on the whole-space one
    assert cod.points[sf.map[dom.index_of(0b001)]].generator == 0b10
    assert cod.points[sf.map[dom.index_of(0b111)]].generator == 0b11


def test_functor_composition(classes3):
    spaces = classes3[:6]
    for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
        for a in spaces:
            for b in spaces:
                for f in enumerate_continuous_maps(a, b):
                    for g in enumerate_continuous_maps(b, a):
                        lhs = lift_map(kind, compose(g, f))
                        rhs = compose(lift_map(kind, g), lift_map(kind, f))
                        assert lhs.map == rhs.map


# --- units ------------------------------------------------------------------


def test_ultra_unit_is_principal(e1):
    lifted = lift_space(ULTRA, e1)
    eta = unit(ULTRA, e1)
    for x in range(3):
        assert lifted.points[eta(x)].generator == 1 << x


def test_open_unit_on_e1(e1):
    lifted = lift_space(OPEN_PRIME, e1)
    e = unit(OPEN_PRIME, e1)
    assert lifted.points[e(0)].generator == 0b001
    assert lifted.points[e(1)].generator == 0b111
    assert lifted.points[e(2)].generator == 0b111


def test_closed_unit_generators(classes3):
    for space in classes3:
        lifted = lift_space(CLOSED_PRIME, space)
        d = unit(CLOSED_PRIME, space)
        for x in range(space.n):
            assert lifted.points[d(x)].generator == closure(space, 1 << x)


def test_unit_preimage_identity(classes3):
    # preimage of a member-set under the unit recovers the open itself
    for space in classes3:
        eta = unit(ULTRA, space)
        for o in space.opens:
            assert eta.preimage(member_set(ULTRA, space, o)) == o
        e = unit(OPEN_PRIME, space)
        for o in space.opens:
            assert e.preimage(member_set(OPEN_PRIME, space, o)) == o


def test_ultra_unit_is_homeomorphism(classes3):
    for space in classes3:
        assert is_homeomorphism(unit(ULTRA, space))


# --- multiplication ---------------------------------------------------------


def test_mult_open_prime_on_e1(e1):
    m = mult(OPEN_PRIME, e1)
    dom = lift_space(OPEN_PRIME, lift_space(OPEN_PRIME, e1).space)
    cod = lift_space(OPEN_PRIME, e1)
    assert dom.space.n == 2
    # the filter generated by the open point flattens onto the open-point
    # filter, the whole-space one onto the whole-space filter
    assert cod.points[m.map[0]].generator == 0b001
    assert cod.points[m.map[1]].generator == 0b111


def test_mult_after_unit_laws(classes3):
    for space in classes3:
        for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
            lifted = lift_space(kind, space)
            m = mult(kind, space)
            ident = identity_map(lifted.space).map
            assert compose(m, unit(kind, lifted.space)).map == ident
            assert compose(m, lift_map(kind, unit(kind, space))).map == ident


# --- comparison maps --------------------------------------------------------


def test_alpha_commutes_with_units(classes3):
    for space in classes3:
        eta = unit(ULTRA, space)
        for kind in (OPEN_PRIME, CLOSED_PRIME):
            a = alpha(kind, space)
            assert compose(a, eta).map == unit(kind, space).map


def test_alpha_on_e1(e1):
    a = alpha(OPEN_PRIME, e1)
    cod = lift_space(OPEN_PRIME, e1)
    assert cod.points[a.map[0]].generator == 0b001  # principal at the open point
    assert cod.points[a.map[1]].generator == 0b111
    b = alpha(CLOSED_PRIME, e1)
    codb = lift_space(CLOSED_PRIME, e1)
    assert codb.points[b.map[0]].generator == 0b111
    assert codb.points[b.map[1]].generator == 0b110


def test_alpha_surjective(classes3):
    for space in classes3:
        for kind in (OPEN_PRIME, CLOSED_PRIME):
            assert alpha(kind, space).is_surjective


def test_alpha_preimage_of_member_sets(classes3):
    # the preimage of a basic open downstairs is the matching basic open upstairs
    for space in classes3:
        a = alpha(OPEN_PRIME, space)
        for o in space.opens:
            assert a.preimage(member_set(OPEN_PRIME, space, o)) == member_set(
                ULTRA, space, o
            )


# --- structure of the lifted spaces ----------------------------------------


def test_lifted_spaces_stably_compact(classes3):
    for space in classes3:
        for kind in (OPEN_PRIME, CLOSED_PRIME):
            assert classify(lift_space(kind, space).space).is_stably_compact


def test_open_prime_points_are_minimal_neighborhoods(classes4):
    for space in classes4:
        gens = {p.generator for p in lift_space(OPEN_PRIME, space).points}
        assert gens == {minimal_neighborhood(space, x) for x in range(space.n)}


def test_closed_prime_points_are_point_closures(classes4):
    for space in classes4:
        gens = {p.generator for p in lift_space(CLOSED_PRIME, space).points}
        assert gens == {closure(space, 1 << x) for x in range(space.n)}


small_space = st.integers(min_value=1, max_value=3).flatmap(
    lambda n: st.lists(
        st.sets(st.integers(min_value=0, max_value=n - 1)), max_size=3
    ).map(lambda gens: build_space(n, gens))
)


@settings(max_examples=40, deadline=None)
@given(small_space)
def test_random_space_filters_match_oracle(space):
    for kind in (ULTRA, OPEN_PRIME, CLOSED_PRIME):
        got = {frozenset(p.elements) for p in lift_space(kind, space).points}
        assert got == oracle_prime_filters(kind, space)
