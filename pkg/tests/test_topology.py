import pytest

from shtopo import (
    AxiomViolation,
    FiniteTopology,
    chain,
    ideal_lattice_zn,
    named_lattice,
    sh_set,
    sh_topology,
    w_base,
    w_topology,
)


def idx(lat):
    return {l: i for i, l in enumerate(lat.labels)}


def isolated_by_scan(top, s):
    """Definitional oracle: scan every open set."""
    s = frozenset(s)
    return frozenset(x for x in s if any(o & s == {x} for o in top.open_sets))


def label_family(lat, family):
    return sorted(
        tuple(sorted(lat.label_of(e) for e in c)) for c in family
    )


def test_z12_sh_closed_sets_exactly():
    lat = ideal_lattice_zn(12)
    top = sh_topology(sh_set(lat))
    assert label_family(lat, top.closed_sets) == [
        (),
        ("(3)", "(4)", "(6)"),
        ("(3)", "(6)"),
        ("(4)",),
        ("(4)", "(6)"),
        ("(6)",),
    ]


def test_zpq_sh_topology_is_discrete():
    lat = ideal_lattice_zn(15)
    top = sh_topology(sh_set(lat))
    assert len(top.points) == 2
    assert len(top.closed_sets) == 4  # every subset closed
    assert top.is_t1() and top.is_hausdorff()


def test_empty_point_set_topology(m3):
    top = sh_topology(sh_set(m3))
    assert top.points == frozenset()
    assert top.closed_sets == frozenset({frozenset()})
    assert top.is_t0() and top.is_t1() and top.is_hausdorff()
    cb = top.cantor_bendixson()
    assert cb.derived_dimension == 0 and cb.strata == ()


def test_singleton_topology_is_trivial():
    lat = ideal_lattice_zn(2)  # X = {(1)}: a single point
    top = sh_topology(sh_set(lat))
    assert len(top.points) == 1
    assert top.is_indiscrete()


def test_sh_axioms_hold_across_corpus(small_corpus):
    for lat in small_corpus:
        top = sh_topology(sh_set(lat))  # raises AxiomViolation on a bug
        assert top.axiom_violations() == []
        assert top.is_t0()


def test_axiom_violation_detection_on_a_bad_family():
    bad = FiniteTopology({0, 1, 2}, [frozenset(), frozenset({0, 1, 2}),
                                     frozenset({0}), frozenset({1})])
    # {0} | {1} = {0,1} is missing
    assert any("union" in msg for msg in bad.axiom_violations())


def test_w_topology_z12_singleton_three_not_open():
    lat = ideal_lattice_zn(12)
    sh = sh_set(lat)
    top = w_topology(sh)
    i = idx(lat)
    assert not top.is_open({i["(3)"]})  # every basic open with (3) contains (6)
    assert top.is_open({i["(6)"], i["(3)"]})
    assert top.is_open({i["(4)"]})


def test_w_equals_sh_when_discrete():
    lat = ideal_lattice_zn(15)
    sh = sh_set(lat)
    assert w_topology(sh).open_sets == sh_topology(sh).open_sets


def test_w_base_properties(small_corpus):
    for lat in small_corpus:
        sh = sh_set(lat)
        base = w_base(sh)
        top = w_topology(sh)
        for b in base:
            assert top.is_open(b)
        union = frozenset().union(*base) if base else frozenset()
        assert union == sh.x_points


def test_t0_t1_hausdorff_fixtures():
    indiscrete = FiniteTopology({0, 1}, [frozenset(), frozenset({0, 1})])
    assert not indiscrete.is_t0()
    assert not indiscrete.is_t1()
    assert not indiscrete.is_hausdorff()

    z12 = ideal_lattice_zn(12)
    shtop = sh_topology(sh_set(z12))
    assert shtop.is_t0()
    assert not shtop.is_t1()  # (6) < (3)
    assert not shtop.is_hausdorff()

    empty = FiniteTopology((), [frozenset()])
    single = FiniteTopology({5}, [frozenset(), frozenset({5})])
    for t in (empty, single):
        assert t.is_t0() and t.is_t1() and t.is_hausdorff()


def test_isolated_points_examples():
    z12 = ideal_lattice_zn(12)
    sh = sh_set(z12)
    top = w_topology(sh)
    i = idx(z12)
    assert top.isolated_points(sh.x_points) == {i["(6)"], i["(4)"]}
    assert top.isolated_points({i["(3)"]}) == {i["(3)"]}
    # discrete space: everything isolated
    disc = sh_topology(sh_set(ideal_lattice_zn(15)))
    assert disc.isolated_points(disc.points) == disc.points


def test_isolated_points_agree_with_open_set_scan(small_corpus):
    for lat in small_corpus:
        sh = sh_set(lat)
        for top in (w_topology(sh), sh_topology(sh)):
            xs = sorted(top.points)
            for mask in range(1 << len(xs)):
                s = frozenset(x for b, x in enumerate(xs) if mask >> b & 1)
                assert top.isolated_points(s) == isolated_by_scan(top, s)


def test_derived_set_examples():
    z12 = ideal_lattice_zn(12)
    sh = sh_set(z12)
    top = w_topology(sh)
    i = idx(z12)
    assert top.derived_set(sh.x_points) == {i["(3)"]}
    disc = sh_topology(sh_set(ideal_lattice_zn(15)))
    assert disc.derived_set(disc.points) == frozenset()
    # 3-chain of sh points: only the least element is isolated
    p3 = ideal_lattice_zn(8)
    shp = sh_set(p3)
    wt = w_topology(shp)
    der = wt.derived_set(shp.x_points)
    assert der == frozenset(sorted(shp.x_points, key=lambda e: len(p3.down_set(e)))[1:])


def test_cantor_bendixson_z12():
    z12 = ideal_lattice_zn(12)
    sh = sh_set(z12)
    cb = w_topology(sh).cantor_bendixson()
    i = idx(z12)
    assert cb.derived_dimension == 2
    assert cb.strata == (frozenset({i["(6)"], i["(4)"]}), frozenset({i["(3)"]}))
    assert cb.levels[0] == sh.x_points and cb.levels[-1] == frozenset()


def test_cantor_bendixson_chains():
    for p, k in ((2, 4), (3, 3), (5, 2)):
        sh = sh_set(ideal_lattice_zn(p**k))
        cb = w_topology(sh).cantor_bendixson()
        assert cb.derived_dimension == k
        assert all(len(s) == 1 for s in cb.strata)


def test_cb_strata_partition_points(small_corpus):
    for lat in small_corpus:
        sh = sh_set(lat)
        cb = w_topology(sh).cantor_bendixson()
        seen = set()
        for s in cb.strata:
            assert not (seen & s)
            seen |= s
        assert seen == set(sh.x_points)
        for a, b in zip(cb.levels, cb.levels[1:]):
            assert b < a


def test_cb_levels_closed_in_w(small_corpus):
    for lat in small_corpus:
        sh = sh_set(lat)
        top = w_topology(sh)
        for lv in top.cantor_bendixson().levels:
            assert top.is_closed(lv)


def test_minimal_open_is_open(small_corpus):
    for lat in small_corpus:
        sh = sh_set(lat)
        for top in (sh_topology(sh), w_topology(sh)):
            for x in top.points:
                assert top.is_open(top.minimal_open_of(x))


def test_closure_and_t0():
    z12 = ideal_lattice_zn(12)
    sh = sh_set(z12)
    top = sh_topology(sh)
    i = idx(z12)
    assert top.closure({i["(6)"]}) == {i["(6)"]}
    assert top.closure({i["(3)"]}) == {i["(3)"], i["(6)"]}
