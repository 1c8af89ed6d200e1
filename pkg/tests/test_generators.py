import itertools
from math import gcd, lcm

import pytest

from shtopo import (
    GenerationError,
    SpecParseError,
    canonical_key,
    chain,
    enumerate_lattices,
    expand_spec_ranges,
    ideal_lattice_zn,
    is_isomorphic,
    named_lattice,
    parse_spec,
    product,
    random_lattice,
    validate,
)


def divisor_index(lat):
    return {l: i for i, l in enumerate(lat.labels)}


def test_zn_prime_is_two_chain():
    lat = ideal_lattice_zn(7)
    assert lat.n == 2
    assert is_isomorphic(lat, chain(2))


def test_z12_structure():
    lat = ideal_lattice_zn(12)
    assert lat.n == 6
    assert lat.label_of(lat.bottom) == "(12)"
    assert lat.label_of(lat.top) == "(1)"
    assert is_isomorphic(lat, product([chain(2), chain(3)]))


def test_zn_join_is_gcd_meet_is_lcm():
    n = 60
    lat = ideal_lattice_zn(n)
    idx = divisor_index(lat)
    divs = [d for d in range(1, n + 1) if n % d == 0]
    for a in divs:
        for b in divs:
            j = lat.join(idx[f"({a})"], idx[f"({b})"])
            m = lat.meet(idx[f"({a})"], idx[f"({b})"])
            assert lat.label_of(j) == f"({gcd(a, b)})"
            assert lat.label_of(m) == f"({lcm(a, b)})"


def test_z12_join_and_meet_examples():
    lat = ideal_lattice_zn(12)
    idx = divisor_index(lat)
    assert lat.join(idx["(4)"], idx["(3)"]) == lat.top  # gcd(4, 3) = 1
    assert lat.meet(idx["(4)"], idx["(6)"]) == lat.bottom  # lcm(4, 6) = 12


def test_z30_is_boolean_cube():
    lat = ideal_lattice_zn(30)
    cube = product([chain(2), chain(2), chain(2)])
    assert lat.n == 8
    assert is_isomorphic(lat, cube)


def test_zn_rejects_bad_sizes():
    with pytest.raises(SpecParseError):
        ideal_lattice_zn(1)
    with pytest.raises(SpecParseError):
        ideal_lattice_zn(10**6 + 1)


def test_zn_distributive_up_to_200():
    for n in range(2, 201):
        assert ideal_lattice_zn(n).is_distributive, n


def test_product_of_two_chains_is_boolean_square():
    sq = product([chain(2), chain(2)])
    assert is_isomorphic(sq, named_lattice("b2"))


def test_product_crt():
    assert is_isomorphic(product([ideal_lattice_zn(4), ideal_lattice_zn(9)]),
                         ideal_lattice_zn(36))


def test_product_with_trivial_factor():
    lat = product([chain(1), ideal_lattice_zn(12)])
    assert is_isomorphic(lat, ideal_lattice_zn(12))


def test_product_needs_two_factors():
    with pytest.raises(SpecParseError):
        product([chain(2)])


def test_product_of_distributive_is_distributive():
    factors = [chain(3), ideal_lattice_zn(12), named_lattice("b2")]
    for a, b in itertools.combinations(factors, 2):
        assert product([a, b]).is_distributive


# -- enumeration ---------------------------------------------------------------


def is_poset(n, rel):
    for a in range(n):
        if (a, a) not in rel:
            return False
    for a, b in rel:
        if a != b and (b, a) in rel:
            return False
        for c in range(n):
            if (b, c) in rel and (a, c) not in rel:
                return False
    return True


def is_bounded_lattice(n, rel):
    le = lambda a, b: (a, b) in rel
    if not any(all(le(b, x) for x in range(n)) for b in range(n)):
        return False
    if not any(all(le(x, t) for x in range(n)) for t in range(n)):
        return False
    for a in range(n):
        for b in range(n):
            ubs = [c for c in range(n) if le(a, c) and le(b, c)]
            if len([c for c in ubs if all(le(c, d) for d in ubs)]) != 1:
                return False
            lbs = [c for c in range(n) if le(c, a) and le(c, b)]
            if len([c for c in lbs if all(le(d, c) for d in lbs)]) != 1:
                return False
    return True


def brute_force_lattice_count(n):
    """Unlabeled bounded lattices on n elements, fully independently.

    Enumerates every subset of the strict ordered pairs, filters posets and
    bounded lattices, and dedupes by permutation orbit.
    """
    strict_pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    seen = set()
    count = 0
    for bits in range(1 << len(strict_pairs)):
        rel = {(a, a) for a in range(n)}
        for i, p in enumerate(strict_pairs):
            if bits >> i & 1:
                rel.add(p)
        if not is_poset(n, rel) or not is_bounded_lattice(n, rel):
            continue
        canon = min(
            tuple(sorted((perm[a], perm[b]) for a, b in rel))
            for perm in itertools.permutations(range(n))
        )
        if canon not in seen:
            seen.add(canon)
            count += 1
    return count


def test_enumeration_counts_match_independent_brute_force():
    for n in range(1, 5):
        mine = sum(1 for lat in enumerate_lattices(n) if lat.n == n)
        assert mine == brute_force_lattice_count(n), n


def test_enumeration_of_size_one():
    only = list(enumerate_lattices(1))
    assert len(only) == 1 and only[0].n == 1


def test_enumeration_counts_sizes_1_to_5():
    counts = {}
    for lat in enumerate_lattices(5):
        counts[lat.n] = counts.get(lat.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 1, 4: 2, 5: 5}
    assert sum(counts.values()) == 10


def test_enumeration_is_exhaustive_up_to_isomorphism():
    reps = [lat for lat in enumerate_lattices(4)]
    keys = {canonical_key(lat) for lat in reps}
    assert len(keys) == len(reps)  # no isomorphic duplicates
    # every labeled lattice matches one representative
    for lat in enumerate_lattices(4, distinct=False):
        assert canonical_key(lat) in keys


def test_labeled_enumeration_counts():
    counts = {}
    for lat in enumerate_lattices(5, distinct=False):
        counts[lat.n] = counts.get(lat.n, 0) + 1
    assert counts == {1: 1, 2: 2, 3: 6, 4: 36, 5: 380}


def test_every_enumerated_lattice_validates():
    for lat in enumerate_lattices(5):
        again = validate(lat.n, [(a, b) for a in range(lat.n) for b in range(lat.n)
                                 if a != b and lat.le(a, b)], relation="le")
        assert again.n == lat.n


def test_enumeration_bound_is_enforced():
    with pytest.raises(SpecParseError):
        list(enumerate_lattices(8))


def test_enumeration_order_is_deterministic():
    a = [lat.cover_pairs for lat in enumerate_lattices(5)]
    b = [lat.cover_pairs for lat in enumerate_lattices(5)]
    assert a == b


# -- random generation -----------------------------------------------------------


def test_random_lattice_determinism():
    a = random_lattice(8, 42)
    b = random_lattice(8, 42)
    assert a == b
    assert a.n == 8


def test_random_lattice_size_one():
    assert random_lattice(1, 123).n == 1


def test_random_lattices_validate_posthoc():
    for seed in range(10):
        lat = random_lattice(9, seed)
        pairs = [(a, b) for a in range(lat.n) for b in range(lat.n)
                 if a != b and lat.le(a, b)]
        validate(lat.n, pairs, relation="le")


def test_random_lattice_gives_up_gracefully():
    with pytest.raises((GenerationError, SpecParseError)):
        random_lattice(0, 1)


# -- spec strings -----------------------------------------------------------------


def test_parse_spec_forms():
    assert parse_spec("zn:12").n == 6
    assert parse_spec("chain:4").n == 4
    assert parse_spec("m3").n == 5
    assert parse_spec("N5").n == 5
    assert parse_spec("prod(zn:4,zn:9)").n == 9
    assert parse_spec("prod(chain:2,prod(chain:2,chain:2))").n == 8


def test_parse_spec_errors():
    for bad in ("", "zn:x", "zn:", "mystery", "prod(zn:4)", "prod(zn:4", "chain:"):
        with pytest.raises(SpecParseError):
            parse_spec(bad)


def test_expand_spec_ranges():
    assert expand_spec_ranges("zn:2..5") == ["zn:2", "zn:3", "zn:4", "zn:5"]
    assert expand_spec_ranges("zn:12") == ["zn:12"]
    assert expand_spec_ranges("m3") == ["m3"]
    with pytest.raises(SpecParseError):
        expand_spec_ranges("zn:9..2")
