from hypothesis import given, settings
from hypothesis import strategies as st

from shtopo import (
    dclk_dimension_oracle,
    ideal_lattice_zn,
    product,
    random_lattice,
    sh_set,
    sh_topology,
    w_topology,
    y_filtration,
)


@given(n=st.integers(2, 200))
def test_zn_lattices_are_distributive(n):
    assert ideal_lattice_zn(n).is_distributive


@given(n=st.integers(2, 120))
def test_zn_sh_elements_are_prime_power_complements(n):
    # (d) is nonzero sh iff n/d is a prime power: the join-irreducibles of
    # a divisor lattice read through the ideal order
    lat = ideal_lattice_zn(n)
    sh = sh_set(lat)
    def is_prime_power(m):
        if m < 2:
            return False
        p = next(q for q in range(2, m + 1) if m % q == 0)
        while m % p == 0:
            m //= p
        return m == 1
    expected = {f"({d})" for d in range(1, n) if n % d == 0 and is_prime_power(n // d)}
    assert set(sh.x_labels()) == expected


@given(size=st.integers(1, 10), seed=st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_random_lattice_is_deterministic_and_valid(size, seed):
    a = random_lattice(size, seed)
    b = random_lattice(size, seed)
    assert a == b
    assert a.n == size
    assert a.le(a.bottom, a.top)


@given(size=st.integers(2, 9), seed=st.integers(0, 10**4))
@settings(max_examples=40, deadline=None)
def test_dimension_relation_on_random_lattices(size, seed):
    sh = sh_set(random_lattice(size, seed))
    dclk = y_filtration(sh).dimension
    assert dclk == dclk_dimension_oracle(sh)
    derived = w_topology(sh).cantor_bendixson().derived_dimension
    assert derived == dclk + 1 if sh.x_points else derived == 0


@given(size=st.integers(2, 9), seed=st.integers(0, 10**4))
@settings(max_examples=40, deadline=None)
def test_sh_topology_axioms_and_t0_on_random_lattices(size, seed):
    sh = sh_set(random_lattice(size, seed))
    top = sh_topology(sh)  # raises AxiomViolation on failure
    assert top.is_t0()


@given(a=st.integers(2, 40), b=st.integers(2, 40))
@settings(max_examples=30, deadline=None)
def test_product_of_zn_lattices_is_distributive(a, b):
    assert product([ideal_lattice_zn(a), ideal_lattice_zn(b)]).is_distributive


@given(n=st.integers(2, 99), m=st.integers(2, 99))
@settings(max_examples=50, deadline=None)
def test_v_join_union_identity_on_zn(n, m):
    lat = ideal_lattice_zn(n)
    sh = sh_set(lat)
    i = n % lat.n
    j = m % lat.n
    assert sh.v_of(lat.join(i, j)) == sh.v_of(i) | sh.v_of(j)
