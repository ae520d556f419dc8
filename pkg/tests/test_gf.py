import pytest

from diamondkit.gf import FieldTable, factor_prime_power, gf_build, is_prime


def test_prime_field_gf3():
    ft = gf_build(3, 1)
    assert ft.q == 3
    assert ft.modulus == (0, 1)  # x
    assert ft.squares() == frozenset({1})


def test_gf27_tables():
    ft = gf_build(3, 3)
    assert ft.q == 27
    assert len(ft.exp) == 26
    assert len(set(ft.exp)) == 26
    # modulus x^3 + 2x + 1 is the first irreducible in high-degree-first order
    assert ft.modulus == (1, 2, 0, 1)
    # no roots in GF(3) => irreducible for a cubic
    for x in range(3):
        assert (x**3 + 2 * x + 1) % 3 != 0


def test_gf4_valid_even_if_not_paley_usable():
    ft = gf_build(2, 2)
    assert ft.q == 4
    assert len(ft.exp) == 3


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gf_build(4, 1)
    with pytest.raises(ValueError):
        gf_build(3, 0)
    with pytest.raises(ValueError):
        gf_build(2, 17)  # q > 2^16


def test_determinism():
    assert gf_build(7, 2) == gf_build(7, 2)


def test_field_axioms_spot_check():
    ft = gf_build(3, 2)
    for a in range(9):
        assert ft.add(a, 0) == a
        assert ft.sub(a, a) == 0
        assert ft.mul(a, 1) == a
        for b in range(9):
            assert ft.mul(a, b) == ft.mul(b, a)
            assert ft.sub(ft.add(a, b), b) == a
    # distributivity on a sample
    for a in (2, 5, 7):
        for b in (1, 4, 8):
            for c in (3, 6):
                assert ft.mul(a, ft.add(b, c)) == ft.add(ft.mul(a, b), ft.mul(a, c))


def test_squares_split_for_q_3_mod_4():
    for p, k in ((7, 1), (11, 1), (3, 3)):
        ft = gf_build(p, k)
        sq = ft.squares()
        assert len(sq) == (ft.q - 1) // 2
        # q = 3 mod 4: exactly one of x, -x is a square for every nonzero x
        for x in range(1, ft.q):
            neg = ft.sub(0, x)
            assert (x in sq) != (neg in sq)


def test_factor_prime_power():
    assert factor_prime_power(27) == (3, 3)
    assert factor_prime_power(31) == (31, 1)
    assert factor_prime_power(49) == (7, 2)
    with pytest.raises(ValueError):
        factor_prime_power(12)
    with pytest.raises(ValueError):
        factor_prime_power(1)


def test_is_prime():
    assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]
