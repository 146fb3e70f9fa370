from fractions import Fraction

import pytest

import crystal_dt as cd


def plane_partitions(n):
    # counts by stacking rows, each dominated by the row above
    counts = [0] * (n + 1)

    def rows(above, used):
        counts[used] += 1

        def fill(j, cur, total):
            if cur:
                rows(cur, total)
            if j >= len(above):
                return
            cap = min(above[j], cur[-1] if cur else above[j])
            for v in range(1, cap + 1):
                if total + v > n:
                    break
                fill(j + 1, cur + [v], total + v)

        fill(0, [], used)

    rows([n] * n, 0)
    return counts


def test_c3_enumeration():
    z = cd.enumerate_z(cd.c3_spec(), 7)
    assert [z.get((k,), 0) for k in range(8)] == plane_partitions(7)
    assert z == cd.macmahon(7)


def test_conifold_engines_agree():
    for n in range(3):
        z = cd.enumerate_z(cd.conifold_theta(n), 6)
        assert z == cd.conifold_product(n, 6)
        assert cd.toeplitz_conifold(n, 6)[0] == z
        assert cd.enumerate_z(cd.conifold_theta(n), 6, transposed=True) == z


def test_matrix_model_c3():
    value, n = cd.toeplitz_c3(6)
    assert value == cd.macmahon(6)
    assert n <= 4 * 8


def test_chamber_spec():
    s = cd.ChamberSpec.make(2, [1, -1], [-1, 5])
    assert s == cd.conifold_theta(1)
    assert s.weights() == [[-1, 0], [2, 1]]
    with pytest.raises(cd.InvalidInput):
        cd.ChamberSpec.make(2, [1, -1], [1, 1])


def test_lgv():
    det, brute = cd.lgv_six_weight()
    assert det == brute == {(1, 0, 1, 1, 1, 0): 1}
    for seed in range(1, 11):
        a, b = cd.lgv_random(seed)
        assert a == b
    assert cd.lgv_walkers(cd.c3_spec(), 4, 4) == cd.macmahon(4)
    with pytest.raises(cd.Unsupported):
        cd.lgv_walkers(cd.conifold_theta(1), 2, 2)


def test_spectral():
    q1, q2, q3 = cd.mirror_map(Fraction(2, 3), Fraction(1, 5), Fraction(1, 7))
    eps2, mu, Q = Fraction(1, 7), Fraction(1, 5), Fraction(2, 3)
    fa, fb, fc = 1 + mu * eps2, 1 + Q * eps2, 1 + mu * Q
    assert (q1, q2, q3) == (eps2 * fc / (fa * fb), mu * fb / (fc * fa), Q * fa / (fb * fc))
    assert cd.s3_equivariance_check("3/4", "5/6", "1/9")
    r = cd.spp_limit_check(Fraction(1, 2), Fraction(1, 3))
    assert r["ok"] and r["A"] == Fraction(6, 7) and r["B"] == 1
    assert cd.spp_identity_squared(1, 4)


def test_big_coefficients_are_python_ints():
    z = cd.macmahon(100)
    assert isinstance(z[(100,)], int)
    assert z[(100,)] > 2**48


def test_run_job_and_verify():
    report = cd.run_job("conifold", 4, chamber=1, engines=["enumerate", "product", "toeplitz"])
    assert report["agree"] is True
    checks = cd.verify_all(max_degree=4)
    assert checks and all(c["passed"] for c in checks)
    faulty = cd.verify_all(max_degree=3, inject_fault=True)
    assert sum(not c["passed"] for c in faulty) == 1
    with pytest.raises(cd.InvalidInput):
        cd.run_job("nowhere", 3)
