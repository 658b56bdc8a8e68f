import pytest

from rrcf5 import tables
from rrcf5.exactmath import Poly
from rrcf5.pipeline import (
    PipelineIntegrityError,
    build_F_G,
    build_p_q,
    build_Q,
    build_R,
    build_S,
    disc_conjecture_check,
    irreducibility_proxy,
    run_pipeline,
    verify_cor42,
    verify_T_invariance,
)


def test_build_R_printed_values():
    assert build_R(19) == Poly(tables.R_TABLE[19])
    assert build_R(91) == Poly(tables.R_TABLE[91])
    assert build_R(96) == Poly(tables.R_TABLE[96])


def test_build_S_small_cases():
    # exact algebra oracle: with s^2 = s - 3, z = s^5+5s^3+5s = 4s - 24;
    # then z^2+4z+48 = 16(s-3)... = 0, matching the d=11 row
    assert build_S(11) == Poly((3, -1, 1))
    # with s^2 = -s - 5: z = s^5+5s^3+5s = -4s - 20 and z^2+36z+400 = 0
    assert build_S(19) == Poly((5, 1, 1))


def test_build_Q_printed():
    for d in (11, 16, 19):
        assert build_Q(Poly(tables.R_TABLE[d])) == Poly(tables.Q_TABLE[d])


def test_build_Q_rejects_zero_constant_term():
    with pytest.raises(PipelineIntegrityError):
        build_Q(Poly((0, 0, 1)))


def test_build_p_q_printed_cofactor():
    S = Poly((5, 1, 1))
    Q = Poly(tables.Q_TABLE[19])
    p, q = build_p_q(S, Q)
    assert p == Poly(tables.P_TABLE[19])
    assert q == Poly(tables.Q19_COFACTOR)


def test_F19_matches_printed_factorization():
    H = Poly(tables.H_TABLE[19])
    F, _ = build_F_G(H, 1)
    f1, f2 = (Poly(c) for c in tables.F19_FACTORS)
    assert F == f1 * f2


def test_F4_and_G4_printed():
    H = Poly(tables.H_TABLE[4])
    F, Gx5 = build_F_G(H, 1)
    q4, f4 = (Poly(c) for c in tables.F4_FACTORS)
    assert F == (q4 * f4) ** 2
    g = Poly((1,))
    for c in tables.G4_FACTORS:
        g = g * Poly(c) ** 2
    assert Gx5 == g


def test_verify_cor42():
    assert verify_cor42(Poly(tables.R_TABLE[11]), 1)
    assert verify_cor42(Poly(tables.R_TABLE[84]), 4)
    assert not verify_cor42(Poly((1, 0, 1)), 1)  # negative control


def test_verify_T_invariance():
    assert verify_T_invariance(Poly(tables.P_TABLE[11]), 1)
    assert verify_T_invariance(Poly(tables.P_TABLE[36]), 2)
    # cyclotomic near-miss
    assert not verify_T_invariance(Poly((1, -1, 1, -1, 1)), 1)


def test_disc_conjecture_examples():
    rep = disc_conjecture_check(Poly(tables.P_TABLE[11]), 11, 1)
    assert rep.disc == 5 * 11**2
    assert rep.exact_power_ok and rep.smooth_ok
    rep = disc_conjecture_check(Poly(tables.P_TABLE[91]), 91, 2)
    assert dict(rep.factors) == {2: 8, 3: 4, 5: 6, 7: 4, 13: 4}
    assert rep.cofactor == 1


def test_run_pipeline_d11_full():
    r = run_pipeline(11)
    assert r.all_ok
    assert r.p == Poly(tables.P_TABLE[11])
    assert r.R == Poly(tables.R_TABLE[11])
    assert r.Q == Poly(tables.Q_TABLE[11])
    assert r.h == 1 and r.v == 17
    assert r.p.degree == 4 and r.q.degree == 16
    assert abs(r.p.coeffs[0]) == 1


def test_run_pipeline_d24_intermediates():
    r = run_pipeline(24)
    assert r.all_ok
    assert r.R == Poly(tables.R_TABLE[24])
    assert r.H == Poly(tables.H_TABLE[24])
    assert r.p == Poly(tables.P_TABLE[24])
    # Q(x^5) = p * q exactly
    assert r.Q.subst_x_pow(5) == r.p * r.q


def test_run_pipeline_rejects_d4():
    with pytest.raises(PipelineIntegrityError):
        run_pipeline(4)


def test_anti_palindromic_symmetry():
    r = run_pipeline(19)
    for poly in (r.p, r.q):
        n = poly.degree
        # x^n poly(-1/x) == poly
        flipped = Poly([(-1) ** k * c for k, c in enumerate(reversed(poly.coeffs))])
        assert flipped == poly


def test_irreducibility_proxy_small():
    assert irreducibility_proxy(Poly(tables.P_TABLE[11]))
    assert irreducibility_proxy(Poly(tables.P_TABLE[19]))
    # reducible control: Q_11(x) * (x-1)
    assert not irreducibility_proxy(Poly(tables.Q_TABLE[11]) * Poly((-1, 1)))
