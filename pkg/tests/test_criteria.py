import numpy as np
import pytest

from ctmoments import (
    bell,
    ccnr_criterion,
    dv_bound,
    dv_criterion,
    evaluate_all,
    ghz,
    li_bound,
    li_criterion,
    maximally_mixed,
    multi_canonical_bound,
    multi_plain_bound,
    ppt_criterion,
    pure_product,
    theorem1,
    theorem2,
    theorem3,
    tiles_ppt,
    werner,
)
from ctmoments.criteria import BIPARTITE_ORDER, MULTIPARTITE_ORDER
from ctmoments.errors import NotBipartite
from ctmoments.states import random_density, random_separable


def test_bound_values():
    assert abs(dv_bound(2, 2) - 0.25) < 1e-15
    assert abs(dv_bound(3, 3) - 1 / 3) < 1e-15
    assert abs(li_bound(2, 2) - 0.5) < 1e-15
    assert abs(li_bound(3, 3) - 4 / 9) < 1e-15
    # multipartite bounds reduce to the bipartite ones at n = 2
    assert abs(multi_plain_bound((2, 2)) - dv_bound(2, 2)) < 1e-15
    assert abs(multi_canonical_bound((3, 3)) - li_bound(3, 3)) < 1e-15
    assert abs(multi_plain_bound((2, 2, 2)) - 0.125) < 1e-15
    assert abs(multi_canonical_bound((2, 2, 2)) - 2 ** (-1.5)) < 1e-15


def test_bell_baselines():
    rho = bell()
    ppt = ppt_criterion(rho)
    assert ppt.violated and abs(ppt.quantity - 0.5) < 1e-12
    ccnr = ccnr_criterion(rho)
    assert ccnr.violated and abs(ccnr.quantity - 2.0) < 1e-12
    dv = dv_criterion(rho)
    assert dv.violated and abs(dv.quantity - 0.75) < 1e-12
    assert abs(dv.bound - 0.25) < 1e-15
    li = li_criterion(rho)
    assert li.violated and abs(li.quantity - 1.0) < 1e-12


def test_bell_theorem1():
    plain, canon = theorem1(bell())
    # three singular values 1/4: a2 = 3/16, a3 = 3/64
    assert abs(plain.quantity - (3 / 16) ** 2) < 1e-14
    assert abs(plain.bound - 0.25 * 3 / 64) < 1e-14
    assert plain.violated and canon.violated


def test_bell_theorem2():
    plain, canon = theorem2(bell())
    assert plain.violated and canon.violated
    assert plain.detail["b_min_eigenvalues"][0] < 0
    assert abs(plain.detail["substituted_a1"] - 0.25) < 1e-15


def test_werner_entangled_d3():
    rho = werner(3, -0.5)
    plain, canon = theorem1(rho)
    # eight singular values 2.5/48 > 1/24, so a2^2 > a3 / 3
    assert plain.violated
    assert dv_criterion(rho).violated
    assert ppt_criterion(rho).violated


@pytest.mark.parametrize("d", [2, 3])
def test_werner_separable_clean(d):
    for x in (0.0, 0.5, 1.0):
        reports = evaluate_all(werner(d, x))
        assert not any(r.violated for r in reports), (d, x)


def test_maximally_mixed_clean():
    reports = evaluate_all(maximally_mixed((2, 2)))
    assert not any(r.violated for r in reports)
    reports = evaluate_all(maximally_mixed((2, 2, 2)))
    assert not any(r.violated for r in reports)


def test_include_hk_is_opt_in():
    # H_hat_1 of the maximally mixed state is indefinite after substitution,
    # so the H family must not count by default
    rho = maximally_mixed((2, 2))
    plain, _ = theorem2(rho)
    assert not plain.violated
    assert plain.detail["h_min_eigenvalues"][0] < 0
    plain_hk, _ = theorem2(rho, include_hk=True)
    assert plain_hk.violated


def test_tiles_ppt_blind_ccnr_sees():
    rho = tiles_ppt()
    assert not ppt_criterion(rho).violated
    assert ccnr_criterion(rho).violated


def test_pure_product_saturates_without_flagging():
    rho = pure_product([[1, 0], [1, 0]])
    plain, canon = theorem1(rho)
    # single sigma = 1/4 sits exactly on the bound: margin 0, not violated
    assert abs(plain.margin) < 1e-12 and not plain.violated
    assert abs(canon.margin) < 1e-12 and not canon.violated
    assert not dv_criterion(rho).violated
    assert not li_criterion(rho).violated


def test_ghz3_theorem3():
    plain, canon = theorem3(ghz(3))
    assert canon.violated
    assert abs(canon.quantity - 1 / 64) < 1e-12
    assert abs(canon.bound - 1 / 128) < 1e-12
    assert len(canon.detail["modes"]) == 3
    for m in canon.detail["modes"]:
        assert m["margin"] > 0
    assert plain.violated  # sigma = sqrt(2)/8 twice per mode exceeds 1/8 bound


def test_theorem3_matches_theorem1_at_n2():
    rng = np.random.default_rng(41)
    for _ in range(10):
        rho = random_density((2, 3), rng)
        t1p, t1c = theorem1(rho)
        t3p, t3c = theorem3(rho)
        assert abs(t1p.margin - t3p.margin) < 1e-10
        assert abs(t1c.margin - t3c.margin) < 1e-10


def test_bipartite_criteria_reject_multipartite():
    rho = ghz(3)
    for fn in (ppt_criterion, ccnr_criterion, theorem1, theorem2):
        with pytest.raises(NotBipartite):
            fn(rho)


def test_evaluate_all_report_order():
    names = [r.name for r in evaluate_all(bell())]
    assert names == list(BIPARTITE_ORDER)
    names = [r.name for r in evaluate_all(ghz(3))]
    assert names == list(MULTIPARTITE_ORDER)


def test_report_margin_consistency():
    for r in evaluate_all(werner(3, -1.0)):
        assert abs(r.margin - (r.quantity - r.bound)) < 1e-12


def test_local_unitary_invariance():
    rng = np.random.default_rng(43)
    rho = bell()
    u = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))[0]
    v = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))[0]
    w = np.kron(u, v)
    from ctmoments import DensityMatrix

    rotated = DensityMatrix((2, 2), w @ rho.mat @ w.conj().T)
    for fn in (dv_criterion, li_criterion, ccnr_criterion):
        assert abs(fn(rho).quantity - fn(rotated).quantity) < 1e-10
    p0, c0 = theorem1(rho)
    p1, c1 = theorem1(rotated)
    assert abs(p0.margin - p1.margin) < 1e-10
    assert abs(c0.margin - c1.margin) < 1e-10


def test_separable_states_never_flagged():
    rng = np.random.default_rng(47)
    for dims in [(2, 2), (3, 3)]:
        for _ in range(10):
            rho = random_separable(dims, rng)
            assert not any(r.violated for r in evaluate_all(rho)), dims


def test_tolerance_blocks_tiny_margins():
    rho = werner(2, 0.0)
    plain, _ = theorem1(rho, tol=1.0)
    assert not plain.violated
    plainb, _ = theorem1(werner(2, -1.0), tol=1.0)
    assert not plainb.violated  # huge tol suppresses even a real violation


def test_to_dict_round_trip_fields():
    d = ppt_criterion(bell()).to_dict()
    assert set(d) == {"name", "quantity", "bound", "violated", "margin", "detail"}
    assert d["violated"] is True
