import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkring.adams import g_poly
from qkring.kring import (KElement, apply_rule_once, basis_change_matrix,
                          embed_to_R, fp_from_phipoly, fp_mul, fp_neg,
                          k_one, k_phi_power, k_v1, k_v2, k_zero, mono_name,
                          multiply_nf, nf_basis, nf_basis_labels, reduce,
                          relations_for, rewrite, verify_embedding,
                          verify_local_confluence, verify_minimality_witness,
                          verify_relation3_redundant, verify_relations_in_R)
from qkring.repring import (GroupParams, RepElement, eta1, multiply, one,
                            phi_element)

V1, V2, PHI = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def ke(n, c0=0, v1=0, v2=0, phi=()):
    k = GroupParams(n).k
    phi = tuple(phi) + (0,) * (k - len(phi))
    return KElement(n, c0, v1, v2, phi)


def test_relation_right_sides():
    r3 = relations_for(3)
    assert r3.relation("relation6").rhs_fp() == {
        (0, 0, 2): 1, PHI: 4, V1: -2, V2: -2}
    r4 = relations_for(4)
    assert r4.relation("relation6").rhs_fp() == {
        (0, 0, 4): 1, (0, 0, 3): 8, (0, 0, 2): 20, PHI: 16, V2: -2}
    for n in (3, 4, 5, 6):
        assert relations_for(n).relation("relation4").rhs_fp() == {V1: -2}
    # relation 5 for n=4: psi^3(phi) - phi - 2*v2
    assert r4.relation("relation5").rhs_fp() == {
        (0, 0, 3): 1, (0, 0, 2): 6, PHI: 8, V2: -2}


def test_reduce_examples():
    assert reduce({(1, 1, 0): 1}, 3) == ke(3, v1=-2, v2=-2, phi=(4, 1))
    for n in (3, 4, 5):
        assert reduce({(1, 0, 1): 1}, n) == ke(n, v1=-2)
    # phi^3 at k=2 falls back through g_4 = phi^3 + 6*phi^2 + 8*phi
    assert reduce({(0, 0, 3): 1}, 3) == ke(3, phi=(-8, -6))
    assert reduce({}, 3) == k_zero(3)


def test_reduce_idempotent_on_normal_forms():
    pairs = [(a, b) for a in nf_basis(4) for b in nf_basis(4)]
    for a, b in pairs:
        nf = multiply_nf(a, b)
        assert reduce(nf.to_fp(), 4) == nf


@settings(max_examples=30)
@given(st.sampled_from([3, 4, 5]), st.data())
def test_reduce_idempotent_random(n, data):
    monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 6))
    fp = data.draw(st.dictionaries(monos, st.integers(-5, 5), max_size=5))
    nf = reduce(fp, n)
    assert reduce(nf.to_fp(), n) == nf


def test_multiply_nf_examples():
    assert multiply_nf(k_v2(4), k_phi_power(4, 1)) == ke(4, v2=-2, phi=(8, 6, 1))
    assert multiply_nf(k_v1(3), k_v1(3)) == ke(3, v1=-2)
    for b in nf_basis(5):
        assert multiply_nf(k_one(5), b) == b


def test_kelement_operators():
    a = ke(3, c0=1, v1=2, phi=(3, 0))
    assert a + a == 2 * a
    assert a - a == k_zero(3)
    assert -a == -1 * a
    assert a * k_one(3) == a
    with pytest.raises(ValueError):
        a + ke(4)


def test_embed_examples():
    p3 = GroupParams(3)
    assert embed_to_R(k_v1(3)) == eta1(p3) - one(p3)
    assert embed_to_R(k_one(3)) == one(p3)
    phi2 = embed_to_R(k_phi_power(3, 2))
    assert phi2 == RepElement.from_json_dict(
        p3, {"one": 5, "eta1": 1, "eta2": 1, "eta3": 1, "d": {"1": -4}})
    assert phi2 == phi_element(p3) * phi_element(p3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_embedding_commutes_with_product(n):
    basis = nf_basis(n)
    images = [embed_to_R(b) for b in basis]
    for a, ia in zip(basis, images):
        for b, ib in zip(basis, images):
            assert embed_to_R(multiply_nf(a, b)) == multiply(ia, ib)


@pytest.mark.parametrize("n,size", [(3, 5), (4, 7), (6, 19)])
def test_basis_change_unimodular(n, size):
    matrix, unimodular = basis_change_matrix(n)
    assert len(matrix) == size and all(len(row) == size for row in matrix)
    assert unimodular


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relations_in_R(n):
    report = verify_relations_in_R(n)
    assert report.all_passed
    names = [c.name for c in report.checks]
    assert "relation3" in names
    if n >= 4:
        assert any(name.startswith(f"d_{GroupParams(n).k} - d_0") for name in names)


def test_relations_in_R_check_count():
    # 5 presentation relations + relation3 + odd-i identities (+ d_k - d_0)
    assert len(verify_relations_in_R(3).checks) == 7
    assert len(verify_relations_in_R(4).checks) == 9


@pytest.mark.parametrize("n", [3, 4, 7])
def test_relation3_redundant(n):
    assert verify_relation3_redundant(n)


def test_redundancy_lands_on_minus_g():
    # the reduced product is exactly -g_{2k}, with no phi^(k+1) rule used
    rset = relations_for(4)
    diff = rset.relation("relation6").difference()
    prod = fp_mul({PHI: 1, (0, 0, 0): 2}, diff)
    red = rewrite(prod, rset,
                  labels=("relation1", "relation2", "relation4", "relation5"))
    assert red == fp_neg(fp_from_phipoly(g_poly(4)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_minimality(n):
    assert verify_minimality_witness(n)


def test_minimality_specific_witnesses():
    rset = relations_for(4)
    keep_without = lambda drop: tuple(
        lab for lab in rset.rule_labels() if lab != drop)
    # without relation 6, v1*v2 is stuck
    red = rewrite({(1, 1, 0): 1}, rset, keep_without("relation6"))
    assert (1, 1, 0) in red
    # without relation 4, v1*phi is stuck
    red = rewrite({(1, 0, 1): 1}, rset, keep_without("relation4"))
    assert (1, 0, 1) in red


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_local_confluence(n):
    report = verify_local_confluence(n)
    assert report.all_passed
    assert len(report.checks) == 7


def test_apply_rule_once():
    rset = relations_for(3)
    rule1 = next(r for r in rset.rules if r.label == "relation1")
    assert apply_rule_once((2, 1, 0), rule1) == {(1, 1, 0): -2}
    with pytest.raises(ValueError):
        apply_rule_once((0, 1, 0), rule1)


def test_linear_relation_consequence():
    # 4k*phi = f(phi)*phi^2 with f integral: equivalently g reduces to zero
    for n in (3, 4, 5):
        k = GroupParams(n).k
        g = g_poly(k)
        f = {j - 2: -g.coeff(j) for j in range(2, k + 2)}  # -(g - 4k phi)/phi^2
        fp = {PHI: 4 * k}
        for e, c in f.items():
            fp[(0, 0, e + 2)] = fp.get((0, 0, e + 2), 0) - c
        assert reduce(fp, n) == k_zero(n)
        assert reduce(fp_from_phipoly(g), n) == k_zero(n)


@pytest.mark.parametrize("n", [3, 4])
def test_verify_embedding_report(n):
    report = verify_embedding(n)
    assert report.all_passed
    size = GroupParams(n).basis_size
    assert len(report.checks) == 1 + size * size


def test_json_round_trip():
    a = ke(4, c0=-3, v1=2, v2=0, phi=(1, 0, -7, 4))
    data = a.to_json_dict()
    assert data == {"c0": "-3", "v1": "2", "v2": "0", "phi": ["1", "0", "-7", "4"]}
    assert KElement.from_json_dict(4, data) == a


def test_str_and_labels():
    assert str(ke(3, c0=1, v1=-2, phi=(0, 3))) == "3*phi^2 - 2*v1 + 1"
    assert mono_name((1, 2, 3)) == "v1*v2^2*phi^3"
    assert mono_name((0, 0, 0)) == "1"
    assert nf_basis_labels(3) == ["1", "v1", "v2", "phi", "phi^2"]
