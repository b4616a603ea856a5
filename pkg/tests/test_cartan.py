import json

import pytest
from hypothesis import given, strategies as st

from affsat import (
    DomainError,
    IncomparableWeightsError,
    NoHighestWeightError,
    RankError,
    Weight,
    cartan_matrix,
    delta,
    dims_from_weights,
    dominance_leq,
    fundamental_weight,
    is_dominant,
    lowering_vector,
    rho,
    simple_root,
    weight_invariants,
    weights_from_dims,
)

from conftest import lowered


def test_cartan_matrix_n3():
    assert cartan_matrix(3) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_cartan_matrix_n2():
    assert cartan_matrix(2) == ((2, -2), (-2, 2))


def test_cartan_matrix_n4_row0():
    assert cartan_matrix(4)[0] == (2, -1, 0, -1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7])
def test_cartan_matrix_rows_sum_to_zero(n):
    for row in cartan_matrix(n):
        assert sum(row) == 0
        assert row.count(2) >= 1


def test_rank_error():
    with pytest.raises(RankError):
        cartan_matrix(1)
    with pytest.raises(RankError):
        Weight(1, (1,), (0,))


def test_weights_from_dims_tensor_example():
    lam, mu = weights_from_dims(3, (0, 1, 1), (0, 1, 1))
    assert lam == Weight(3, (0, 1, 1), (0, 0, 0))
    assert mu == Weight(3, (0, 1, 1), (0, 1, 1))
    assert is_dominant(lam)


def test_weights_from_dims_trivial():
    lam, mu = weights_from_dims(2, (1, 0), (0, 0))
    assert lam == mu == fundamental_weight(2, 0)


def test_weights_from_dims_delta():
    lam, mu = weights_from_dims(2, (2, 0), (1, 1))
    assert lam.level == 2
    assert mu.delta_degree == 1
    assert mu.pairings() == lam.pairings()  # c = (1,1) is a full delta


def test_weights_from_dims_errors():
    with pytest.raises(DomainError):
        weights_from_dims(2, (1, -1), (0, 0))
    with pytest.raises(NoHighestWeightError):
        weights_from_dims(2, (0, 0), (1, 0))
    with pytest.raises(DomainError):
        weights_from_dims(3, (1, 0), (0, 0, 0))


def test_dims_from_weights_roundtrip():
    lam, mu = weights_from_dims(3, (1, 0, 2), (2, 0, 5))
    assert dims_from_weights(lam, mu) == ((1, 0, 2), (2, 0, 5))


def test_weight_invariants_examples():
    inv = weight_invariants(Weight(2, (1, 0), (1, 0)))
    assert inv == {"level": 1, "delta_degree": 1, "pairings": (-1, 2)}
    inv = weight_invariants(Weight(2, (1, 0), (1, 1)))
    assert inv == {"level": 1, "delta_degree": 1, "pairings": (1, 0)}
    lam = Weight(3, (2, 0, 1), (0, 0, 0))
    assert weight_invariants(lam)["pairings"] == (2, 0, 1)
    assert weight_invariants(lam)["delta_degree"] == 0


def test_is_dominant_examples():
    assert is_dominant(fundamental_weight(2, 0))
    assert not is_dominant(Weight(2, (1, 0), (1, 0)))
    assert is_dominant(Weight(2, (1, 0), (1, 1)))  # Lambda_0 - delta


def test_delta_pairs_to_zero():
    for n in (2, 3, 4):
        assert delta(n).pairings() == (0,) * n
        assert delta(n).level == 0


def test_rho_pairings():
    assert rho(3).pairings() == (1, 1, 1)


def test_level_invariant_under_lowering():
    mu = Weight(3, (1, 1, 0), (4, 1, 2))
    assert mu.level == 2
    assert mu.minus_alpha(2).level == 2


@given(
    n=st.integers(2, 5),
    w=st.lists(st.integers(-3, 3), min_size=2, max_size=5),
    c=st.lists(st.integers(-3, 3), min_size=2, max_size=5),
    i=st.integers(0, 4),
    j=st.integers(0, 4),
)
def test_cartan_linearity(n, w, c, i, j):
    w = (w * n)[:n]
    c = (c * n)[:n]
    mu = Weight(n, tuple(w), tuple(c))
    a = cartan_matrix(n)
    i %= n
    j %= n
    assert mu.plus_alpha(j).pairing(i) == mu.pairing(i) + a[i][j]
    assert mu.minus_alpha(j).pairing(i) == mu.pairing(i) - a[i][j]


def test_dominance_reflexive():
    mu = Weight(2, (1, 0), (3, 1))
    assert dominance_leq(mu, mu)


def test_dominance_delta_example():
    lam = fundamental_weight(2, 0)
    assert dominance_leq(lowered(lam, (1, 1)), lam)
    assert not dominance_leq(lam, lowered(lam, (1, 1)))


def test_dominance_incomparable_lowerings():
    lam = fundamental_weight(2, 0)
    a = lowered(lam, (1, 0))
    b = lowered(lam, (0, 1))
    assert not dominance_leq(a, b)
    assert not dominance_leq(b, a)


def test_dominance_antisymmetry_transitivity():
    lam = fundamental_weight(3, 1)
    chain = [lowered(lam, (0, 0, 0)), lowered(lam, (0, 1, 0)), lowered(lam, (1, 1, 2))]
    assert dominance_leq(chain[2], chain[1]) and dominance_leq(chain[1], chain[0])
    assert dominance_leq(chain[2], chain[0])
    assert not (dominance_leq(chain[0], chain[1]) and dominance_leq(chain[1], chain[0]))


def test_dominance_across_bases():
    # -Lambda_0 + 2 Lambda_1 - alpha_1 is Lambda_0 written against another base.
    nu = fundamental_weight(2, 0)
    mu = Weight(2, (-1, 2), (0, 1))
    assert dominance_leq(nu, mu) and dominance_leq(mu, nu)
    assert lowering_vector(mu, nu) == (0, 0)


def test_dominance_incomparable_bases():
    nu = fundamental_weight(2, 0)
    mu = fundamental_weight(2, 1)
    with pytest.raises(IncomparableWeightsError):
        dominance_leq(nu, mu)


def test_lowering_vector_same_base():
    lam = fundamental_weight(3, 0)
    assert lowering_vector(lam, lowered(lam, (2, 0, 1))) == (2, 0, 1)


def test_weight_json_roundtrip():
    mu = Weight(3, (0, 1, 1), (0, 2, 1))
    obj = json.loads(json.dumps(mu.to_json()))
    assert obj == {"n": 3, "w": [0, 1, 1], "c": [0, 2, 1]}
    assert Weight.from_json(obj) == mu


def test_simple_root_is_lowering_unit():
    for n in (2, 3):
        for i in range(n):
            assert simple_root(n, i).pairings() == tuple(cartan_matrix(n)[j][i] for j in range(n))
