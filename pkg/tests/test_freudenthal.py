import pytest

from affsat import (
    DomainError,
    PositiveRoot,
    Weight,
    freudenthal_multiplicity,
    fundamental_weight,
    positive_roots,
)

from conftest import dominant_bases, lowered


def test_positive_roots_n2_bound0():
    assert {r.coeffs for r in positive_roots(2, 0)} == {(0, 1)}


def test_positive_roots_n2_bound1():
    roots = {r.coeffs: r.multiplicity for r in positive_roots(2, 1)}
    assert roots == {(0, 1): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1}


def test_positive_roots_n3_bound0():
    assert {r.coeffs for r in positive_roots(3, 0)} == {(0, 1, 0), (0, 0, 1), (0, 1, 1)}


def test_positive_roots_imaginary_multiplicity():
    for n in (2, 3, 4):
        roots = {r.coeffs: r.multiplicity for r in positive_roots(n, 2)}
        assert roots[(1,) * n] == n - 1
        assert roots[(2,) * n] == n - 1
        # real roots all have multiplicity one
        for coeffs, mult in roots.items():
            if len(set(coeffs)) > 1:
                assert mult == 1


def test_positive_roots_validation():
    with pytest.raises(DomainError):
        positive_roots(2, -1)


def test_multiplicity_base_case():
    for lam in dominant_bases(3, 2):
        assert freudenthal_multiplicity(lam, lam) == 1


def test_multiplicity_two_delta():
    lam = fundamental_weight(2, 0)
    assert freudenthal_multiplicity(lam, lowered(lam, (2, 2))) == 2


def test_multiplicity_off_string():
    lam = fundamental_weight(2, 0)
    assert freudenthal_multiplicity(lam, lowered(lam, (0, 1))) == 0


def test_multiplicity_outside_cone():
    lam = fundamental_weight(2, 0)
    assert freudenthal_multiplicity(lam, lowered(lam, (-1, 0))) == 0
    assert freudenthal_multiplicity(lam, fundamental_weight(2, 1)) == 0


def test_requires_dominant():
    with pytest.raises(DomainError):
        freudenthal_multiplicity(Weight(2, (1, 0), (1, 0)), fundamental_weight(2, 0))


def test_reflection_symmetry():
    # multiplicities are invariant under mu -> mu - <mu, h_i> alpha_i
    for n in (2, 3):
        for lam in dominant_bases(n, 2):
            for u in [(1,) * n, (2,) * n, (2, 1) + (0,) * (n - 2), (0, 1) + (1,) * (n - 2)]:
                mu = lowered(lam, u)
                for i in range(n):
                    reflected = mu.minus_alpha(i, mu.pairing(i))
                    assert freudenthal_multiplicity(lam, mu) == freudenthal_multiplicity(
                        lam, reflected
                    )


def test_root_dataclass():
    r = PositiveRoot((1, 1), 1)
    assert r.coeffs == (1, 1) and r.multiplicity == 1
