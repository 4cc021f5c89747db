# tests/test_witness.py
import pytest
from pytest_mock import MockerFixture

from src.exceptions import CertificationExhausted, InputError
from src.models.field import PrimeField
from src.models.witness import CIWitness
from src.schemas.certificate import Certificate
from src.services.witness_service import (
    brute_hilbert,
    certify_regular_sequence,
    random_forms,
    random_witness,
    smoothness_check,
)
from tests.helpers import form, x


# 1. Random forms
def test_random_forms_are_deterministic(field: PrimeField) -> None:
    """Test that the same seed reproduces the same forms."""
    # Act
    first = random_forms(7, 4, [1, 1], field)
    second = random_forms(7, 4, [1, 1], field)

    # Assert
    assert first == second
    assert [f.homogeneous_degree for f in first] == [1, 1]
    assert all(len(f) <= 4 for f in first)


def test_random_forms_depend_on_the_seed(field: PrimeField) -> None:
    """Test that distinct seeds give distinct forms."""
    # Act / Assert
    assert random_forms(1, 4, [2], field) != random_forms(2, 4, [2], field)


def test_random_forms_reject_nonpositive_degrees(field: PrimeField) -> None:
    """Test the degree precondition."""
    # Act / Assert
    with pytest.raises(InputError):
        random_forms(0, 4, [0], field)


# 2. Brute-force Hilbert function
def test_brute_hilbert_of_the_zero_ideal(field: PrimeField) -> None:
    """Test that no generators leave h = chi."""
    # Act / Assert
    assert brute_hilbert([], 2, field, 4) == 10


def test_brute_hilbert_of_two_variables(field: PrimeField) -> None:
    """Test the quotient by (x0, x1) in degree 3."""
    # Act / Assert
    assert brute_hilbert([x(field, 4, 0), x(field, 4, 1)], 3, field, 4) == 4


def test_brute_hilbert_of_certified_witness(line_witness: CIWitness) -> None:
    """Test h(4) = 1 for the (1,1,3,3) ideal of a line on a quartic."""
    # Act / Assert
    assert brute_hilbert(line_witness.generators, 4, line_witness.field, 4) == 1


# 3. Certification
def test_certify_variables(field: PrimeField) -> None:
    """Test that the variables are a full regular sequence with socle 0."""
    # Act
    certificate = certify_regular_sequence([x(field, 4, i) for i in range(4)], field, 4)

    # Assert
    assert certificate.passed
    assert certificate.mode == "full"
    assert certificate.verified_through == 1
    assert not certificate.heuristic


def test_certify_rejects_dependent_forms(field: PrimeField) -> None:
    """Test that (x0, x0^2) fails in degree 2."""
    # Act
    certificate = certify_regular_sequence([x(field, 4, 0), form(field, {(2, 0, 0, 0): 1})], field, 4)

    # Assert
    assert not certificate.passed
    assert certificate.mode == "partial"
    assert certificate.failed_at == 2


def test_certify_full_mode_failure(field: PrimeField) -> None:
    """Test that four forms with a common zero fail the full test."""
    # Arrange
    forms = [x(field, 4, 0), x(field, 4, 1), x(field, 4, 2), form(field, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1})]

    # Act
    certificate = certify_regular_sequence(forms, field, 4)

    # Assert
    assert not certificate.passed
    assert certificate.failed_at == 1


def test_certify_rejects_too_many_forms(field: PrimeField) -> None:
    """Test that more forms than variables is an input error."""
    # Act / Assert
    with pytest.raises(InputError):
        certify_regular_sequence([x(field, 2, 0), x(field, 2, 1), x(field, 2, 0)], field, 2)


def test_certify_full_mode_needs_n_vars_forms(field: PrimeField) -> None:
    """Test that forcing the full mode on a short sequence is an input error."""
    # Act / Assert
    with pytest.raises(InputError):
        certify_regular_sequence([x(field, 4, 0)], field, 4, mode="full")


# 4. Random witnesses
def test_random_witness_line(line_witness: CIWitness) -> None:
    """Test the shape and identity of a certified line witness."""
    # Assert
    assert line_witness.degrees == [1, 1]
    assert line_witness.e == 4
    assert line_witness.satisfies_identity()
    assert line_witness.certificate is not None and line_witness.certificate.passed
    assert line_witness.certificate.degrees == [1, 1, 3, 3]


def test_random_witness_is_deterministic(field: PrimeField, line_witness: CIWitness) -> None:
    """Test that the seed fixes the witness."""
    # Act
    again = random_witness(field, 4, [1, 1], seed=42, e=4)

    # Assert
    assert again == line_witness


def test_random_witness_without_e(field: PrimeField) -> None:
    """Test that a bare cycle gets a heuristic partial certificate and no cofactors."""
    # Act
    witness = random_witness(field, 4, [1, 2], seed=3)

    # Assert
    assert witness.Q is None and witness.F is None
    assert witness.certificate is not None and witness.certificate.heuristic


@pytest.mark.parametrize("degrees, e", [([1, 4], 4), ([1, 1, 1], 4), ([0, 1], 4)])
def test_random_witness_rejects_bad_profiles(field: PrimeField, degrees: list, e: int) -> None:
    """Test degrees outside [1, e-1] and sequences longer than the variable count."""
    # Act / Assert
    with pytest.raises(InputError):
        random_witness(field, 4, degrees, seed=0, e=e)


def test_random_witness_exhaustion(field: PrimeField, mocker: MockerFixture) -> None:
    """Test that every draw failing certification raises after max_attempts draws."""
    # Arrange
    failed = Certificate(mode="full", degrees=[1, 1, 3, 3], verified_through=5, passed=False, failed_at=5)
    certify = mocker.patch("src.services.witness_service.certify_regular_sequence", return_value=failed)

    # Act / Assert
    with pytest.raises(CertificationExhausted):
        random_witness(field, 4, [1, 1], seed=0, e=4, max_attempts=3)
    assert certify.call_count == 3


def test_random_witness_records_attempts(field: PrimeField, mocker: MockerFixture) -> None:
    """Test that a resampled witness reports how many draws it took."""
    # Arrange
    failed = Certificate(mode="full", degrees=[1, 1, 3, 3], verified_through=5, passed=False, failed_at=5)
    passed = Certificate(mode="full", degrees=[1, 1, 3, 3], verified_through=5, passed=True)
    mocker.patch("src.services.witness_service.certify_regular_sequence", side_effect=[failed, passed])

    # Act
    witness = random_witness(field, 4, [1, 1], seed=0, e=4)

    # Assert
    assert witness.certificate is not None
    assert witness.certificate.attempts == 2


# 5. Witness model
def test_witness_rejects_wrong_cofactor_degree(f17: PrimeField) -> None:
    """Test deg P_i + deg Q_i = e."""
    # Act / Assert
    with pytest.raises(InputError):
        CIWitness(field=f17, n_vars=2, P=(x(f17, 2, 0),), Q=(x(f17, 2, 1),), e=3)


def test_fermat_witness(fermat_witness: CIWitness) -> None:
    """Test that the Fermat line gives a certified (1,1,3,3) witness over F_17."""
    # Assert
    assert fermat_witness.field.p == 17
    assert fermat_witness.satisfies_identity()
    assert fermat_witness.certificate is not None and fermat_witness.certificate.passed


# 6. Smoothness
def test_fermat_quartic_is_smooth(fermat_witness: CIWitness) -> None:
    """Test the Jacobian test on x0^4 + ... + x3^4 in characteristic 17."""
    # Act / Assert
    assert smoothness_check(fermat_witness)


def test_singular_quartic_is_detected(f17: PrimeField) -> None:
    """Test that x0^2 x2^2 + x1^2 x3^2, singular along coordinate points, fails."""
    # Arrange
    witness = CIWitness(
        field=f17,
        n_vars=4,
        P=(x(f17, 4, 0), x(f17, 4, 1)),
        Q=(form(f17, {(1, 0, 2, 0): 1}), form(f17, {(0, 1, 0, 2): 1})),
        F=form(f17, {(2, 0, 2, 0): 1, (0, 2, 0, 2): 1}),
        e=4,
    )

    # Act / Assert
    assert witness.satisfies_identity()
    assert not smoothness_check(witness)
