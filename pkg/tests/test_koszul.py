# tests/test_koszul.py
import pytest
from pydantic import ValidationError

from src.exceptions import InputError
from src.schemas.chi import ChiOracle
from src.schemas.profile import MultidegreeProfile
from src.services.koszul_service import (
    SENTINEL,
    a_value,
    c_value,
    ci_hilbert,
    ci_scheme_dim,
    ci_scheme_dim_inductive,
    enumerate_A,
    flag_scheme_dim,
    hilbert_diff,
    locus_codim,
    locus_dim,
    normalize_degrees,
    socle_degree,
)

P3 = ChiOracle.projective(4)
P5 = ChiOracle.projective(6)

# Normalized profiles of the acceptance grid for surfaces in P^3
GRID = [((1, 1), e) for e in range(3, 7)] + [(d, e) for d in ((1, 2), (2, 2)) for e in range(4, 7)]


# 1. Ambient Hilbert function
def test_projective_chi() -> None:
    """Test chi(m) = C(m + 3, 3) and chi = 0 in negative degree."""
    # Act / Assert
    assert [P3(m) for m in range(-2, 4)] == [0, 0, 1, 4, 10, 20]


def test_table_chi_out_of_range() -> None:
    """Test that a table queried past its last degree is an input error."""
    # Arrange
    chi = ChiOracle.table({0: 1, 1: 4, 2: 10}, valid_through=2)

    # Act / Assert
    assert chi(2) == 10
    assert chi(-1) == 0
    with pytest.raises(InputError):
        chi(3)


def test_table_chi_must_be_complete() -> None:
    """Test that a table with a gap is rejected on construction."""
    # Act / Assert
    with pytest.raises(ValidationError):
        ChiOracle.table({0: 1, 2: 10}, valid_through=2)


def test_formula_with_short_table_raises() -> None:
    """Test that ci_hilbert propagates the table range error."""
    # Arrange
    chi = ChiOracle.table({0: 1, 1: 4}, valid_through=1)

    # Act / Assert
    with pytest.raises(InputError):
        ci_hilbert(chi, [1, 1], 3)


# 2. Normalization
@pytest.mark.parametrize(
    "degrees, e, expected, flipped",
    [
        ([1, 3], 4, [1, 1], [2]),
        ([2, 2], 4, [2, 2], []),
        ([1, 4, 4], 5, [1, 1, 1], [2, 3]),
        ([2, 3], 5, [2, 2], [2]),
    ],
)
def test_normalize_degrees(degrees: list, e: int, expected: list, flipped: list) -> None:
    """Test that degrees above e/2 are replaced by their residual degree."""
    # Act
    normalized, positions = normalize_degrees(degrees, e)

    # Assert
    assert normalized == expected
    assert positions == flipped


@pytest.mark.parametrize("degrees, e", [([1, 4], 4), ([0, 1], 4), ([1, 5], 4)])
def test_normalize_degrees_out_of_range(degrees: list, e: int) -> None:
    """Test that d = 0 and d >= e are rejected."""
    # Act / Assert
    with pytest.raises(InputError, match="degree out of range"):
        normalize_degrees(degrees, e)


# 3. Hilbert function of a complete intersection
@pytest.mark.parametrize(
    "degrees, m, expected",
    [
        ([], 2, 10),
        ([1, 1], 3, 4),
        ([1, 1], 4, 5),
        ([1, 1, 3, 3], 4, 1),
        ([2, 2], 4, 16),
        ([1, 1], -1, 0),
    ],
)
def test_ci_hilbert(degrees: list, m: int, expected: int) -> None:
    """Test h_I(m) on hand-checkable profiles in 4 variables."""
    # Act / Assert
    assert ci_hilbert(P3, degrees, m) == expected


def test_ci_hilbert_is_permutation_invariant() -> None:
    """Test that the order of the degrees does not matter."""
    # Act / Assert
    assert ci_hilbert(P3, [3, 1, 2], 5) == ci_hilbert(P3, [1, 2, 3], 5)


@pytest.mark.parametrize(
    "n_vars, full", [(4, [1, 1, 3, 3]), (4, [2, 2, 2, 2]), (4, [1, 2, 3, 4]), (6, [1, 1, 1, 2, 2, 2])]
)
def test_full_profile_is_gorenstein(n_vars: int, full: list) -> None:
    """Test socle value 1, vanishing above the socle and symmetry of h."""
    # Arrange
    chi = ChiOracle.projective(n_vars)
    socle = socle_degree(n_vars, full)

    # Act
    h = [ci_hilbert(chi, full, m) for m in range(socle + 3)]

    # Assert
    assert h[socle] == 1
    assert h[socle + 1] == h[socle + 2] == 0
    assert h[: socle + 1] == h[socle::-1]


# 4. Index sets A(i;j)
@pytest.mark.parametrize(
    "degrees, i, j, expected",
    [
        ([1, 1], 1, 1, [(1,), (2,)]),
        ([1, 2], 2, 2, []),
        ([1, 1, 2], 2, 3, [(1, 2)]),
        ([1, 2], 0, 1, [SENTINEL]),
    ],
)
def test_enumerate_A(degrees: list, i: int, j: int, expected: list) -> None:
    """Test the increasing tuples whose degree sum is bounded by d_j."""
    # Act / Assert
    assert enumerate_A(degrees, i, j) == expected


@pytest.mark.parametrize("i, j", [(3, 1), (0, 0), (1, 3), (-1, 1)])
def test_enumerate_A_out_of_range(i: int, j: int) -> None:
    """Test that indices outside 0..t and 1..t are rejected."""
    # Act / Assert
    with pytest.raises(InputError):
        enumerate_A([1, 2], i, j)


# 5. Difference of Hilbert functions
@pytest.mark.parametrize(
    "chi, degrees, e, expected",
    [(P3, [1, 1], 4, -4), (P3, [2, 2], 4, -15), (P5, [1, 1, 1], 3, -9)],
)
def test_hilbert_diff(chi: ChiOracle, degrees: list, e: int, expected: int) -> None:
    """Test h_I(e) - h_I'(e) for the line, the (2,2) profile and three hyperplanes in P^5."""
    # Act / Assert
    assert hilbert_diff(chi, degrees, e) == expected


def test_hilbert_diff_includes_c() -> None:
    """Test that a = 2 contributes c = 1 on top of the Koszul sum."""
    # Act / Assert
    assert c_value([2, 2], 4) == 1
    assert hilbert_diff(P3, [2, 2], 4) == 1 - ci_scheme_dim(P3, [2, 2])


@pytest.mark.parametrize(
    "degrees, e, a, c",
    [((1, 1), 4, 0, 0), ((2, 2), 4, 2, 1), ((1, 2), 4, 1, 0), ((2, 2, 2), 4, 3, 3), ((1, 1), 3, 0, 0)],
)
def test_half_degree_count(degrees: tuple, e: int, a: int, c: int) -> None:
    """Test a = #{i : d_i = e/2} for even e, 0 for odd e, and c = a(a-1)/2."""
    # Act / Assert
    assert a_value(degrees, e) == a
    assert c_value(degrees, e) == c


def test_hilbert_diff_rejects_unnormalized_degrees() -> None:
    """Test that d_i > e/2 is an input error."""
    # Act / Assert
    with pytest.raises(InputError):
        hilbert_diff(P3, [1, 3], 4)


@pytest.mark.parametrize("degrees, e", GRID)
def test_difference_consistency(degrees: tuple, e: int) -> None:
    """Test hilbert_diff against the two Hilbert functions it compares."""
    # Arrange
    full = list(degrees) + [e - d for d in degrees]

    # Act
    diff = hilbert_diff(P3, degrees, e)

    # Assert
    assert diff == ci_hilbert(P3, full, e) - ci_hilbert(P3, degrees, e)


# 6. Hilbert scheme and locus dimensions
@pytest.mark.parametrize("degrees, expected", [([1, 1], 4), ([1, 2], 8), ([2, 2], 16), ([1], 3)])
def test_ci_scheme_dim(degrees: list, expected: int) -> None:
    """Test the dimension of the Hilbert scheme of complete intersections in P^3."""
    # Act / Assert
    assert ci_scheme_dim(P3, degrees) == expected
    assert ci_scheme_dim_inductive(P3, degrees) == expected


@pytest.mark.parametrize("degrees", [[1, 1, 1], [1, 2, 2], [1, 1, 2], [2, 3, 3]])
def test_scheme_dim_closed_form_matches_induction(degrees: list) -> None:
    """Test the Koszul sum against the Grassmannian fibration in 6 variables."""
    # Act / Assert
    assert ci_scheme_dim(P5, degrees) == ci_scheme_dim_inductive(P5, degrees)


@pytest.mark.parametrize("degrees, e, expected", [([1, 1], 4, 33), ([1, 1], 3, 19), ([2, 2], 4, 34)])
def test_flag_scheme_dim(degrees: list, e: int, expected: int) -> None:
    """Test dim H(d) + chi(e) - h_I(e) - 1."""
    # Act / Assert
    assert flag_scheme_dim(P3, degrees, e) == expected


def test_flag_scheme_dim_with_no_containing_hypersurface() -> None:
    """Test the empty fiber on an ambient ring with nothing in positive degree."""
    # Act / Assert
    with pytest.raises(InputError, match="no hypersurface"):
        flag_scheme_dim(ChiOracle.table({0: 1, 1: 0, 2: 0}, valid_through=2), [1], 2)


@pytest.mark.parametrize("e", range(4, 11))
def test_line_locus_codim(e: int) -> None:
    """Test that surfaces containing a line have codimension e - 3."""
    # Act / Assert
    assert locus_codim(P3, [1, 1], e) == e - 3


def test_locus_codim_in_p5() -> None:
    """Test the codimension of cubic fourfolds containing a plane."""
    # Act / Assert
    assert locus_codim(P5, [1, 1, 1], 3) == 1


def test_locus_codim_rejects_wrong_number_of_degrees() -> None:
    """Test that t must equal n_vars / 2."""
    # Act / Assert
    with pytest.raises(InputError):
        locus_codim(P3, [1, 1, 1], 4)


@pytest.mark.parametrize("degrees, e", GRID + [((1, 1, 1), 3), ((1, 1, 1), 4)])
def test_cross_identity(degrees: tuple, e: int) -> None:
    """Test locus_codim = h_I(e) + c - dim H(d) and locus_dim + codim = chi(e) - 1."""
    # Arrange
    chi = ChiOracle.projective(2 * len(degrees))

    # Act
    codim = locus_codim(chi, degrees, e)

    # Assert
    assert codim == ci_hilbert(chi, degrees, e) + c_value(degrees, e) - ci_scheme_dim(chi, degrees)
    assert locus_dim(chi, degrees, e) + codim == chi(e) - 1


# 7. Socle degree
@pytest.mark.parametrize(
    "n_vars, full, expected", [(4, [1, 1, 3, 3], 4), (4, [1, 1, 1, 1], 0), (6, [1, 1, 1, 2, 2, 2], 3)]
)
def test_socle_degree(n_vars: int, full: list, expected: int) -> None:
    """Test sum of degrees minus the number of variables."""
    # Act / Assert
    assert socle_degree(n_vars, full) == expected


def test_socle_degree_needs_n_vars_generators() -> None:
    """Test that a non zero-dimensional profile has no socle degree."""
    # Act / Assert
    with pytest.raises(InputError):
        socle_degree(4, [1, 1, 3])


# 8. Profile schema
def test_profile_derived_values() -> None:
    """Test a, c and the full degree list of the (2,2), e = 4 profile."""
    # Act
    profile = MultidegreeProfile(n_vars=4, degrees=[2, 2], e=4)

    # Assert
    assert profile.k == 1
    assert profile.a == 2
    assert profile.c == 1
    assert profile.is_normalized
    assert profile.full_degrees == [2, 2, 2, 2]


def test_profile_with_odd_e_has_no_a() -> None:
    """Test that a = 0 when e is odd."""
    # Act
    profile = MultidegreeProfile(n_vars=4, degrees=[2, 1], e=5)

    # Assert
    assert profile.degrees == [1, 2]
    assert profile.a == 0


def test_profile_rejects_nonpositive_degrees() -> None:
    """Test the degree validator."""
    # Act / Assert
    with pytest.raises(ValidationError):
        MultidegreeProfile(n_vars=4, degrees=[0, 1], e=4)


def test_profile_normalizes_against_e() -> None:
    """Test that (1,3) at e = 4 becomes (1,1) and keeps n_vars and e."""
    # Act
    profile = MultidegreeProfile(n_vars=4, degrees=[3, 1], e=4).normalized()

    # Assert
    assert profile.degrees == [1, 1]
    assert profile.label == "1,1"
    assert (profile.n_vars, profile.e) == (4, 4)
    assert profile.full_degrees == [1, 1, 3, 3]


def test_profile_without_e() -> None:
    """Test that a bare multidegree has a = c = 0 and cannot be normalized."""
    # Arrange
    profile = MultidegreeProfile(n_vars=4, degrees=[2, 3])

    # Act / Assert
    assert profile.a == profile.c == 0
    with pytest.raises(InputError):
        profile.normalized()
    with pytest.raises(InputError):
        profile.full_degrees
