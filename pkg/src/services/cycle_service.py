# src/services/cycle_service.py
import logging
from dataclasses import replace
from typing import List, Sequence

import numpy as np

from src.exceptions import InputError, InvariantViolation
from src.models.monomial import monomial_basis
from src.models.polynomial import SparsePolynomial
from src.models.witness import CIWitness
from src.schemas.cycle_report import JacobianReport, ResidualReport
from src.services.graded_service import graded_span
from src.services.linalg_service import IntArray, as_matrix, kernel_dim, solve_linear


def _stack_columns(columns: Sequence[IntArray], n_rows: int) -> IntArray:
    if not columns:
        return np.zeros((n_rows, 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def _require_cofactors(witness: CIWitness) -> None:
    if witness.Q is None or witness.F is None or witness.e is None:
        raise InputError("operation needs a witness with cofactors Q and hypersurface F")


def decompose(F: SparsePolynomial, P: Sequence[SparsePolynomial]) -> List[SparsePolynomial]:
    """
    Cofactors Q_i of degree e - d_i with F = sum P_i Q_i.

    The cofactors are the particular solution of one linear system (free unknowns set to
    zero); they are unique only up to Koszul syzygies.

    Parameters:
        - F (SparsePolynomial): Homogeneous form of degree e.
        - P (Sequence[SparsePolynomial]): Homogeneous generators of degrees d_i <= e.

    Returns:
        List[SparsePolynomial]: One cofactor per generator, zero cofactors keep their degree.

    Raises:
        InputError: If F is inhomogeneous, P is empty, or F does not lie in (P)_e.
    """
    e = F.homogeneous_degree
    if e is None:
        raise InputError("hypersurface equation is not homogeneous")
    if not P:
        raise InputError("decompose needs at least one generator")
    q_degrees = []
    columns: List[IntArray] = []
    for form in P:
        if form.homogeneous_degree is None or form.homogeneous_degree > e:
            raise InputError(f"generator {form!r} cannot divide a form of degree {e}")
        q_degrees.append(e - form.homogeneous_degree)
        columns.extend(form.shift(mu).to_vector(e) for mu in monomial_basis(F.n_vars, q_degrees[-1]))
    width = len(monomial_basis(F.n_vars, e))
    solution = solve_linear(_stack_columns(columns, width), F.to_vector(e).tolist(), F.field.p)
    if solution is None:
        raise InputError("cycle not contained in hypersurface")
    Q: List[SparsePolynomial] = []
    offset = 0
    for degree in q_degrees:
        size = len(monomial_basis(F.n_vars, degree))
        Q.append(SparsePolynomial.from_vector(F.field, F.n_vars, degree, solution[offset : offset + size].tolist()))
        offset += size
    expansion = SparsePolynomial.zero(F.field, F.n_vars, e)
    for p_form, q_form in zip(P, Q):
        expansion = expansion + p_form * q_form
    if expansion != F:
        raise InvariantViolation("decomposition does not re-expand to F")
    return Q


def residual(witness: CIWitness, i: int) -> CIWitness:
    """
    Swap P_i and Q_i (1-based): the residual complete intersection inside the same hypersurface.

    Raises:
        InputError: If the witness has no cofactors or i is out of range.
    """
    _require_cofactors(witness)
    assert witness.Q is not None
    t = len(witness.P)
    if not 1 <= i <= t:
        raise InputError(f"index {i} out of range 1..{t}")
    P, Q = list(witness.P), list(witness.Q)
    P[i - 1], Q[i - 1] = Q[i - 1], P[i - 1]
    return replace(witness, P=tuple(P), Q=tuple(Q))


def residual_report(witness: CIWitness, i: int) -> ResidualReport:
    """Residual swap together with its two identities."""
    swapped = residual(witness, i)
    assert witness.F is not None and witness.Q is not None and witness.e is not None
    others = [form for j, form in enumerate(witness.P) if j != i - 1]
    remainder = witness.F - witness.P[i - 1] * witness.Q[i - 1]
    class_identity = graded_span(others, witness.e, witness.field, witness.n_vars).contains(remainder)
    report = ResidualReport(
        index=i,
        degrees=swapped.degrees,
        identity_preserved=swapped.satisfies_identity(),
        class_identity=class_identity,
    )
    if not (report.identity_preserved and report.class_identity):
        logging.warning(f"residual {i} of {witness!r}: {report}")
    return report


def jacobian_containment(witness: CIWitness) -> JacobianReport:
    """Membership of every partial derivative of F in the degree e-1 piece of (P, Q)."""
    _require_cofactors(witness)
    assert witness.F is not None and witness.e is not None
    span = graded_span(witness.generators, witness.e - 1, witness.field, witness.n_vars)
    memberships = [span.contains(witness.F.derivative(j)) for j in range(witness.n_vars)]
    return JacobianReport(memberships=memberships)


def fiber_tangent_dim(witness: CIWitness) -> int:
    """
    Nullity of (f_i) -> sum f_i Q_i from the direct sum of (S/I(Z))_{d_i} to (S/I(Z))_e,
    in standard-monomial coordinates.
    """
    _require_cofactors(witness)
    assert witness.Q is not None and witness.e is not None
    field, n_vars = witness.field, witness.n_vars
    target = graded_span(witness.P, witness.e, field, n_vars)
    columns: List[IntArray] = []
    for degree, q_form in zip(witness.degrees, witness.Q):
        source = graded_span(witness.P, degree, field, n_vars)
        columns.extend(target.normal_form(q_form.shift(mu)) for mu in source.standard_monomials())
    matrix = _stack_columns(columns, target.codimension)
    nullity = kernel_dim(matrix, field.p, len(columns))
    logging.debug(f"fiber map {matrix.shape[0]}x{matrix.shape[1]}, nullity {nullity}")
    return nullity


def antisym_family(witness: CIWitness, M: Sequence[Sequence[int]]) -> CIWitness:
    """
    Deform the generators of degree e/2 by an antisymmetric matrix: R_s = P_s + sum_j M_sj Q_j
    over the a indices with 2 d_i = e. Since Q^T M Q = 0, the new generators still satisfy
    sum P_i Q_i = F with the same cofactors.

    Raises:
        InputError: If no degree equals e/2 or M is not an antisymmetric a x a matrix.
    """
    _require_cofactors(witness)
    assert witness.Q is not None and witness.e is not None
    e = witness.e
    block = [i for i, d in enumerate(witness.degrees) if 2 * d == e]
    a = len(block)
    if a == 0:
        raise InputError(f"no generator of degree e/2 (degrees {witness.degrees}, e={e})")
    p = witness.field.p
    matrix = as_matrix(M, p, a)
    if matrix.shape != (a, a):
        raise InputError(f"expected a {a}x{a} matrix, got shape {matrix.shape}")
    if np.any(np.diag(matrix)) or np.any((matrix + matrix.T) % p):
        raise InputError("matrix is not antisymmetric")
    P = list(witness.P)
    for s, i in enumerate(block):
        deformed = witness.P[i]
        for j, q_index in enumerate(block):
            if matrix[s, j]:
                deformed = deformed + witness.Q[q_index].scale(int(matrix[s, j]))
        P[i] = deformed
    return replace(witness, P=tuple(P))
