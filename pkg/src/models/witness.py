# src/models/witness.py
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.exceptions import InputError
from src.models.field import PrimeField
from src.models.polynomial import SparsePolynomial
from src.schemas.certificate import Certificate
from src.schemas.profile import MultidegreeProfile


def _degree(form: SparsePolynomial) -> int:
    degree = form.homogeneous_degree
    if degree is None:
        raise InputError(f"{form!r} is not homogeneous")
    return degree


@dataclass(frozen=True)
class CIWitness:
    """
    An explicit complete intersection Z = V(P_1..P_t), optionally inside F = sum P_i Q_i.

    Attributes:
        field (PrimeField): Coefficient field.
        n_vars (int): Number of variables of S.
        P (Tuple[SparsePolynomial, ...]): Generators of I(Z), of degrees d_1..d_t.
        Q (Optional[Tuple[SparsePolynomial, ...]]): Cofactors of degrees e - d_i.
        F (Optional[SparsePolynomial]): Equation of the hypersurface.
        e (Optional[int]): Degree of F.
        certificate (Optional[Certificate]): Regular-sequence certificate of P (+ Q).
        seed (Optional[int]): Seed the witness was drawn from, if random.
    """

    field: PrimeField
    n_vars: int
    P: Tuple[SparsePolynomial, ...]
    Q: Optional[Tuple[SparsePolynomial, ...]] = None
    F: Optional[SparsePolynomial] = None
    e: Optional[int] = None
    certificate: Optional[Certificate] = None
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        for form in self.P + (self.Q or ()) + ((self.F,) if self.F is not None else ()):
            if form.field != self.field or form.n_vars != self.n_vars:
                raise InputError("witness forms live in different rings")
            _degree(form)
        if self.Q is not None:
            if self.e is None or len(self.Q) != len(self.P):
                raise InputError("cofactors need e and one Q_i per P_i")
            for p_form, q_form in zip(self.P, self.Q):
                if _degree(p_form) + _degree(q_form) != self.e:
                    raise InputError(f"deg P_i + deg Q_i must equal e={self.e}")
        if self.F is not None and _degree(self.F) != self.e:
            raise InputError(f"F must have degree e={self.e}")

    @property
    def degrees(self) -> List[int]:
        return [_degree(form) for form in self.P]

    @property
    def profile(self) -> MultidegreeProfile:
        return MultidegreeProfile(n_vars=self.n_vars, degrees=self.degrees, e=self.e)

    @property
    def generators(self) -> List[SparsePolynomial]:
        """P_1..P_t followed by Q_1..Q_t when cofactors are present."""
        return list(self.P) + list(self.Q or ())

    def expand(self) -> SparsePolynomial:
        """sum P_i Q_i."""
        if self.Q is None or self.e is None:
            raise InputError("witness has no cofactors Q")
        total = SparsePolynomial.zero(self.field, self.n_vars, self.e)
        for p_form, q_form in zip(self.P, self.Q):
            total = total + p_form * q_form
        return total

    def satisfies_identity(self) -> bool:
        return self.F is not None and self.Q is not None and self.expand() == self.F

    def __repr__(self) -> str:
        q_degrees = [_degree(q) for q in self.Q] if self.Q is not None else None
        return (
            f"<CIWitness(n_vars={self.n_vars}, p={self.field.p}, degrees={self.degrees}, "
            f"q_degrees={q_degrees}, e={self.e}, seed={self.seed})>"
        )
