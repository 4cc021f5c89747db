# src/models/recovered_ideal.py
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from src.models.graded_basis import GradedBasis
from src.models.monomial import Monomial


@dataclass(frozen=True)
class RecoveredIdeal:
    """
    A graded ideal I with S/I Artinian of socle degree m, stored through its pieces I_0..I_m.

    Attributes:
        socle (int): The degree m; I_k = S_k for every k > m.
        pieces (List[GradedBasis]): I_0, ..., I_m.
    """

    socle: int
    pieces: List[GradedBasis]

    def piece(self, k: int) -> GradedBasis:
        if k <= self.socle:
            return self.pieces[k]
        top = self.pieces[-1]
        return GradedBasis.whole(top.field, top.n_vars, k)

    @property
    def dims(self) -> List[int]:
        """h(k) = dim (S/I)_k for k = 0..socle."""
        return [piece.codimension for piece in self.pieces]

    def is_ideal(self) -> bool:
        """Closure under multiplication by the variables, degree by degree."""
        for k in range(self.socle):
            lower, upper = self.pieces[k], self.pieces[k + 1]
            for form in lower.polynomials():
                for index in range(form.n_vars):
                    if not upper.contains(form.shift(Monomial.variable(form.n_vars, index))):
                        return False
        return True

    def __repr__(self) -> str:
        n_vars = self.pieces[0].n_vars if self.pieces else 0
        return f"<RecoveredIdeal(socle={self.socle}, n_vars={n_vars}, dims={self.dims})>"

