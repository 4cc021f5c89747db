# src/schemas/pairing.py
from typing import List

from pydantic import BaseModel, ConfigDict


class PairingReport(BaseModel):
    """
    Multiplication pairings (S/I)_i x (S/I)_{socle-i} -> (S/I)_socle of a graded Artinian quotient.

    Attributes:
        socle (int): Socle degree.
        dims (List[int]): h(m) for m = 0..socle.
        pairing_ranks (List[int]): Rank of the pairing matrix for i = 0..socle // 2.
    """

    socle: int
    dims: List[int]
    pairing_ranks: List[int]

    model_config = ConfigDict(
        json_schema_extra={"example": {"socle": 2, "dims": [1, 2, 1], "pairing_ranks": [1, 2]}},
    )

    @property
    def symmetric(self) -> bool:
        return all(self.dims[i] == self.dims[self.socle - i] for i in range(self.socle + 1))

    @property
    def perfect(self) -> bool:
        return all(
            rank == self.dims[i] == self.dims[self.socle - i] for i, rank in enumerate(self.pairing_ranks)
        )
