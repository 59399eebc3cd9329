"""Coefficient fields for homology computations."""

from dataclasses import dataclass
from typing import Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (prime is None) or the prime field F_p."""

    prime: Optional[int] = None

    def __post_init__(self) -> None:
        if self.prime is not None and not isprime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse 'q' (rationals) or 'fpP' (prime field with P elements)."""
        token = text.strip().lower()
        if token in ("q", "qq"):
            return cls.rationals()
        if token.startswith("fp") and token[2:].isdigit():
            return cls.prime_field(int(token[2:]))
        raise ValueError(f"Unknown field {text!r}; use 'q' or 'fpP' such as 'fp2'")

    @property
    def domain(self) -> Domain:
        return QQ if self.prime is None else GF(self.prime)

    def __str__(self) -> str:
        return "q" if self.prime is None else f"fp{self.prime}"


RATIONALS = FieldSpec.rationals()
