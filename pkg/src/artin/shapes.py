"""Symbolic isomorphism types of centralisers."""

from __future__ import annotations

from dataclasses import dataclass, field

FORMS = ("Z", "Z2", "ZxF", "dihedral", "generic")


@dataclass(frozen=True)
class CentraliserShape:
    """One of Z, Z^2, Z x F_r (r >= 2), a dihedral Artin group A(m), or a
    tagged case that is recognised but not computed.

    Equality ignores the justification text.
    """

    form: str
    free_rank: int | None = None
    m: int | None = None
    tag: str | None = None
    justification: str = field(default="", compare=False)

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown centraliser form {self.form!r}")
        if self.form == "ZxF" and (self.free_rank is None or self.free_rank < 2):
            raise ValueError("Z x F_r is only emitted for r >= 2")
        if self.form == "dihedral" and (self.m is None or self.m < 3):
            raise ValueError("dihedral centralisers need m >= 3")

    @classmethod
    def cyclic(cls, why: str = "") -> CentraliserShape:
        return cls("Z", justification=why)

    @classmethod
    def abelian_z2(cls, why: str = "") -> CentraliserShape:
        return cls("Z2", justification=why)

    @classmethod
    def z_times_free(cls, rank: int, why: str = "") -> CentraliserShape:
        """Z x F_rank, folded to Z for rank 0 and Z^2 for rank 1."""
        if rank < 0:
            raise ValueError("free rank must be non-negative")
        if rank == 0:
            return cls.cyclic(why)
        if rank == 1:
            return cls.abelian_z2(why)
        return cls("ZxF", free_rank=rank, justification=why)

    @classmethod
    def dihedral(cls, m: int, why: str = "") -> CentraliserShape:
        return cls("dihedral", m=m, justification=why)

    @classmethod
    def generic(cls, tag: str, why: str = "") -> CentraliserShape:
        return cls("generic", tag=tag, justification=why)

    @property
    def is_z_times_f2(self) -> bool:
        return self.form == "ZxF"

    def to_dict(self) -> dict:
        out: dict = {"form": self.form}
        if self.free_rank is not None:
            out["freeRank"] = self.free_rank
        if self.m is not None:
            out["m"] = self.m
        if self.tag is not None:
            out["tag"] = self.tag
        out["justification"] = self.justification
        return out

    def __str__(self) -> str:
        if self.form == "ZxF":
            return f"Z x F_{self.free_rank}"
        if self.form == "dihedral":
            return f"A({self.m})"
        if self.form == "generic":
            return f"<{self.tag}>"
        return {"Z": "Z", "Z2": "Z^2"}[self.form]
