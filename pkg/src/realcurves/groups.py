"""Canonical descriptors for the finitely described abelian groups that
the invariant formulas emit: Z^a + (Q/Z)^q + (Z/4)^c + (Z/n)^m + (Z/2)^b.

Q/Z is kept as an opaque summand count and never expanded into its
p-primary parts, since the torsion Picard results are stated directly in
terms of (Q/Z)^m.  Z/2 is tracked separately from generic Z/n so that
parity-sensitive unit-group formulas stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GroupDescriptor:
    """A direct sum Z^free_rank + (Q/Z)^qz + (Z/4)^z4 + (Z/n)^count + (Z/2)^z2.

    Equality is field-wise.  The zn summand is normalized so that a zero
    count collapses to None and n in {2, 4} folds into the dedicated
    fields, keeping the representation canonical.
    """

    free_rank: int = 0
    qz: int = 0
    z4: int = 0
    zn: tuple[int, int] | None = None  # (n, count)
    z2: int = 0

    def __post_init__(self):
        for name in ("free_rank", "qz", "z4", "z2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.zn is not None:
            n, count = self.zn
            if n < 2:
                raise ValueError("zn modulus must be >= 2")
            if count < 0:
                raise ValueError("zn count must be nonnegative")
            if count == 0:
                object.__setattr__(self, "zn", None)
            elif n == 2:
                object.__setattr__(self, "z2", self.z2 + count)
                object.__setattr__(self, "zn", None)
            elif n == 4:
                object.__setattr__(self, "z4", self.z4 + count)
                object.__setattr__(self, "zn", None)

    @property
    def is_trivial(self) -> bool:
        return (self.free_rank == 0 and self.qz == 0 and self.z4 == 0
                and self.zn is None and self.z2 == 0)

    def direct_sum(self, other: "GroupDescriptor") -> "GroupDescriptor":
        """Field-wise addition; commutative and associative by construction."""
        if self.zn is not None and other.zn is not None and self.zn[0] != other.zn[0]:
            raise ValueError("cannot merge Z/n summands with different moduli")
        if self.zn is None:
            zn = other.zn
        elif other.zn is None:
            zn = self.zn
        else:
            zn = (self.zn[0], self.zn[1] + other.zn[1])
        return GroupDescriptor(
            free_rank=self.free_rank + other.free_rank,
            qz=self.qz + other.qz,
            z4=self.z4 + other.z4,
            zn=zn,
            z2=self.z2 + other.z2,
        )

    def format(self) -> str:
        """Deterministic display, summands in the fixed order
        Z, Q/Z, Z/4, Z/n, Z/2; the trivial group prints '0'."""
        parts: list[str] = []
        parts.extend(_summand("Z", self.free_rank, bare=True))
        parts.extend(_summand("Q/Z", self.qz))
        parts.extend(_summand("Z/4", self.z4))
        if self.zn is not None:
            n, count = self.zn
            parts.extend(_summand(f"Z/{n}", count))
        parts.extend(_summand("Z/2", self.z2))
        if not parts:
            return "0"
        return " (+) ".join(parts)

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "qz": self.qz,
            "z4": self.z4,
            "zn": None if self.zn is None else {"n": self.zn[0], "count": self.zn[1]},
            "z2": self.z2,
        }

    def __str__(self) -> str:
        return self.format()


def _summand(symbol: str, count: int, bare: bool = False) -> list[str]:
    if count == 0:
        return []
    if count == 1:
        return [symbol]
    if bare:
        return [f"{symbol}^{count}"]
    return [f"({symbol})^{count}"]


TRIVIAL_GROUP = GroupDescriptor()


def free_part(rank: int) -> GroupDescriptor:
    return GroupDescriptor(free_rank=rank)


def two_torsion(count: int) -> GroupDescriptor:
    return GroupDescriptor(z2=count)
