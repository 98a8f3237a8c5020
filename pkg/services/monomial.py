"""Monomial matrices over cyclotomic fields.

A monomial matrix sends basis vector e_k to coeffs[k] * e_targets[k].
"""
from services.cyclo import CycloNum, csum


class Monomial:
    __slots__ = ("targets", "coeffs")

    def __init__(self, targets, coeffs):
        self.targets = tuple(targets)
        self.coeffs = tuple(CycloNum.coerce(c) for c in coeffs)
        if len(self.targets) != len(self.coeffs):
            raise ValueError("targets and coefficients differ in length")

    @classmethod
    def identity(cls, dim: int) -> "Monomial":
        return cls(range(dim), [1] * dim)

    @classmethod
    def diagonal(cls, entries) -> "Monomial":
        entries = list(entries)
        return cls(range(len(entries)), entries)

    @property
    def dim(self) -> int:
        return len(self.targets)

    def __matmul__(self, other: "Monomial") -> "Monomial":
        """self composed after other"""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} != {other.dim}")
        targets = [self.targets[t] for t in other.targets]
        coeffs = [c * self.coeffs[t] for t, c in zip(other.targets, other.coeffs)]
        return Monomial(targets, coeffs)

    def scale(self, value) -> "Monomial":
        return Monomial(self.targets, [c * value for c in self.coeffs])

    def kron(self, other: "Monomial") -> "Monomial":
        d = other.dim
        targets, coeffs = [], []
        for ti, ci in zip(self.targets, self.coeffs):
            for tj, cj in zip(other.targets, other.coeffs):
                targets.append(ti * d + tj)
                coeffs.append(ci * cj)
        return Monomial(targets, coeffs)

    def trace(self) -> CycloNum:
        return csum(c for k, (t, c) in enumerate(zip(self.targets, self.coeffs)) if t == k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.targets == other.targets and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{k}->{t}:{c.render()}" for k, (t, c) in enumerate(zip(self.targets, self.coeffs)))
        return f"Monomial({body})"


def kron_all(factors: list[Monomial]) -> Monomial:
    out = Monomial.identity(1)
    for f in factors:
        out = out.kron(f)
    return out
