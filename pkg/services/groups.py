"""Finite subgroups of a double cover enumerated from generators.

Elements are referred to by index into `elements`. Products are table
lookups: each element keeps the generator word that reaches it from the
identity, so x * y replays the word of y through the right multiplication
tables starting at x.
"""
import logging
from collections import deque
from functools import cached_property
from math import lcm

from config import check_group_order
from services.covers import CoverElt, identity, invert, is_even, multiply, times_z

logger = logging.getLogger(__name__)


def element_key(x: CoverElt) -> tuple:
    return x.perm, x.sign


class EnumeratedGroup:
    """A subgroup of a double cover closed under the given generators"""

    def __init__(self, generators: list[CoverElt], n: int, cover: str, name: str = "group"):
        self.name = name
        self.n = n
        self.cover = cover
        self.generators = list(generators)
        self.elements: list[CoverElt] = []
        self.index: dict[tuple, int] = {}
        self.words: list[tuple[int, ...]] = []
        self.rmul: list[list[int]] = [[] for _ in self.generators]
        self._enumerate()
        logger.info("enumerated %s: order %d, %d generators", name, len(self), len(self.generators))

    def _enumerate(self) -> None:
        start = identity(self.n, self.cover)
        self._add(start, ())
        queue = deque([0])
        pending: list[dict[int, int]] = [{} for _ in self.generators]
        while queue:
            i = queue.popleft()
            x = self.elements[i]
            for g, gen in enumerate(self.generators):
                y = multiply(x, gen)
                key = element_key(y)
                j = self.index.get(key)
                if j is None:
                    j = self._add(y, self.words[i] + (g,))
                    queue.append(j)
                pending[g][i] = j
        for g in range(len(self.generators)):
            self.rmul[g] = [pending[g][i] for i in range(len(self.elements))]

    def _add(self, x: CoverElt, word: tuple[int, ...]) -> int:
        check_group_order(len(self.elements) + 1, self.name)
        k = len(self.elements)
        self.elements.append(x)
        self.index[element_key(x)] = k
        self.words.append(word)
        return k

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: CoverElt) -> bool:
        return element_key(x) in self.index

    def id_of(self, x: CoverElt) -> int:
        try:
            return self.index[element_key(x)]
        except KeyError:
            raise ValueError(f"element {x.perm} (z^{x.sign}) is not in {self.name}")

    # arithmetic on indices

    def mul(self, a: int, b: int) -> int:
        for g in self.words[b]:
            a = self.rmul[g][a]
        return a

    @cached_property
    def inverses(self) -> list[int]:
        inv = [-1] * len(self)
        for a in range(len(self)):
            if inv[a] >= 0:
                continue
            # walk back along the word of a
            b = 0
            for g in reversed(self.words[a]):
                b = self.mul(b, self._generator_inverses[g])
            inv[a] = b
            inv[b] = a
        return inv

    @cached_property
    def _generator_inverses(self) -> list[int]:
        return [self.id_of(invert(g)) for g in self.generators]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        result = 0
        base = a
        if k < 0:
            base, k = self.inv(a), -k
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def z_index(self) -> int:
        return self.id_of(times_z(identity(self.n, self.cover)))

    def times_z(self, a: int) -> int:
        return self.mul(a, self.z_index)

    def is_even(self, a: int) -> bool:
        return is_even(self.elements[a])

    # conjugacy classes

    @cached_property
    def class_of(self) -> list[int]:
        """Class index per element; classes are orbits under conjugation by the generators"""
        labels = [-1] * len(self)
        gen_ids = [self.id_of(g) for g in self.generators]
        count = 0
        for start in range(len(self)):
            if labels[start] >= 0:
                continue
            labels[start] = count
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for g in gen_ids:
                    y = self.mul(self.mul(self.inv(g), x), g)
                    if labels[y] < 0:
                        labels[y] = count
                        queue.append(y)
            count += 1
        return labels

    @cached_property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.class_of) + 1)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def class_size(self, c: int) -> int:
        return len(self.classes[c])

    def centralizer_order(self, c: int) -> int:
        return len(self) // len(self.classes[c])

    def representative(self, c: int) -> int:
        return self.classes[c][0]

    def class_order(self, c: int) -> int:
        return self.element_order(self.representative(c))

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.class_order(c) for c in range(len(self.classes))))

    def inverse_class(self, c: int) -> int:
        return self.class_of[self.inv(self.representative(c))]

    def subgroup_orbits(self, members: list[int], conjugators: list[int]) -> dict[int, int]:
        """Classes of a normal subgroup given by member indices, under the given conjugators"""
        labels: dict[int, int] = {}
        count = 0
        for start in members:
            if start in labels:
                continue
            labels[start] = count
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for g in conjugators:
                    y = self.mul(self.mul(self.inv(g), x), g)
                    if y not in labels:
                        labels[y] = count
                        queue.append(y)
            count += 1
        return labels

    # the even subgroup

    @cached_property
    def even_members(self) -> list[int]:
        return [a for a in range(len(self)) if self.is_even(a)]

    @cached_property
    def even_generators(self) -> list[int]:
        """Schreier generators of the even subgroup for the transversal {1, u}"""
        gen_ids = [self.id_of(g) for g in self.generators]
        odd = [g for g in gen_ids if not self.is_even(g)]
        if not odd:
            return gen_ids
        u = odd[0]
        u_inv = self.inv(u)
        out = []
        for g in gen_ids:
            if self.is_even(g):
                out.append(g)
                out.append(self.mul(self.mul(u, g), u_inv))
            else:
                out.append(self.mul(g, u_inv))
                out.append(self.mul(u, g))
        return sorted(set(out))

    @cached_property
    def even_class_of(self) -> dict[int, int]:
        return self.subgroup_orbits(self.even_members, self.even_generators)

    @cached_property
    def even_classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.even_class_of.values()) + 1)]
        for x in self.even_members:
            out[self.even_class_of[x]].append(x)
        return out

    @property
    def even_order(self) -> int:
        return len(self.even_members)

    def even_centralizer_order(self, c: int) -> int:
        return self.even_order // len(self.even_classes[c])
