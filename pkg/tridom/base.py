from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from typing import Any

from .errors import InternalAssertion


def _normalize(pairs: Iterable[Iterable[int]]) -> tuple[tuple[int, int], ...]:
    out = []
    for pair in pairs:
        a, b = pair
        out.append((a, b) if a < b else (b, a))
    return tuple(sorted(out))


@dataclass(kw_only=True, frozen=True)
class DomSetResult:
    """A dominating set given as disjoint 2-sets."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _normalize(self.pairs))

    @classmethod
    def of(cls, pairs: Iterable[Iterable[int]]):
        return cls(pairs=tuple(tuple(p) for p in pairs))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for pair in self.pairs for v in pair)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def __len__(self):
        return self.size

    def partner(self, v: int) -> int | None:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def replace(self, **kwargs):
        """Returns a new result with the given fields replaced."""
        return replace(self, **kwargs)

    def named(self, labels: Mapping[int, str]) -> list[list[Any]]:
        """Pairs in the external label namespace of the host graph."""
        return [[labels.get(a, a), labels.get(b, b)] for a, b in self.pairs]

    def to_json(self) -> dict[str, Any]:
        return {"size": self.size, "pairs": [list(p) for p in self.pairs]}


@dataclass(kw_only=True, frozen=True)
class PairedDomSet(DomSetResult):
    """Dominating set whose pairs are edges of the host graph."""


@dataclass(kw_only=True, frozen=True)
class SemipairedDomSet(DomSetResult):
    """Dominating set whose 2-sets are at distance at most 2 in the host graph."""

    @property
    def twosets(self) -> tuple[tuple[int, int], ...]:
        return self.pairs


class PairBook:
    """Mutable partner table used while translating a set back into a parent graph.

    Discarding a vertex leaves its partner waiting for a new partner; ``freeze`` refuses
    to finish while anyone is still waiting.
    """

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        self._partner: dict[int, int | None] = {}
        for a, b in pairs:
            self.pair(a, b)

    def __contains__(self, v: int) -> bool:
        return v in self._partner

    def __iter__(self):
        return iter(sorted(self._partner))

    def __len__(self):
        return len(self._partner)

    def partner(self, v: int) -> int | None:
        return self._partner.get(v)

    def pair(self, a: int, b: int) -> None:
        if a == b:
            raise InternalAssertion(f"cannot pair {a} with itself")
        for v in (a, b):
            if self._partner.get(v) is not None:
                raise InternalAssertion(f"{v} already has a partner", vertex=v)
        self._partner[a] = b
        self._partner[b] = a

    def discard(self, *vs: int) -> None:
        for v in vs:
            mate = self._partner.pop(v, None)
            if mate is not None and mate in self._partner:
                self._partner[mate] = None

    def waiting(self) -> list[int]:
        return sorted(v for v, mate in self._partner.items() if mate is None)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self._partner.items() if b is not None and a < b]

    def freeze(self, kind: type[DomSetResult]) -> DomSetResult:
        waiting = self.waiting()
        if waiting:
            raise InternalAssertion(f"unpaired vertices {waiting}", waiting=waiting)
        return kind.of(self.pairs())


class CaseCoverage:
    """Counts how often each case, lift branch and special site of a solver ran."""

    def __init__(self):
        self.counts: Counter[str] = Counter()

    def hit(self, label: str) -> None:
        self.counts[label] += 1

    def update(self, other: "CaseCoverage | Mapping[str, int]") -> None:
        self.counts.update(other.counts if isinstance(other, CaseCoverage) else other)

    def missing(self, expected: Iterable[str]) -> list[str]:
        return sorted(label for label in expected if not self.counts[label])

    def as_dict(self) -> dict[str, int]:
        return dict(sorted(self.counts.items()))
