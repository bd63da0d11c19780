"""The eight symmetric non-normalized discrete trigonometric transform kinds."""

from __future__ import annotations

import enum


class TransformKind(enum.Enum):
    """Cosine/sine family crossed with the variant number (1, 4, 5, 8)."""

    DCT1 = ("cosine", 1)
    DCT4 = ("cosine", 4)
    DCT5 = ("cosine", 5)
    DCT8 = ("cosine", 8)
    DST1 = ("sine", 1)
    DST4 = ("sine", 4)
    DST5 = ("sine", 5)
    DST8 = ("sine", 8)

    @property
    def family(self) -> str:
        return self.value[0]

    @property
    def variant(self) -> int:
        return self.value[1]

    @property
    def min_size(self) -> int:
        # DCT1 entries carry the denominator n - 1, so n = 1 is inadmissible.
        return 2 if self is TransformKind.DCT1 else 1

    @property
    def cli_name(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "TransformKind":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown transform kind: {name!r}") from None


#: Canonical ordering used by reports and the command line.
ALL_KINDS: tuple[TransformKind, ...] = tuple(TransformKind)
