from __future__ import annotations

from typing import Iterable, List, Sequence

from featsel.core.genome.binary_genome import Genome


def eliminate_duplicates(
    children: Sequence[Genome], existing: Iterable[Genome] = ()
) -> List[Genome]:
    """
    Drop children that are bit-identical to an earlier child or to an existing member.

    Order of the kept children is preserved. Dropped children are not regenerated.
    """
    seen = set(existing)
    kept: List[Genome] = []
    for child in children:
        if child in seen:
            continue
        seen.add(child)
        kept.append(child)
    return kept
