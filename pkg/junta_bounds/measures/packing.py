# ──────────────────────────────────────────────────────────────
# junta_bounds/measures/packing.py
# Exact maximum packing of pairwise-disjoint variable masks.
# ──────────────────────────────────────────────────────────────
import typing as t

from junta_bounds.tables.truth_table import popcount


def greedy_packing(blocks: t.Iterable[int]) -> t.List[int]:
    """A maximal (not necessarily maximum) disjoint packing, smallest blocks first."""
    chosen: t.List[int] = []
    used = 0
    for block in sorted(set(blocks), key=lambda b: (popcount(b), b)):
        if block and not block & used:
            chosen.append(block)
            used |= block
    return chosen


def max_disjoint_packing(blocks: t.Iterable[int], limit: t.Optional[int] = None) -> t.List[int]:
    """
    Largest set of pairwise-disjoint nonempty masks from `blocks`.

    Branches on the lowest variable still covered: either some block through
    it is used, or every block through it is dropped. The search stops early
    once `limit` blocks are packed.
    """
    pool = sorted({b for b in blocks if b}, key=lambda b: (popcount(b), b))
    best = greedy_packing(pool)
    if limit is not None and len(best) >= limit:
        return best[:limit]

    def extend(candidates: t.List[int], chosen: t.List[int]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if limit is not None and len(best) >= limit:
                return True
        if not candidates:
            return False
        union = 0
        for block in candidates:
            union |= block
        smallest = popcount(candidates[0])
        if len(chosen) + popcount(union) // smallest <= len(best):
            return False
        low = union & -union
        for block in candidates:
            if block & low:
                remaining = [c for c in candidates if not c & block]
                if extend(remaining, chosen + [block]):
                    return True
        return extend([c for c in candidates if not c & low], chosen)

    extend(pool, [])
    return best
