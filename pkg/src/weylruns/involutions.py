"""The sign-reversing maps behind the cancellation lemmas.

Each map acts on words of B_n (tuples) and is exercised exhaustively by the
test suite on its stated domain: it must be an involution (or a bijection
onto its stated codomain), preserve the stated statistics, and flip the
stated length parity.  The two "large letters" of a word are the ones of
absolute value n and n-1.
"""

from __future__ import annotations

from .errors import DomainError
from .perm_core import pos_abs


def _large_positions(word) -> tuple[int, int]:
    n = len(word)
    i, j = sorted((pos_abs(word, n), pos_abs(word, n - 1)))
    return i - 1, j - 1  # 0-based


def swap_far_pair(word) -> tuple[int, ...]:
    """Swap the two large letters (negating both when their signs differ).

    Cancels the subsets where the large letters are more than one position
    apart: it fixes every peak and valley and flips the length parity.
    """
    i, j = _large_positions(word)
    if j - i <= 1:
        raise DomainError("large letters are adjacent; use swap_adjacent_pair")
    return _exchange(word, i, j)


def swap_adjacent_pair(word) -> tuple[int, ...]:
    """Same exchange for adjacent large letters (not at the word's end)."""
    i, j = _large_positions(word)
    if j - i != 1:
        raise DomainError("large letters are not adjacent")
    return _exchange(word, i, j)


def _exchange(word, i, j):
    x, y = word[i], word[j]
    out = list(word)
    if (x > 0) == (y > 0):
        out[i], out[j] = y, x
    else:
        out[i], out[j] = -y, -x
    return tuple(out)


def reverse_last_pair(word) -> tuple[int, ...]:
    """Replace the final pair (x, y) by (-y, -x).

    Used when both large letters sit at the end; keeps the end class and,
    away from the surviving subset, the peak/valley counts, while flipping
    the length parity.
    """
    if len(word) < 2:
        raise DomainError("need at least two letters")
    x, y = word[-2], word[-1]
    return word[:-2] + (-y, -x)


def resign_large_pair(word) -> tuple[int, ...]:
    """Exchange absolute values of the two large letters, keeping signs in place.

    Defined where exactly one of them is negative (the type D subset whose
    deleted word escapes D): n <-> n-1 under each letter's own sign, which
    preserves peaks and valleys and flips the type D parity.
    """
    i, j = _large_positions(word)
    x, y = word[i], word[j]
    if (x > 0) == (y > 0):
        raise DomainError("large letters must carry opposite signs")
    out = list(word)
    n = len(word)
    out[i] = n if x == n - 1 else (n - 1 if x == n else (-n if x == -(n - 1) else -(n - 1)))
    out[j] = n if y == n - 1 else (n - 1 if y == n else (-n if y == -(n - 1) else -(n - 1)))
    return tuple(out)


def flip_smallest(word) -> tuple[int, ...]:
    """Negate the letter of absolute value 1.

    On alternating words this preserves alternation and flips the type B
    parity (and moves between D and B-D).
    """
    k = pos_abs(word, 1) - 1
    out = list(word)
    out[k] = -out[k]
    return tuple(out)


def cross_resign_12(word) -> tuple[int, ...]:
    """Send the ±1 letter to minus the ±2 letter and vice versa.

    Preserves alternation and the number of negative letters mod 2, while
    flipping the type D parity; pairs off D_n^+ with D_n^- inside the
    alternating sets.
    """
    p1, p2 = pos_abs(word, 1) - 1, pos_abs(word, 2) - 1
    out = list(word)
    out[p1], out[p2] = -word[p2], -word[p1]
    return tuple(out)


# ------------------------------------------------------------ property suite

def _pair_map_failures(tag, word, mapper, *, expect_sets, negs_exact, k, end, in_d, fails):
    from .oracle import subset_index_b, subset_index_d
    from .perm_core import classify_end_b, inv_b, inv_d, negatives, peaks_valleys_b

    img = mapper(word)
    if mapper(img) != word:
        fails.append(f"{tag}: not an involution at {word}")
        return
    if classify_end_b(img) != end or subset_index_b(img) != k:
        fails.append(f"{tag}: image leaves the subset at {word} -> {img}")
    pw, vw = peaks_valleys_b(word)
    pi, vi = peaks_valleys_b(img)
    if expect_sets:
        if pw != pi or vw != vi:
            fails.append(f"{tag}: peak/valley sets move at {word} -> {img}")
    elif len(pw) != len(pi) or len(vw) != len(vi):
        fails.append(f"{tag}: peak/valley counts move at {word} -> {img}")
    if inv_b(word) % 2 == inv_b(img) % 2:
        fails.append(f"{tag}: type B parity not flipped at {word}")
    if negs_exact and negatives(word) != negatives(img):
        fails.append(f"{tag}: negative count moves at {word}")
    if (negatives(word) - negatives(img)) % 2 != 0:
        fails.append(f"{tag}: negative parity moves at {word}")
    if in_d:
        if negatives(img) % 2 != 0 or subset_index_d(img) != subset_index_d(word):
            fails.append(f"{tag}: D subset moves at {word} -> {img}")
        if inv_d(word) % 2 == inv_d(img) % 2:
            fails.append(f"{tag}: type D parity not flipped at {word}")


def run_involution_suite(n: int) -> list[str]:
    """Exhaustively check every cancellation map on its stated domain in B_n.

    Returns human-readable failure descriptions (empty means all maps are
    involutions that preserve their statistics and flip their parities).
    """
    from .oracle import snake_subset_l, subset_index_b, subset_index_d
    from .perm_core import (
        classify_end_b,
        inv_b,
        inv_d,
        is_alternating,
        is_snake_b,
        iter_group,
        negatives,
        peaks_valleys_b,
    )

    fails: list[str] = []
    for w in iter_group("B", n):
        in_d = negatives(w) % 2 == 0
        if n >= 3:
            k = subset_index_b(w)
            end = classify_end_b(w)
            in_d_side = in_d and subset_index_d(w) == k  # k = 9 handled separately
            if k in (1, 2):
                _pair_map_failures("far-pair", w, swap_far_pair, expect_sets=True,
                                   negs_exact=True, k=k, end=end, in_d=in_d_side, fails=fails)
            elif k in (3, 4):
                _pair_map_failures("adjacent-pair", w, swap_adjacent_pair, expect_sets=False,
                                   negs_exact=True, k=k, end=end, in_d=in_d_side, fails=fails)
            elif k in (5, 6, 7):
                _pair_map_failures("last-pair", w, reverse_last_pair, expect_sets=False,
                                   negs_exact=False, k=k, end=end, in_d=in_d_side, fails=fails)
            if in_d and subset_index_d(w) == 9:
                img = resign_large_pair(w)
                pw, vw = peaks_valleys_b(w)
                pi, vi = peaks_valleys_b(img)
                if resign_large_pair(img) != w:
                    fails.append(f"resign: not an involution at {w}")
                if negatives(img) % 2 != 0 or subset_index_d(img) != 9 or classify_end_b(img) != end:
                    fails.append(f"resign: image leaves D^9 at {w} -> {img}")
                if pw != pi or vw != vi:
                    fails.append(f"resign: peak/valley sets move at {w} -> {img}")
                if inv_d(w) % 2 == inv_d(img) % 2:
                    fails.append(f"resign: type D parity not flipped at {w}")
        if is_alternating(w):
            img = flip_smallest(w)
            if flip_smallest(img) != w or not is_alternating(img):
                fails.append(f"flip-smallest: breaks alternation at {w}")
            if inv_b(w) % 2 == inv_b(img) % 2:
                fails.append(f"flip-smallest: type B parity not flipped at {w}")
            if (negatives(w) - negatives(img)) % 2 == 0:
                fails.append(f"flip-smallest: should cross between D and B-D at {w}")
            if n >= 2:
                img = cross_resign_12(w)
                if cross_resign_12(img) != w or not is_alternating(img):
                    fails.append(f"cross-resign: breaks alternation at {w}")
                if (negatives(w) - negatives(img)) % 2 != 0:
                    fails.append(f"cross-resign: changes negative parity at {w}")
                if inv_d(w) % 2 == inv_d(img) % 2:
                    fails.append(f"cross-resign: type D parity not flipped at {w}")
        if in_d and n >= 2 and is_snake_b(w):
            lk = snake_subset_l(w)
            mapper = swap_far_pair if lk == 1 else swap_adjacent_pair
            if lk in (1, 2, 3):
                img = mapper(w)
                if mapper(img) != w:
                    fails.append(f"snake-L{lk}: not an involution at {w}")
                if not is_snake_b(img) or snake_subset_l(img) != lk or negatives(img) % 2 != 0:
                    fails.append(f"snake-L{lk}: image leaves the subset at {w} -> {img}")
                if inv_d(w) % 2 == inv_d(img) % 2:
                    fails.append(f"snake-L{lk}: type D parity not flipped at {w}")
    return fails
