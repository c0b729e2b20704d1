"""Prefix normal palindromes.

A palindrome is prefix normal exactly when its max-ones profile read
forwards equals its reverse-progress profile read backwards (the all
zeros word passes trivially and is treated as an explicit special case).
That test needs only the profile, so enumeration walks the 2^(n/2) free
halves instead of all factors of all palindromes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .limits import check_length, max_palindrome_length
from .normality import is_prefix_normal
from .words import Profile, Word, max_ones, prefix_ones, reverse_progress

_POOL_MIN_HALF_BITS = 12


def is_palindrome(w: Word) -> bool:
    return w == w.reverse()


def is_prefix_normal_palindrome(w: Word) -> bool:
    """Definitional route: a palindrome that is prefix normal."""
    return is_palindrome(w) and is_prefix_normal(w)


def is_prefix_normal_palindrome_by_profile(w: Word) -> bool:
    """Profile route: the max-ones profile mirrors its own reverse progress.

    The all-zeros word is answered True up front; it is the one word the
    mirror criterion is not meant to cover, yet it is a prefix normal
    palindrome.
    """
    if w.bits == 0:
        return True
    n = len(w)
    f = max_ones(w)
    g = reverse_progress(f)
    return all(f[k] == g[n - k + 1] for k in range(1, n + 1))


def palindrome_from_half(n: int, half: int) -> Word:
    """The length-n palindrome whose free half is the packed value `half`.

    The free half is the first ceil(n/2) letters; the rest mirrors.
    """
    half_len = (n + 1) // 2
    mirror_len = n // 2
    if half >> half_len:
        raise ValueError("half value does not fit")
    if mirror_len == 0:
        return Word(n, half)
    top = half >> (half_len - mirror_len)
    mirrored = int(format(top, f"0{mirror_len}b")[::-1], 2)
    return Word(n, (half << mirror_len) | mirrored)


@dataclass(frozen=True)
class PnPalRecord:
    n: int
    words: tuple[Word, ...]
    count: int


def _scan_half_range(task: tuple[int, int, int, bool]):
    n, start, stop, collect = task
    found: list[int] = []
    count = 0
    for half in range(start, stop):
        w = palindrome_from_half(n, half)
        if is_prefix_normal_palindrome_by_profile(w):
            count += 1
            if collect:
                found.append(w.bits)
    return count, found


def _half_tasks(n: int, jobs: int, collect: bool):
    half_len = (n + 1) // 2
    total = 1 << half_len
    if jobs <= 1 or half_len < _POOL_MIN_HALF_BITS:
        return [(n, 0, total, collect)], False
    chunks = jobs * 4
    step = -(-total // chunks)
    tasks = [(n, lo, min(lo + step, total), collect) for lo in range(0, total, step)]
    return tasks, True


def _run_half_scan(n: int, jobs: int, collect: bool):
    tasks, pooled = _half_tasks(n, jobs, collect)
    if pooled:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_half_range, tasks))
    else:
        results = [_scan_half_range(t) for t in tasks]
    count = sum(c for c, _ in results)
    bits = [b for _, fs in results for b in fs]
    return count, bits


def count_prefix_normal_palindromes(n: int, jobs: int = 1, limit: int | None = None) -> int:
    cap = max_palindrome_length() if limit is None else limit
    check_length(n, cap, kind="palindrome enumeration")
    count, _ = _run_half_scan(n, jobs, collect=False)
    return count


def enumerate_prefix_normal_palindromes(
    n: int, jobs: int = 1, limit: int | None = None
) -> PnPalRecord:
    """All prefix normal palindromes of length n, lexicographically."""
    cap = max_palindrome_length() if limit is None else limit
    check_length(n, cap, kind="palindrome enumeration")
    count, bits = _run_half_scan(n, jobs, collect=True)
    words = tuple(Word(n, b) for b in bits)
    return PnPalRecord(n=n, words=words, count=count)


def extension_profile(inner: Word) -> Profile:
    """Max-ones profile of 1·v·1 from prefix counts of the inner palindrome v.

    Valid when v is a palindrome and 1·v·1 is a prefix normal palindrome;
    under that premise the wrapped word's profile is its prefix-ones
    profile, so no factor scan is needed:

        f(1) = 1
        f(k) = p_v(k - 1) + 1    for 1 < k < |v| + 2
        f(n) = f(n - 1) + 1      at the full length n = |v| + 2
    """
    m = len(inner)
    p = prefix_ones(inner)
    out = [0, 1]
    for k in range(2, m + 2):
        out.append(p[k - 1] + 1)
    out.append(out[-1] + 1)
    return tuple(out)
