"""Pure-Python word kernels: reduction, products, square roots, witness search.

A word is a ``bytes`` string over the four letter codes 0 = x, 1 = x^-1,
2 = y, 3 = y^-1, so the inverse of a letter is ``letter ^ 1``.  All
functions assume their inputs are freely reduced unless stated otherwise,
and always return reduced words.  ``_speedups.pyx`` implements the same
contract at C speed; ``kernel`` selects one of the two at import time.
"""

BACKEND = "python"


def reduce_word(letters):
    """Freely reduce an arbitrary letter string (not assumed reduced)."""
    out = []
    for c in letters:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return bytes(out)


def mul(u, v):
    """Product of two reduced words; cancellation happens only at the seam."""
    i = len(u) - 1
    j = 0
    nv = len(v)
    while i >= 0 and j < nv and u[i] == v[j] ^ 1:
        i -= 1
        j += 1
    return u[: i + 1] + v[j:]


def inv(u):
    return bytes(c ^ 1 for c in reversed(u))


def square_root(w):
    """The unique v with v*v == w, or None.

    Peel inverse letter pairs from the two ends until the core is
    cyclically reduced; w is a square iff that core is two equal halves,
    and then the root is (peeled prefix) + (half) + (peeled suffix).
    """
    n = len(w)
    if n == 0:
        return b""
    lo, hi = 0, n - 1
    while lo < hi and w[lo] == w[hi] ^ 1:
        lo += 1
        hi -= 1
    m = hi - lo + 1
    if m % 2:
        return None
    half = m // 2
    if w[lo : lo + half] != w[lo + half : hi + 1]:
        return None
    return w[: lo + half] + w[hi + 1 :]


def words_of_length(n):
    """Yield every reduced word of length n in lexicographic letter order."""
    if n == 0:
        yield b""
        return
    word = bytearray(n)  # x^n, the least reduced word of this length
    while True:
        yield bytes(word)
        i = n - 1
        while i >= 0:
            c = word[i] + 1
            if i > 0 and c == word[i - 1] ^ 1:
                c += 1
            if c < 4:
                word[i] = c
                for j in range(i + 1, n):
                    word[j] = 1 if word[j - 1] == 1 else 0
                break
            i -= 1
        else:
            return


def search_square_pair(g, bound):
    """Shortlex search for (a, b) with a*a*b*b == g and len(a) <= bound.

    Returns (a, b, checked) on a hit, else (None, None, checked), where
    checked counts the candidate a's examined.  b is the square root of
    a^-2 g and is not length-limited.
    """
    checked = 0
    for n in range(bound + 1):
        for a in words_of_length(n):
            checked += 1
            ia = inv(a)
            r = mul(ia, mul(ia, g))
            s = square_root(r)
            if s is not None:
                return a, s, checked
    return None, None, checked
