"""Pure-Python kernels for the Heisenberg-Weyl engine.

Both functions work on words over {'p', 'q'} with unit coefficient, and
return Gaussian integers as ``(re, im)`` pairs of Python ints.  The Cython
module ``_kernels`` implements the same contract.
"""

from __future__ import annotations


def normal_order_word(word: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Normal form of ``word`` under qp - pq = i, as {(j, k): (re, im)} for q^j p^k.

    The word is multiplied in letter by letter from the left.  Every partial
    product has terms q^j p^k with the same ``j - k = d``, so the state is a
    list indexed by ``k``.  Right-multiplying by ``p`` shifts ``k``; by ``q``
    uses ``p^k q = q p^k - i k p^(k-1)``.
    """
    re = [1]
    im = [0]
    d = 0
    for ch in word:
        if ch == "p":
            re.insert(0, 0)
            im.insert(0, 0)
            d -= 1
        elif ch == "q":
            for k in range(len(re) - 1):
                a = re[k + 1]
                b = im[k + 1]
                if a or b:
                    # (a + b i) * (-i (k+1)) = (k+1) b - (k+1) a i
                    re[k] += (k + 1) * b
                    im[k] -= (k + 1) * a
            d += 1
        else:
            raise ValueError(f"letter {ch!r} is not in {{p, q}}")
    out = {}
    for k in range(len(re)):
        if re[k] or im[k]:
            out[(k + d, k)] = (re[k], im[k])
    return out


def word_eigenvalue(word: str, m: int) -> tuple[int, int]:
    """Scalar c with word(x^m) = c x^m under p = x, q = i d/dx.

    The word must be balanced; letters act right to left.
    """
    if word.count("p") != word.count("q"):
        raise ValueError(f"word {word!r} is not balanced")
    re, im = 1, 0
    e = m
    for ch in reversed(word):
        if ch == "p":
            e += 1
        elif ch == "q":
            if e == 0:
                return (0, 0)
            # (re + im i) * (i e)
            re, im = -im * e, re * e
            e -= 1
        else:
            raise ValueError(f"letter {ch!r} is not in {{p, q}}")
    return (re, im)
