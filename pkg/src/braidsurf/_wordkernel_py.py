"""Pure-Python word kernels.

Free-group words are tuples of nonzero ints: ``k`` is the generator ``x_k``
and ``-k`` its inverse. Every function here has a twin in ``_wordkernel.pyx``
with identical results; ``braidsurf.kernel`` picks one at import time.
"""

from __future__ import annotations


def reduce_word(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _extend_reduced(out, word):
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)


def _inverse_list(word):
    return [-x for x in reversed(word)]


def substitute(word, images):
    """Replace each letter x_k of ``word`` by ``images[k-1]`` and reduce."""
    n = len(images)
    out = []
    for x in word:
        if x == 0 or abs(x) > n:
            raise IndexError(f"letter {x} outside a free group of rank {n}")
        if x > 0:
            _extend_reduced(out, images[x - 1])
        else:
            _extend_reduced(out, _inverse_list(images[-x - 1]))
    return tuple(out)


def artin_images(letters, m):
    """Images of x_1..x_m under the Artin automorphism of a braid word.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; letters act
    left to right, so the word ``s w`` sends x to (x^s)^w. The word is scanned
    from the right so every step only rewrites two images.
    """
    imgs = [[j] for j in range(1, m + 1)]
    for s in reversed(letters):
        if s == 0 or abs(s) >= m:
            raise IndexError(f"generator {s} out of range for {m} strands")
        i = abs(s) - 1
        a = imgs[i]
        b = imgs[i + 1]
        out = list(a)
        if s > 0:
            _extend_reduced(out, b)
            _extend_reduced(out, _inverse_list(a))
            imgs[i] = out
            imgs[i + 1] = a
        else:
            out = _inverse_list(b)
            _extend_reduced(out, a)
            _extend_reduced(out, b)
            imgs[i] = b
            imgs[i + 1] = out
    return tuple(tuple(w) for w in imgs)
