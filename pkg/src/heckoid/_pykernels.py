"""Pure-Python letter kernels.

Words are ``str`` over ``"abAB"`` (uppercase = inverse letter).  Normal
forms are lists of ``(factor, exponent)`` with factor 0 for the infinite
cyclic factor generated by ``a`` and factor 1 for the order-n factor
generated by ``x = ab``.  ``_ckernels.pyx`` implements the same functions.
"""

BACKEND = "python"

_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
# the letter after c in a cyclic permutation of (ab)^n or (ab)^-n = (BA)^n
_NEXT = {"a": "b", "b": "a", "A": "B", "B": "A"}


def free_reduce(word):
    out = []
    for c in word:
        if out and out[-1] == _INV[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclic_core(word):
    """Return k such that ``word[k:len-k]`` is the cyclically reduced core.

    ``word`` must be freely reduced.
    """
    i, j = 0, len(word) - 1
    while i < j and word[i] == _INV[word[j]]:
        i += 1
        j -= 1
    return i


def riley_word(q, p):
    """The slope word of ``q/p`` (``p >= 1``, ``gcd(p, q) = 1``)."""
    if p < 1:
        raise ValueError("denominator must be >= 1")
    # parity of floor(i*q/p), updated incrementally
    fq, rq = divmod(q, p)
    fq &= 1
    r = 0
    f = 0
    hat = []
    for i in range(1, p):
        r += rq
        f ^= fq
        if r >= p:
            r -= p
            f ^= 1
        if i & 1:
            hat.append("B" if f else "b")
        else:
            hat.append("A" if f else "a")
    hat = "".join(hat)
    if p & 1:
        middle = "B" if q & 1 else "b"
    else:
        middle = "A"
    return "a" + hat + middle + hat[::-1].swapcase()


def sign_runs(word):
    """Cyclic run lengths of exponent signs, starting at a sign change.

    A single-sign word gives ``[len(word)]``; the empty word gives ``[]``.
    """
    L = len(word)
    if L == 0:
        return []
    start = -1
    for i in range(L):
        if word[i].isupper() != word[i - 1].isupper():
            start = i
            break
    if start < 0:
        return [L]
    runs = []
    count = 0
    sign = word[start].isupper()
    for k in range(L):
        s = word[(start + k) % L].isupper()
        if s == sign:
            count += 1
        else:
            runs.append(count)
            count = 1
            sign = s
    runs.append(count)
    return runs


def _push(stack, factor, e, n):
    if factor == 1:
        e %= n
    if e == 0:
        return
    if stack and stack[-1][0] == factor:
        e += stack[-1][1]
        if factor == 1:
            e %= n
        stack.pop()
        if e:
            stack.append((factor, e))
    else:
        stack.append((factor, e))


def normal_form(word, n):
    """Free-product normal form in Z * Z/n of a word, via b = a^-1 x."""
    stack = []
    for c in word:
        if c == "a":
            _push(stack, 0, 1, n)
        elif c == "A":
            _push(stack, 0, -1, n)
        elif c == "b":
            _push(stack, 0, -1, n)
            _push(stack, 1, 1, n)
        else:
            _push(stack, 1, -1, n)
            _push(stack, 0, 1, n)
    return stack


def dehn_reduce(word, n):
    """Dehn's algorithm for <a, b | (ab)^n> on the cyclic word of ``word``.

    Any cyclic subword of length >= 2n - 1 of a cyclic permutation of
    (ab)^{+-n} is replaced by the inverse of its complement.
    """
    w = free_reduce(word)
    long_run = 2 * n - 1
    while True:
        k = cyclic_core(w)
        if k:
            w = w[k:len(w) - k]
        L = len(w)
        if L < long_run:
            return w
        start = -1
        for i in range(L):
            if w[i] != _NEXT[w[i - 1]]:
                start = i
                break
        if start < 0:
            # the whole cyclic word is (ab)^{+-m}; L is even, so L >= 2n
            w = free_reduce(w[2 * n:])
            continue
        found = -1
        length = 0
        i = start
        while i < start + L:
            j = i + 1
            while j < start + L and w[j % L] == _NEXT[w[(j - 1) % L]]:
                j += 1
            if j - i >= long_run:
                found, length = i, j - i
                break
            i = j
        if found < 0:
            return w
        # rotate the match to the front
        f = found % L
        w = w[f:] + w[:f]
        if length >= 2 * n:
            w = free_reduce(w[2 * n:])
        else:
            w = free_reduce(_INV[_NEXT[w[long_run - 1]]] + w[long_run:])


def least_rotation(seq):
    """Start of the lexicographically least rotation of an int list (Booth)."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n
