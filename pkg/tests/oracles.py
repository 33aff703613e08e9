"""Independent brute-force oracles.

None of these use the library's group or product code: the odometer is
modelled by integer arithmetic on reversed binary numbers, free-monoid hull
elements by their graphs as partial maps on finite words.
"""
import itertools


def words_upto(alphabet, n):
    for k in range(n + 1):
        for t in itertools.product(alphabet, repeat=k):
            yield "".join(t)


def _to_int(bits):
    return sum(int(b) << i for i, b in enumerate(bits))


def _to_bits(n, length):
    return "".join(str((n >> i) & 1) for i in range(length))


def odometer_act(m, word):
    """``(z^m . word, exponent of z^m|_word)`` for the (possibly bricked) odometer.

    Digits before the first ``B`` form a reversed binary number to which ``m``
    is added; the carry becomes the restriction, and a ``B`` absorbs it.
    """
    cut = word.find("B")
    digits = word if cut < 0 else word[:cut]
    total = _to_int(digits) + m
    n = len(digits)
    image = _to_bits(total % (1 << n), n) if n else ""
    carry = total >> n if n else m
    if cut < 0:
        return image, carry
    return image + word[cut:], 0


def odometer_mul(p, q):
    (u, a), (v, b) = p, q
    img, res = odometer_act(a, v)
    return (u + img, res + b)


def strongly_fixed(m, word):
    return odometer_act(m, word) == (word, 0)


def msf_bruteforce(m, alphabet, max_len):
    """All strongly fixed words of length <= max_len with no strongly fixed proper prefix."""
    sf = {w for w in words_upto(alphabet, max_len) if strongly_fixed(m, w)}
    return sorted((w for w in sf if not any(w[:i] in sf for i in range(len(w)))),
                  key=lambda w: (len(w), w))


def apply_pair(p, q, x):
    """The partial bijection ``q w -> p w`` of a free-monoid hull element, on the word ``x``."""
    return p + x[len(q):] if x.startswith(q) else None


def compose_on(words, first, second):
    """Graph of ``first`` after ``second`` (hull product ``first * second``) on ``words``."""
    out = {}
    for x in words:
        y = apply_pair(*second, x)
        if y is not None:
            z = apply_pair(*first, y)
            if z is not None:
                out[x] = z
    return out


def free_lcm(p, q):
    """Right LCM in a free monoid by searching common extensions."""
    if q.startswith(p):
        return q
    if p.startswith(q):
        return p
    return None
