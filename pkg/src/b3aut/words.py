"""Reduced words in a free group on two generators.

A letter is a nonzero int: ``1`` and ``2`` are the two generators, ``-1`` and
``-2`` their inverses. Words are immutable and always freely reduced.
The same class serves F2 = <u, v>, the braid alphabet {a, b} and the
free generators of the derived subgroup; subclasses only change how
letters are printed and parsed.
"""
import re

from .errors import ParseError

__all__ = [
    "FreeWord", "u", "v", "ONE", "letter", "reduce", "mul", "inv", "conjugate",
    "commutator", "cyclic_reduce", "is_conjugate", "abelianize", "parse_word", "iter_words",
]


def letter(index, sign=1):
    """Encode the pair (index, sign) in {1, 2} x {-1, 1} as a signed int."""
    if index not in (1, 2) or sign not in (1, -1):
        raise ValueError(f"bad letter ({index}, {sign})")
    return index * sign


def _free_reduce(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class FreeWord:
    """Freely reduced word; ``alphabet`` names generators 1 and 2."""

    __slots__ = ("letters", "_hash")
    alphabet = "uv"

    def __init__(self, letters=()):
        letters = tuple(letters)
        for x in letters:
            if x not in (1, -1, 2, -2):
                raise ValueError(f"invalid letter {x!r}")
        self.letters = _free_reduce(letters)
        self._hash = None

    @classmethod
    def _from_reduced(cls, letters):
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = None
        return w

    # -- group structure -------------------------------------------------
    def __mul__(self, other):
        a, b = self.letters, other.letters
        i, na, nb = 0, len(a), len(b)
        while i < na and i < nb and a[na - 1 - i] == -b[i]:
            i += 1
        return self._from_reduced(a[:na - i] + b[i:])

    def __invert__(self):
        return self._from_reduced(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, n):
        base = self if n >= 0 else ~self
        out = self._from_reduced(())
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- value semantics -------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return type(self) is type(other) and self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.letters))
        return self._hash

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def is_identity(self):
        return not self.letters

    def __str__(self):
        if not self.letters:
            return "1"
        al = self.alphabet
        return "".join(al[x - 1] if x > 0 else al[-x - 1].upper() for x in self.letters)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


u = FreeWord((1,))
v = FreeWord((2,))
ONE = FreeWord(())


def reduce(raw, cls=FreeWord):
    """The unique reduced word equivalent to the raw letter sequence."""
    return cls(raw)


def mul(x, y):
    return x * y


def inv(x):
    return ~x


def conjugate(y, x):
    """x y x^-1 (the inner automorphism of x applied to y)."""
    return x * y * ~x


def commutator(x, y):
    """[x, y] = x^-1 y^-1 x y."""
    return ~x * ~y * x * y


def cyclic_reduce(x):
    """Split x as conjugator * core * conjugator^-1 with core cyclically reduced."""
    t = x.letters
    i, j = 0, len(t) - 1
    while i < j and t[i] == -t[j]:
        i += 1
        j -= 1
    cls = type(x)
    return cls._from_reduced(t[i:j + 1]), cls._from_reduced(t[:i])


def is_conjugate(x, y):
    """Return w with y = w^-1 x w, or None when x and y are not conjugate.

    Two words are conjugate iff their cyclic reductions are cyclic
    rotations of each other; the witness is re-checked before returning.
    """
    cx, p = cyclic_reduce(x)
    cy, q = cyclic_reduce(y)
    if len(cx) != len(cy):
        return None
    n = len(cx)
    a, b = cx.letters, cy.letters
    cls = type(x)
    for k in range(max(n, 1)):
        if a[k:] + a[:k] == b:
            w = p * cls._from_reduced(a[:k]) * ~q
            if ~w * x * w != y:
                raise AssertionError("conjugator check failed")
            return w
    return None


def abelianize(x):
    """Exponent sums (e1, e2) of generators 1 and 2."""
    e1 = e2 = 0
    for t in x.letters:
        if t == 1:
            e1 += 1
        elif t == -1:
            e1 -= 1
        elif t == 2:
            e2 += 1
        else:
            e2 -= 1
    return (e1, e2)


def iter_words(max_len, cls=FreeWord, min_len=0):
    """All reduced words with min_len <= length <= max_len, shortest first."""
    level = [()]
    for n in range(max_len + 1):
        if n >= min_len:
            for t in level:
                yield cls._from_reduced(t)
        level = [t + (x,) for t in level for x in (1, -1, 2, -2) if not t or t[-1] != -x]


_TOKEN = re.compile(r"\s*(?:(1)|([A-Za-z])(?:\^(-?\d+))?)")


def parse_word(text, cls=FreeWord, macros=None):
    """Parse ``u v U V`` style text (juxtaposition allowed, ``1`` is empty).

    ``macros`` maps extra single characters to letter sequences; an
    optional ``^k`` exponent may follow any symbol.
    """
    al = cls.alphabet
    table = {al[0]: (1,), al[1]: (2,), al[0].upper(): (-1,), al[1].upper(): (-2,)}
    if macros:
        table.update(macros)
    raw = []
    pos, s = 0, text.strip()
    if not s:
        raise ParseError("empty word text (use '1' for the identity)")
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group(1):
            continue
        sym = m.group(2)
        if sym not in table:
            raise ParseError(f"unknown symbol {sym!r} in {text!r}")
        seq = table[sym]
        k = int(m.group(3)) if m.group(3) is not None else 1
        if k < 0:
            seq = tuple(-x for x in reversed(seq))
        raw.extend(seq * abs(k))
    return cls(raw)
