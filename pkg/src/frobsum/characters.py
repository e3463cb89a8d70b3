"""Exact character arithmetic for SL_2 in characteristic p.

Weights are integers (multiples of the fundamental weight), characters are
finitely supported integer-valued functions on weights.  Everything here is
pure and exact; tilting characters are memoized per (p, u).
"""

from functools import lru_cache


class NotTiltingError(ValueError):
    """A symmetric character is not a nonnegative sum of tilting characters."""


class WeightChar:
    """A formal SL_2 character: sparse Laurent polynomial in the weight
    variable, with arbitrary-precision integer coefficients.

    Instances are treated as immutable; all arithmetic returns fresh objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cc = {}
        if coeffs:
            for w, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    cc[w] = cc.get(w, 0) + c
                    if not cc[w]:
                        del cc[w]
        self.coeffs = cc

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    def coeff(self, w):
        return self.coeffs.get(w, 0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, WeightChar) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        res = WeightChar()
        res.coeffs = out
        return res

    def __sub__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) - c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        res = WeightChar()
        res.coeffs = out
        return res

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    del out[w]
        res = WeightChar()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def scale(self, k: int):
        res = WeightChar()
        if k:
            res.coeffs = {w: k * c for w, c in self.coeffs.items()}
        return res

    def stretch(self, k: int):
        """Substitute z -> z^k (weight w becomes k*w)."""
        res = WeightChar()
        res.coeffs = {k * w: c for w, c in self.coeffs.items()}
        return res

    def dimension(self):
        return sum(self.coeffs.values())

    def max_weight(self):
        if not self.coeffs:
            raise ValueError("zero character has no highest weight")
        return max(self.coeffs)

    def is_symmetric(self):
        return all(self.coeffs.get(-w, 0) == c for w, c in self.coeffs.items())

    def __repr__(self):
        items = ", ".join(f"{w}:{c}" for w, c in sorted(self.coeffs.items(), reverse=True))
        return "WeightChar({%s})" % items


def weyl_char(m: int) -> WeightChar:
    """Character of the induced module with highest weight m:
    z^m + z^(m-2) + ... + z^(-m)."""
    if m < 0:
        raise ValueError(f"highest weight must be >= 0, got {m}")
    res = WeightChar()
    res.coeffs = {w: 1 for w in range(-m, m + 1, 2)}
    return res


def tilting_digits(p: int, u: int) -> tuple:
    """Base-p digit expansion u = sum u_i p^i with p-1 <= u_i <= 2p-2 for
    i < k and 0 <= u_k <= p-1, normalized so the expansion is canonical
    (u_k < p-1 whenever k >= 1, minimal length otherwise)."""
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    digits = []
    while True:
        if u <= p - 2 or (u == p - 1 and not digits):
            digits.append(u)
            return tuple(digits)
        r = u % p
        d0 = r if r >= p - 1 else r + p
        digits.append(d0)
        u = (u - d0) // p


@lru_cache(maxsize=None)
def _tilting_base_char(p: int, d: int) -> WeightChar:
    # character of the indecomposable tilting module for a single digit d <= 2p-2
    if d <= p - 1:
        return weyl_char(d)
    return weyl_char(d) + weyl_char(2 * p - 2 - d)


@lru_cache(maxsize=None)
def tilting_char(p: int, u: int) -> WeightChar:
    """Character of the indecomposable tilting module with highest weight u,
    assembled as the product over the digit expansion with the i-th factor
    evaluated at z^(p^i)."""
    digits = tilting_digits(p, u)
    res = WeightChar.one()
    for i, d in enumerate(digits):
        res = res * _tilting_base_char(p, d).stretch(p ** i)
    return res


def tilting_dim(p: int, u: int) -> int:
    return tilting_char(p, u).dimension()


def nabla_mults(p: int, u: int) -> dict:
    """Good-filtration multiplicities of the indecomposable tilting module
    with highest weight u: map v -> multiplicity, all values 1.

    v runs over sums v_i p^i where v_i is u_i or 2p-2-u_i for i < k and
    v_k = u_k (duplicates collapse when u_i = p-1).
    """
    digits = tilting_digits(p, u)
    vs = {0}
    for i, d in enumerate(digits):
        if i < len(digits) - 1:
            choices = {d, 2 * p - 2 - d}
        else:
            choices = {d}
        vs = {v + c * p ** i for v in vs for c in choices}
    return {v: 1 for v in sorted(vs)}


def tensor_decompose_simples(p: int, a: int, b: int) -> dict:
    """Decompose the tensor product of the simple modules with restricted
    highest weights a, b (0 <= a, b <= p-1) into indecomposable tilting
    summands.  Returns map m -> multiplicity."""
    if not (0 <= a <= p - 1 and 0 <= b <= p - 1):
        raise ValueError(f"weights must lie in [0, p-1], got ({a}, {b})")
    a, b = max(a, b), min(a, b)
    out = {}
    # truncated Clebsch-Gordan range
    top = min(a + b, 2 * p - 4 - a - b)
    for m in range(a - b, top + 1, 2):
        out[m] = out.get(m, 0) + 1
    if a + b >= p - 1:
        start = p if (a + b - p) % 2 == 0 else p - 1
        for m in range(start, a + b + 1, 2):
            out[m] = out.get(m, 0) + 1
    return out


def decompose_tilting_char(p: int, c: WeightChar) -> dict:
    """Write a symmetric nonnegative character as an exact nonnegative sum of
    tilting characters by peeling the highest weight; multiplicities are
    forced because every tilting character is monic at its highest weight.

    Raises NotTiltingError when a forced multiplicity is negative.
    """
    if not c.is_symmetric():
        raise ValueError("character is not symmetric under weight negation")
    weights = list(c.coeffs)
    assert all((w - weights[0]) % 2 == 0 for w in weights), \
        "weights of a decomposable character must share parity"
    rem = c
    out = {}
    while rem:
        w = rem.max_weight()
        m = rem.coeff(w)
        if m < 0 or w < 0:
            raise NotTiltingError(
                f"not a nonnegative tilting combination (weight {w}, forced multiplicity {m})")
        out[w] = m
        rem = rem - tilting_char(p, w).scale(m)
    return out
