"""
Basis blades of Clifford superalgebras as bitsets over the odd generators.

Bit i of a mask stands for the generator e_(i+1). The product of two blades
is the XOR of the masks times a sign in {-1, 0, +1}; the sign comes from
sorting the concatenated generator word and contracting repeated generators
by their squares.
"""

from dataclasses import dataclass

from .errors import InvalidBlade, InvalidSignature, TooLarge
from .scalars import Field, Scalar

MAX_GENERATORS = 16


@dataclass(frozen=True)
class Signature:
    """Generator squares (+1, -1 or 0) in the canonical order +1 first, then -1, then 0."""

    squares: tuple
    field: Field = Field.REAL

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(int(s) for s in self.squares))
        if len(self.squares) > MAX_GENERATORS:
            raise TooLarge(f"{len(self.squares)} generators exceed the cap of {MAX_GENERATORS}")
        if any(s not in (1, -1, 0) for s in self.squares):
            raise InvalidSignature(f"generator squares must be +1, -1 or 0, got {self.squares}")
        if self.field is Field.COMPLEX and -1 in self.squares:
            raise InvalidSignature("complex signatures only use squares +1 and 0")

    @classmethod
    def real(cls, p, q=0, r=0):
        if min(p, q, r) < 0:
            raise InvalidSignature(f"negative signature ({p},{q},{r})")
        return cls((1,) * p + (-1,) * q + (0,) * r, Field.REAL)

    @classmethod
    def complex(cls, p, q=0):
        if min(p, q) < 0:
            raise InvalidSignature(f"negative signature ({p},{q})")
        return cls((1,) * p + (0,) * q, Field.COMPLEX)

    @property
    def n(self):
        return len(self.squares)

    @property
    def dim(self):
        return 1 << self.n

    @property
    def p(self):
        return self.squares.count(1)

    @property
    def q(self):
        return self.squares.count(-1)

    @property
    def r(self):
        return self.squares.count(0)

    def label(self):
        if self.field is Field.COMPLEX:
            return f"C({self.p},{self.r})"
        return f"R({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class Blade:
    """A product of distinct generators in ascending order."""

    mask: int

    @property
    def degree(self):
        return self.mask.bit_count()

    @property
    def parity(self):
        return self.mask.bit_count() & 1

    def indices(self):
        """1-based generator indices in ascending order."""
        return [i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1]

    @classmethod
    def from_indices(cls, indices):
        mask = 0
        for i in indices:
            if i < 1:
                raise InvalidBlade(f"generator index {i} is not positive")
            mask |= 1 << (i - 1)
        return cls(mask)

    def __str__(self):
        return blade_name(self.mask)


def blade_name(mask):
    """Textual form "e1*e3*e4", or "1" for the empty blade."""
    if not mask:
        return "1"
    return "*".join(f"e{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def _inversions(mask1, mask2):
    # popcount of mask1 strictly above each set bit of mask2
    count = 0
    rest = mask2
    while rest:
        low = rest & -rest
        count += (mask1 >> low.bit_length()).bit_count()
        rest ^= low
    return count


def transposition_count(b1, b2):
    """Number of pairs (i in b1, j in b2) with i > j."""
    return _inversions(b1.mask, b2.mask)


@dataclass(frozen=True)
class BladeLaw:
    """
    Sign rule of a monomial superalgebra on n generators.

    e_m1 * e_m2 = sign(m1, m2) * e_(m1 ^ m2), where the sign exponent is the
    transposition count, plus one for every shared generator squaring to -1,
    plus the twist bilinear form (row i is a mask, summed over i in m1). A
    shared generator squaring to 0 kills the product. The twist is zero for
    Clifford algebras and becomes the all-ones form under the hat functor.
    """

    n: int
    negative: int = 0
    null: int = 0
    twist: tuple = ()

    @classmethod
    def from_signature(cls, sig):
        negative = null = 0
        for i, square in enumerate(sig.squares):
            if square == -1:
                negative |= 1 << i
            elif square == 0:
                null |= 1 << i
        return cls(sig.n, negative, null, ())

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def sign(self, mask1, mask2):
        common = mask1 & mask2
        if common & self.null:
            return 0
        exponent = _inversions(mask1, mask2) + (common & self.negative).bit_count()
        if self.twist:
            rest = mask1
            while rest:
                low = rest & -rest
                exponent += (self.twist[low.bit_length() - 1] & mask2).bit_count()
                rest ^= low
        return -1 if exponent & 1 else 1

    def hatted(self):
        """Law of the hat algebra: every twist row is XORed with the full mask."""
        rows = self.twist or (0,) * self.n
        twist = tuple(row ^ self.full_mask for row in rows)
        if not any(twist):
            twist = ()
        return BladeLaw(self.n, self.negative, self.null, twist)

    def concat(self, other):
        """Law of the skew tensor product; other's generators follow ours."""
        shift = self.n
        rows = (self.twist or (0,) * self.n) + tuple(row << shift for row in (other.twist or (0,) * other.n))
        return BladeLaw(
            self.n + other.n,
            self.negative | other.negative << shift,
            self.null | other.null << shift,
            rows if any(rows) else (),
        )


def check_blade(blade, sig):
    if blade.mask < 0 or blade.mask >> sig.n:
        raise InvalidBlade(f"blade mask {blade.mask:#b} out of range for {sig.n} generators")


def blade_mul(b1, b2, sig):
    """
    Product of two basis blades under a signature.

    Args:
        b1: Left blade
        b2: Right blade
        sig: Ambient signature

    Returns:
        (coeff, blade) where coeff is a Scalar in {-1, 0, +1}
    """
    check_blade(b1, sig)
    check_blade(b2, sig)
    sign = BladeLaw.from_signature(sig).sign(b1.mask, b2.mask)
    return Scalar.of(sig.field, sign), Blade(b1.mask ^ b2.mask)
