from fractions import Fraction
from math import gcd, isqrt
from typing import List, Sequence

from quiver_rank.errors import DimensionMismatchException
from quiver_rank.linalg.field import Field, QQ, Scalar
from quiver_rank.linalg.matrix import Matrix


class Polynomial:
    """
    A univariate polynomial over an exact field. Coefficients are stored lowest degree first
    with trailing zeros stripped, so the zero polynomial has no coefficients at all.
    """

    __slots__ = ('field', 'coefficients')

    def __init__(self, coefficients: Sequence, field: Field = QQ):
        coefficients = [field.coerce(c) for c in coefficients]
        while len(coefficients) > 0 and coefficients[-1] == 0:
            coefficients.pop()
        self.field = field
        self.coefficients = tuple(coefficients)

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 0

    def leading_coefficient(self) -> Scalar:
        return self.coefficients[-1] if not self.is_zero() else self.field.zero

    def __call__(self, x: Scalar) -> Scalar:
        value = self.field.zero
        for c in reversed(self.coefficients):
            value = self.field.coerce(value * x + c)
        return value

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        if self.is_zero() or other.is_zero():
            return Polynomial([], self.field)
        product = [self.field.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return Polynomial(product, self.field)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.field, self.coefficients))

    def __repr__(self):
        if self.is_zero():
            return '0'
        terms = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            if degree == 0:
                terms.append(self.field.format(c))
            else:
                power = 'x' if degree == 1 else f'x^{degree}'
                terms.append(power if c == 1 else f'{self.field.format(c)}*{power}')
        return ' + '.join(terms)


def linear_factor(root: Scalar, field: Field = QQ) -> Polynomial:
    """The monic polynomial x - root."""
    return Polynomial([-field.coerce(root), field.one], field)


def char_poly(m: Matrix) -> Polynomial:
    """
    det(xI - m), computed with Berkowitz's division-free algorithm so that no pivoting on
    polynomial entries is needed.
    """
    if not m.is_square():
        raise DimensionMismatchException(f'Only square matrices have a characteristic polynomial, got {m.shape}.')
    field = m.field
    n = m.rows
    a = m.to_array()
    # coefficient vector of the char poly of the leading r x r block, highest degree first
    vector = [field.one]
    for r in range(n):
        # Toeplitz column for the bordered block [[A_r, c], [s, a_rr]]
        s = [a[r, j] for j in range(r)]
        c = [a[i, r] for i in range(r)]
        column = [field.one, field.coerce(-a[r, r])]
        power_c = c
        for _ in range(r):
            # -(s . A_r^k . c)
            column.append(field.coerce(-sum((s[j] * power_c[j] for j in range(r)), field.zero)))
            power_c = [field.coerce(sum((a[i, j] * power_c[j] for j in range(r)), field.zero)) for i in range(r)]
        # multiply the lower triangular Toeplitz matrix built from column by vector
        updated = []
        for i in range(r + 2):
            total = field.zero
            for j in range(min(i + 1, len(vector))):
                total = total + column[i - j] * vector[j]
            updated.append(field.coerce(total))
        vector = updated
    return Polynomial(list(reversed(vector)), field)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Polynomial) -> List[Fraction]:
    """
    All distinct rational roots of a nonzero polynomial over the rationals, in increasing order.
    Denominators are cleared first; candidates are then r/s with r dividing the lowest nonzero
    integer coefficient and s dividing the leading one.
    """
    if p.is_zero():
        raise ValueError('The zero polynomial has every number as a root.')
    if p.field != QQ:
        raise ValueError(f'rational_roots works over QQ, got {p.field}.')
    roots = set()
    coefficients = list(p.coefficients)
    # x = 0 is a root exactly when the constant term vanishes; strip those factors of x
    low = 0
    while coefficients[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
    coefficients = coefficients[low:]
    common_denominator = 1
    for c in coefficients:
        common_denominator = common_denominator * c.denominator // gcd(common_denominator, c.denominator)
    integers = [int(c * common_denominator) for c in coefficients]
    reduced = Polynomial(coefficients, QQ)
    for r in _divisors(integers[0]):
        for s in _divisors(integers[-1]):
            for candidate in (Fraction(r, s), Fraction(-r, s)):
                if reduced(candidate) == 0:
                    roots.add(candidate)
    return sorted(roots)


def roots_in_field(p: Polynomial) -> List[Scalar]:
    """Distinct roots of p in its own field: rational roots over QQ, exhaustive search over GF(p)."""
    if p.field.is_rational():
        return rational_roots(p)
    if p.is_zero():
        raise ValueError('The zero polynomial has every element as a root.')
    return [x for x in p.field.elements() if p(x) == 0]
