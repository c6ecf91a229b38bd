from fractions import Fraction
from typing import Any, Iterable, List

import numpy as np

from quiver_rank.utils.string_util import split_rational

Scalar = Any  # Fraction for the rationals, int in range(p) for a prime field

SMALL_PRIMES = (2, 3, 5, 7)


class Field:
    """
    An exact field. Scalars are plain Python numbers so that numpy object arrays can hold them;
    the field object knows how to bring an array of them back into normal form.
    """

    characteristic: int = 0

    @property
    def zero(self) -> Scalar:
        raise NotImplementedError

    @property
    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def inverse(self, value: Scalar) -> Scalar:
        raise NotImplementedError

    def normalize(self, array: np.ndarray) -> np.ndarray:
        """Brings every entry of an object array into canonical form."""
        raise NotImplementedError

    def reduce(self, array: np.ndarray) -> np.ndarray:
        """
        Cheap clean-up after arithmetic on already normalized arrays. Rational arithmetic
        stays closed on Fractions, prime-field arithmetic has to be taken mod p again.
        """
        return array

    def parse(self, literal: str) -> Scalar:
        numerator, denominator = split_rational(literal)
        return self.divide(self.coerce(numerator), self.coerce(denominator))

    def divide(self, a: Scalar, b: Scalar) -> Scalar:
        return self.coerce(a * self.inverse(b))

    def format(self, value: Scalar) -> str:
        return str(value)

    def elements(self) -> Iterable[Scalar]:
        raise NotImplementedError(f'{self} is infinite.')

    def is_rational(self) -> bool:
        return self.characteristic == 0


class RationalField(Field):
    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def inverse(self, value: Fraction) -> Fraction:
        if value == 0:
            raise ZeroDivisionError('0 has no inverse.')
        return 1 / Fraction(value)

    def normalize(self, array: np.ndarray) -> np.ndarray:
        # int results of object-array arithmetic (e.g. 0 * Fraction) are promoted back
        out = np.empty(array.shape, dtype=object)
        for index, value in np.ndenumerate(array):
            out[index] = value if isinstance(value, Fraction) else Fraction(value)
        return out

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('QQ')

    def __repr__(self):
        return 'QQ'


class PrimeField(Field):

    def __init__(self, p: int):
        if p not in SMALL_PRIMES:
            raise ValueError(f'Only the prime fields of order {SMALL_PRIMES} are supported, got {p}.')
        self.characteristic = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            return self.divide(value.numerator % self.characteristic, value.denominator % self.characteristic)
        return int(value) % self.characteristic

    def inverse(self, value: int) -> int:
        value = int(value) % self.characteristic
        if value == 0:
            raise ZeroDivisionError('0 has no inverse.')
        return pow(value, -1, self.characteristic)

    def divide(self, a: int, b: int) -> int:
        return (int(a) * self.inverse(b)) % self.characteristic

    def normalize(self, array: np.ndarray) -> np.ndarray:
        out = np.empty(array.shape, dtype=object)
        for index, value in np.ndenumerate(array):
            out[index] = self.coerce(value)
        return out

    def reduce(self, array: np.ndarray) -> np.ndarray:
        return np.mod(array, self.characteristic)

    def elements(self) -> List[int]:
        return list(range(self.characteristic))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(('GF', self.characteristic))

    def __repr__(self):
        return f'GF({self.characteristic})'


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
