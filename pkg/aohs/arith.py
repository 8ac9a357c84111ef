# -*- coding: utf-8 -*-
"""Coefficient fields: the rationals (through fractions.Fraction), prime fields F_p and extension fields
F_{p^e} = F_p[t]/(m(t)).

Field contexts are immutable and compare by value, so that elements can be shipped to worker processes and
compared after the round trip. Elements of different contexts never mix silently: combining them raises
FieldMismatchException. Python integers are accepted everywhere and mapped into the field.

Arithmetic in F_p[t]/(m(t)) is delegated to the dense GF(p)[t] routines of sympy.polys.galoistools.
"""
import itertools
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_gcdex, gf_pow_mod, gf_strip

from .errors import FieldMismatchException, DivisionByZeroException, NotPrimeException, \
    ReducibleModulusException

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


def is_prime(n):
    n = int(n)
    return n >= 2 and bool(isprime(n))


def as_fraction(value):
    """A fractions.Fraction from a rational number of sympy (Rational), gmpy2 (mpq) or the standard library"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


def _is_rational(value):
    """True for the rationals of sympy and gmpy2 (and Fraction), False for Python integers and strings"""
    if isinstance(value, (int, str)):
        return False
    return hasattr(value, "q") or hasattr(value, "denominator")


class Field(ABC):
    """A field context: converts values into elements and describes the field"""
    @property
    @abstractmethod
    def name(self):
        pass

    @property
    @abstractmethod
    def characteristic(self):
        pass

    @property
    @abstractmethod
    def order(self):
        """Number of elements, None for infinite fields"""
        pass

    @property
    def is_finite(self):
        return self.order is not None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @abstractmethod
    def __call__(self, value):
        pass

    def format(self, element):
        return str(element)

    def elements(self):
        raise TypeError("The elements of {} cannot be enumerated.".format(self.name))

    @abstractmethod
    def random_element(self, rng):
        pass

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The field QQ, elements are fractions.Fraction (always reduced, positive denominator)"""
    @property
    def name(self):
        return "QQ"

    @property
    def characteristic(self):
        return 0

    @property
    def order(self):
        return None

    def __call__(self, value):
        if isinstance(value, (PrimeFieldElement, ExtensionFieldElement)):
            raise FieldMismatchException("Cannot convert an element of {} into QQ.".format(value.field.name))
        if isinstance(value, str):
            value = value.strip()
        elif _is_rational(value):
            return as_fraction(value)
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise DivisionByZeroException("Zero denominator in '{}'.".format(value))

    def inverse(self, element):
        if element == 0:
            raise DivisionByZeroException("Zero has no inverse.")
        return 1 / Fraction(element)

    def format(self, element):
        element = Fraction(element)
        if element.denominator == 1:
            return str(element.numerator)
        return "{}/{}".format(element.numerator, element.denominator)

    def random_element(self, rng, bound=9):
        return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Field):
    """The prime field F_p"""
    def __init__(self, p):
        """
        Parameters
        ----------
        p: int
            The characteristic

        Raises
        ------
        NotPrimeException: if p is not prime
        """
        p = int(p)
        if not is_prime(p):
            raise NotPrimeException("{} is not a prime.".format(p))
        self._p = p

    @property
    def p(self):
        return self._p

    @property
    def name(self):
        return "GF({})".format(self._p)

    @property
    def characteristic(self):
        return self._p

    @property
    def order(self):
        return self._p

    def __call__(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.field._p != self._p:
                raise FieldMismatchException("Cannot convert an element of {} into {}.".format(value.field.name, self.name))
            return value
        if isinstance(value, ExtensionFieldElement):
            raise FieldMismatchException("Cannot convert an element of {} into {}.".format(value.field.name, self.name))
        if isinstance(value, str):
            value = Fraction(value.strip())
        elif _is_rational(value):
            value = as_fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self._p == 0:
                raise DivisionByZeroException("Denominator of {} vanishes in {}.".format(value, self.name))
            return PrimeFieldElement(self, value.numerator * pow(value.denominator, self._p - 2, self._p))
        return PrimeFieldElement(self, int(value))

    def elements(self):
        return (PrimeFieldElement(self, residue) for residue in range(self._p))

    def random_element(self, rng):
        return PrimeFieldElement(self, int(rng.integers(0, self._p)))

    def format(self, element):
        return str(element.residue)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other._p == self._p

    def __hash__(self):
        return hash(("GF", self._p))

    def __reduce__(self):
        return PrimeField, (self._p,)


class PrimeFieldElement(object):
    """An element of F_p, stored as its residue in [0, p). It equals the Python integer equal to its residue."""
    __slots__ = ("field", "residue")

    def __init__(self, field, residue):
        self.field = field
        self.residue = int(residue) % field._p

    def _other(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field._p != self.field._p:
                raise FieldMismatchException("Cannot combine elements of {} and {}.".format(self.field.name, other.field.name))
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, ExtensionFieldElement)):
            raise FieldMismatchException("Cannot combine an element of {} with {!r}.".format(self.field.name, other))
        return None

    def __add__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return PrimeFieldElement(self.field, self.residue + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return PrimeFieldElement(self.field, self.residue - value)

    def __rsub__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return PrimeFieldElement(self.field, value - self.residue)

    def __mul__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return PrimeFieldElement(self.field, self.residue * value)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(self.field, -self.residue)

    def inverse(self):
        if self.residue == 0:
            raise DivisionByZeroException("Zero has no inverse in {}.".format(self.field.name))
        p = self.field._p
        return PrimeFieldElement(self.field, pow(self.residue, p - 2, p))

    def __truediv__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self * PrimeFieldElement(self.field, value).inverse()

    def __rtruediv__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self.inverse() * value

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(self.field, pow(self.residue, exponent, self.field._p))

    def __eq__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self.residue == value

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(self.residue)

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return "{} (mod {})".format(self.residue, self.field._p)

    def __str__(self):
        return str(self.residue)


def _dense(coordinates):
    """galoistools representation (leading coefficient first, stripped) of constant-first coordinates"""
    return gf_strip([ZZ(int(c)) for c in reversed(coordinates)])


def _is_irreducible(p, modulus):
    return bool(gf_irreducible_p(_dense(modulus), p, ZZ))


class ExtensionField(Field):
    """The field F_p[t]/(m(t)) for a monic irreducible m of degree e >= 2"""
    def __init__(self, p, modulus, generator="t", check=True):
        """
        Parameters
        ----------
        p: int
            The characteristic
        modulus: sequence of int
            Coefficients of m, constant term first; m must be monic
        generator: str
            Name of the class of t, used for printing and parsing
        check: bool
            True for verifying the irreducibility of m

        Raises
        ------
        NotPrimeException: if p is not prime
        ReducibleModulusException: if m is not monic of degree >= 2 or not irreducible
        """
        self._prime_field = PrimeField(p)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 3 or modulus[-1] != 1:
            raise ReducibleModulusException("The modulus must be monic of degree at least 2, got {}.".format(modulus))
        if check and not _is_irreducible(p, modulus):
            raise ReducibleModulusException("The modulus {} is reducible over GF({}).".format(modulus, p))
        self._p = p
        self._modulus = modulus
        self._dense_modulus = _dense(modulus)
        self._degree = len(modulus) - 1
        self._generator = generator

    @property
    def p(self):
        return self._p

    @property
    def degree(self):
        return self._degree

    @property
    def modulus(self):
        return self._modulus

    @property
    def prime_field(self):
        return self._prime_field

    @property
    def generator_name(self):
        return self._generator

    @property
    def generator(self):
        return ExtensionFieldElement(self, (0, 1) + (0,) * (self._degree - 2))

    @property
    def name(self):
        return "GF({}^{})".format(self._p, self._degree)

    @property
    def characteristic(self):
        return self._p

    @property
    def order(self):
        return self._p ** self._degree

    def _embed(self, value):
        return ExtensionFieldElement(self, (value % self._p,) + (0,) * (self._degree - 1))

    def _coordinates(self, dense):
        values = [int(c) % self._p for c in reversed(dense)]
        return tuple(values) + (0,) * (self._degree - len(values))

    def __call__(self, value):
        if isinstance(value, ExtensionFieldElement):
            if value.field != self:
                raise FieldMismatchException("Cannot convert an element of {} into {}.".format(value.field.name, self.name))
            return value
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self._p:
                raise FieldMismatchException("Cannot convert an element of {} into {}.".format(value.field.name, self.name))
            return self._embed(value.residue)
        if isinstance(value, (tuple, list)):
            if len(value) > self._degree:
                raise ValueError("Too many coordinates for {}.".format(self.name))
            coordinates = tuple(int(c) % self._p for c in value) + (0,) * (self._degree - len(value))
            return ExtensionFieldElement(self, coordinates)
        if isinstance(value, (str, Fraction)) or _is_rational(value):
            return self._embed(self._prime_field(value).residue)
        return self._embed(int(value))

    def elements(self):
        return (ExtensionFieldElement(self, coordinates)
                for coordinates in itertools.product(range(self._p), repeat=self._degree))

    def random_element(self, rng):
        return ExtensionFieldElement(self, tuple(int(c) for c in rng.integers(0, self._p, size=self._degree)))

    def multiply(self, a, b):
        """Product of two coordinate tuples"""
        p = self._p
        return self._coordinates(gf_rem(gf_mul(_dense(a), _dense(b), p, ZZ), self._dense_modulus, p, ZZ))

    def power(self, a, exponent):
        """Non-negative power of a coordinate tuple"""
        return self._coordinates(gf_pow_mod(_dense(a), exponent, self._dense_modulus, self._p, ZZ))

    def invert(self, a):
        """Inverse of a nonzero coordinate tuple, from the Bezout relation s a + u m = 1"""
        s, _, _ = gf_gcdex(_dense(a), self._dense_modulus, self._p, ZZ)
        return self._coordinates(s)

    def format(self, element):
        terms = list()
        for power in range(self._degree - 1, -1, -1):
            c = element.coordinates[power]
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = self._generator if power == 1 else "{}^{}".format(self._generator, power)
                terms.append(monomial if c == 1 else "{}*{}".format(c, monomial))
        return " + ".join(terms) if len(terms) > 0 else "0"

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other._p == self._p and other._modulus == self._modulus

    def __hash__(self):
        return hash(("GF", self._p, self._modulus))

    def __reduce__(self):
        return ExtensionField, (self._p, self._modulus, self._generator, False)


class ExtensionFieldElement(object):
    """An element of an extension field, stored as the coordinates (constant first) of its reduced
    representative in the basis 1, t, ..., t^(e-1). Elements of the prime subfield equal the Python integer
    equal to their residue."""
    __slots__ = ("field", "coordinates")

    def __init__(self, field, coordinates):
        self.field = field
        self.coordinates = coordinates

    def _other(self, other):
        if isinstance(other, ExtensionFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchException("Cannot combine elements of {} and {}.".format(self.field.name, other.field.name))
            return other.coordinates
        if isinstance(other, int):
            return self.field._embed(other).coordinates
        if isinstance(other, (Fraction, PrimeFieldElement)):
            raise FieldMismatchException("Cannot combine an element of {} with {!r}.".format(self.field.name, other))
        return None

    def _new(self, coordinates):
        return ExtensionFieldElement(self.field, coordinates)

    def __add__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        p = self.field._p
        return self._new(tuple((a + b) % p for a, b in zip(self.coordinates, value)))

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        p = self.field._p
        return self._new(tuple((a - b) % p for a, b in zip(self.coordinates, value)))

    def __rsub__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        p = self.field._p
        return self._new(tuple((b - a) % p for a, b in zip(self.coordinates, value)))

    def __mul__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self._new(self.field.multiply(self.coordinates, value))

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field._p
        return self._new(tuple((-a) % p for a in self.coordinates))

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self._new(self.field.power(self.coordinates, exponent))

    def frobenius(self, times=1):
        """The image under the Frobenius a -> a^p applied a given number of times"""
        return self ** (self.field.p ** times)

    def inverse(self):
        if not any(self.coordinates):
            raise DivisionByZeroException("Zero has no inverse in {}.".format(self.field.name))
        return self._new(self.field.invert(self.coordinates))

    def __truediv__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self * self._new(value).inverse()

    def __rtruediv__(self, other):
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self._new(value) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coordinates[0] == other and not any(self.coordinates[1:])
        value = self._other(other)
        if value is None:
            return NotImplemented
        return self.coordinates == value

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        if not any(self.coordinates[1:]):
            return hash(self.coordinates[0])
        return hash(self.coordinates)

    def __bool__(self):
        return any(self.coordinates)

    @property
    def prime_coordinates(self):
        """The coordinates as elements of the prime field"""
        return tuple(self.field.prime_field(c) for c in self.coordinates)

    def __repr__(self):
        return "{} in {}".format(self.field.format(self), self.field.name)

    def __str__(self):
        return self.field.format(self)


@lru_cache(maxsize=None)
def make_extension(p, e):
    """The field with p^e elements, defined by the lexicographically smallest monic irreducible polynomial
    (coefficients compared from degree e-1 down to the constant term). For e = 1, F_p itself.

    Parameters
    ----------
    p: int
        A prime
    e: int
        The degree, e >= 1

    Returns
    -------
    field: Field
        The field context

    Raises
    ------
    NotPrimeException: if p is not prime
    """
    if not is_prime(p):
        raise NotPrimeException("{} is not a prime.".format(p))
    if e < 1:
        raise ValueError("The extension degree must be positive, got {}.".format(e))
    if e == 1:
        return PrimeField(p)
    for written in itertools.product(range(p), repeat=e):
        if written[-1] == 0:  # t divides it
            continue
        modulus = tuple(reversed(written)) + (1,)
        if _is_irreducible(p, modulus):
            return ExtensionField(p, modulus, check=False)
    raise AssertionError("No irreducible polynomial of degree {} over GF({}).".format(e, p))
