# -*- coding: utf-8 -*-
"""Dense univariate polynomials over a field: Euclidean algorithms, squarefree and distinct-degree
factorization, binary forms, resultants and root finding in finite fields.

Over QQ and the prime fields the algorithms are those of sympy (Poly over QQ, the dense GF(p)[x] routines
of sympy.polys.galoistools). Polynomials with coefficients in an extension field F_{p^e}, for which sympy has
no ground domain, go through the generic Euclidean algorithms at the end of this module.
"""
from math import comb

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_gcdex, gf_sqf_list, gf_ddf_zassenhaus, gf_factor, gf_strip

from .arith import QQ, PrimeField, as_fraction
from .errors import FieldMismatchException, DivisionByZeroException
from .util import make_rng, RNG_SPLITTING

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

# fields up to this order are searched exhaustively for roots
BRUTE_FORCE_ORDER = 4096


class UnivariatePolynomial(object):
    """A polynomial in one variable stored as its dense list of coefficients (constant term first)"""
    def __init__(self, field, coefficients, variable="z"):
        coefficients = [field(c) for c in coefficients]
        while len(coefficients) > 0 and not coefficients[-1]:
            coefficients.pop()
        self._field = field
        self._coefficients = coefficients
        self._variable = variable

    @classmethod
    def x(cls, field, variable="z"):
        return cls(field, [0, 1], variable=variable)

    @classmethod
    def constant(cls, field, value, variable="z"):
        return cls(field, [value], variable=variable)

    @property
    def field(self):
        return self._field

    @property
    def variable(self):
        return self._variable

    @property
    def coefficients(self):
        return list(self._coefficients)

    @property
    def degree(self):
        return len(self._coefficients) - 1

    @property
    def leading(self):
        return self._coefficients[-1] if len(self._coefficients) > 0 else self._field.zero

    def __getitem__(self, index):
        if 0 <= index < len(self._coefficients):
            return self._coefficients[index]
        return self._field.zero

    def is_zero(self):
        return len(self._coefficients) == 0

    def __bool__(self):
        return len(self._coefficients) > 0

    def is_constant(self):
        return len(self._coefficients) <= 1

    def is_one(self):
        return len(self._coefficients) == 1 and self._coefficients[0] == 1

    def _new(self, coefficients):
        return UnivariatePolynomial(self._field, coefficients, variable=self._variable)

    def monic(self):
        if self.is_zero():
            raise DivisionByZeroException("The zero polynomial cannot be made monic.")
        return self.scale(self._field.one / self.leading)

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            if other._field != self._field:
                raise FieldMismatchException("Cannot combine polynomials over {} and {}.".format(self._field.name, other._field.name))
            return other
        return self._new([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self._coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return self._new([])
        zero = self._field.zero
        product = [zero] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if not a:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] = product[i + j] + a * b
        return self._new(product)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = self._field(scalar)
        return self._new([c * scalar for c in self._coefficients])

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZeroException("Division by the zero polynomial.")
        remainder = list(self._coefficients)
        divisor = other._coefficients
        inverse = self._field.one / divisor[-1]
        shift_max = len(remainder) - len(divisor)
        if shift_max < 0:
            return self._new([]), self
        quotient = [self._field.zero] * (shift_max + 1)
        for shift in range(shift_max, -1, -1):
            lead = remainder[shift + len(divisor) - 1]
            if not lead:
                continue
            factor = lead * inverse
            quotient[shift] = factor
            for i, d in enumerate(divisor):
                remainder[shift + i] = remainder[shift + i] - factor * d
        return self._new(quotient), self._new(remainder[:len(divisor) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division

        Raises
        ------
        ValueError: if the division leaves a remainder
        """
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ValueError("{} does not divide {}.".format(other, self))
        return quotient

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative exponent {}.".format(exponent))
        result, base = self._new([1]), self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent > 0:
                base = base * base
        return result

    def powmod(self, exponent, modulus):
        """self^exponent reduced modulo a nonzero polynomial"""
        result, base = self._new([1]) % modulus, self % modulus
        while exponent > 0:
            if exponent & 1:
                result = (result * base) % modulus
            exponent >>= 1
            if exponent > 0:
                base = (base * base) % modulus
        return result

    def evaluate(self, value):
        """Value at a point of the coefficient field or of an extension of it (Horner scheme)"""
        field = getattr(value, "field", self._field)
        if field != self._field:
            coefficients = [field(c) for c in self._coefficients]
        else:
            coefficients = self._coefficients
            value = field(value)
        result = field.zero
        for c in reversed(coefficients):
            result = result * value + c
        return result

    def __call__(self, value):
        return self.evaluate(value)

    def derivative(self):
        return self._new([c * i for i, c in enumerate(self._coefficients)][1:])

    def hasse_derivative(self, order):
        """Divided derivative of a given order, order -1 gives zero"""
        if order == -1:
            return self._new([])
        if order < -1:
            raise ValueError("Derivative order must be at least -1, got {}.".format(order))
        return self._new([c * comb(i, order) for i, c in enumerate(self._coefficients)][order:])

    def change_field(self, field):
        if field == self._field:
            return self
        return UnivariatePolynomial(field, [field(c) for c in self._coefficients], variable=self._variable)

    def to_polynomial(self, ring, variable=None):
        """The polynomial as an element of a multivariate ring containing its variable"""
        variable = self._variable if variable is None else variable
        z = ring.gen(variable)
        result = ring.zero
        for degree, c in enumerate(self._coefficients):
            if c:
                result = result + (z ** degree).scale(c)
        return result

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self._field == other._field and self._coefficients == other._coefficients
        try:
            return self._coefficients == self._coerce(other)._coefficients
        except (TypeError, ValueError):
            return NotImplemented

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(tuple(self._coefficients))

    def __str__(self):
        from .poly import PolynomialRing
        return str(self.to_polynomial(PolynomialRing(self._field, [self._variable])))

    def __repr__(self):
        return "UnivariatePolynomial({}, {})".format(str(self), self._field.name)



def _check_fields(f, g):
    if f.field != g.field:
        raise FieldMismatchException("Cannot combine polynomials over {} and {}.".format(f.field.name, g.field.name))


def _to_gf(f):
    """galoistools representation (leading coefficient first) of a polynomial over a prime field"""
    return gf_strip([ZZ(c.residue) for c in reversed(f.coefficients)])


def _from_gf(dense, template):
    return template._new([int(c) for c in reversed(dense)])


def _to_sympy(f, variable=None):
    """f as a sympy Poly over QQ"""
    coefficients = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coefficients)]
    generator = sympy.Symbol(f.variable if variable is None else variable)
    return sympy.Poly.from_list(coefficients or [0], generator, domain=sympy.QQ)


def _from_sympy(poly, template):
    return template._new([as_fraction(c) for c in reversed(poly.all_coeffs())])


def gcd(f, g):
    """Monic greatest common divisor

    Raises
    ------
    ValueError: if both polynomials are zero
    """
    _check_fields(f, g)
    if f.is_zero() and g.is_zero():
        raise ValueError("The gcd of two zero polynomials is undefined.")
    field = f.field
    if isinstance(field, PrimeField):
        return _from_gf(gf_gcd(_to_gf(f), _to_gf(g), field.p, ZZ), f)
    if field == QQ:
        return _from_sympy(_to_sympy(f).gcd(_to_sympy(g, f.variable)), f).monic()
    return _euclid_gcd(f, g)


def xgcd(f, g):
    """Extended Euclidean algorithm

    Returns
    -------
    d: UnivariatePolynomial
        The monic gcd
    a, b: UnivariatePolynomial
        Bezout cofactors such that a*f + b*g = d

    Raises
    ------
    ValueError: if both polynomials are zero
    """
    _check_fields(f, g)
    if f.is_zero() and g.is_zero():
        raise ValueError("The gcd of two zero polynomials is undefined.")
    field = f.field
    if isinstance(field, PrimeField):
        a, b, d = gf_gcdex(_to_gf(f), _to_gf(g), field.p, ZZ)
        return _from_gf(d, f), _from_gf(a, f), _from_gf(b, f)
    if field == QQ:
        a, b, d = _to_sympy(f).gcdex(_to_sympy(g, f.variable))
        d, a, b = _from_sympy(d, f), _from_sympy(a, f), _from_sympy(b, f)
        inverse = field.one / d.leading
        return d.scale(inverse), a.scale(inverse), b.scale(inverse)
    return _euclid_xgcd(f, g)


def xgcd_many(polynomials):
    """Chained extended gcd of several polynomials

    Returns
    -------
    d: UnivariatePolynomial
        The monic gcd
    cofactors: list (subtype: UnivariatePolynomial)
        a_s such that sum_s a_s * f_s = d

    Raises
    ------
    ValueError: if all polynomials are zero
    """
    polynomials = list(polynomials)
    first = polynomials[0]
    d, cofactors = first, [first._new([1])]
    for f in polynomials[1:]:
        if d.is_zero() and f.is_zero():
            cofactors.append(f._new([]))
            continue
        d, a, b = xgcd(d, f)
        cofactors = [c * a for c in cofactors] + [b]
    if d.is_zero():
        raise ValueError("The gcd of zero polynomials is undefined.")
    inverse = d.field.one / d.leading
    return d.scale(inverse), [c.scale(inverse) for c in cofactors]


def squarefree_decomposition(f):
    """Decomposition of f into pairwise coprime monic squarefree factors, as (factor, multiplicity) pairs
    sorted by multiplicity (p-th powers are accounted for in characteristic p)
    """
    if f.is_zero():
        raise ValueError("The zero polynomial has no squarefree decomposition.")
    f = f.monic()
    by_multiplicity = dict()
    for factor, multiplicity in _squarefree_factors(f):
        if factor.degree > 0:
            by_multiplicity[multiplicity] = by_multiplicity[multiplicity] * factor \
                if multiplicity in by_multiplicity else factor
    return sorted(((factor, multiplicity) for multiplicity, factor in by_multiplicity.items()), key=lambda item: item[1])


def _squarefree_factors(f):
    if f.degree <= 0:
        return []
    field = f.field
    if isinstance(field, PrimeField):
        _, factors = gf_sqf_list(_to_gf(f), field.p, ZZ)
        return [(_from_gf(g, f), k) for g, k in factors]
    if field == QQ:
        _, factors = _to_sympy(f).sqf_list()
        return [(_from_sympy(g, f).monic(), k) for g, k in factors]
    return _musser(f)


def distinct_degree_factorization(f):
    """Distinct-degree factorization of a squarefree polynomial over a finite field

    Returns
    -------
    blocks: list (subtype: (UnivariatePolynomial, int))
        Pairs (g_d, d) where g_d is the monic product of all irreducible factors of degree d
    """
    field = f.field
    if not field.is_finite:
        raise TypeError("Distinct-degree factorization needs a finite field, got {}.".format(field.name))
    f = f.monic()
    if f.degree <= 0:
        return []
    if isinstance(field, PrimeField):
        return [(_from_gf(g, f), d) for g, d in gf_ddf_zassenhaus(_to_gf(f), field.p, ZZ)]
    return _ddf(f)


def factor_profile(f):
    """Multiset of (irreducible factor degree, multiplicity) of a nonzero polynomial over a finite field, as a
    sorted tuple with one entry per irreducible factor"""
    if f.is_zero():
        raise ValueError("The zero polynomial has no factor profile.")
    entries = list()
    for factor, multiplicity in squarefree_decomposition(f):
        for block, degree in distinct_degree_factorization(factor):
            entries.extend([(degree, multiplicity)] * (block.degree // degree))
    return tuple(sorted(entries))




class BinaryForm(object):
    """A homogeneous polynomial F(t0, t1) of a given degree, stored as its dehomogenization F(1, z). The point
    [0:1] is a root of multiplicity degree - deg F(1, z).
    """
    def __init__(self, dehomogenized, degree):
        if not dehomogenized.is_zero() and degree < dehomogenized.degree:
            raise ValueError("Form degree {} smaller than the degree of {}.".format(degree, dehomogenized))
        self._dehomogenized = dehomogenized
        self._degree = degree

    @classmethod
    def from_coefficients(cls, field, coefficients, degree=None):
        """From the coefficients of t0^(d-i) t1^i, i = 0..d"""
        coefficients = list(coefficients)
        return cls(UnivariatePolynomial(field, coefficients), len(coefficients) - 1 if degree is None else degree)

    @property
    def degree(self):
        return self._degree

    @property
    def dehomogenized(self):
        return self._dehomogenized

    @property
    def field(self):
        return self._dehomogenized.field

    def is_zero(self):
        return self._dehomogenized.is_zero()

    @property
    def infinity_multiplicity(self):
        if self.is_zero():
            raise ValueError("The zero form has no root multiplicities.")
        return self._degree - self._dehomogenized.degree

    def evaluate(self, t0, t1):
        result = self.field.zero
        for i, c in enumerate(self._dehomogenized.coefficients):
            result = result + c * t0 ** (self._degree - i) * t1 ** i
        return result

    def factor_profile(self):
        """Factor profile over the algebraic closure, the point [0:1] counts as a degree-1 factor"""
        profile = list(factor_profile(self._dehomogenized))
        if self.infinity_multiplicity > 0:
            profile.append((1, self.infinity_multiplicity))
        return tuple(sorted(profile))

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self._degree == other._degree \
            and self._dehomogenized == other._dehomogenized

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._degree, self._dehomogenized))

    def __repr__(self):
        return "BinaryForm({}, degree={})".format(self._dehomogenized, self._degree)


def binary_gcd(*forms):
    """Greatest common divisor of binary forms, monic in the dehomogenized variable. Zero forms are ignored.

    Raises
    ------
    ValueError: if all the forms are zero
    """
    nonzero = [form for form in forms if not form.is_zero()]
    if len(nonzero) == 0:
        raise ValueError("The gcd of zero forms is undefined.")
    d = nonzero[0].dehomogenized
    for form in nonzero[1:]:
        d = gcd(d, form.dehomogenized)
    d = d.monic()
    infinity = min(form.infinity_multiplicity for form in nonzero)
    return BinaryForm(d, d.degree + infinity)




def _sympy_options(field):
    if isinstance(field, PrimeField):
        return {"modulus": field.p}
    if field == QQ:
        return {"domain": sympy.QQ}
    raise TypeError("Resultants need coefficients in QQ or a prime field, got {}.".format(field.name))


def _bivariate(coefficients, field):
    """Terms {(deg_y, deg_x): value} of the polynomial in y whose coefficients in x are given"""
    terms = dict()
    for i, c in enumerate(coefficients):
        for j, a in enumerate(c.coefficients):
            if a:
                terms[(i, j)] = a.residue if isinstance(field, PrimeField) else sympy.Rational(a.numerator, a.denominator)
    return terms


def resultant(f, g):
    """Resultant with respect to y of two polynomials in y whose coefficients are univariate polynomials in x
    over QQ or a prime field (sympy subresultant sequence)

    Parameters
    ----------
    f, g: list (subtype: UnivariatePolynomial)
        Coefficients in y, constant term first, all over the same field

    Returns
    -------
    res: UnivariatePolynomial
        The resultant, a polynomial in x
    """
    f, g = _trim(f), _trim(g)
    if len(f) == 0 or len(g) == 0:
        template = (f + g)[0] if len(f + g) > 0 else None
        if template is None:
            raise ValueError("Resultant of two zero polynomials.")
        return template._new([])
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    template = f[0]
    options = _sympy_options(template.field)
    y, x = sympy.Dummy("y"), sympy.Symbol(template.variable)
    first = sympy.Poly.from_dict(_bivariate(f, template.field), y, x, **options)
    second = sympy.Poly.from_dict(_bivariate(g, template.field), y, x, **options)
    return template._new([as_fraction(c) for c in reversed(first.resultant(second).all_coeffs())])


def _trim(coefficients):
    coefficients = list(coefficients)
    while len(coefficients) > 0 and coefficients[-1].is_zero():
        coefficients.pop()
    return coefficients


def element_key(value):
    """Sort key of field elements (residues, coordinate vectors, fractions)"""
    if hasattr(value, "residue"):
        return (value.residue,)
    if hasattr(value, "coordinates"):
        return tuple(reversed(value.coordinates))
    return (value,)


def roots(f, field=None, rng=None):
    """Distinct roots of a nonzero polynomial in a finite field (the coefficient field by default, or an
    extension of it). Prime fields use the factorization of sympy, small extensions are searched exhaustively
    and larger ones use Cantor-Zassenhaus splitting.

    Parameters
    ----------
    f: UnivariatePolynomial
        The polynomial
    field: Field (default: None)
        A finite field containing the coefficients
    rng: numpy.random.Generator (default: None)
        Generator for the splitting, seeded deterministically if None

    Returns
    -------
    roots: list
        The roots, sorted
    """
    if f.is_zero():
        raise ValueError("The zero polynomial has infinitely many roots.")
    field = f.field if field is None else field
    if not field.is_finite:
        raise TypeError("Root finding needs a finite field, got {}.".format(field.name))
    f = f.change_field(field)
    if f.degree <= 0:
        return []
    if isinstance(field, PrimeField):
        _, factors = gf_factor(_to_gf(f), field.p, ZZ)
        found = [field(-int(g[1])) for g, _ in factors if len(g) == 2]
    elif field.order <= BRUTE_FORCE_ORDER:
        found = [a for a in field.elements() if not f.evaluate(a)]
    else:
        rng = make_rng(0, RNG_SPLITTING) if rng is None else rng
        x = UnivariatePolynomial.x(field, variable=f.variable)
        split = gcd(f, x.powmod(field.order, f) - x)
        found = _split_linear(split, field, rng)
    return sorted(found, key=element_key)


def order_at(f, a):
    """Order of vanishing of a nonzero polynomial at a point (of its field or an extension)"""
    if f.is_zero():
        raise ValueError("The zero polynomial vanishes to infinite order.")
    field = getattr(a, "field", f.field)
    f = f.change_field(field)
    a = field(a)
    linear = UnivariatePolynomial(field, [-a, 1], variable=f.variable)
    order = 0
    while True:
        quotient, remainder = divmod(f, linear)
        if not remainder.is_zero():
            return order
        order += 1
        f = quotient


def rational_roots(f):
    """Roots of f in its coefficient field, with multiplicities

    Returns
    -------
    roots: list (subtype: (element, int))
        Pairs (root, multiplicity), sorted by root
    """
    if f.is_zero():
        raise ValueError("The zero polynomial has infinitely many roots.")
    if f.field.is_finite:
        return [(a, order_at(f, a)) for a in roots(f)]
    if f.field == QQ:
        if f.degree <= 0:
            return []
        return sorted((as_fraction(a), int(k)) for a, k in _to_sympy(f).ground_roots().items())
    raise TypeError("Unsupported field {}.".format(f.field.name))


# generic algorithms, used for coefficients in an extension field

def _euclid_gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _euclid_xgcd(f, g):
    zero, one = f._new([]), f._new([1])
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inverse = f.field.one / r0.leading
    return r0.scale(inverse), s0.scale(inverse), t0.scale(inverse)


def _pth_root(f):
    """The polynomial h with h^p = f, for f whose exponents are all multiples of the characteristic p"""
    field = f.field
    p, order = field.characteristic, field.order
    root_power = order // p
    return f._new([c ** root_power for c in f.coefficients[::p]])


def _musser(f):
    """Squarefree factors with multiplicities over a finite field"""
    if f.degree <= 0:
        return []
    p = f.field.characteristic
    derivative = f.derivative()
    if derivative.is_zero():
        return [(h, m * p) for h, m in _musser(_pth_root(f))]
    factors = list()
    c = gcd(f, derivative)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        factor = w // y
        if factor.degree > 0:
            factors.append((factor.monic(), i))
        i += 1
        w, c = y, c // y
    if not c.is_one():
        factors.extend((h, m * p) for h, m in _musser(_pth_root(c.monic())))
    return factors


def _ddf(f):
    order = f.field.order
    remaining = f
    x = UnivariatePolynomial.x(f.field, variable=f.variable)
    h = x
    blocks = list()
    degree = 1
    while remaining.degree >= 2 * degree:
        h = h.powmod(order, remaining)
        block = gcd(remaining, h - x)
        if not block.is_one():
            blocks.append((block, degree))
            remaining = remaining // block
            h = h % remaining
        degree += 1
    if remaining.degree > 0:
        blocks.append((remaining, remaining.degree))
    return blocks


def _split_linear(g, field, rng):
    """Roots of a monic product of distinct linear factors"""
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [-g[0]]
    order, characteristic = field.order, field.characteristic
    while True:
        h = UnivariatePolynomial(field, [field.random_element(rng), field.random_element(rng)], variable=g.variable)
        if h.degree < 1:
            continue
        if characteristic == 2:
            trace, power = h % g, h % g
            for _ in range(order.bit_length() - 2):
                power = (power * power) % g
                trace = trace + power
            candidate = gcd(g, trace)
        else:
            candidate = gcd(g, h.powmod((order - 1) // 2, g) - 1)
        if 0 < candidate.degree < g.degree:
            return _split_linear(candidate, field, rng) + _split_linear(g // candidate, field, rng)
