# -*- coding: utf-8 -*-

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


class AOHSException(Exception):
    """Base class of the errors raised by the package"""
    pass


class FieldMismatchException(AOHSException, TypeError):
    """Thrown when elements of two different field contexts are combined"""
    pass


class DivisionByZeroException(AOHSException, ZeroDivisionError):
    """Thrown when zero (or the zero polynomial) is inverted or used as a divisor"""
    pass


class NotPrimeException(AOHSException, ValueError):
    """Thrown when a prime field is requested for a non-prime modulus"""
    pass


class ReducibleModulusException(AOHSException, ValueError):
    """Thrown when an extension field is defined by a reducible polynomial"""
    pass


class UnknownVariableException(AOHSException, KeyError):
    """Thrown when a variable does not belong to the ring it is looked up in"""
    pass


class PolynomialParseException(AOHSException, ValueError):
    """Thrown when a polynomial cannot be parsed from its text format"""
    def __init__(self, message, column=None, line=None):
        super(PolynomialParseException, self).__init__(message)
        self.column = column
        self.line = line


class InvalidProfileException(AOHSException, ValueError):
    """Thrown when a multiplicity profile is empty or has non-positive parts"""
    pass


class ZeroGeneratorException(AOHSException, ValueError):
    """Thrown when a generator is identically zero"""
    pass


class OffSchemeException(AOHSException, ValueError):
    """Thrown when a point does not satisfy the equations of the scheme it is tested on"""
    def __init__(self, message, index=None, equation=None):
        super(OffSchemeException, self).__init__(message)
        self.index = index
        self.equation = equation


class CoincidentPointsException(AOHSException, ValueError):
    """Thrown when marked points coincide where distinct points are required (or the other way round)"""
    pass


class StarPointException(AOHSException, ValueError):
    """Thrown when the star point b coincides with a marked point"""
    pass


class LineContainedException(AOHSException):
    """Thrown when all restrictions of a generator system to the line vanish"""
    pass


class NormalizationException(AOHSException):
    """Thrown when no recombination of the generators is a local complete intersection at the marked points"""
    pass


class InvalidLineException(AOHSException, ValueError):
    """Thrown when a direction is zero or does not span a line with the base point"""
    pass


class BasePointException(AOHSException, ValueError):
    """Thrown when the base point of a census lies on the variety"""
    pass


class GenericityException(AOHSException):
    """Thrown when no general base point could be drawn"""
    pass


class BudgetExceededException(AOHSException):
    """Thrown when an enumeration would exceed its budget"""
    pass


class InsufficientDataException(AOHSException, ValueError):
    """Thrown when a dimension is estimated from fewer than two positive counts"""
    pass


class NoTestableSampleException(AOHSException):
    """Thrown when a sampler finds no configuration of rational points to test"""
    pass


class NonZeroDimensionalException(AOHSException):
    """Thrown when a system expected to have finitely many solutions has a curve of solutions"""
    pass


class MultiplicityTooLargeException(AOHSException):
    """Thrown when a local length does not stabilize before the truncation cap"""
    pass


class DegenerateVarietyException(AOHSException, ValueError):
    """Thrown when a variety presentation has base points or is otherwise degenerate"""
    pass


class UnknownBuiltinException(AOHSException, KeyError):
    """Thrown when a gallery entry is requested under an unknown name"""
    pass


class InputFormatException(AOHSException, ValueError):
    """Thrown when an input document is malformed"""
    pass


class MissingComponentException(AOHSException):
    """Thrown when a component is missing for building an object"""
    pass


class InvalidBuildingException(AOHSException):
    """Thrown when a builder is about the get in an inconsistent state"""
    pass
