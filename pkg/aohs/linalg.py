# -*- coding: utf-8 -*-
"""Exact linear algebra over the fields of the package. Matrices are lists of rows.

Over QQ and the prime fields the work is done by sympy's DomainMatrix. Extension fields F_{p^e} have no
sympy domain and use the Gauss-Jordan elimination below.
"""
import sympy
from sympy.polys.matrices import DomainMatrix

from .arith import QQ, PrimeField, as_fraction

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


def _convert(matrix, field):
    return [[field(value) for value in row] for row in matrix]


def _domain(field):
    if isinstance(field, PrimeField):
        return sympy.GF(field.p)
    if field == QQ:
        return sympy.QQ
    return None


def _to_domain_matrix(rows, field, domain):
    if isinstance(field, PrimeField):
        entries = [[domain(value.residue) for value in row] for row in rows]
    else:
        entries = [[domain(value.numerator, value.denominator) for value in row] for row in rows]
    return DomainMatrix(entries, (len(rows), len(rows[0])), domain)


def _from_domain(value, field):
    if isinstance(field, PrimeField):
        return field(int(value))
    return field(as_fraction(value))


def row_echelon(matrix, field):
    """Reduced row echelon form

    Parameters
    ----------
    matrix: list (subtype: list)
        The matrix, as a list of rows of equal length
    field: Field
        The field of the entries

    Returns
    -------
    reduced: list (subtype: list)
        The nonzero rows of the reduced row echelon form
    pivots: list (subtype: int)
        The pivot column of each of those rows
    """
    rows = _convert(matrix, field)
    if len(rows) == 0:
        return [], []
    domain = _domain(field)
    if domain is None or len(rows[0]) == 0:
        return _gauss_jordan(rows, field)
    reduced, pivots = _to_domain_matrix(rows, field, domain).rref()
    entries = reduced.to_list()[:len(pivots)]
    return [[_from_domain(value, field) for value in row] for row in entries], list(pivots)


def rank(matrix, field):
    rows = _convert(matrix, field)
    domain = _domain(field)
    if domain is None or len(rows) == 0 or len(rows[0]) == 0:
        return len(row_echelon(rows, field)[1])
    return int(_to_domain_matrix(rows, field, domain).rank())


def kernel(matrix, field, n_columns=None):
    """Basis of the right kernel {x : matrix . x = 0}

    Parameters
    ----------
    matrix: list (subtype: list)
        The matrix
    field: Field
        The field of the entries
    n_columns: int (default: None)
        Number of columns, needed when the matrix has no rows
    """
    if n_columns is None:
        n_columns = len(matrix[0])
    reduced, pivots = row_echelon(matrix, field) if len(matrix) > 0 else ([], [])
    basis = list()
    for free in (c for c in range(n_columns) if c not in pivots):
        vector = [field.zero] * n_columns
        vector[free] = field.one
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    return basis


def determinant(matrix, field):
    rows = _convert(matrix, field)
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("The determinant needs a square matrix.")
    if size == 0:
        return field.one
    domain = _domain(field)
    if domain is not None:
        return _from_domain(_to_domain_matrix(rows, field, domain).det(), field)
    result = field.one
    for column in range(size):
        pivot = next((i for i in range(column, size) if rows[i][column]), None)
        if pivot is None:
            return field.zero
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            result = -result
        result = result * rows[column][column]
        inverse = field.one / rows[column][column]
        for i in range(column + 1, size):
            if rows[i][column]:
                factor = rows[i][column] * inverse
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[column])]
    return result


def transpose(matrix):
    return [list(column) for column in zip(*matrix)]


def complete_basis(vectors, field):
    """Indexes of standard basis vectors completing independent vectors to a basis

    Raises
    ------
    ValueError: if the vectors are dependent
    """
    vectors = _convert(vectors, field)
    if rank(vectors, field) != len(vectors):
        raise ValueError("The vectors are linearly dependent.")
    size = len(vectors[0])
    chosen, current = list(), list(vectors)
    for index in range(size):
        candidate = [field.zero] * size
        candidate[index] = field.one
        if rank(current + [candidate], field) == len(current) + 1:
            current.append(candidate)
            chosen.append(index)
        if len(current) == size:
            break
    return chosen


def _gauss_jordan(rows, field):
    if len(rows) == 0:
        return [], []
    n_columns = len(rows[0])
    pivots = list()
    current = 0
    for column in range(n_columns):
        pivot = next((i for i in range(current, len(rows)) if rows[i][column]), None)
        if pivot is None:
            continue
        rows[current], rows[pivot] = rows[pivot], rows[current]
        inverse = field.one / rows[current][column]
        rows[current] = [value * inverse for value in rows[current]]
        for i in range(len(rows)):
            if i != current and rows[i][column]:
                factor = rows[i][column]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[current])]
        pivots.append(column)
        current += 1
        if current == len(rows):
            break
    return rows[:current], pivots
