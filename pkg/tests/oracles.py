"""
BinaryInvolutions 二元型对合计算库 - sympy 对照实现

测试中与库本身独立的计算路径：二元型与 sympy 表达式互转、基于 sympy.diff 的超越
"""
from fractions import Fraction

import sympy

from forms.binary_form import BinaryForm
from ring.multipoly import MultiPoly

X1, X2 = sympy.symbols('x1 x2')


def to_sympy_rational(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def poly_to_sympy(value) -> sympy.Expr:
    """有理数或 MultiPoly -> sympy 表达式"""
    if not isinstance(value, MultiPoly):
        return to_sympy_rational(value)
    names = sympy.symbols(value.variables) if value.variables else ()
    expr = sympy.Integer(0)
    for exponents, coeff in value.terms.items():
        term = to_sympy_rational(coeff)
        for name, e in zip(names, exponents):
            term *= name ** e
        expr += term
    return expr


def form_to_sympy(form: BinaryForm) -> sympy.Expr:
    m = form.order
    return sympy.expand(sum(
        (poly_to_sympy(c) * X1 ** (m - i) * X2 ** i for i, c in enumerate(form.coeffs)),
        sympy.Integer(0),
    ))


def sympy_transvectant(a: sympy.Expr, m: int, b: sympy.Expr, n: int, r: int) -> sympy.Expr:
    """(A,B)_r 的微分定义"""
    total = sympy.Integer(0)
    for i in range(r + 1):
        left = sympy.diff(a, X1, r - i, X2, i) if r else a
        right = sympy.diff(b, X1, i, X2, r - i) if r else b
        total += (-1) ** i * sympy.binomial(r, i) * left * right
    prefactor = sympy.factorial(m - r) * sympy.factorial(n - r) / (sympy.factorial(m) * sympy.factorial(n))
    return sympy.expand(prefactor * total)


def same_expression(left: sympy.Expr, right: sympy.Expr) -> bool:
    return sympy.expand(left - right) == 0
