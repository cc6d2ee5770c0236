from fractions import Fraction

import pytest

from oracles import phi_sum, qpoch
from qident import families as fam
from qident.properties import run_property
from qident.qcore import QBase, q_binomial, q_number

Q_HALF = QBase.from_q(Fraction(1, 2))


def test_q_batemanz_examples():
    assert fam.q_batemanz(0, Fraction(7, 3), Q_HALF) == 1
    assert fam.q_batemanz(1, 1, Q_HALF) == 4


def test_q_cesaro_examples():
    assert fam.q_cesaro(1, 1, 1, Q_HALF) == 2
    assert fam.cesaro_closed_form(1, 1, 1, Q_HALF) == 2
    base = QBase(Fraction(1, 2))   # q = 1/4
    assert fam.q_cesaro(1, 1, 1, base) == Fraction(3, 2)


def test_q_sylvester_example():
    assert fam.q_sylvester(1, 2, Fraction(1, 4), Q_HALF) == Fraction(11, 2)
    with pytest.raises(fam.SchemaError):
        fam.q_sylvester(1, 0, Fraction(1, 4), Q_HALF)


@pytest.mark.parametrize("s", [0, 2, 5])
def test_cesaro_closed_form_small_n(s):
    base = QBase(Fraction(3, 5))
    z = Fraction(-7, 4)
    assert fam.cesaro_closed_form(0, s, z, base) == 1
    assert fam.cesaro_closed_form(1, s, z, base) == q_number(s + 1, base) + base.q ** s * z
    assert fam.cesaro_closed_form(1, s, z, base) == q_binomial(s + 1, s, base) + z * base.q ** s


@pytest.mark.parametrize("n", range(5))
def test_q_families_match_definition(n):
    base = QBase(Fraction(2, 3))
    q = base.q
    z, a, mu, Z = Fraction(-3, 5), Fraction(4, 7), Fraction(1, 9), Fraction(5, 2)
    assert fam.q_batemanz(n, z, base) == phi_sum([q ** -n, q ** (n + 1)], [q, q], q ** n * z, q, n + 1)
    assert fam.q_bateman(n, a, base) == phi_sum([q ** -n, q ** (n + 1), a], [q, q], q ** n, q, n + 1)
    assert fam.q_pasternack(n, a, mu, base) == phi_sum([q ** -n, q ** (n + 1), a], [q, mu], q ** n, q, n + 1)
    expected = z ** n / qpoch(q, n, q) * phi_sum([q ** -n, Z], [], q ** n / z, q, n + 1)
    assert fam.q_sylvester(n, z, Z, base) == expected


def test_classical_examples():
    for n in range(6):
        assert fam.bateman(n, -1) == 1
    for k in range(6):
        assert fam.bateman(1, -2 * k - 1) == 1 + 2 * k
    for z in (Fraction(0), Fraction(5, 2), Fraction(-3)):
        assert fam.batemanz(1, z) == 1 - 2 * z
    with pytest.raises(fam.SchemaError):
        fam.pasternack(2, -1, Fraction(1, 2))
    with pytest.raises(fam.SchemaError):
        fam.cesaro(2, Fraction(1, 2), 1)


def test_family_dispatch():
    binding = {"p": Fraction(1, 2), "s": Fraction(1), "z": Fraction(1)}
    assert fam.family_value("q-cesaro", 1, binding) == Fraction(3, 2)
    assert fam.family_value("q-cesaro", 1, {"q": Fraction(1, 2), "s": 1, "z": 1}) == 2
    assert fam.family_value("classical-batemanz", 1, {"z": Fraction(2)}) == -3
    with pytest.raises(fam.SchemaError):
        fam.family_value("q-bateman", 2, {"p": Fraction(1, 2)})
    with pytest.raises(fam.SchemaError):
        fam.family_value("q-bateman", 2, {"a": Fraction(1, 2)})


def test_orthogonal_examples():
    x = Fraction(7, 9)
    assert fam.legendre(1, x) == x
    assert fam.legendre(2, 3) == 13
    assert fam.orth_value("legendre", 2, {}, 3) == 13
    # L_2^(a)(x) = ((a+1)(a+2) - 2(a+2) x + x^2) / 2
    a = Fraction(1, 3)
    assert fam.laguerre(2, a, x) == ((a + 1) * (a + 2) - 2 * (a + 2) * x + x * x) / 2
    # P_1^(a,b)(x) = (a+1) + (a+b+2)(x-1)/2
    b = Fraction(-5, 2)
    assert fam.jacobi(1, a, b, x) == (a + 1) + (a + b + 2) * (x - 1) / 2
    # C_1(x; a) = 1 - x/a
    assert fam.charlier(1, a, x) == 1 - x / a


@pytest.mark.parametrize("name", [
    "q-Pasternack at mu = q is q-Bateman",
    "q-Cesaro closed form",
    "Sylvester-Laguerre",
    "Sylvester-Charlier",
    "Cesaro-Jacobi",
    "degree and termination",
])
def test_family_properties(name):
    result = run_property("families", name)
    assert result.passed, result.detail


def test_negative_odd_pasternack_uses_summation_argument():
    # at n = m the two readings of the argument coincide
    base = QBase(Fraction(1, 2))
    q = base.q
    for m in range(4):
        definitional = fam.q_pasternack(m, q ** -m, q, base)
        assert fam.pasternack_at_negative_odd(m, m, 0, base) == definitional
