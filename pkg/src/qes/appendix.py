"""Printed closed forms of the first energy polynomials, transcribed term by term.

Each function takes the energy ``E`` and the Taylor data (derivatives at 0) and
uses only ``+ - * / **``, so it works equally with Fractions, RatPoly in E, or
sympy symbols. They are kept verbatim, including their sign conventions; the
recursion module decides how to compare against them.
"""


def cubic_P1(E, A1, A2, A3, F0, F1, F2, B1):
    return -E / F0


def cubic_P2(E, A1, A2, A3, F0, F1, F2, B1):
    return (E * F1 + E**2 + B1 * F0) / (2 * F0 * (A1 + F0))


def cubic_P3(E, A1, A2, A3, F0, F1, F2, B1):
    num = (
        -A2 * E * F1 - A2 * E**2 - A2 * B1 * F0 - 2 * E * F1**2 - 3 * F1 * E**2
        - 2 * F1 * B1 * F0 - E**3
        - 3 * E * B1 * F0 + E * F2 * A1 + E * F2 * F0 - 2 * E * B1 * A1
    )
    return num / (6 * F0 * (A1 + F0) * (2 * A1 + F0))


def cubic_P4(E, A1, A2, A3, F0, F1, F2, B1):
    num = (
        -3 * A2**2 * E**2 - 3 * B1**2 * F0**2 - 6 * B1**2 * F0 * A1
        + 3 * F2 * B1 * F0**2 + A3 * B1 * F0**2
        + A3 * E**2 * F0 + 2 * A3 * E**2 * A1 - 8 * E**2 * B1 * A1
        + 4 * E**2 * F2 * F0 + 7 * E**2 * F2 * A1 - 6 * E**2 * B1 * F0
        - 6 * F1**2 * B1 * F0 - 13 * A2 * F1 * E**2
        - 9 * A2 * E * F1**2 - 3 * A2**2 * B1 * F0 - 3 * A2**2 * E * F1
        - 4 * A2 * E**3 - 6 * E * F1**3 - 11 * F1**2 * E**2 - 6 * F1 * E**3
        - 9 * A2 * F1 * B1 * F0 - 6 * A2 * E * B1 * A1
        + 3 * A2 * E * F2 * F0 + 3 * A2 * E * F2 * A1 - 10 * A2 * E * B1 * F0
        - 12 * F1 * E * B1 * A1 + 6 * F1 * E * F2 * F0
        + 9 * F1 * E * F2 * A1 - 14 * F1 * E * B1 * F0 + 2 * A3 * B1 * F0 * A1
        + A3 * E * F1 * F0
        + 2 * A3 * E * F1 * A1 + 6 * F2 * B1 * F0 * A1 - E**4
    )
    den = 24 * F0 * (A1 + F0) * (2 * A1 + F0) * (3 * A1 + F0)
    return -num / den


def cubic_P5(E, A1, A2, A3, F0, F1, F2, B1):
    num = (
        -46 * E * A3 * B1 * F0 * A1 - 88 * E * F2 * B1 * F0 * A1 + 16 * A3 * E * F2 * A1 * F0
        + 24 * E * F2**2 * A1 * F0 - 48 * F2 * E * B1 * A1**2 + 18 * E * F2**2 * A1**2
        + 6 * E * F2**2 * F0**2 + 24 * E * B1**2 * A1**2
        + 12 * A3 * E * F2 * A1**2 + 4 * A3 * E * F2 * F0**2
        - 24 * A3 * E * B1 * A1**2 - 32 * F1 * A3 * B1 * F0 * A1
        - 60 * F1 * F2 * B1 * F0 * A1 + 50 * E * B1**2 * F0 * A1 - 25 * E * F2 * B1 * F0**2
        - 13 * E * A3 * B1 * F0**2
        - 46 * F1 * A3 * E**2 * A1 + 80 * F1 * E**2 * B1 * A1 - 40 * F1 * E**2 * F2 * F0
        - 91 * F1 * E**2 * F2 * A1
        + 50 * F1 * E**2 * B1 * F0 - 54 * A2 * F1 * E * F2 * F0 - 84 * A2 * F1 * E * F2 * A1
        + 137 * A2 * F1 * E * B1 * F0
        - 24 * A2 * A3 * B1 * F0 * A1 - 10 * A2 * A3 * E * F1 * F0 - 24 * A2 * A3 * E * F1 * A1
        - 54 * A2 * F2 * B1 * F0 * A1 + 20 * F1 * B1**2 * F0**2
        - 5 * A3 * E**3 * F0 - 14 * A3 * E**3 * A1 + 20 * E**3 * B1 * A1
        - 10 * E**3 * F2 * F0 - 25 * E**3 * F2 * A1 + 10 * E**3 * B1 * F0 + 15 * E * B1**2 * F0**2
        + 66 * A2 * E**2 * B1 * A1
        - 33 * A2 * E**2 * F2 * F0 - 63 * A2 * E**2 * F2 * A1 + 50 * A2 * E**2 * B1 * F0
        + 72 * A2 * F1**2 * B1 * F0
        + 72 * F1**2 * E * B1 * A1 - 36 * F1**2 * E * F2 * F0 - 72 * F1**2 * E * F2 * A1
        + 70 * F1**2 * E * B1 * F0
        - 12 * A3 * E * F1**2 * F0 - 32 * A3 * E * F1**2 * A1
        + 48 * F1 * B1**2 * F0 * A1 - 24 * F1 * F2 * B1 * F0**2
        - 12 * F1 * A3 * B1 * F0**2 - 17 * F1 * A3 * E**2 * F0
        - 24 * A2 * F2 * B1 * F0**2 - 10 * A2 * A3 * E**2 * F0
        - 24 * A2 * A3 * E**2 * A1 - 10 * A2 * A3 * B1 * F0**2
        + 108 * A2 * F1 * E * B1 * A1
        + 10 * F1 * E**4 + 18 * A2**3 * E**2 + 27 * A2**2 * E**3 + 10 * A2 * E**4
        + 24 * E * F1**4 + 50 * F1**3 * E**2
        + 35 * F1**2 * E**3 + E**5 + 93 * A2**2 * F1 * E**2 + 66 * A2**2 * E * F1**2
        + 18 * A2**3 * B1 * F0 + 18 * A2**3 * E * F1
        + 22 * A2 * B1**2 * F0**2 + 72 * A2 * E * F1**3 + 127 * A2 * F1**2 * E**2
        + 65 * A2 * F1 * E**3
        + 24 * F1**3 * B1 * F0 + 66 * A2**2 * F1 * B1 * F0 + 36 * A2**2 * E * B1 * A1
        - 18 * A2**2 * E * F2 * F0 - 18 * A2**2 * E * F2 * A1 + 63 * A2**2 * E * B1 * F0
        + 48 * A2 * B1**2 * F0 * A1
    )
    den = (
        120 * F0 * (A1 + F0) * (2 * A1 + F0) * (3 * A1 + F0) * (4 * A1 + F0)
    )
    return -num / den


def quartic_P1(E, A1, A2, A3, F0, F1, F2, F3, B1, B2):
    return E / F0


def quartic_P2(E, A1, A2, A3, F0, F1, F2, F3, B1, B2):
    return -(E * F1 + E**2 - B1 * F0) / (2 * F0 * (A1 + F0))


def quartic_P3(E, A1, A2, A3, F0, F1, F2, F3, B1, B2):
    num = (
        A2 * E * F1 + A2 * E**2 - A2 * B1 * F0 + 2 * E * F1**2 + 3 * F1 * E**2
        - 2 * F1 * B1 * F0
        + E**3 + E * B1 * F0 - E * F2 * A1 - E * F2 * F0 + 2 * E * B1 * A1
        + B2 * F0 * A1 + B2 * F0**2
    )
    return num / (6 * F0 * (A1 + F0) * (2 * A1 + F0))


def quartic_P4(E, A1, A2, A3, F0, F1, F2, F3, B1, B2):
    num = (
        3 * A2 * B2 * F0**2 + A3 * B1 * F0**2 + 9 * A2 * E * F1**2 - 3 * A2 * E * F2 * A1
        + 2 * A2 * E * B1 * F0 - 9 * A2 * F1 * B1 * F0 - 2 * E * B2 * F0**2
        + 3 * A2 * B2 * F0 * A1 + 6 * A2 * E * B1 * A1
        - 3 * A2 * E * F2 * F0 - 9 * F1 * E * F2 * A1 + 4 * F1 * E * B1 * F0
        - 3 * B1**2 * F0**2 - 8 * E * B2 * F0 * A1
        - 2 * A3 * E * F1 * A1 - A3 * E * F1 * F0 + 2 * A3 * B1 * F0 * A1
        + 6 * F2 * B1 * F0 * A1 + 3 * E * F3 * A1 * F0
        - 6 * F1 * E * F2 * F0 + 3 * A2**2 * E**2 + 4 * A2 * E**3 + 6 * E * F1**3
        + 11 * F1**2 * E**2 + 6 * F1 * E**3 + 3 * A2**2 * E * F1
        - 3 * A2**2 * B1 * F0 + 13 * A2 * F1 * E**2 - 6 * F1**2 * B1 * F0
        + 3 * F1 * B2 * F0**2 + 4 * E**2 * B1 * F0
        - 7 * E**2 * F2 * A1 - 4 * E**2 * F2 * F0 + 8 * E**2 * B1 * A1
        - 2 * A3 * E**2 * A1 - A3 * E**2 * F0 + 3 * F2 * B1 * F0**2
        - 6 * B1**2 * F0 * A1 + 2 * E * F3 * A1**2 + E * F3 * F0**2
        - 6 * E * B2 * A1**2 + E**4 + 3 * F1 * B2 * F0 * A1
        + 12 * F1 * E * B1 * A1
    )
    den = 24 * F0 * (A1 + F0) * (2 * A1 + F0) * (3 * A1 + F0)
    return -num / den


CUBIC = (cubic_P1, cubic_P2, cubic_P3, cubic_P4, cubic_P5)
QUARTIC = (quartic_P1, quartic_P2, quartic_P3, quartic_P4)
