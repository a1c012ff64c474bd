"""Reference Euler characteristics and Poincare polynomials for ambient <= 8.

Polynomials are ascending coefficient lists: ``[1, 3, 5, 4]`` is
``1 + 3t + 5t^2 + 4t^3``.  Keys are ``(k, ambient)``.
"""

APPENDIX = {
    (1, 2): dict(chi=3, chi_sp=3, P=[1, 2], P_sp=[1, 2]),
    (1, 4): dict(chi=15, chi_sp=15, P=[1, 4, 6, 4], P_sp=[1, 4, 6, 4]),
    (2, 4): dict(chi=33, chi_sp=13, P=[1, 4, 10, 12, 6], P_sp=[1, 3, 5, 4]),
    (1, 6): dict(chi=63, chi_sp=63, P=[1, 6, 15, 20, 15, 6], P_sp=[1, 6, 15, 20, 15, 6]),
    (2, 6): dict(
        chi=473, chi_sp=293,
        P=[1, 6, 21, 50, 90, 120, 110, 60, 15],
        P_sp=[1, 6, 21, 48, 77, 81, 47, 12],
    ),
    (3, 6): dict(
        chi=883, chi_sp=79,
        P=[1, 6, 21, 56, 114, 180, 215, 180, 90, 20],
        P_sp=[1, 4, 9, 17, 22, 18, 8],
    ),
    (1, 8): dict(
        chi=255, chi_sp=255,
        P=[1, 8, 28, 56, 70, 56, 28, 8],
        P_sp=[1, 8, 28, 56, 70, 56, 28, 8],
    ),
    (2, 8): dict(
        chi=5281, chi_sp=4053,
        P=[1, 8, 36, 112, 266, 504, 784, 1008, 1050, 840, 476, 168, 28],
        P_sp=[1, 8, 36, 112, 266, 501, 759, 904, 798, 478, 166, 24],
    ),
    (3, 8): dict(
        chi=26799, chi_sp=7507,
        P=[1, 8, 36, 120, 322, 728, 1420, 2408, 3542, 4480, 4788, 4200, 2870, 1400, 420, 56],
        P_sp=[1, 8, 36, 117, 297, 613, 1042, 1445, 1588, 1319, 757, 251, 33],
    ),
    (4, 8): dict(
        chi=44929, chi_sp=633,
        P=[1, 8, 36, 120, 330, 776, 1588, 2856, 4522, 6272, 7532, 7672, 6426, 4200, 1960, 560, 70],
        P_sp=[1, 5, 14, 31, 59, 93, 121, 131, 106, 56, 16],
    ),
}
