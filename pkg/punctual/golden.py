# -*- coding: UTF-8 -*-
"""
Published values the computations are compared against

Values are data: they are never derived from the code under test.
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-10 18:34

from .model import GoldenTable


K_RANGE = list(range(1, 12))

O_SEQUENCES = GoldenTable(
    table_id="o_sequences",
    rows={
        'hilbert_functions': [1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57],
    },
    citation="Introduction table: number of Hilbert functions H, "
             "for arbitrary H(1)",
    columns=K_RANGE
)

N3_COUNTS = GoldenTable(
    table_id="n3_counts",
    rows={
        'monomial': [1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859],
        'borel': [1, 1, 2, 3, 4, 6, 9, 12, 17, 24, 32],
        'threshold': [1, 1, 1, 1, 1, 1, 1, 2, 2, 4, 6],
    },
    citation="Introduction table, n=3: monomial ideals (MacMahon), "
             "Borel-fixed ideals, Borel-fixed with T>=0 >= 2(k-1)",
    columns=K_RANGE
)

NK_COUNTS = GoldenTable(
    table_id="nk_counts",
    rows={
        'borel': [1, 1, 2, 3, 5, 8, 13, 20, 32, 50, 77],
        'threshold': [1, 1, 1, 1, 1, 1, 1, 4, 8, 16, 33],
    },
    citation="Introduction table, n=k: Borel-fixed ideals, "
             "Borel-fixed with T>=0 >= (n-1)(k-1)",
    columns=K_RANGE
)

CITE_EXCEPTIONAL = "Borel-fixed ideals in three variables with k <= 11 " \
                   "and D(I) >= 0"

EXCEPTIONAL_IDEALS = [
    # label, generators, D, Hilbert function
    ("ii", "x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", 0, (1, 3, 3, 1)),
    ("iii", "x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^5", 0, (1, 3, 3, 1, 1)),
    ("iv", "x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 0,
     (1, 3, 3, 2, 1)),
    ("v", "x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^6", 0,
     (1, 3, 3, 1, 1, 1)),
    ("vi", "x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", 2, (1, 3, 3, 2, 1)),
    ("vii", "x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^6", 0,
     (1, 3, 3, 2, 1, 1)),
    ("viii", "x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^7", 0,
     (1, 3, 3, 1, 1, 1, 1)),
    ("ix", "x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^6", 2,
     (1, 3, 3, 2, 1, 1)),
    ("x", "x2^2, x1*x2, x1^2, x2*x3^3, x1*x3^3, x3^5", 0, (1, 3, 3, 3, 1)),
    ("xi", "x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 1,
     (1, 3, 4, 2, 1)),
]
""" The curvilinear ideal (x1, x2, x3^k) with D = 0 is exceptional for every k """

EXCEPTIONAL = GoldenTable(
    table_id="prop32_exceptions",
    rows={
        label: {'gens': gens, 'D': d, 'H': list(hf)}
        for label, gens, d, hf in EXCEPTIONAL_IDEALS
    },
    citation=CITE_EXCEPTIONAL,
    columns=["gens", "D", "H"]
)

TABLES = {
    table.table_id: table
    for table in (O_SEQUENCES, N3_COUNTS, NK_COUNTS, EXCEPTIONAL)
}

# Degree zero tangent dimensions used by the cell estimates
T_ZERO = {
    'vi': 10,
    'xi': 12,
}
BASE_DIM = {
    'vi': 8,
    'xi': 10,
}
CITE_CELLS = "Cells of the exceptional ideals: degree zero tangent parts " \
             "10 and 12, fixed loci of dimension 8 and 10"

WORKED_IDEAL = "x1^3, x2^2, x1*x3, x1*x2, x3^4"
WORKED_DUAL = "y2*y3^3, y1^2"
WORKED = {
    'hilbert': [1, 3, 3, 2, 1],
    'hom': {1: 5, 2: 3, 3: 0},
    'series': "5T+3T^2",
    'socle_dim': 2,
}
CITE_WORKED = "Worked tangent space example: series 5T+3T^2"

H14321_SYSTEMS = [
    # dual generators, T>0; H(1)=4 systems completed by a trailing y4
    ("y1^4, y2^3, y3*y4", 17),
    ("y1^4, y2^3, y3^2, y4", 18),
    ("y1^4+y2^4, y3^2, y4", 14),
    ("y1^3*y2, y3^2, y4", 14),
]
CITE_H14321 = "H=(1,4,3,2,1): positive tangent parts 17, 18, 14, 14"

CUBIC_QUADRIC = {
    'shape': [3, 2],
    'n': 5,
    'hilbert': [1, 5, 6, 1],
    'socle_dim': 2,
    'locus': 52,
    'expected': 48,
}
CITE_CUBIC_QUADRIC = "General cubic and quadric in five variables: " \
                     "H=(1,5,6,1), 52-dimensional against 48"

GORENSTEIN_FAMILY = {
    'n': 3,
    'b': 2,
    's': 4,
    'dim': 11,
}
CITE_GORENSTEIN = "Standard forms y1^4 + a*y1^2*y3 + F3(y1,y2) + ...: " \
                  "an 11-dimensional family"

N_BOUND_VALUES = [
    # (tau, k, n), N
    ((1, 8, 3), 22),
    ((2, 11, 4), 52),
    ((3, 9, 5), 71),
]
CITE_N_BOUND = "Target dimension N(tau, k, n) of k-regular maps"

STRATUM_13421 = [8, 9, 10, 8, 9]
CITE_STRATA = "Loci of H=(1,n,3,2,1), (1,3,4,2,1), (1,n,3,2), (1,4,4,2), " \
              "(1,4,3,2,1)"

CITE_WITNESSES = "Homogeneous witnesses with differing tangent degree"


def semicontinuity_witnesses():
    """
    Apolar witnesses paired with the exceptional ideal they degenerate to

    :return: (dual generators, exceptional label, differing degree)
    :rtype: list[(str, str, int)]
    """
    res = []

    for i, label in enumerate(("ii", "iii", "v", "viii")):
        res.append(("y1^2+y1*y3, y2*y3, y3^{}".format(3 + i), label, i))
    for i, label in enumerate(("iv", "vii")):
        res.append(("y1^2+y2^2, y2*y3^2, y3^{}".format(4 + i), label, 0))
    res.append(("y1*y3^2+y2^2*y3, y2*y3^2, y3^4", "x", 1))
    res.append(("y1^2+y1*y3, y2*y3^2, y3^4", "vi", 1))
    res.append(("y1^2+y1*y3, y2*y3^2, y3^5", "ix", 2))
    return res
