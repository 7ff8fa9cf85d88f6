"""Gram matrices exactly as printed in the source, before validation.

Some of these carry transcription damage; see catalog.validate_claims.
"""

S7K3_PRINTED = [
    [-4, 2, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    [2, -4, 2, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, -1, 1, 1, -1, 0],
    [0, 2, -4, 2, 0, 0, 7, -1, 2, -1, 0, 0, 0, 0, 0, -1, 1, 1],
    [0, 0, 2, -4, 2, 0, -7, 0, -1, 2, -1, 0, 1, -1, 0, 0, 0, -1],
    [0, 0, 0, 2, -4, 2, 0, 0, 0, -1, 2, -1, -1, 1, 1, -1, 0, 0],
    [0, 0, 0, 0, 2, -4, 0, 0, 0, 0, -1, 2, -1, 0, -1, 1, 1, -1],
    [0, 0, 7, -7, 0, 0, -98, 0, 0, 0, 0, 0, 0, 0, 0, 0, 7, -21],
    [-1, 2, -1, 0, 0, 0, 0, -6, 4, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 4, -6, 4, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, -1, 4, -6, 4, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0, -1, 4, -6, 4, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 2, 0, 0, 0, -1, 4, -6, 3, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, -1, -1, 0, 0, 0, 0, -1, 3, -4, 3, -1, 0, 0, 0],
    [1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 3, -6, 4, -1, 0, 0, 0],
    [-1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, -1, 4, -6, 4, -1, 0],
    [0, 1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 4, -6, 4, -1],
    [0, -1, 1, 0, 0, 1, 7, 0, 0, 0, 0, 0, 0, 0, -1, 4, -6, 4],
    [0, 0, 1, -1, 0, -1, -21, 0, 0, 0, 0, 0, 0, 0, 0, -1, 4, -6],
]

W_PRINTED = [
    [4, 2, -2, -2, -2, 0, 0, 0, -2, 1, -2, -2, -2, -2, 2, -2, 2, 2],
    [2, 4, -2, 0, -2, -1, -1, -1, -2, -1, 0, 0, 0, -1, 2, 0, 1, 2],
    [-2, -2, 4, 1, 2, 1, -1, 1, 1, -1, 0, 2, 2, 2, -2, 0, 0, -2],
    [-2, 0, 1, 4, 2, 1, 0, 1, 1, -1, 0, 2, 2, 0, -1, 1, -2, -2],
    [-2, -2, 2, 2, 4, 2, 1, 1, 1, -1, 0, 2, 2, 0, -2, 0, -2, -2],
    [0, -1, 1, 1, 2, 4, 0, 0, 0, 0, 0, 0, 0, -1, -2, -2, -1, 0],
    [0, -1, -1, 0, 1, 0, 4, 1, 1, 0, 0, 0, -1, -2, 0, 0, 0, -1],
    [0, -1, 1, 1, 1, 0, 1, 4, 0, 1, -2, 0, 1, -1, 1, -1, 1, -1],
    [-2, -2, 1, 1, 1, 0, 1, 0, 4, 1, 0, 0, 1, 1, -2, 2, -1, -1],
    [1, -1, -1, -1, -1, 0, 0, 1, 1, 4, -2, -2, -1, 0, 1, 0, 1, 1],
    [-2, 0, 0, 0, 0, 0, 0, -2, 0, -2, 4, 1, 0, 1, -1, 1, -1, 0],
    [-2, 0, 2, 2, 2, 0, 0, 0, 0, -2, 1, 4, 2, 1, -1, 1, -1, -2],
    [-2, 0, 2, 2, 2, 0, -1, 1, 1, -1, 0, 2, 4, 1, -1, 1, -1, -1],
    [-2, -1, 2, 0, 0, -1, -2, -1, 1, 0, 1, 1, 1, 4, -1, 2, 0, -1],
    [2, 2, -2, -1, -2, -2, 0, 1, -2, 1, -1, -1, -1, -1, 4, 0, 2, 1],
    [-2, 0, 0, 1, 0, -2, 0, -1, 2, 0, 1, 1, 1, 2, 0, 4, -1, -1],
    [2, 1, 0, -2, -2, -1, 0, 1, -1, 1, -1, -1, -1, 0, 2, -1, 4, 1],
    [2, 2, -2, -2, -2, 0, -1, -1, -1, 1, 0, -2, -1, -1, 1, -1, 1, 4],
]

S11_PRINTED = [
    [-4, 1, -2, -2, -1, 1, -1, 1, -1, -1, 2, 1, -1, 2, -1, -2, -2, 2, 1, -1],
    [1, -4, -1, -1, -1, -1, -1, 1, -1, 2, -1, -2, 2, 0, -1, 0, 0, -1, -2, 1],
    [-2, -1, -4, -2, -1, -1, 0, 1, 0, -1, 1, 0, -1, 2, -2, -1, -1, 0, 0, 1],
    [-2, -1, -2, -4, 0, 0, -2, 0, -1, 0, 2, 1, 0, 1, 0, 0, -1, 1, 0, -1],
    [-1, -1, -1, 0, -4, 1, -1, 2, -2, -1, 1, 0, -1, 0, -2, -2, 0, 1, 1, -1],
    [1, -1, -1, 0, 1, -4, 0, -1, 0, 1, -2, -1, 0, -1, -1, 0, -1, 0, -1, 1],
    [-1, -1, 0, -2, -1, 0, -4, 1, -2, 1, 1, 1, 0, -1, 0, -1, 0, 2, 0, -2],
    [1, 1, 1, 0, 2, -1, 1, -4, 0, 0, -1, 1, 1, 0, 2, 1, 0, -1, 1, 0],
    [-1, -1, 0, -1, -2, 0, -2, 0, -4, 0, 0, 1, 1, 0, -1, -2, 0, 2, 0, -2],
    [-1, 2, -1, 0, -1, 1, 1, 0, 0, -4, 1, 1, -2, 1, 0, 0, 1, 1, 1, 0],
    [2, -1, 1, 2, 1, -2, 1, -1, 0, 1, -4, -2, 2, -1, 0, 0, 0, -1, -2, 1],
    [1, -2, 0, 1, 0, -1, 1, 1, 1, 1, -2, -4, 1, 0, -1, 0, -1, -1, -2, 2],
    [-1, 2, -1, 0, -1, 0, 0, 1, 1, -2, 2, 1, -4, 0, -1, 0, 0, 1, 2, 0],
    [2, 0, 2, 1, 0, -1, -1, 0, 0, 1, -1, 0, 0, -4, 1, 1, 1, 0, 0, -1],
    [-1, -1, -2, 0, -2, -1, 0, 2, -1, 0, 0, -1, -1, 1, -4, -2, -1, 1, 0, 0],
    [-2, 0, -1, 0, -2, 0, -1, 1, -2, 0, 0, 0, 1, -2, -4, -2, 2, 0, -1],
    [-2, 0, -1, -1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 1, -1, -2, -4, 1, 0, 0],
    [2, -1, 0, 1, 1, 0, 2, -1, 2, 1, -1, -1, 1, 0, 1, 2, 1, -4, 0, 2],
    [1, -2, 0, 0, 1, -1, 0, 1, 0, 1, -2, -2, 2, 0, 0, 0, 0, 0, -4, 1],
    [-1, 1, 1, -1, -1, 1, -2, 0, -2, 0, 1, 2, 0, -1, 0, -1, 0, 2, 1, -4],
]

T11_1_PRINTED = [
    [2, 1, 0],
    [1, 6, 0],
    [0, 0, 22],
]

T11_2_PRINTED = [
    [6, -2, -2],
    [-2, 8, -3],
    [-2, -3, 8],
]

M125_PRINTED = [
    [-4, -1, -1, 1],
    [-1, -4, 1, -1],
    [-1, 1, -4, -1],
    [1, -1, -1, -4],
]

M81_PRINTED = [
    [-4, 2, -2, 1],
    [2, -4, 1, -2],
    [-2, 1, -4, 2],
    [1, -2, 2, -4],
]
