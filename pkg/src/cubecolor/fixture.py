"""The embedded 13-coloring of the square of the 8-cube.

This partition of {0,1}^8 into thirteen codes of minimum distance >= 3
(twelve (8,20,3) codes and one (8,16,4) code) matches the packing lower bound
ceil(2^8 / A(8,3)) = ceil(256/20) = 13, so the chromatic number of Q_8^2 is
exactly 13.  It ships inside the library so verification needs no external
files.
"""

from __future__ import annotations

from .coloring import Coloring, coloring_from_classes
from .hamming import Params

Q8_SQUARE_13_CLASSES: tuple[tuple[int, ...], ...] = (
    (9, 18, 37, 56, 63, 71, 92, 96, 110, 115, 134, 149, 155, 163, 172, 202, 205, 208, 246, 249),
    (3, 29, 38, 40, 59, 68, 90, 109, 112, 119, 133, 150, 152, 175, 177, 201, 206, 211, 226, 252),
    (23, 24, 33, 47, 50, 66, 77, 100, 121, 126, 139, 140, 145, 166, 189, 199, 212, 218, 232, 243),
    (8, 20, 31, 46, 49, 65, 82, 103, 123, 124, 131, 154, 160, 173, 182, 196, 207, 217, 234, 245),
    (10, 21, 35, 44, 48, 70, 73, 95, 101, 122, 132, 143, 146, 185, 190, 209, 220, 224, 235, 247),
    (2, 13, 39, 52, 57, 81, 94, 107, 108, 114, 142, 144, 151, 161, 186, 197, 200, 219, 230, 253),
    (14, 25, 36, 55, 58, 67, 84, 104, 111, 113, 128, 141, 147, 171, 188, 198, 216, 223, 229, 242),
    (1, 15, 22, 42, 60, 76, 80, 91, 99, 117, 136, 157, 167, 176, 187, 194, 215, 228, 233, 254),
    (4, 11, 17, 54, 61, 78, 87, 88, 98, 105, 130, 158, 165, 168, 179, 193, 221, 239, 244, 250),
    (6, 19, 28, 32, 43, 69, 74, 89, 116, 127, 137, 159, 174, 178, 181, 192, 214, 227, 237, 248),
    (7, 12, 26, 41, 53, 64, 83, 93, 106, 118, 129, 148, 162, 184, 191, 203, 222, 231, 236, 241),
    (5, 16, 27, 34, 62, 72, 79, 86, 97, 125, 138, 156, 164, 169, 183, 195, 213, 238, 240, 251),
    (0, 30, 45, 51, 75, 85, 102, 120, 135, 153, 170, 180, 204, 210, 225, 255),
)


def q8_square_13_coloring() -> Coloring:
    """The embedded coloring as a Coloring with params (n=8, k=2, 13 colors)."""
    return coloring_from_classes(Params(8, 2, 13), list(Q8_SQUARE_13_CLASSES))
