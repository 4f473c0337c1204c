"""Face lists of the named census maps, one entry per isomorphism class."""

# name -> (vertex count, faces)
FACES: dict[str, tuple[int, tuple[tuple[int, ...], ...]]] = {
    "A1(K)": (11, (
        (0, 1, 2, 3, 4, 5), (0, 1, 8), (0, 5, 6), (0, 6, 7), (0, 7, 8), (1, 2, 6), (1, 6, 9),
        (1, 8, 9), (2, 3, 10), (2, 6, 7), (2, 7, 10), (3, 4, 8), (3, 8, 9), (3, 9, 10),
        (4, 5, 10), (4, 7, 8), (4, 7, 10), (5, 6, 9), (5, 9, 10),
    )),
    "A2(T)": (12, (
        (0, 1, 2, 3, 4, 5), (0, 1, 8), (0, 5, 6), (0, 6, 7), (0, 7, 8), (1, 2, 10), (1, 8, 9),
        (1, 9, 10), (2, 3, 11), (2, 6, 10), (2, 6, 11), (3, 4, 7), (3, 7, 8), (3, 8, 11),
        (4, 5, 9), (4, 7, 10), (4, 9, 10), (5, 6, 11), (5, 9, 11), (6, 7, 10), (8, 9, 11),
    )),
    "A3(T)": (11, (
        (0, 1, 2, 3, 4, 5), (0, 1, 8), (0, 5, 6), (0, 6, 7), (0, 7, 8), (1, 2, 10), (1, 8, 9),
        (1, 9, 10), (2, 3, 6), (2, 6, 7), (2, 7, 10), (3, 4, 8), (3, 6, 9), (3, 8, 9),
        (4, 5, 10), (4, 7, 8), (4, 7, 10), (5, 6, 9), (5, 9, 10),
    )),
    "B1(K)": (12, (
        (0, 1, 2, 3, 4, 5), (0, 1, 9, 8), (0, 5, 6, 7), (0, 7, 8), (1, 2, 11, 10), (1, 9, 10),
        (2, 3, 9, 8), (2, 8, 11), (3, 4, 7, 6), (3, 6, 9), (4, 5, 10, 11), (4, 7, 11),
        (5, 6, 10), (6, 9, 10), (7, 8, 11),
    )),
    "B2(T)": (12, (
        (0, 1, 2, 3, 4, 5), (0, 1, 9, 8), (0, 5, 6, 7), (0, 7, 8), (1, 2, 11, 10), (1, 9, 10),
        (2, 3, 6, 7), (2, 7, 11), (3, 4, 8, 9), (3, 6, 9), (4, 5, 10, 11), (4, 8, 11),
        (5, 6, 10), (6, 9, 10), (7, 8, 11),
    )),
    "C1(K)": (12, (
        (0, 1, 2, 3, 4, 5), (0, 1, 9, 8), (0, 5, 6, 7), (0, 7, 8), (1, 2, 6, 10), (1, 9, 10),
        (2, 3, 9, 11), (2, 6, 11), (3, 4, 7, 10), (3, 9, 10), (4, 5, 11, 8), (4, 7, 8),
        (5, 6, 11), (6, 7, 10), (8, 9, 11),
    )),
    "C2(T)": (12, (
        (0, 1, 2, 3, 4, 5), (0, 1, 9, 8), (0, 5, 6, 7), (0, 7, 8), (1, 2, 6, 10), (1, 9, 10),
        (2, 3, 8, 11), (2, 6, 11), (3, 4, 10, 7), (3, 7, 8), (4, 5, 11, 9), (4, 9, 10),
        (5, 6, 11), (6, 7, 10), (8, 9, 11),
    )),
    "D1(K)": (11, (
        (0, 1, 2), (0, 1, 6), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 5, 4),
        (1, 4, 7), (1, 6, 8, 7), (2, 3, 8, 10), (2, 5, 10), (3, 4, 7, 9), (3, 8, 9),
        (5, 6, 9, 10), (6, 8, 9), (7, 8, 10), (7, 9, 10),
    )),
    "E1(K)": (9, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 5), (1, 4, 5),
        (1, 4, 7), (2, 3, 6, 7), (2, 5, 8), (2, 7, 8), (3, 4, 8), (3, 6, 8), (4, 7, 8),
        (5, 6, 8),
    )),
    "E2(K)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 5), (1, 4, 5),
        (1, 4, 7), (2, 3, 9, 10), (2, 5, 11), (2, 10, 11), (3, 4, 8), (3, 8, 9), (4, 7, 8),
        (5, 6, 11), (6, 7, 10, 9), (6, 9, 11), (7, 8, 10), (8, 9, 11), (8, 10, 11),
    )),
    "E3(T)": (9, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 8), (1, 4, 7),
        (1, 4, 8), (2, 3, 6, 7), (2, 5, 7), (2, 5, 8), (3, 4, 8), (3, 6, 8), (4, 5, 7),
        (5, 6, 8),
    )),
    "E4(T)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 8), (1, 4, 7),
        (1, 4, 8), (2, 3, 9, 10), (2, 8, 11), (2, 10, 11), (3, 4, 8), (3, 8, 9), (4, 5, 7),
        (5, 6, 11), (5, 7, 10), (5, 10, 11), (6, 7, 10, 9), (6, 9, 11), (8, 9, 11),
    )),
    "E5(K)": (9, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 4), (1, 4, 5),
        (1, 5, 7), (2, 3, 7, 6), (2, 4, 8), (2, 6, 8), (3, 4, 8), (3, 7, 8), (5, 6, 8),
        (5, 7, 8),
    )),
    "E6(T)": (9, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 4), (1, 4, 5),
        (1, 5, 7), (2, 3, 6, 7), (2, 4, 8), (2, 7, 8), (3, 4, 8), (3, 6, 8), (5, 6, 8),
        (5, 7, 8),
    )),
    "E7(K)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 4), (1, 4, 5),
        (1, 5, 7), (2, 3, 11, 10), (2, 4, 9), (2, 9, 10), (3, 4, 9), (3, 9, 11), (5, 6, 8),
        (5, 7, 8), (6, 7, 11, 10), (6, 8, 10), (7, 8, 11), (8, 9, 10), (8, 9, 11),
    )),
    "E8(T)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 4), (1, 4, 5),
        (1, 5, 7), (2, 3, 11, 10), (2, 4, 9), (2, 9, 10), (3, 4, 9), (3, 9, 11), (5, 6, 8),
        (5, 7, 8), (6, 7, 10, 11), (6, 8, 11), (7, 8, 10), (8, 9, 10), (8, 9, 11),
    )),
    "E9(K)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 8), (1, 5, 7),
        (1, 5, 8), (2, 3, 9, 10), (2, 8, 11), (2, 10, 11), (3, 4, 11), (3, 9, 11), (4, 5, 7),
        (4, 7, 10), (4, 10, 11), (5, 6, 8), (6, 7, 10, 9), (6, 8, 9), (8, 9, 11),
    )),
    "E10(K)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 9), (1, 7, 8),
        (1, 8, 9), (2, 3, 6, 7), (2, 7, 10), (2, 9, 10), (3, 4, 11), (3, 6, 11), (4, 5, 10),
        (4, 9, 10), (4, 9, 11), (5, 6, 11), (5, 8, 10), (5, 8, 11), (7, 8, 10), (8, 9, 11),
    )),
    "E11(T)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 9), (1, 7, 8),
        (1, 8, 9), (2, 3, 11, 10), (2, 5, 9), (2, 5, 10), (3, 4, 8), (3, 8, 11), (4, 5, 10),
        (4, 7, 8), (4, 7, 10), (5, 6, 9), (6, 7, 10, 11), (6, 9, 11), (8, 9, 11),
    )),
    "E12(T)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 9), (1, 7, 8),
        (1, 8, 9), (2, 3, 6, 7), (2, 7, 10), (2, 9, 10), (3, 4, 11), (3, 6, 11), (4, 5, 10),
        (4, 8, 10), (4, 8, 11), (5, 6, 11), (5, 9, 10), (5, 9, 11), (7, 8, 10), (8, 9, 11),
    )),
    "E13(T)": (12, (
        (0, 1, 2, 3), (0, 1, 7, 6), (0, 3, 4), (0, 4, 5), (0, 5, 6), (1, 2, 9), (1, 7, 8),
        (1, 8, 9), (2, 3, 6, 7), (2, 7, 10), (2, 9, 10), (3, 4, 11), (3, 6, 11), (4, 5, 8),
        (4, 8, 9), (4, 9, 11), (5, 6, 11), (5, 8, 10), (5, 10, 11), (7, 8, 10), (9, 10, 11),
    )),
    "F1(K)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 5), (1, 4, 5),
        (1, 4, 8), (2, 3, 10, 9), (2, 5, 6), (2, 6, 9), (3, 4, 11, 10), (4, 8, 11),
        (6, 7, 10, 11), (6, 9, 11), (7, 8, 9, 10), (8, 9, 11),
    )),
    "F2(T)": (9, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 6), (1, 4, 6),
        (1, 4, 8), (2, 3, 7, 8), (2, 5, 6), (2, 5, 8), (3, 4, 6, 7), (4, 5, 8),
    )),
    "F3(T)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 9), (1, 4, 8),
        (1, 4, 9), (2, 3, 11, 10), (2, 6, 9), (2, 6, 10), (3, 4, 9, 11), (4, 5, 8), (5, 6, 10),
        (5, 8, 10), (6, 7, 11, 9), (7, 8, 10, 11),
    )),
    "F4(K)": (9, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 6), (1, 5, 6),
        (1, 5, 8), (2, 3, 7, 8), (2, 4, 6), (2, 4, 8), (3, 4, 6, 7), (4, 5, 8),
    )),
    "F5(T)": (9, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 4), (1, 4, 5),
        (1, 5, 8), (2, 3, 7, 8), (2, 4, 6), (2, 6, 8), (3, 4, 6, 7), (5, 6, 8),
    )),
    "F6(T)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 4), (1, 4, 5),
        (1, 5, 8), (2, 3, 10, 9), (2, 4, 11), (2, 9, 11), (3, 4, 11, 10), (5, 6, 8),
        (6, 7, 10, 11), (6, 8, 9), (6, 9, 11), (7, 8, 9, 10),
    )),
    "F7(T)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 10), (1, 8, 9),
        (1, 9, 10), (2, 3, 7, 8), (2, 8, 11), (2, 10, 11), (3, 4, 6, 7), (4, 5, 9, 10),
        (4, 6, 11, 10), (5, 6, 11, 9), (8, 9, 11),
    )),
    "F8(K)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 10), (1, 8, 9),
        (1, 9, 10), (2, 3, 7, 8), (2, 8, 11), (2, 10, 11), (3, 4, 6, 7), (4, 5, 11, 10),
        (4, 6, 9, 10), (5, 6, 9, 11), (8, 9, 11),
    )),
    "F9(T)": (12, (
        (0, 1, 2, 3), (0, 1, 8, 7), (0, 3, 4, 5), (0, 5, 6, 7), (1, 2, 10), (1, 8, 9),
        (1, 9, 10), (2, 3, 7, 8), (2, 8, 11), (2, 10, 11), (3, 4, 6, 7), (4, 5, 11, 9),
        (4, 6, 10, 9), (5, 6, 10, 11), (8, 9, 11),
    )),
}
