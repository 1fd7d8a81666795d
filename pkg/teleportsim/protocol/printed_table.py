"""
The published Bell-channel correction table, entry for entry.

Rows are grouped by channel A in the printed order; within each group every row lists
(B, BA, (BA)^t, U) exactly as printed, including the overall signs some entries carry.
"""
I = ((1, 0), (0, 1))
Z = ((1, 0), (0, -1))
X = ((0, 1), (1, 0))
Y = ((0, -1), (1, 0))


def _neg(m):
    return tuple(tuple(-entry for entry in row) for row in m)


Y_T = _neg(Y)

PRINTED_TABLE = (
    (I, (
        (I, I, I, I),
        (Z, Z, Z, Z),
        (X, X, X, X),
        (Y, Y, Y_T, Y),
    )),
    (X, (
        (I, X, X, X),
        (Z, Y, Y_T, Y),
        (X, I, I, I),
        (Y, Z, Z, Z),
    )),
    (Y, (
        (I, Y, Y_T, Y),
        (Z, X, X, X),
        (Y, _neg(I), _neg(I), _neg(I)),
        (X, _neg(Z), _neg(Z), _neg(Z)),
    )),
    (Z, (
        (I, Z, Z, Z),
        (X, _neg(Y), Y, _neg(Y)),
        (Z, I, I, I),
        (Y, _neg(X), _neg(X), _neg(X)),
    )),
)


def iter_printed_rows():
    for a, rows in PRINTED_TABLE:
        for b, ba, ba_t, u in rows:
            yield a, b, ba, ba_t, u
