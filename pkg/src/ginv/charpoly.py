"""Division-free characteristic series (Berkowitz).

Works over any scalar domain exposing ``one``, ``neg`` and a fused ``dot``
(sum of products); no division is ever performed, so the kernel is legal
over rings with zero divisors and over Laurent polynomial entries.
"""


def berkowitz(rows, dom):
    """Coefficients ``[1, d_1, ..., d_n]`` of ``det(I + Z*M)``.

    ``rows`` is a square list of rows over ``dom``.  Berkowitz computes
    ``det(X*I - N)``; running it on ``N = -M`` yields ``det(X*I + M)``
    whose coefficient of ``X^(n-j)`` is ``d_j``.
    """
    n = len(rows)
    neg = dom.neg
    dot = dom.dot
    N = [[neg(x) for x in row] for row in rows]
    vect = [dom.one]
    for r in range(n):
        # N_r is the leading r x r block; R the row, S the column bordering it.
        R = N[r][:r]
        S = [N[i][r] for i in range(r)]
        col = [dom.one, neg(N[r][r])]
        v = S
        for j in range(r):
            col.append(neg(dot(R, v)))
            if j < r - 1:
                v = [dot(N[i][:r], v) for i in range(r)]
        new = []
        for i in range(r + 2):
            lo = max(0, i - len(col) + 1)
            hi = min(i, r) + 1
            new.append(dot([col[i - j] for j in range(lo, hi)], vect[lo:hi]))
        vect = new
    return vect

