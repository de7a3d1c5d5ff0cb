#!/usr/bin/env python3
"""Exact brute-force verification of the two-point fixture values.

Recomputes, in rational arithmetic with sympy and without importing the
package, the represented form-space dimensions of the two-point triple and
the curvature matrix of the projective-module fixture.  Prints a JSON
object of the frozen expectations used by the test suite.
"""

import json

from sympy import Matrix, Rational, eye, zeros


def comm(x, y):
    return x * y - y * x


def vec(m):
    return [m[i, j] for i in range(m.rows) for j in range(m.cols)]


def span_dim(mats):
    rows = [vec(m) for m in mats]
    return Matrix(rows).rank() if rows else 0


def kron(a, b):
    out = zeros(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            out[i * b.rows:(i + 1) * b.rows, j * b.cols:(j + 1) * b.cols] = a[i, j] * b
    return out


def main():
    eye2 = eye(2)
    b2 = Matrix([[1, 0], [0, 0]])
    dirac = Matrix([[0, 1], [1, 0]])
    basis = [eye2, b2]
    d = len(basis)

    k1 = [comm(dirac, b) for b in basis]
    k2 = [comm(dirac * dirac, b) for b in basis]

    one_dim = span_dim([basis[i] * k1[j] for i in range(d) for j in range(d)])
    two_dim = span_dim([basis[i] * k1[j] * k1[l]
                        for i in range(d) for j in range(d) for l in range(d)])

    # junk: exact kernel of c -> (sum c b_i b_j, sum c b_i [D, b_j]),
    # then the span of sum c b_i [D^2, b_j] over that kernel.
    cols = []
    for i in range(d):
        for j in range(d):
            cols.append(vec(basis[i] * basis[j]) + vec(basis[i] * k1[j]))
    kernel = Matrix(cols).T.nullspace()
    junk_mats = []
    for v in kernel:
        m = zeros(2, 2)
        for idx in range(d * d):
            i, j = divmod(idx, d)
            m += v[idx] * basis[i] * k2[j]
        junk_mats.append(m)
    junk_dim = span_dim(junk_mats)

    # curvature of p = diag(b2, 1 - b2), signs (1, -1), A = 0
    e00 = Matrix([[1, 0], [0, 0]])
    e11 = Matrix([[0, 0], [0, 1]])
    proj = kron(e00, b2) + kron(e11, eye2 - b2)
    dirac_lift = kron(Matrix([[1, 0], [0, -1]]), dirac)
    m_op = proj * dirac_lift * proj
    n_op = proj * kron(eye2, dirac * dirac) * proj
    curv = m_op * m_op - n_op

    # exact spectral norm: the matrix is diagonal, so max |diagonal entry|
    offdiag = [curv[i, j] for i in range(4) for j in range(4) if i != j]
    assert all(x == 0 for x in offdiag), "curvature unexpectedly non-diagonal"
    norm = max(abs(curv[i, i]) for i in range(4))

    print(json.dumps({
        "one_form_dim": int(one_dim),
        "two_form_dim": int(two_dim),
        "junk_dim": int(junk_dim),
        "curvature_diag": [int(curv[i, i]) for i in range(4)],
        "curvature_norm": int(norm),
    }))


if __name__ == "__main__":
    main()
