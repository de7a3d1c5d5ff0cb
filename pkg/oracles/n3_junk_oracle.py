#!/usr/bin/env python3
"""Exact form-space dimensions for the 3-dimensional junk fixture.

Runs the kernel-then-image junk pipeline in rational arithmetic on the
triple with diagonal algebra span{1, diag(1,0,0), diag(0,1,0)}, grading
diag(1,1,-1) and Dirac matrix [[0,0,1],[0,0,2],[1,2,0]].  Independent of
the package; prints the frozen expectations as JSON.
"""

import json

from sympy import Matrix, eye, zeros


def comm(x, y):
    return x * y - y * x


def vec(m):
    return [m[i, j] for i in range(m.rows) for j in range(m.cols)]


def span_dim(mats):
    rows = [vec(m) for m in mats]
    return Matrix(rows).rank() if rows else 0


def main():
    basis = [
        eye(3),
        Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]),
        Matrix([[0, 0, 0], [0, 1, 0], [0, 0, 0]]),
    ]
    dirac = Matrix([[0, 0, 1], [0, 0, 2], [1, 2, 0]])
    d = len(basis)

    k1 = [comm(dirac, b) for b in basis]
    k2 = [comm(dirac * dirac, b) for b in basis]

    one_dim = span_dim([basis[i] * k1[j] for i in range(d) for j in range(d)])
    two_dim = span_dim([basis[i] * k1[j] * k1[l]
                        for i in range(d) for j in range(d) for l in range(d)])

    cols = []
    for i in range(d):
        for j in range(d):
            cols.append(vec(basis[i] * basis[j]) + vec(basis[i] * k1[j]))
    kernel = Matrix(cols).T.nullspace()
    junk_mats = []
    for v in kernel:
        m = zeros(3, 3)
        for idx in range(d * d):
            i, j = divmod(idx, d)
            m += v[idx] * basis[i] * k2[j]
        junk_mats.append(m)
    junk_dim = span_dim(junk_mats)

    # cross-check: every junk matrix must lie in the two-form span
    two_mats = [basis[i] * k1[j] * k1[l]
                for i in range(d) for j in range(d) for l in range(d)]
    for jm in junk_mats:
        assert span_dim(two_mats + [jm]) == two_dim, "junk escaped the two-form span"

    print(json.dumps({
        "kernel_dim": len(kernel),
        "one_form_dim": int(one_dim),
        "two_form_dim": int(two_dim),
        "junk_dim": int(junk_dim),
    }))


if __name__ == "__main__":
    main()
