#!/usr/bin/env python3
"""Exact evaluation of the submersion tensors for the canned frames.

Recomputes the second fundamental form, mean curvature and fibration
curvature from their defining inner-product formulas in Fraction
arithmetic.  The bracket tables are written out from scratch here (the
Heisenberg relations, su(2) with a rescaled vertical vector, and the
warped-product bracket), so this script is independent of the package.
"""

import json
from fractions import Fraction


def bracket_table(name, **params):
    """Return (dim, dim_fiber, bracket) with bracket[i][j] a coefficient list."""
    if name == "heisenberg":
        dim, fiber = 3, 1
        table = {(1, 2): {0: Fraction(1)}}
    elif name == "hopf":
        lam = Fraction(params["lam"])
        dim, fiber = 3, 1
        # vertical e = X3 / lam, horizontal f1 = X1, f2 = X2 for su(2)
        # with [Xi, Xj] = 2 eps_ijk Xk.
        table = {
            (1, 2): {0: 2 * lam},
            (0, 1): {2: 2 / lam},
            (2, 0): {1: 2 / lam},
        }
    elif name == "warped_torus":
        f = Fraction(params["f"])
        fp = Fraction(params["fprime"])
        dim, fiber = 2, 1
        # e = (1/f) d/ds vertical, f1 = d/dt horizontal: [f1, e] = -(f'/f) e
        table = {(1, 0): {0: -fp / f}}
    else:
        raise ValueError(name)

    def bracket(i, j):
        out = [Fraction(0)] * dim
        for k, v in table.get((i, j), {}).items():
            out[k] += v
        for k, v in table.get((j, i), {}).items():
            out[k] -= v
        return out

    return dim, fiber, bracket


def tensors(name, **params):
    dim, fiber, bracket = bracket_table(name, **params)
    vert = range(fiber)
    hor = range(fiber, dim)

    def inner(vec, idx):
        return vec[idx]

    # S(X, Y, Z) = 1/2 (Z<X,Y> - <[Z,X],Y> - <[Z,Y],X>); first term zero.
    s_pi = [[[-Fraction(1, 2) * (inner(bracket(z, x), y) + inner(bracket(z, y), x))
              for z in hor] for y in vert] for x in vert]
    k = [sum(s_pi[a][a][i] for a in vert) for i in range(dim - fiber)]
    omega = [[[-inner(bracket(x, y), z) for z in vert] for y in hor] for x in hor]
    return s_pi, k, omega


def as_floats(nested):
    if isinstance(nested, list):
        return [as_floats(x) for x in nested]
    return float(nested)


def main():
    out = {}
    for name, params in (
        ("heisenberg", {}),
        ("hopf", {"lam": 1}),
        ("hopf", {"lam": 2}),
        ("warped_torus", {"f": 2, "fprime": 1}),
    ):
        s_pi, k, omega = tensors(name, **params)
        key = name if not params else name + "_" + "_".join(
            f"{p}={v}" for p, v in params.items())
        out[key] = {
            "S_pi": as_floats(s_pi),
            "k": as_floats(k),
            "Omega": as_floats(omega),
        }
    print(json.dumps(out))


if __name__ == "__main__":
    main()
