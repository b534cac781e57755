"""Gauss-Legendre collocation plumbing: nodes, weights, differentiation.

All grids are interior (no interval endpoints).  Differentiation acts on the
polynomial interpolant through the node values, via the barycentric formula.
"""

import numpy as np


def gauss_legendre(n, a, b):
    """Gauss-Legendre nodes and weights mapped to the open interval (a, b)."""
    xi, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (b - a)
    return a + half * (xi + 1.0), half * w


def differentiation_matrix(x):
    """Spectral differentiation matrix on the nodes ``x``.

    Uses barycentric weights computed in log space (the common scale cancels
    in the ratios).  The diagonal is the negated row sum, so constants
    differentiate to zero to the bit.
    """
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    logs = np.sum(np.log(np.abs(diff)), axis=1)
    signs = np.prod(np.sign(diff), axis=1)
    # lambda_j / lambda_i = (sign_j * sign_i) * exp(logs_i - logs_j)
    ratio = (signs[None, :] * signs[:, None]) * np.exp(logs[:, None] - logs[None, :])
    d = ratio / diff
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(d, -d.sum(axis=1))
    return d
