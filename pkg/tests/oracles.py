"""Independent oracles used to freeze expected values in the tests.

Each oracle deliberately avoids the code path it checks.
"""

import numpy as np


def charpoly_eigenvalues_3x3(m, lo=-1e6, hi=1e6, tol=1e-12):
    """Roots of det(m - t I) for symmetric 3x3 m, by sign-change bisection
    on the characteristic polynomial evaluated from the explicit minors.
    """
    a, b, c = m[0]
    _, d, e = m[1]
    f = m[2, 2]

    def poly(t):
        return (
            (a - t) * ((d - t) * (f - t) - e * e)
            - b * (b * (f - t) - e * c)
            + c * (b * e - (d - t) * c)
        )

    # Bracket the three real roots on a fine grid, then bisect.
    grid = np.linspace(lo, hi, 200001)
    vals = np.array([poly(t) for t in grid])
    roots = [float(t) for t in grid[vals == 0.0]]
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        left, right = grid[i], grid[i + 1]
        fl = poly(left)
        for _ in range(200):
            mid = 0.5 * (left + right)
            fm = poly(mid)
            if fl * fm <= 0:
                right = mid
            else:
                left, fl = mid, fm
            if right - left < tol:
                break
        roots.append(0.5 * (left + right))
    return np.sort(roots)[::-1]


def eigen_inverse_solve(m, rhs):
    """Solve m x = rhs through an eigendecomposition inverse."""
    vals, vecs = np.linalg.eigh(m)
    return vecs @ ((vecs.T @ rhs) / vals)


def min_norm_solution(a, b):
    """Minimum-norm solution of a consistent system via the normal
    equations of A^T, x = A^T (A A^T)^+ b, using an eigen pseudo-inverse.
    """
    gram = a @ a.T
    vals, vecs = np.linalg.eigh(gram)
    keep = vals > 1e-10 * vals.max()
    inv = vecs[:, keep] @ ((vecs[:, keep].T @ b) / vals[keep])
    return a.T @ inv


def ridge_normal_equations(gram, weights, phi, alpha):
    """Ridge coefficients from the explicitly assembled normal system
    (alpha I + W G) c = W phi, solved by a dense general solver.
    """
    w = np.diag(weights)
    return np.linalg.solve(alpha * np.eye(len(phi)) + w @ gram, w @ phi)


def defect_products(projections):
    """Direct operator products T_n and Q_n, assembled independently."""
    eye = np.eye(projections[0].shape[0])
    t_ops, q_ops = [], []
    for n, p in enumerate(projections):
        prod = eye
        for j in range(n):
            prod = (eye - projections[j]) @ prod
        q_ops.append(p @ prod)
        t_ops.append((eye - p) @ prod)
    return t_ops, q_ops
