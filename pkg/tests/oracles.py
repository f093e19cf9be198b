"""Independent reference computations for the test suite.

Nothing here imports ``mvfrontier``; the checks only count if the two routes
are independent.
"""

import numpy as np

TABLE1_IDS = ("CVX", "MSFT", "CDI")
# Covariances of daily percent returns, Chevron / Microsoft / Dior.
# The printed table repeats some entries at lower precision below the
# diagonal; the upper triangle keeps the most digits.
TABLE1_SIGMA = np.array([
    [1.85029, 0.847036477, 0.567991723],
    [0.847036477, 2.093294386, 0.445476487],
    [0.567991723, 0.445476487, 2.541787413],
])

PAPER_C0 = 100.0
PAPER_MU_MV = 5.0899
PAPER_SIGMA_MV = 106.3529
PAPER_THETA_MV = np.array([36.8093, 32.6372, 30.5544])
PAPER_MU_TG = 6.4444
PAPER_SIGMA_TG = 119.6703
PAPER_THETA_TG = np.array([8.1113, 29.2678, 62.5418])
PAPER_GAMMA = 3.0
PAPER_THETA_OPT = np.array([36.8050, 32.6367, 30.5592])
PAPER_MU_OPT = 5.0901
PAPER_VAR_OPT = 1.1311e4
PAPER_QUADRATIC = (1.5562e3, -1.5842e4, 5.1046e4)


def reconstruct_mu(sigma=TABLE1_SIGMA, theta_tg=PAPER_THETA_TG, mu_mv=PAPER_MU_MV, c0=PAPER_C0):
    """Mean vector implied by the published min-variance mean and tangency weights.

    c from the covariances, b = (mu_mv / c0) * c, then mu = sigma @ theta_tg * b / c0
    (inverting theta_tg = inv(sigma) @ mu * c0 / b).
    """
    ones = np.ones(len(sigma))
    c = ones @ np.linalg.solve(sigma, ones)
    b = mu_mv / c0 * c
    return sigma @ theta_tg * b / c0


def scalars(mu, sigma):
    ones = np.ones(len(mu))
    x = np.linalg.solve(sigma, ones)
    y = np.linalg.solve(sigma, mu)
    a, b, c = mu @ y, mu @ x, ones @ x
    return a, b, c, a * c - b * b


def kkt_frontier(mu, sigma, c0, target):
    """Minimize theta' S theta s.t. 1'theta = c0, mu'theta = target via the KKT system."""
    n = len(mu)
    A = np.vstack([np.ones(n), mu])
    K = np.zeros((n + 2, n + 2))
    K[:n, :n] = 2 * sigma
    K[:n, n:] = A.T
    K[n:, :n] = A
    rhs = np.concatenate([np.zeros(n), [c0, target]])
    return np.linalg.solve(K, rhs)[:n]


def naive_covariance(returns, ddof=1):
    """Two-pass covariance with plain Python loops."""
    rows = [list(map(float, r)) for r in returns]
    T, N = len(rows), len(rows[0])
    means = [sum(r[i] for r in rows) / T for i in range(N)]
    out = [[0.0] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            s = 0.0
            for r in rows:
                s += (r[i] - means[i]) * (r[j] - means[j])
            out[i][j] = s / (T - ddof)
    return np.array(out), np.array(means)


def random_pd_model(rng, n=None, positive_b=True):
    """Random (mu, sigma) with sigma = A'A + delta*I and, optionally, b > 0."""
    while True:
        k = n or int(rng.integers(2, 9))
        A = rng.normal(size=(k + 2, k))
        sigma = A.T @ A / (k + 2) + 0.1 * np.eye(k)
        mu = rng.normal(0.05, 0.05, size=k)
        if not positive_b:
            return mu, sigma
        _, b, _, d = scalars(mu, sigma)
        if b > 0 and d > 1e-6:
            return mu, sigma
