"""Independent brute-force oracle used by the tests.

Everything here enumerates joint outcomes directly with its own winner rule,
so it shares no code with any of the package's computation paths.
"""

import itertools


def brute_winner(picks):
    counts = {}
    for p in picks:
        counts[p] = counts.get(p, 0) + 1
    unique = [v for v, c in counts.items() if c == 1]
    if not unique:
        return None
    return list(picks).index(min(unique))


def brute_win_prob(n, my_pick, opponent_rows):
    total = 0.0
    m = len(opponent_rows)
    for picks in itertools.product(range(1, n + 1), repeat=m):
        prob = 1.0
        for row, p in zip(opponent_rows, picks):
            prob *= row[p - 1]
        if prob and brute_winner((my_pick,) + picks) == 0:
            total += prob
    return total


def brute_payoffs(rows):
    n = len(rows)
    pay = [0.0] * n
    for picks in itertools.product(range(1, n + 1), repeat=n):
        prob = 1.0
        for row, p in zip(rows, picks):
            prob *= row[p - 1]
        if prob == 0.0:
            continue
        winner = brute_winner(picks)
        if winner is not None:
            pay[winner] += prob
    return pay


def random_strategy(rng, n, zeros=False):
    while True:
        raw = [0.0 if zeros and rng.random() < 0.3 else rng.random() for _ in range(n)]
        total = sum(raw)
        if total > 1e-9:
            return tuple(v / total for v in raw)


def random_interior(rng, n, margin=0.05):
    raw = [margin + rng.random() for _ in range(n)]
    total = sum(raw)
    return tuple(v / total for v in raw)
