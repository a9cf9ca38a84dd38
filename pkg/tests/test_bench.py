import math

from eulerian_ode.bench import bit_stats, fubini, run_bench
from eulerian_ode.triangle import triangle_recurrence


def test_fubini_small():
    # ordered set partitions: 1, 1, 3, 13, 75, 541
    assert [fubini(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_fubini_bounds_entries():
    tri = triangle_recurrence(15)
    for N, row in enumerate(tri):
        assert max(p(1) for p in row) <= fubini(N + 1)


def test_zero():
    res = run_bench(0)
    assert res["agree"] and res["bits"]["row"] == 0


def test_n100_bit_lengths():
    res = run_bench(100, routes=["recurrence"])
    bits = res["bits"]
    assert bits["diagonal_bits"] == math.factorial(100).bit_length() == 525
    # Stirling: log2(100!) ~ 100 log2(100/e) + 0.5 log2(200 pi)
    stirling = 100 * math.log2(100 / math.e) + 0.5 * math.log2(200 * math.pi)
    assert abs(bits["diagonal_bits"] - stirling) < 1.5
    assert bits["diagonal_bits"] <= bits["max_bits"] <= bits["fubini_bound_bits"]


def test_routes_agree_at_50():
    res = run_bench(50, reps=2, sizes=[10, 50])
    assert res["agree"]
    assert set(res["routes"]) == {"recurrence", "sum", "closed", "bootstrap"}
    assert all(len(r["median_seconds"]) == 2 for r in res["routes"].values())


def test_bit_stats_fields():
    stats = bit_stats(triangle_recurrence(5))
    assert stats["diagonal_bits"] == (120).bit_length()
