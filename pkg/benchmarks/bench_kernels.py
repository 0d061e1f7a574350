"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--states 2000]

Times h_ff evaluation and successor generation over a fixed sample of
reachable states per domain, and a full GBFS run, for each backend.
"""

import argparse
import random
import time

from asrplan.heuristic import BACKENDS, FFHeuristic, make_kernel
from asrplan.planner import FixedStrategy, plan_asr
from asrplan.probgen import generate_task, instance_spec
from asrplan.routines import RoutineId
from asrplan.search import BudgetClock

CASES = [("delivery", 10), ("fuel-delivery", 9), ("grid-paint", 4)]


def sample_states(task, n, seed=0):
    """Random-walk sample of reachable states."""
    kernel = make_kernel(task, "python")
    rng = random.Random(seed)
    states, s = [], tuple(task.initial)
    while len(states) < n:
        succ = list(kernel.successors(s))
        if not succ or rng.random() < 0.05:
            s = tuple(task.initial)
            continue
        s = rng.choice(succ)[1]
        states.append(s)
    return states


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    p = argparse.ArgumentParser(description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--states", type=int, default=2000)
    p.add_argument("--expansions", type=int, default=3000)
    args = p.parse_args()
    backends = sorted(BACKENDS)
    print(f"backends: {', '.join(backends)}")
    header = f"{'domain':>14} {'backend':>8} {'h_ff us':>9} {'succ us':>9} {'gbfs s':>8}"
    print(header)
    for domain, size in CASES:
        task = generate_task(instance_spec(domain, size, 0, 0))
        states = sample_states(task, args.states)
        results = {}
        for backend in backends:
            kernel = make_kernel(task, backend)
            h = FFHeuristic(task, kernel)
            t_h = best_of(lambda: [h(s) for s in states], args.repeat)
            t_s = best_of(lambda: [list(kernel.successors(s)) for s in states], args.repeat)
            budget = BudgetClock(args.expansions, "expansions", 300)
            t_g = best_of(lambda: plan_asr(task, FixedStrategy(RoutineId.GBFS), budget,
                                           heuristic=FFHeuristic(task, make_kernel(task, backend))),
                          args.repeat)
            results[backend] = (t_h, t_s, t_g)
            n = len(states)
            print(f"{domain:>14} {backend:>8} {1e6 * t_h / n:9.1f} {1e6 * t_s / n:9.1f} {t_g:8.3f}")
        if len(results) == 2:
            (ch, cs, cg), (ph, ps, pg) = results["cython"], results["python"]
            print(f"{domain:>14} {'speedup':>8} {ph / ch:8.1f}x {ps / cs:8.1f}x {pg / cg:7.1f}x")


if __name__ == "__main__":
    main()
