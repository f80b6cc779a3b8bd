"""Compare the compiled and pure-Python kernels on random words.

    python3 benchmarks/bench_kernels.py [--words 2000] [--length 24] [--seed 0]
"""

import argparse
import random
import timeit

from pyramids import _kernels_py
from pyramids.kernels import compiled_available


def random_balanced(rng, half):
    letters = list("p" * half + "q" * half)
    rng.shuffle(letters)
    return "".join(letters)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=24, help="even word length")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    words = [random_balanced(rng, args.length // 2) for _ in range(args.words)]
    backends = {"python": _kernels_py}
    if compiled_available():
        from pyramids import _kernels

        backends["cython"] = _kernels
    else:
        print("compiled kernels are not built; timing the fallback only")

    # same answers before timing anything
    if "cython" in backends:
        for w in words[:200]:
            fast = backends["cython"].normal_order_word(w)
            if fast is not None:
                assert fast == _kernels_py.normal_order_word(w)

    results = {}
    for name, mod in backends.items():
        t_no = min(timeit.repeat(lambda: [mod.normal_order_word(w) for w in words], number=1, repeat=args.repeat))
        t_ev = min(
            timeit.repeat(
                lambda: [mod.word_eigenvalue(w, m) for w in words for m in range(4)], number=1, repeat=args.repeat
            )
        )
        results[name] = (t_no, t_ev)
        print(f"{name:>7}: normal_order_word {t_no * 1e3:8.2f} ms   word_eigenvalue {t_ev * 1e3:8.2f} ms")
    if "cython" in results:
        py, cy = results["python"], results["cython"]
        print(f"speedup: normal_order_word x{py[0] / cy[0]:.1f}, word_eigenvalue x{py[1] / cy[1]:.1f}")


if __name__ == "__main__":
    main()
