"""Walk the diagonal-scaling ladder and watch the classic construction
fail while the hypot-based one keeps the small eigenvalue.

For A = [[a, 1], [1, 0]] the eigenvalues are a/2 +- sqrt((a/2)^2 + 1);
the small one tends to -1/a. The classic tangent formula squares
delta = -a/2, so once a exceeds ~1e154 the square overflows to inf, the
tangent collapses to zero, and the small eigenvalue is reported as 0.0.
The hypot form never squares delta and keeps it.

Run:  python3 demos/failure_mode.py
"""
from jacobi2x2 import SymMat2, jacobi_improved, jacobi_standard


def main() -> None:
    print(f"{'a_pp':>8s} {'classic lambda2':>24s} {'hypot lambda2':>24s}")
    for k in range(0, 320, 20):
        a = float(f"1e{k}")
        A = SymMat2(a, 1.0, 0.0)
        s = jacobi_standard(A)
        i = jacobi_improved(A)
        marker = "   <- classic collapses to zero" if s.lambda2 == 0.0 and i.lambda2 != 0.0 else ""
        print(f"{f'1e{k}':>8s} {s.lambda2!r:>24s} {i.lambda2!r:>24s}{marker}")
    print()
    print("The crossover sits where (a_pp/2)^2 overflows: a_pp/2 > ~1.3e154.")


if __name__ == "__main__":
    main()
