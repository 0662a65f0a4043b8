"""Solve a handful of symmetric 2x2 matrices with every construction and
compare each answer against the double-double reference.

Run:  python3 demos/solve_and_inspect.py
"""
from jacobi2x2 import SOLVERS, SymMat2, fro_norm, residual_fro
from jacobi2x2.oracle import oracle_eigen, ulp_diff

CASES = [
    SymMat2(1.0, 1.0, 3.0),       # eigenvalues 2 -+ sqrt(2)
    SymMat2(0.0, 1.0, 0.0),       # pure off-diagonal, eigenvalues -+1
    SymMat2(7.0, 0.0, -2.0),      # already diagonal
    SymMat2(4.0, 1e-12, 4.0),     # nearly scalar matrix
    SymMat2(1e200, 1.0, 0.0),     # extreme diagonal/off-diagonal imbalance
]


def main() -> None:
    for A in CASES:
        print(f"A = (a_pp={A.a_pp!r}, a_pq={A.a_pq!r}, a_qq={A.a_qq!r})")
        oracle = oracle_eigen(A)
        print(f"  reference lambda1 = {oracle.lambda1.hi!r} + {oracle.lambda1.lo!r}")
        print(f"  reference lambda2 = {oracle.lambda2.hi!r} + {oracle.lambda2.lo!r}")
        for name in ("standard", "improved", "naive"):
            e = SOLVERS[name](A)
            res = residual_fro(A, e) / (fro_norm(A) or 1.0)
            try:
                u1 = ulp_diff(e.lambda1, oracle.lambda1.hi)
                u2 = ulp_diff(e.lambda2, oracle.lambda2.hi)
                ulps = f"ulps from reference = ({u1}, {u2})"
            except ValueError:
                # opposite sign or lost value: report plainly instead
                ulps = "not comparable in ulps (slot swap or lost eigenvalue)"
            print(
                f"  {name:8s} lambda = ({e.lambda1!r}, {e.lambda2!r})  "
                f"residual/||A||_F = {res:.2e}  {ulps}"
            )
        print()


if __name__ == "__main__":
    main()
